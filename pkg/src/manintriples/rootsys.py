"""Root systems of the complex simple Lie algebras.

Roots are integer tuples in the simple-root basis.  Inner products are
normalized so that they come from the Killing form: ``(a, b) = K(H_a, H_b)``
where ``K(H_a, H) = a(H)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import InvalidSpecError, RootNotFoundError

Root = tuple  # tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 3}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True)
class RootSystemSpec:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family
        if not isinstance(fam, str) or fam not in "ABCDEFG" or len(fam) != 1:
            raise InvalidSpecError(f"unknown family {fam!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InvalidSpecError("rank must be an integer")
        if fam in _FIXED_RANKS:
            if self.rank not in _FIXED_RANKS[fam]:
                raise InvalidSpecError(f"type {fam} has no rank {self.rank}")
        elif self.rank < _MIN_RANK[fam]:
            raise InvalidSpecError(f"type {fam} needs rank at least {_MIN_RANK[fam]}")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "RootSystemSpec":
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise InvalidSpecError(f"cannot parse root system name {text!r}")
        return cls(text[0].upper(), int(text[1:]))


def _edges(spec: RootSystemSpec) -> list[tuple[int, int]]:
    n, fam = spec.rank, spec.family
    if fam in "ABCFG":
        return [(k, k + 1) for k in range(n - 1)]
    if fam == "D":
        return [(k, k + 1) for k in range(n - 2)] + [(n - 3, n - 1)]
    # E: Bourbaki labelling 1-3-4-5-6-7-8 with 2 attached to 4
    return [(0, 2), (1, 3)] + [(k, k + 1) for k in range(2, n - 1)]


def _raw_form(spec: RootSystemSpec) -> list[list[Fraction]]:
    """An unnormalized invariant form on the simple roots."""
    n, fam = spec.rank, spec.family
    b = [[Fraction(0)] * n for _ in range(n)]
    for k in range(n):
        b[k][k] = Fraction(2)
    for i, j in _edges(spec):
        b[i][j] = b[j][i] = Fraction(-1)
    if fam == "B":
        b[n - 1][n - 1] = Fraction(1)
    elif fam == "C":
        b[n - 1][n - 1] = Fraction(4)
        b[n - 2][n - 1] = b[n - 1][n - 2] = Fraction(-2)
    elif fam == "F":
        b[2][2] = b[3][3] = Fraction(1)
        b[2][3] = b[3][2] = Fraction(-1, 2)
    elif fam == "G":
        b[1][1] = Fraction(6)
        b[0][1] = b[1][0] = Fraction(-3)
    return b


def _pair(gram, a, b) -> Fraction:
    total = Fraction(0)
    for i, x in enumerate(a):
        if x:
            row = gram[i]
            for j, y in enumerate(b):
                if y:
                    total += x * y * row[j]
    return total


@dataclass(frozen=True)
class DiagramAutomorphism:
    """A permutation of simple-root indices preserving the Cartan matrix."""

    perm: tuple

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def act(self, root: Root) -> Root:
        out = [0] * len(root)
        for i, c in enumerate(root):
            out[self.perm[i]] = c
        return tuple(out)

    @property
    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.perm))

    def order(self) -> int:
        k, cur = 1, self.perm
        while any(i != p for i, p in enumerate(cur)):
            cur = tuple(self.perm[c] for c in cur)
            k += 1
        return k


@dataclass(frozen=True)
class RootSystem:
    spec: RootSystemSpec
    cartan: tuple
    killing_gram: tuple
    positive_roots: tuple
    _index: dict = field(repr=False, compare=False, hash=False)

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def simple_roots(self) -> tuple:
        return self.positive_roots[: self.rank]

    @cached_property
    def roots(self) -> tuple:
        return self.positive_roots + tuple(negate(r) for r in self.positive_roots)

    @cached_property
    def root_set(self) -> frozenset:
        return frozenset(self.roots)

    def is_root(self, r: Root) -> bool:
        return tuple(r) in self.root_set

    def positive_index(self, r: Root) -> int:
        """Position of a positive root in the (height, lex) order."""
        try:
            return self._index[tuple(r)]
        except KeyError:
            raise RootNotFoundError(f"{r} is not a positive root") from None

    def simple(self, i: int) -> Root:
        return self.positive_roots[i]

    def pair(self, a, b) -> Fraction:
        """Bilinear extension of the Killing gram to arbitrary lattice vectors."""
        return _pair(self.killing_gram, a, b)

    def coroot_pairing(self, a: Root, i: int) -> int:
        """``2 (a, alpha_i) / (alpha_i, alpha_i)``."""
        return sum(c * self.cartan[i][j] for j, c in enumerate(a))

    def reflect(self, i: int, a: Root) -> Root:
        k = self.coroot_pairing(a, i)
        out = list(a)
        out[i] -= k
        return tuple(out)

    def height(self, a: Root) -> int:
        return sum(a)


def negate(r: Root) -> Root:
    return tuple(-c for c in r)


def _order_key(r: Root):
    # equal heights: roots with larger early coordinates first, so that
    # alpha_1 precedes alpha_2 and so on
    return (sum(r), tuple(-c for c in r))


def build_root_system(spec: RootSystemSpec) -> RootSystem:
    n = spec.rank
    raw = _raw_form(spec)
    cartan = tuple(tuple(int(2 * raw[i][j] / raw[i][i]) for j in range(n)) for i in range(n))
    simples = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]

    found = set(simples)
    layer = list(simples)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # p = how far the i-string through beta extends downwards
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                q = p - sum(c * cartan[i][j] for j, c in enumerate(beta))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    positive = tuple(sorted(found, key=_order_key))

    # Killing normalization: K(H, H') = sum over roots of a(H) a(H')
    a1 = simples[0]
    total = sum(_pair(raw, r, a1) ** 2 for r in positive) * 2
    r = total / raw[0][0]
    gram = tuple(tuple(raw[i][j] / r for j in range(n)) for i in range(n))
    index = {root: k for k, root in enumerate(positive)}
    return RootSystem(spec, cartan, gram, positive, index)


def root_system(family: str, rank: int) -> RootSystem:
    return build_root_system(RootSystemSpec(family, rank))


def inner_product(rs: RootSystem, a: Root, b: Root) -> Fraction:
    for r in (a, b):
        if not rs.is_root(r):
            raise RootNotFoundError(f"{tuple(r)} is not a root of {rs.spec.name}")
    return rs.pair(a, b)


def diagram_automorphisms(rs: RootSystem) -> list[DiagramAutomorphism]:
    """All Cartan-preserving permutations of order at most two, identity first."""
    n = rs.rank
    cartan = rs.cartan
    found = []

    def extend(prefix):
        k = len(prefix)
        if k == n:
            found.append(tuple(prefix))
            return
        for cand in range(n):
            if cand in prefix:
                continue
            if cartan[k][k] != cartan[cand][cand]:
                continue
            if all(cartan[j][k] == cartan[prefix[j]][cand] and cartan[k][j] == cartan[cand][prefix[j]]
                   for j in range(k)):
                extend(prefix + [cand])

    extend([])
    autos = [DiagramAutomorphism(p) for p in sorted(found)]
    autos = [a for a in autos if a.order() <= 2]
    autos.sort(key=lambda a: (not a.is_identity, a.perm))
    return autos


def nontrivial_involution(rs: RootSystem) -> DiagramAutomorphism | None:
    """The first non-identity diagram involution, if any."""
    autos = [a for a in diagram_automorphisms(rs) if not a.is_identity]
    return autos[0] if autos else None
