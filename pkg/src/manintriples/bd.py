"""Admissible maps between sets of simple roots and their extensions.

A :class:`PhiMap` is a bijection ``phi: S1 -> S2`` of simple-root subsets that
preserves inner products and pushes every root out of ``S1`` after finitely
many steps.  A :class:`PhiExtension` adds the Cartan data needed to define
``phi`` on the quotient ``r1 / l1`` of the reductive parts.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import (
    InconsistencyError,
    ManinError,
    PreconditionError,
)
from .exactlin import (
    I,
    ONE,
    ZERO,
    Gaussian,
    Matrix,
    SpanSolver,
    Subspace,
    intersection,
    kernel,
    lincomb,
    rank,
    sub,
    vec,
    zero_subspace,
)
from .liealg import WeylBasisAlgebra, exp_nilpotent, lift_simple_map, parabolic_data
from .realform import Conjugation, SignCharacter
from .rootsys import DiagramAutomorphism, RootSystem, diagram_automorphisms, negate

SignVector = SignCharacter


# --------------------------------------------------------------------------
# Maps of simple roots


@dataclass(frozen=True)
class PhiMap:
    pi1: tuple
    pi2: tuple
    images: tuple  # images[k] is phi(pi1[k])

    def __post_init__(self):
        if len(self.pi1) != len(self.images) or sorted(self.images) != list(self.pi2):
            raise ManinError("images must enumerate pi2")

    @classmethod
    def from_dict(cls, mapping: dict) -> "PhiMap":
        pi1 = tuple(sorted(mapping))
        images = tuple(mapping[i] for i in pi1)
        return cls(pi1, tuple(sorted(images)), images)

    @classmethod
    def empty(cls) -> "PhiMap":
        return cls((), (), ())

    def as_dict(self) -> dict:
        return dict(zip(self.pi1, self.images))

    def __call__(self, i: int) -> int:
        return self.as_dict()[i]

    def inverse_dict(self) -> dict:
        return dict(zip(self.images, self.pi1))

    @property
    def pi0(self) -> tuple:
        return tuple(sorted(set(self.pi1) | set(self.pi2)))

    def describe(self) -> list:
        return [[a, b] for a, b in zip(self.pi1, self.images)]


def is_admissible(rs: RootSystem, mapping: dict) -> bool:
    """Conditions i)-iii) for a map given as a dict on simple-root indices."""
    dom = list(mapping)
    img = [mapping[i] for i in dom]
    if len(set(img)) != len(img):
        return False
    gram = rs.killing_gram
    for a in dom:
        for b in dom:
            if gram[mapping[a]][mapping[b]] != gram[a][b]:
                return False
    for a in dom:
        cur, steps = a, 0
        while cur in mapping:
            cur = mapping[cur]
            steps += 1
            if steps > len(dom):
                return False
    return True


def enumerate_phi(rs: RootSystem) -> list[PhiMap]:
    """All admissible maps, ordered by (size, domain, images)."""
    n = rs.rank
    out = []
    for k in range(n + 1):
        for pi1 in itertools.combinations(range(n), k):
            for images in itertools.permutations(range(n), k):
                mapping = dict(zip(pi1, images))
                if is_admissible(rs, mapping):
                    out.append(PhiMap(pi1, tuple(sorted(images)), images))
    return out


@dataclass(frozen=True)
class Chain:
    roots: tuple

    def __len__(self):
        return len(self.roots)

    def position(self, i: int) -> int:
        """1-based position of a simple root in the chain."""
        return self.roots.index(i) + 1


def chains(phi: PhiMap) -> list[Chain]:
    mapping = phi.as_dict()
    starts = [i for i in phi.pi0 if i not in set(phi.pi2)]
    out = []
    for s in starts:
        seq = [s]
        while seq[-1] in mapping:
            seq.append(mapping[seq[-1]])
        out.append(Chain(tuple(seq)))
    return out


def _check_s_compatible(s: DiagramAutomorphism, phi: PhiMap) -> None:
    if tuple(sorted(s(i) for i in phi.pi1)) != phi.pi2:
        raise PreconditionError("s does not map pi1 onto pi2")
    mapping = phi.as_dict()
    for a in phi.pi1:
        b = s(mapping[a])
        if b not in mapping or mapping[b] != s(a):
            raise PreconditionError("s o phi is not an involution on pi1")


def s_stability(chain_list: Sequence[Chain], s: DiagramAutomorphism, phi: PhiMap) -> bool:
    """Whether ``s`` permutes the maximal chains (as sets)."""
    _check_s_compatible(s, phi)
    sets = {frozenset(c.roots) for c in chain_list}
    return all(frozenset(s(i) for i in c.roots) in sets for c in chain_list)


# --------------------------------------------------------------------------
# Extensions


def _torus_value(torus: Sequence[Gaussian], root) -> Gaussian:
    val = ONE
    for t, c in zip(torus, root):
        if c:
            val = val * (t ** c)
    return val


@dataclass(eq=False)
class PhiExtension:
    """``phi`` together with Cartan data ``(h_bar_i, l_i)`` and the Cartan part of the map.

    ``cartan_reps`` are representatives of ``h_bar1 / l1`` (vectors of ``g``) and
    ``cartan_images`` their images in ``h_bar2``.  ``torus`` optionally twists
    the root-vector part by ``Ad_t`` with ``t`` given on the simple roots.
    """

    algebra: WeylBasisAlgebra
    phi: PhiMap
    h_bar1: Subspace
    h_bar2: Subspace
    l1: Subspace
    l2: Subspace
    cartan_reps: tuple
    cartan_images: tuple
    torus: tuple | None = None

    def __post_init__(self):
        self.cartan_reps = tuple(vec(v) for v in self.cartan_reps)
        self.cartan_images = tuple(vec(v) for v in self.cartan_images)
        if self.torus is not None:
            self.torus = vec(self.torus)
        self.validate()

    # ---- constructors

    @classmethod
    def from_cartan_map(cls, alg: WeylBasisAlgebra, phi: PhiMap, cartan_map: Matrix,
                        torus=None) -> "PhiExtension":
        """``h_bar_i = h``, ``l_i = 0``; ``cartan_map`` acts on H-coordinates."""
        n = alg.rank
        if cartan_map.shape != (n, n):
            raise ManinError("Cartan map must be a rank x rank matrix")
        h = alg.cartan_subalgebra
        zero = zero_subspace(alg.dim)
        reps = [alg.H(i) for i in range(n)]
        images = [alg.embed_cartan(cartan_map.column(i)) for i in range(n)]
        return cls(alg, phi, h, h, zero, zero, tuple(reps), tuple(images), torus)

    def with_torus(self, torus) -> "PhiExtension":
        return PhiExtension(self.algebra, self.phi, self.h_bar1, self.h_bar2, self.l1, self.l2,
                            self.cartan_reps, self.cartan_images, torus)

    def with_cartan_images(self, images) -> "PhiExtension":
        return PhiExtension(self.algebra, self.phi, self.h_bar1, self.h_bar2, self.l1, self.l2,
                            self.cartan_reps, tuple(images), self.torus)

    # ---- derived data

    @cached_property
    def parabolic1(self):
        return parabolic_data(self.algebra, self.phi.pi1)

    @cached_property
    def parabolic2(self):
        return parabolic_data(self.algebra, self.phi.pi2)

    @cached_property
    def _root_part(self) -> tuple[list, list]:
        alg = self.algebra
        lifted = lift_simple_map(alg, self.phi.as_dict())
        reps, imgs = [], []
        for r in alg.subsystem_roots(self.phi.pi1):
            for root in (r, negate(r)):
                k = alg.index_of_root(root)
                img = lifted[k]
                if self.torus is not None:
                    img = tuple(x * _torus_value(self.torus, alg.root_of_index(j)) if x else x
                                for j, x in enumerate(img))
                reps.append(alg.basis_vector(k))
                imgs.append(img)
        return reps, imgs

    @cached_property
    def domain_reps(self) -> tuple:
        """Representatives of a basis of ``r1 / l1``."""
        return tuple(self._root_part[0]) + self.cartan_reps

    @cached_property
    def domain_images(self) -> tuple:
        return tuple(self._root_part[1]) + self.cartan_images

    @cached_property
    def r_bar1(self) -> Subspace:
        return self.algebra.span(self._root_part[0]) + self.h_bar1

    @cached_property
    def r_bar2(self) -> Subspace:
        alg = self.algebra
        roots = [alg.E(r) for x in alg.subsystem_roots(self.phi.pi2) for r in (x, negate(x))]
        return alg.span(roots) + self.h_bar2

    @cached_property
    def _forward(self) -> SpanSolver:
        return SpanSolver(list(self.domain_reps) + list(self.l1.basis), self.algebra.dim)

    @cached_property
    def _backward(self) -> SpanSolver:
        return SpanSolver(list(self.domain_images) + list(self.l2.basis), self.algebra.dim)

    def quotient_coordinates(self, x) -> tuple:
        coords = self._forward.coordinates(x)
        if coords is None:
            raise ManinError("element is outside r_bar1")
        return coords[: len(self.domain_reps)]

    def apply(self, x) -> tuple:
        """``phi(x)`` for ``x`` in ``r_bar1`` (a representative modulo ``l2``)."""
        c = self.quotient_coordinates(x)
        return lincomb(c, self.domain_images, self.algebra.dim)

    def apply_inverse(self, y) -> tuple:
        coords = self._backward.coordinates(y)
        if coords is None:
            raise ManinError("element is outside r_bar2")
        return lincomb(coords[: len(self.domain_images)], self.domain_reps, self.algebra.dim)

    # ---- well-formedness

    def validate(self) -> None:
        alg = self.algebra
        h = alg.cartan_subalgebra
        for name in ("h_bar1", "h_bar2", "l1", "l2"):
            sp = getattr(self, name)
            if sp.ambient_dim != alg.dim or not sp.is_subspace_of(h):
                raise ManinError(f"{name} must be a subspace of the Cartan subalgebra")
        for pi, hb in ((self.phi.pi1, self.h_bar1), (self.phi.pi2, self.h_bar2)):
            if not all(hb.contains(alg.H(i)) for i in pi):
                raise ManinError("h_i must lie in h_bar_i")
        for hb, l in ((self.h_bar1, self.l1), (self.h_bar2, self.l2)):
            perp = intersection(alg.orthogonal_complement(hb), h)
            if not perp.is_subspace_of(hb):
                raise ManinError("h_bar_i must contain its orthogonal complement in h")
            if intersection(hb, perp) != l:
                raise ManinError("l_i must be the kernel of the Killing form on h_bar_i")
        m = self.h_bar1.dim - self.l1.dim
        if len(self.cartan_reps) != m or len(self.cartan_images) != self.h_bar2.dim - self.l2.dim \
                or len(self.cartan_images) != m:
            raise ManinError("Cartan representatives do not match the quotient dimensions")
        if not all(self.h_bar1.contains(v) for v in self.cartan_reps):
            raise ManinError("Cartan representatives must lie in h_bar1")
        if not all(self.h_bar2.contains(v) for v in self.cartan_images):
            raise ManinError("Cartan images must lie in h_bar2")
        if rank(list(self.cartan_reps) + list(self.l1.basis) or [(ZERO,) * alg.dim]) != self.h_bar1.dim:
            raise ManinError("Cartan representatives are dependent modulo l1")
        if rank(list(self.cartan_images) + list(self.l2.basis) or [(ZERO,) * alg.dim]) != self.h_bar2.dim:
            raise ManinError("Cartan map is not bijective modulo l2")
        # compatibility with the root part on h_1
        mapping = self.phi.as_dict()
        for i in self.phi.pi1:
            img = self.apply(alg.H(i))
            if not self.l2.contains(sub(img, alg.H(mapping[i]))):
                raise ManinError("Cartan map disagrees with phi on H_alpha")


def check_iv(ext: PhiExtension) -> bool:
    """Killing isometry on ``r1 / l1`` and no fixed points on ``r1 ∩ r2`` modulo ``l2``."""
    alg = ext.algebra
    reps, imgs = ext.domain_reps, ext.domain_images
    for a in range(len(reps)):
        for b in range(a, len(reps)):
            if alg.killing(imgs[a], imgs[b]) != alg.killing(reps[a], reps[b]):
                return False
    common = intersection(ext.r_bar1, ext.r_bar2)
    moved = [sub(ext.apply(x), x) for x in common.basis]
    vecs = moved + list(ext.l2.basis)
    if not vecs:
        return True
    return rank(vecs) == len(vecs)


def check_v_forms(ext: PhiExtension, sigma: Conjugation) -> tuple[bool, bool]:
    """Both formulations of condition v): ``(direct, squared)``."""
    if sigma.image(ext.r_bar1) != ext.r_bar2 or sigma.image(ext.l1) != ext.l2:
        return False, False
    direct = True
    squared = True
    for x in ext.domain_reps:
        lhs = sigma(ext.apply(x))
        rhs = ext.apply_inverse(sigma(x))
        if not ext.l1.contains(sub(lhs, rhs)):
            direct = False
        twice = sigma(ext.apply(lhs))
        if not ext.l1.contains(sub(twice, x)):
            squared = False
    return direct, squared


def check_v(ext: PhiExtension, sigma: Conjugation) -> bool:
    direct, squared = check_v_forms(ext, sigma)
    if direct != squared:
        raise InconsistencyError("the two formulations of condition v) disagree")
    return direct


def stabilizer(ext: PhiExtension) -> Subspace:
    """``{v in h : alpha(v) = phi(alpha)(v) for alpha in pi1}``."""
    alg = ext.algebra
    n = alg.rank
    gram = alg.root_system.killing_gram
    rows = []
    for i, j in zip(ext.phi.pi1, ext.phi.images):
        rows.append([gram[i][k] - gram[j][k] for k in range(n)])
    if not rows:
        return alg.cartan_subalgebra
    ker = kernel(rows, ncols=n)
    return alg.span(alg.embed_cartan(v) for v in ker.basis)


# --------------------------------------------------------------------------
# Canonical Cartan extensions


def automorphism_group_elements(rs: RootSystem, limit: int = 20000) -> Iterator[Matrix]:
    """Breadth-first enumeration of Aut(Δ) = W ⋊ diagram automorphisms.

    Elements are integer matrices acting on simple-root coordinates.
    """
    n = rs.rank
    gens = []
    for i in range(n):
        cols = []
        for j in range(n):
            col = [1 if k == j else 0 for k in range(n)]
            col[i] -= rs.cartan[i][j]
            cols.append(col)
        gens.append(tuple(tuple(cols[j][k] for j in range(n)) for k in range(n)))
    for s in diagram_automorphisms(rs):
        if s.is_identity:
            continue
        gens.append(tuple(tuple(1 if s(j) == k else 0 for j in range(n)) for k in range(n)))

    def mul(a, b):
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                     for i in range(n))

    ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    seen = {ident}
    queue = deque([ident])
    count = 0
    while queue and count < limit:
        g = queue.popleft()
        count += 1
        yield Matrix(g)
        for h in gens:
            gh = mul(g, h)
            if gh not in seen:
                seen.add(gh)
                queue.append(gh)


def _fixed_point_free(m: Matrix) -> bool:
    return rank(m - Matrix.identity(m.nrows)) == m.nrows


def cartan_candidates(alg: WeylBasisAlgebra, phi: PhiMap, limit: int = 20000) -> Iterator[Matrix]:
    """Rational Cartan maps extending ``phi`` that are isometric with no eigenvalue one.

    ``-1`` is tried first when ``phi`` is empty; then Aut(Δ) in BFS order.
    """
    n = alg.rank
    mapping = phi.as_dict()
    seen = set()
    if not mapping:
        minus = Matrix.identity(n).scaled(-1)
        seen.add(minus)
        yield minus
    for w in automorphism_group_elements(alg.root_system, limit):
        if w in seen:
            continue
        if all(w.column(i) == alg.root_system.simple(j) for i, j in mapping.items()) \
                and _fixed_point_free(w):
            seen.add(w)
            yield w


def canonical_extension(alg: WeylBasisAlgebra, phi: PhiMap, limit: int = 20000) -> PhiExtension | None:
    """First candidate extension (h_bar = h, l = 0) satisfying condition iv)."""
    for m in cartan_candidates(alg, phi, limit):
        ext = PhiExtension.from_cartan_map(alg, phi, m)
        if check_iv(ext):
            return ext
    return None


# --------------------------------------------------------------------------
# Sign groups


def sign_adjoint(alg: WeylBasisAlgebra, a: SignCharacter) -> Matrix:
    """``Ad_a`` for the torus involution with values ``a`` on simple roots."""
    diag = [ONE] * alg.dim
    for r in alg.root_system.roots:
        if a(r) == -1:
            diag[alg.index_of_root(r)] = -ONE
    return Matrix.diagonal(diag)


def all_sign_vectors(rank_: int) -> list[SignCharacter]:
    return [SignCharacter(s) for s in itertools.product((1, -1), repeat=rank_)]


def group_A_phi(ext: PhiExtension | PhiMap, s: DiagramAutomorphism) -> list[SignCharacter]:
    """Sign vectors constant along chains, trivial off ``pi0`` unless ``s``-fixed,
    and trivial on chains that ``s`` moves."""
    phi = ext.phi if isinstance(ext, PhiExtension) else ext
    n = len(s.perm)
    ch = chains(phi)
    if not s_stability(ch, s, phi):
        raise PreconditionError("s does not permute the maximal chains")
    chain_of = {i: c for c in ch for i in c.roots}
    forced_one = set()
    for i in range(n):
        if i not in chain_of:
            if s(i) != i:
                forced_one.add(i)
        elif frozenset(s(j) for j in chain_of[i].roots) != frozenset(chain_of[i].roots):
            forced_one.add(i)
    mapping = phi.as_dict()
    out = []
    for a in all_sign_vectors(n):
        if any(a.signs[i] != 1 for i in forced_one):
            continue
        if any(a.signs[mapping[i]] != a.signs[i] for i in mapping):
            continue
        out.append(a)
    return out


def free_sign_roots(phi: PhiMap, s: DiagramAutomorphism) -> list[int]:
    """Simple roots whose sign the A^phi(R) constraints leave open."""
    n = len(s.perm)
    ch = chains(phi)
    chain_of = {i: c for c in ch for i in c.roots}
    free = []
    for i in range(n):
        if i not in chain_of:
            if s(i) == i:
                free.append(i)
        elif frozenset(s(j) for j in chain_of[i].roots) == frozenset(chain_of[i].roots):
            free.append(i)
    return free


# --------------------------------------------------------------------------
# Witness search


@dataclass(frozen=True)
class Witness:
    """``g = n_word · t`` with ``t`` taking the value ``i^phase_k`` on simple root ``k``."""

    word: tuple
    phases: tuple
    matrix: Matrix

    def as_dict(self) -> dict:
        return {"status": "found", "word": list(self.word), "phases": list(self.phases)}


@dataclass(frozen=True)
class NotFoundInSpace:
    """No witness in the searched family; this is not a proof of non-existence."""

    depth: int
    candidates: int

    def as_dict(self) -> dict:
        return {"status": "not_found_in_space", "depth": self.depth, "candidates": self.candidates}


def reflection_representative(alg: WeylBasisAlgebra, i: int) -> Matrix:
    """``Ad`` of ``exp(e) exp(-f) exp(e)`` for the Chevalley pair of simple root ``i``."""
    simple = alg.root_system.simple(i)
    k = alg.root_system.pair(simple, simple) / 2
    e = alg.ad_basis(alg.index_of_root(simple))
    f = alg.ad_basis(alg.index_of_root(negate(simple))).scaled(Gaussian(1 / k))
    ee = exp_nilpotent(e)
    return ee @ exp_nilpotent(f.scaled(-1)) @ ee


def torus_adjoint(alg: WeylBasisAlgebra, values: Sequence[Gaussian]) -> Matrix:
    diag = [ONE] * alg.dim
    for r in alg.root_system.roots:
        diag[alg.index_of_root(r)] = _torus_value(values, r)
    return Matrix.diagonal(diag)


_QUARTER = (ONE, I, -ONE, -I)


def witness_search(a: SignCharacter, sigma: Conjugation, depth: int = 2) -> Witness | NotFoundInSpace:
    """Search ``g = n_w t`` with ``Ad(sigma(g)^-1 g) = Ad(a)``.

    ``w`` ranges over words of length at most ``depth`` in the simple
    reflection representatives and ``t`` over torus elements with
    quarter-turn phases on the simple roots.
    """
    alg = sigma.algebra
    n = alg.rank
    dim = alg.dim
    target = sign_adjoint(alg, a)
    tdiag = [target.rows[q][q] for q in range(dim)]
    reps = [reflection_representative(alg, i) for i in range(n)]
    tori = []
    for phases in itertools.product(range(4), repeat=n):
        t = torus_adjoint(alg, [_QUARTER[p] for p in phases])
        st = sigma.group_conjugate(t)
        if any(st.rows[p][q] for p in range(dim) for q in range(dim) if p != q):
            raise ManinError("conjugated torus element is not diagonal")
        tori.append((phases, [t.rows[q][q] for q in range(dim)], [st.rows[q][q] for q in range(dim)]))
    count = 0
    for length in range(depth + 1):
        for word in itertools.product(range(n), repeat=length):
            P = Matrix.identity(dim)
            for i in word:
                P = P @ reps[i]
            Q = sigma.group_conjugate(P)
            for phases, tvals, svals in tori:
                count += 1
                ok = True
                for p in range(dim):
                    prow, qrow = P.rows[p], Q.rows[p]
                    for q in range(dim):
                        if prow[q] * tvals[q] != qrow[q] * svals[q] * tdiag[q]:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    g = P @ Matrix.diagonal(tvals)
                    if g != sigma.group_conjugate(g) @ target:
                        raise InconsistencyError("witness failed the exact matrix check")
                    return Witness(word, phases, g)
    return NotFoundInSpace(depth, count)


__all__ = [
    "Chain",
    "NotFoundInSpace",
    "PhiExtension",
    "PhiMap",
    "SignVector",
    "Witness",
    "all_sign_vectors",
    "automorphism_group_elements",
    "canonical_extension",
    "cartan_candidates",
    "chains",
    "check_iv",
    "check_v",
    "check_v_forms",
    "enumerate_phi",
    "free_sign_roots",
    "group_A_phi",
    "is_admissible",
    "reflection_representative",
    "s_stability",
    "sign_adjoint",
    "stabilizer",
    "torus_adjoint",
    "witness_search",
]
