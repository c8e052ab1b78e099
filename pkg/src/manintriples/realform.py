"""Conjugations of a complex simple Lie algebra and their real forms.

All real forms are presented as ``sigma = tau o theta`` where ``tau`` is the
compact conjugation and ``theta = s^eps o chi`` combines a diagram
automorphism ``s`` with a sign character ``chi`` on the root lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import AutomorphismError, IncompatibleSignsError, InvalidSpecError, ManinError
from .exactlin import (
    I,
    ONE,
    ZERO,
    Gaussian,
    Matrix,
    SemilinearMap,
    Subspace,
    complexify_vector,
    echelon_basis,
    intersection,
    kernel,
    linear_realified_matrix,
    realify,
    realify_vector,
    scale,
    semilinear_fixed_space,
    signature,
)
from .liealg import (
    WeylBasisAlgebra,
    automorphism_defect,
    build_algebra,
    lift_simple_map,
    map_from_images,
)
from .rootsys import DiagramAutomorphism, Root, RootSystemSpec, diagram_automorphisms, negate


@dataclass(frozen=True)
class SignCharacter:
    """A homomorphism from the root lattice to ``{+1, -1}`` given on simple roots."""

    signs: tuple

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise IncompatibleSignsError("sign characters take values +1 or -1")

    @classmethod
    def trivial(cls, rank: int) -> "SignCharacter":
        return cls((1,) * rank)

    def __call__(self, root: Root) -> int:
        val = 1
        for s, c in zip(self.signs, root):
            if s == -1 and c % 2:
                val = -val
        return val

    def __mul__(self, other: "SignCharacter") -> "SignCharacter":
        return SignCharacter(tuple(a * b for a, b in zip(self.signs, other.signs)))


def _scaling_constant(alg: WeylBasisAlgebra, r: Root) -> Fraction:
    """``(a, a) / 2``, the factor between the Weyl and Chevalley negative root vectors."""
    return alg.root_system.pair(r, r) / 2


def _identity_automorphism(rank: int) -> DiagramAutomorphism:
    return DiagramAutomorphism(tuple(range(rank)))


@dataclass(frozen=True)
class Involution:
    s: DiagramAutomorphism
    epsilon: int
    chi: SignCharacter
    matrix: Matrix


@dataclass(frozen=True)
class Conjugation:
    """A semilinear involutive automorphism ``x -> L conj(x)``."""

    algebra: WeylBasisAlgebra
    semilinear: SemilinearMap
    inner: bool
    theta: Involution | None = None

    def __call__(self, v: Sequence[Gaussian]) -> tuple:
        return self.semilinear(v)

    @property
    def matrix(self) -> Matrix:
        return self.semilinear.matrix

    def image(self, V: Subspace) -> Subspace:
        return self.semilinear.image(V)

    def group_conjugate(self, g: Matrix) -> Matrix:
        """Matrix of ``sigma o g o sigma`` for a linear ``g``."""
        L = self.matrix
        return L @ g.conjugate() @ L.conjugate()

    def bracket_defect(self) -> tuple | None:
        alg = self.algebra
        for a in range(alg.dim):
            ea = alg.basis_vector(a)
            sa = self(ea)
            for b in range(a + 1, alg.dim):
                eb = alg.basis_vector(b)
                if self(alg.bracket(ea, eb)) != alg.bracket(sa, self(eb)):
                    return a, b
        return None

    def killing_defect(self) -> tuple | None:
        alg = self.algebra
        for a in range(alg.dim):
            for b in range(alg.dim):
                ea, eb = alg.basis_vector(a), alg.basis_vector(b)
                if alg.killing(self(ea), self(eb)) != alg.killing(ea, eb).conjugate():
                    return a, b
        return None

    def root_map(self) -> dict:
        """Induced permutation of roots: ``sigma(E_a)`` is a multiple of ``E_(root_map[a])``."""
        alg = self.algebra
        out = {}
        for r in alg.root_system.roots:
            img = self(alg.E(r))
            support = [k for k, x in enumerate(img) if x]
            if len(support) != 1 or alg.root_of_index(support[0]) is None:
                raise ManinError("conjugation does not permute root spaces")
            out[r] = alg.root_of_index(support[0])
        return out


def tau(alg: WeylBasisAlgebra) -> Conjugation:
    """The compact conjugation.

    ``tau(H) = -H`` on the real span of the ``H_k`` and
    ``tau(E_a) = -E_-a / k_a``, ``tau(E_-a) = -k_a E_a`` with ``k_a = (a, a)/2``;
    in the Chevalley normalization this is ``e_a -> -e_-a`` composed with
    coefficient conjugation.
    """
    n = alg.dim
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(alg.rank):
        rows[i][i] = -ONE
    for r in alg.root_system.positive_roots:
        p, m = alg.index_of_root(r), alg.index_of_root(negate(r))
        k = Gaussian(_scaling_constant(alg, r))
        rows[m][p] = -k.inverse()
        rows[p][m] = -k
    return Conjugation(alg, SemilinearMap(Matrix(rows)), inner=True)


def build_theta(alg: WeylBasisAlgebra, s: DiagramAutomorphism | None = None, epsilon: int = 0,
                chi: SignCharacter | Sequence[int] | None = None) -> Involution:
    rank = alg.rank
    s = s or _identity_automorphism(rank)
    if chi is None:
        chi = SignCharacter.trivial(rank)
    elif not isinstance(chi, SignCharacter):
        chi = SignCharacter(tuple(chi))
    if len(chi.signs) != rank or len(s.perm) != rank:
        raise IncompatibleSignsError("sign character or diagram automorphism has the wrong rank")
    if epsilon not in (0, 1):
        raise IncompatibleSignsError("epsilon must be 0 or 1")
    if s not in diagram_automorphisms(alg.root_system):
        raise IncompatibleSignsError("s is not an order-two diagram automorphism")
    if epsilon == 1:
        if s.is_identity:
            raise IncompatibleSignsError("an outer involution needs a nontrivial diagram automorphism")
        if any(chi.signs[s(i)] != chi.signs[i] for i in range(rank)):
            raise IncompatibleSignsError("sign character is not invariant under s")
    diag = [ONE] * alg.dim
    for r in alg.root_system.roots:
        if chi(r) == -1:
            diag[alg.index_of_root(r)] = -ONE
    m = Matrix.diagonal(diag)
    if epsilon == 1:
        m = map_from_images(alg, lift_simple_map(alg, {i: s(i) for i in range(rank)})) @ m
    ident = Matrix.identity(alg.dim)
    if m @ m != ident:
        raise AutomorphismError("theta does not square to the identity")
    if automorphism_defect(alg, m) is not None:
        raise AutomorphismError("theta is not a bracket automorphism")
    t = tau(alg).matrix
    if t @ m.conjugate() != m @ t:
        raise AutomorphismError("theta does not commute with the compact conjugation")
    return Involution(s, epsilon, chi, m)


def sigma_from(theta: Involution, alg: WeylBasisAlgebra) -> Conjugation:
    """``sigma = tau o theta``."""
    L = tau(alg).matrix @ theta.matrix.conjugate()
    semi = SemilinearMap(L)
    if not semi.is_involution():
        raise AutomorphismError("sigma does not square to the identity")
    return Conjugation(alg, semi, inner=(theta.epsilon == 0), theta=theta)


@dataclass(frozen=True)
class RealFormData:
    sigma: Conjugation
    g_real: Subspace
    k_part: Subspace
    m_part: Subspace
    compact: Subspace

    @property
    def algebra(self) -> WeylBasisAlgebra:
        return self.sigma.algebra

    @property
    def inner(self) -> bool:
        return self.sigma.inner

    def killing_gram(self) -> Matrix:
        """Killing form on the real basis of ``g_real`` (rational entries)."""
        alg = self.algebra
        vecs = [complexify_vector(b) for b in self.g_real.basis]
        return Matrix([[alg.killing(u, v) for v in vecs] for u in vecs])

    def killing_signature(self) -> tuple[int, int, int]:
        return signature(self.killing_gram())

    def cartan_real(self) -> Subspace:
        """``h(R) = g(R) ∩ h`` inside the realification."""
        return intersection(self.g_real, realify(self.algebra.cartan_subalgebra))


def _times_i(r: Sequence[Gaussian]) -> tuple:
    return realify_vector(scale(I, complexify_vector(r)))


def real_form(sigma: Conjugation) -> RealFormData:
    alg = sigma.algebra
    n = alg.dim
    g_real = semilinear_fixed_space(sigma.semilinear)
    t = tau(alg)
    compact = semilinear_fixed_space(t.semilinear)
    theta = sigma.semilinear.compose(t.semilinear)  # linear: sigma o tau
    theta_r = linear_realified_matrix(theta)
    ident = Matrix.identity(2 * n)
    plus = kernel(theta_r - ident, field="real")
    minus = kernel(theta_r + ident, field="real")
    k_part = intersection(compact, plus)
    m_part = intersection(compact, minus)
    if k_part.dim + m_part.dim != compact.dim:
        raise ManinError("theta does not split the compact form")
    rebuilt = echelon_basis(list(k_part.basis) + [_times_i(v) for v in m_part.basis], 2 * n, "real")
    if rebuilt != g_real:
        raise ManinError("k + i m does not reproduce the fixed space of sigma")
    return RealFormData(sigma, g_real, k_part, m_part, compact)


# --------------------------------------------------------------------------
# Descriptors


SHORTHANDS = {
    "su2": {"family": "A", "rank": 1, "epsilon": 0, "s": [0], "chi": [1]},
    "sl2R": {"family": "A", "rank": 1, "epsilon": 0, "s": [0], "chi": [-1]},
    "su3": {"family": "A", "rank": 2, "epsilon": 0, "s": [0, 1], "chi": [1, 1]},
    "su21": {"family": "A", "rank": 2, "epsilon": 0, "s": [0, 1], "chi": [-1, 1]},
    "sl3R": {"family": "A", "rank": 2, "epsilon": 1, "s": [1, 0], "chi": [1, 1]},
}


@dataclass(frozen=True)
class RealFormDescriptor:
    family: str
    rank: int
    epsilon: int
    s: tuple
    chi: tuple

    @classmethod
    def from_dict(cls, d: dict) -> "RealFormDescriptor":
        try:
            family, rank = d["family"], d["rank"]
        except (KeyError, TypeError):
            raise InvalidSpecError("descriptor needs 'family' and 'rank'") from None
        spec = RootSystemSpec(family, rank)
        eps = d.get("epsilon", 0)
        s = tuple(d.get("s", range(spec.rank)))
        chi = tuple(d.get("chi", [1] * spec.rank))
        if eps not in (0, 1) or len(s) != spec.rank or len(chi) != spec.rank:
            raise InvalidSpecError("descriptor fields have the wrong shape")
        if sorted(s) != list(range(spec.rank)) or any(c not in (1, -1) for c in chi):
            raise InvalidSpecError("descriptor 's' must be a permutation and 'chi' a sign list")
        return cls(family, rank, eps, s, chi)

    @classmethod
    def parse(cls, text: str) -> "RealFormDescriptor":
        if text in SHORTHANDS:
            return cls.from_dict(SHORTHANDS[text])
        raise InvalidSpecError(f"unknown real form shorthand {text!r}")

    def as_dict(self) -> dict:
        return {"family": self.family, "rank": self.rank, "epsilon": self.epsilon,
                "s": list(self.s), "chi": list(self.chi)}

    def build(self, alg: WeylBasisAlgebra | None = None) -> RealFormData:
        if alg is None:
            alg = build_algebra(RootSystemSpec(self.family, self.rank))
        try:
            theta = build_theta(alg, DiagramAutomorphism(self.s), self.epsilon, SignCharacter(self.chi))
        except IncompatibleSignsError as exc:
            raise InvalidSpecError(str(exc)) from exc
        return real_form(sigma_from(theta, alg))
