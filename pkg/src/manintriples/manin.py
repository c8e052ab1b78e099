"""Complementary subalgebras and the Manin-triple verifier."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bd import PhiExtension, PhiMap, check_iv, check_v_forms, sign_adjoint
from .doubles import (
    DoubleAlgebra,
    DoubleConjugation,
    DoubleVariant,
    InvariantForm,
    build_double,
    q_form,
    real_double,
)
from .errors import (
    AutomorphismError,
    CocycleError,
    ConditionIVError,
    ConditionVError,
    DimensionError,
    InconsistencyError,
    ManinError,
    NotBijectiveError,
    NotComplementError,
    NotInnerError,
    NotInvolutiveError,
    NotIsotropicError,
    NotOuterError,
    NotSkewError,
    NotSubalgebraError,
    VariantError,
)
from .exactlin import (
    I,
    ZERO,
    Matrix,
    SemilinearMap,
    SpanSolver,
    Subspace,
    complex_span,
    complexify_vector,
    echelon_basis,
    intersection,
    lincomb,
    linear_realified_matrix,
    rank,
    realify,
    realify_vector,
    scale,
    semilinear_fixed_space,
    sub,
)
from .liealg import WeylBasisAlgebra, automorphism_defect, is_subalgebra
from .realform import RealFormData, SignCharacter


@dataclass(frozen=True)
class ManinTriple:
    g_sub: Subspace
    w_sub: Subspace
    double: DoubleAlgebra
    form: InvariantForm

    @property
    def field_tag(self) -> str:
        return "real" if self.double.field == "real" else "complex"


AXIOMS = ("symmetry", "nondegeneracy", "ad_invariance", "g_closed", "w_closed",
          "g_isotropic", "w_isotropic", "g_half_dimension", "w_half_dimension", "direct_sum")


@dataclass
class VerificationReport:
    results: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.results.get(a, False) for a in AXIOMS)

    def __bool__(self):
        return self.passed

    def failures(self) -> list[str]:
        return [a for a in AXIOMS if not self.results.get(a, False)]

    def as_dict(self) -> dict:
        return {"passed": self.passed, "axioms": {a: self.results[a] for a in AXIOMS},
                "witnesses": {k: v for k, v in self.witnesses.items()}}


def _isotropy_witness(form: InvariantForm, V: Subspace):
    for a in range(V.dim):
        for b in range(a, V.dim):
            if form(V.basis[a], V.basis[b]):
                return [a, b]
    return None


def _ad_invariance_witness(d: DoubleAlgebra, G: Matrix):
    n = d.dim
    rows = G.rows
    for z in range(n):
        cols = d.table[z]
        # U[i][j] = Q([z, e_i], e_j), V[i][j] = Q(e_i, [z, e_j])
        U = []
        for i in range(n):
            acc = [ZERO] * n
            for k, c in cols[i]:
                rk = rows[k]
                for j in range(n):
                    if rk[j]:
                        acc[j] = acc[j] + c * rk[j]
            U.append(acc)
        for j in range(n):
            for i in range(n):
                v = ZERO
                for k, c in cols[j]:
                    if rows[i][k]:
                        v = v + c * rows[i][k]
                if U[i][j] + v:
                    return [z, i, j]
    return None


def verify_manin(t: ManinTriple) -> VerificationReport:
    d, form = t.double, t.form
    G = form.gram
    n = d.dim
    rep = VerificationReport()
    sym = next(([i, j] for i in range(n) for j in range(i + 1, n) if G.rows[i][j] != G.rows[j][i]), None)
    rep.results["symmetry"] = sym is None
    if sym:
        rep.witnesses["symmetry"] = sym
    rep.results["nondegeneracy"] = rank(G) == n
    inv = _ad_invariance_witness(d, G)
    rep.results["ad_invariance"] = inv is None
    if inv:
        rep.witnesses["ad_invariance"] = inv
    for name, V in (("g", t.g_sub), ("w", t.w_sub)):
        if V.ambient_dim != n or V.field != d.field:
            raise DimensionError(f"{name}_sub does not live in the double")
        check = is_subalgebra(d, V)
        rep.results[f"{name}_closed"] = check.closed
        if not check.closed:
            rep.witnesses[f"{name}_closed"] = list(check.witness)
        iso = _isotropy_witness(form, V)
        rep.results[f"{name}_isotropic"] = iso is None
        if iso:
            rep.witnesses[f"{name}_isotropic"] = iso
        rep.results[f"{name}_half_dimension"] = 2 * V.dim == n
    total = t.g_sub + t.w_sub
    ok = total.dim == n and t.g_sub.dim + t.w_sub.dim == n
    rep.results["direct_sum"] = ok
    if not ok:
        common = intersection(t.g_sub, t.w_sub)
        rep.witnesses["direct_sum"] = {
            "dim_g": t.g_sub.dim, "dim_w": t.w_sub.dim, "dim_sum": total.dim,
            "intersection_vector": [str(x) for x in common.basis[0]] if common.dim else None,
        }
    return rep


# --------------------------------------------------------------------------
# Complex split case


def build_W_phi(ext: PhiExtension, d: DoubleAlgebra) -> Subspace:
    if d.variant is not DoubleVariant.Split:
        raise VariantError("W(phi) lives in the Split double")
    if d.base is not ext.algebra:
        raise ManinError("double and extension use different algebras")
    if not check_iv(ext):
        raise ConditionIVError("extension violates condition iv)")
    vecs = [d.first(v) for v in ext.l1.basis]
    vecs += [d.first(v) for v in ext.parabolic1.n1_plus.basis]
    vecs += [d.pair(x, y) for x, y in zip(ext.domain_reps, ext.domain_images)]
    vecs += [d.second(v) for v in ext.parabolic2.n1_minus.basis]
    vecs += [d.second(v) for v in ext.l2.basis]
    W = echelon_basis(vecs, d.dim, "complex")
    if W.dim != ext.algebra.dim:
        raise DimensionError("W(phi) does not have half the dimension of the double")
    return W


def diagonal_subalgebra(d: DoubleAlgebra) -> Subspace:
    alg = d.base
    return echelon_basis([d.diagonal(alg.basis_vector(k)) for k in range(alg.dim)], d.dim)


def split_triple(ext: PhiExtension, d: DoubleAlgebra | None = None) -> ManinTriple:
    d = d or build_double(ext.algebra, DoubleVariant.Split)
    return ManinTriple(diagonal_subalgebra(d), build_W_phi(ext, d), d, q_form(d, 1))


# --------------------------------------------------------------------------
# Complex nilpotent case


def build_W_case1(alg: WeylBasisAlgebra, L: Subspace, f_matrix: Matrix, d: DoubleAlgebra) -> Subspace:
    """``{a + f(a) j + b j : a in L, b in L^perp}``.

    ``f_matrix`` has one column per echelon basis vector of ``L``: a
    representative of ``f(basis_k)`` in ``g / L^perp``.
    """
    if d.variant is not DoubleVariant.Nilpotent:
        raise VariantError("the case-1 subalgebra lives in the Nilpotent double")
    check = is_subalgebra(alg, L)
    if not check:
        raise NotSubalgebraError("L is not bracket-closed")
    perp = alg.orthogonal_complement(L)
    fcols = f_matrix.columns() if f_matrix.ncols else []
    if len(fcols) != L.dim or (f_matrix.ncols and f_matrix.nrows != alg.dim):
        raise DimensionError("f needs one column of length dim g per basis vector of L")
    gens = fcols + list(perp.basis)
    if (rank(gens) if gens else 0) != alg.dim:
        raise NotBijectiveError("f is not a bijection onto g / L^perp")
    basis = L.basis
    for a in range(len(basis)):
        for b in range(len(basis)):
            if alg.killing(basis[a], fcols[b]) + alg.killing(fcols[a], basis[b]):
                raise NotSkewError("K(a, f(b)) + K(f(a), b) is nonzero")
            if b <= a:
                continue
            coords = check.certificate[(a, b)]
            lhs = lincomb(coords, fcols, alg.dim)
            rhs = sub(alg.bracket(basis[a], fcols[b]), alg.bracket(basis[b], fcols[a]))
            if not perp.contains(sub(lhs, rhs)):
                raise CocycleError("f fails the cocycle identity")
    vecs = [d.pair(x, y) for x, y in zip(basis, fcols)] + [d.second(v) for v in perp.basis]
    return echelon_basis(vecs, d.dim, "complex")


def nilpotent_triple(alg: WeylBasisAlgebra, L: Subspace, f_matrix: Matrix) -> ManinTriple:
    d = build_double(alg, DoubleVariant.Nilpotent)
    g_sub = echelon_basis([d.first(alg.basis_vector(k)) for k in range(alg.dim)], d.dim)
    return ManinTriple(g_sub, build_W_case1(alg, L, f_matrix, d), d, q_form(d, 1))


# --------------------------------------------------------------------------
# Real forms: inner case


def compact_torus(alg: WeylBasisAlgebra) -> Subspace:
    """Real span of the ``i H_k`` inside the realified algebra."""
    return echelon_basis([realify_vector(scale(I, alg.H(k))) for k in range(alg.rank)],
                         2 * alg.dim, "real")


def realified_cartan(alg: WeylBasisAlgebra) -> Subspace:
    return realify(alg.cartan_subalgebra)


def graph_subspace(alg: WeylBasisAlgebra, m: Matrix) -> Subspace:
    """``{x + i M x : x in Q^rank}`` in H-coordinates, realified."""
    vecs = []
    for k in range(alg.rank):
        col = m.column(k)
        h = [ZERO] * alg.rank
        h[k] = h[k] + 1
        h = [x + I * y for x, y in zip(h, col)]
        vecs.append(realify_vector(alg.embed_cartan(h)))
    return echelon_basis(vecs, 2 * alg.dim, "real")


def isotropic_graph(alg: WeylBasisAlgebra, skew: Matrix) -> Subspace:
    """``graph_subspace`` with ``M = G^-1 S`` where ``G`` is the Killing Gram matrix on the ``H_k``.

    For a rational ``S`` this is ``2 Im K``-isotropic exactly when ``S`` is skew.
    """
    n = alg.rank
    gram = [[alg.killing(alg.H(i), alg.H(j)) for j in range(n)] for i in range(n)]
    solver = SpanSolver([tuple(gram[i][j] for i in range(n)) for j in range(n)], n)
    cols = [solver.coordinates(skew.column(c)) for c in range(n)]
    return graph_subspace(alg, Matrix.from_columns(cols))


def _qr(alg: WeylBasisAlgebra, x, y):
    return 2 * alg.killing(complexify_vector(x), complexify_vector(y)).im


def check_Phi(rf: RealFormData, Phi: Subspace) -> None:
    alg = rf.algebra
    if Phi.field != "real" or Phi.ambient_dim != 2 * alg.dim:
        raise DimensionError("Phi must be a real-restricted subspace of the realified algebra")
    if not Phi.is_subspace_of(realified_cartan(alg)):
        raise ManinError("Phi must lie in the Cartan subalgebra")
    t = compact_torus(alg)
    if intersection(Phi, t).dim or Phi.dim + t.dim != 2 * alg.rank:
        raise NotComplementError("Phi is not a complement of the compact torus in h")
    for a in range(Phi.dim):
        for b in range(a, Phi.dim):
            if _qr(alg, Phi.basis[a], Phi.basis[b]):
                raise NotIsotropicError("Phi is not isotropic for 2 Im K")


def build_W_Phi(rf: RealFormData, Phi: Subspace) -> ManinTriple:
    """``W = Phi + n^+`` inside the realification of ``g``."""
    if not rf.inner:
        raise NotInnerError("this construction needs an inner real form")
    check_Phi(rf, Phi)
    alg = rf.algebra
    n_plus = alg.span(alg.E(r) for r in alg.root_system.positive_roots)
    W = Phi + realify(n_plus)
    d = real_double(rf, DoubleVariant.RealCase3)
    return ManinTriple(rf.g_real, W, d, q_form(d, 1))


def extension_from_Phi(rf: RealFormData, Phi: Subspace) -> PhiExtension:
    """The complex extension (empty ``phi``) attached to an admissible ``Phi``.

    ``h_bar1 = C Phi``, ``l1 = Phi ∩ i Phi``, ``h_bar2 = sigma(h_bar1)``,
    ``l2 = sigma(l1)``, and ``phi = sigma`` on representatives taken from ``Phi``.
    """
    check_Phi(rf, Phi)
    alg = rf.algebra
    sigma = rf.sigma
    h_bar1 = complex_span(Phi)
    i_phi = echelon_basis([realify_vector(scale(I, complexify_vector(v))) for v in Phi.basis],
                          Phi.ambient_dim, "real")
    l1 = complex_span(intersection(Phi, i_phi)) if Phi.dim else alg.span([])
    if l1.ambient_dim != alg.dim:
        l1 = alg.span([])
    reps = []
    current = l1
    for v in Phi.basis:
        x = complexify_vector(v)
        if not current.contains(x):
            reps.append(x)
            current = current + alg.span([x])
    images = [sigma(x) for x in reps]
    return PhiExtension(alg, PhiMap.empty(), h_bar1, sigma.image(h_bar1), l1, sigma.image(l1),
                        tuple(reps), tuple(images))


# --------------------------------------------------------------------------
# Real forms: outer case


@dataclass(frozen=True)
class RealPhiTripleData:
    ext: PhiExtension
    a: SignCharacter
    lambda_a: SemilinearMap
    F_a: Subspace


def real_phi_data(ext: PhiExtension, a: SignCharacter, rf: RealFormData) -> RealPhiTripleData:
    if rf.inner:
        raise NotOuterError("this construction needs an outer real form")
    if rf.algebra is not ext.algebra:
        raise ManinError("extension and real form use different algebras")
    if not check_iv(ext):
        raise ConditionIVError("extension violates condition iv)")
    direct, squared = check_v_forms(ext, rf.sigma)
    if direct != squared:
        raise InconsistencyError("the two formulations of condition v) disagree")
    if not direct:
        raise ConditionVError("extension violates condition v)")
    ad = sign_adjoint(ext.algebra, a)
    cols = []
    for img in ext.domain_images:
        y = ad.apply(rf.sigma(img))
        cols.append(ext.quotient_coordinates(y))
    lam = SemilinearMap(Matrix.from_columns(cols))
    if not lam.is_involution():
        raise NotInvolutiveError("lambda_a does not square to the identity")
    F = semilinear_fixed_space(lam)
    return RealPhiTripleData(ext, a, lam, F)


def lift_fixed_space(data: RealPhiTripleData) -> list:
    """Realified vectors of ``g`` representing ``F_a`` through the fixed representatives."""
    reps = data.ext.domain_reps
    n = data.ext.algebra.dim
    return [realify_vector(lincomb(complexify_vector(v), reps, n)) for v in data.F_a.basis]


def build_W_sigma_phi_a(ext: PhiExtension, a: SignCharacter, rf: RealFormData) -> ManinTriple:
    data = real_phi_data(ext, a, rf)
    alg = ext.algebra
    vecs = lift_fixed_space(data)
    vecs += list(realify(ext.l1).basis)
    vecs += list(realify(ext.parabolic1.n1_plus).basis)
    W = echelon_basis(vecs, 2 * alg.dim, "real")
    if W.dim != alg.dim:
        raise DimensionError("W(sigma, phi, a) does not have half the real dimension")
    d = real_double(rf, DoubleVariant.RealCase3)
    return ManinTriple(rf.g_real, W, d, q_form(d, 1))


# --------------------------------------------------------------------------
# Invariance and equivalence


def check_sigma_invariance(W: Subspace, sb: DoubleConjugation) -> bool:
    return sb.image(W) == W


def real_points(W: Subspace, sb: DoubleConjugation) -> Subspace:
    """``W ∩ d(R)`` mapped to ``g`` through ``x e + sigma(x) f -> x``, realified."""
    d = sb.double
    n = d.base_dim
    fixed = intersection(realify(W), sb.fixed_space())
    return echelon_basis([tuple(v[: 2 * n]) for v in fixed.basis], 2 * n, "real")


def _double_action(d: DoubleAlgebra, witness: Matrix) -> Matrix:
    n = d.base_dim
    if d.variant is DoubleVariant.RealCase3:
        if witness.shape == (n // 2, n // 2):
            return linear_realified_matrix(witness)
        if witness.shape == (n, n):
            return witness
        raise DimensionError("witness has the wrong size for the realified double")
    if witness.shape != (n, n):
        raise DimensionError("witness has the wrong size for this double")
    rows = [list(r) + [ZERO] * n for r in witness.rows] + [[ZERO] * n + list(r) for r in witness.rows]
    return Matrix(rows)


def equivalence_check(t1: ManinTriple, t2: ManinTriple, witness: Matrix, mode: str = "weak") -> bool:
    if mode not in ("weak", "gauge"):
        raise ManinError("mode must be 'weak' or 'gauge'")
    d = t1.double
    if t2.double.variant is not d.variant or t2.double.dim != d.dim:
        raise VariantError("triples live in different doubles")
    m = _double_action(d, witness)
    if rank(m) != d.dim or automorphism_defect(d, m) is not None:
        raise AutomorphismError("witness is not an automorphism of the double")

    def image(V: Subspace) -> Subspace:
        return echelon_basis([m.apply(v) for v in V.basis], V.ambient_dim, V.field)

    if image(t1.w_sub) != t2.w_sub:
        return False
    if mode == "gauge":
        return image(t1.g_sub) == t1.g_sub
    return True


__all__ = [
    "AXIOMS",
    "ManinTriple",
    "RealPhiTripleData",
    "VerificationReport",
    "build_W_Phi",
    "build_W_case1",
    "build_W_phi",
    "build_W_sigma_phi_a",
    "check_Phi",
    "check_sigma_invariance",
    "compact_torus",
    "diagonal_subalgebra",
    "equivalence_check",
    "extension_from_Phi",
    "graph_subspace",
    "isotropic_graph",
    "lift_fixed_space",
    "nilpotent_triple",
    "real_phi_data",
    "real_points",
    "split_triple",
    "verify_manin",
]
