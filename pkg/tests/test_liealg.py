from fractions import Fraction
from itertools import product

import pytest

from manintriples.exactlin import Gaussian, vec
from manintriples.liealg import (
    AlgebraElement,
    bracket,
    build_algebra,
    commutant_dimension,
    is_automorphism,
    is_subalgebra,
    killing,
    lift_simple_map,
    map_from_images,
    parabolic_data,
)
from manintriples.errors import ManinError
from manintriples.rootsys import diagram_automorphisms, negate

TYPES = ["A1", "A2", "A3", "B2", "C3", "G2"]


def matmul(x, y):
    n = len(x)
    return [[sum((x[i][k] * y[k][j] for k in range(n)), Fraction(0)) for j in range(n)]
            for i in range(n)]


def comm(x, y):
    a, b = matmul(x, y), matmul(y, x)
    return [[a[i][j] - b[i][j] for j in range(len(x))] for i in range(len(x))]


def unit(n, i, j, c=1):
    m = [[Fraction(0)] * n for _ in range(n)]
    m[i][j] = Fraction(c)
    return m


def lin(coeffs, mats):
    n = len(mats[0])
    out = [[Fraction(0)] * n for _ in range(n)]
    for c, m in zip(coeffs, mats):
        for i in range(n):
            for j in range(n):
                out[i][j] += c.re * m[i][j]
    return out


def sl_realization(alg):
    """Matrices for the Weyl basis of sl(n): E_a -> +-e_ij, E_-a -> e_ji / (2n)."""
    n = alg.rank + 1
    mats = {}
    for i in range(alg.rank):
        d = unit(n, i, i, Fraction(1, 2 * n))
        d[i + 1][i + 1] = Fraction(-1, 2 * n)
        mats[i] = d
    for r in alg.root_system.positive_roots:
        i = next(k for k, c in enumerate(r) if c)
        j = i + sum(r)
        mats[alg.index_of_root(r)] = unit(n, i, j)
        mats[alg.index_of_root(negate(r))] = unit(n, j, i, Fraction(1, 2 * n))
    return [mats[k] for k in range(alg.dim)]


def fix_signs(alg, mats):
    # propagate signs of non-simple root vectors through the table
    for r in alg.root_system.positive_roots:
        if sum(r) == 1:
            continue
        i = next(k for k, c in enumerate(r) if c)
        simple = tuple(1 if k == i else 0 for k in range(alg.rank))
        eta = tuple(c - s for c, s in zip(r, simple))
        a, b = alg.index_of_root(simple), alg.index_of_root(eta)
        (k, c), = alg.table[a][b]
        target = comm(mats[a], mats[b])
        mats[k] = [[x / c.re for x in row] for row in target]
        ka, kb = alg.index_of_root(negate(simple)), alg.index_of_root(negate(eta))
        (k2, c2), = alg.table[ka][kb]
        target = comm(mats[ka], mats[kb])
        mats[k2] = [[x / c2.re for x in row] for row in target]
    return mats


@pytest.mark.parametrize("name", ["A1", "A2", "A3"])
def test_weyl_basis_matches_matrix_oracle(name):
    alg = build_algebra(name)
    mats = fix_signs(alg, sl_realization(alg))
    n = alg.rank + 1
    for a, b in product(range(alg.dim), repeat=2):
        lhs = lin(alg.bracket(alg.basis_vector(a), alg.basis_vector(b)), mats)
        assert lhs == comm(mats[a], mats[b]), (alg.labels[a], alg.labels[b])
        tr = sum((matmul(mats[a], mats[b])[i][i] for i in range(n)), Fraction(0))
        assert alg.killing_matrix.rows[a][b] == 2 * n * tr


def test_a1_golden_brackets():
    alg = build_algebra("A1")
    H, E, F = (alg.element(lab) for lab in ("H1", "E(1)", "E(-1)"))
    assert bracket(H, E).coeffs == vec([0, Fraction(1, 2), 0])
    assert bracket(E, F) == H
    assert bracket(H, F).coeffs == vec([0, 0, Fraction(-1, 2)])
    assert killing(H, H) == Fraction(1, 2)
    assert killing(E, F) == 1


def test_a2_golden_constant():
    alg = build_algebra("A2")
    x = alg.bracket(alg.E((1, 0)), alg.E((0, 1)))
    assert x == alg.E((1, 1))  # N = 1, frozen from the sl(3) oracle


@pytest.mark.parametrize("name", TYPES)
def test_jacobi_and_antisymmetry(name):
    alg = build_algebra(name)
    assert alg.jacobi_defect() is None
    for a, b in product(range(alg.dim), repeat=2):
        x = alg.bracket(alg.basis_vector(a), alg.basis_vector(b))
        y = alg.bracket(alg.basis_vector(b), alg.basis_vector(a))
        assert all(p == -q for p, q in zip(x, y))


@pytest.mark.parametrize("name", TYPES)
def test_killing_invariance_and_normalization(name):
    alg = build_algebra(name)
    K = alg.killing_matrix
    for z, a, b in product(range(alg.dim), repeat=3):
        za = alg.bracket(alg.basis_vector(z), alg.basis_vector(a))
        zb = alg.bracket(alg.basis_vector(z), alg.basis_vector(b))
        assert alg.killing(za, alg.basis_vector(b)) + alg.killing(alg.basis_vector(a), zb) == 0
    for r in alg.root_system.positive_roots:
        assert alg.killing(alg.E(r), alg.E(negate(r))) == 1
        assert alg.bracket(alg.E(r), alg.E(negate(r))) == alg.h_alpha(r)
    assert all(K.rows[i][j] == K.rows[j][i] for i in range(alg.dim) for j in range(alg.dim))


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_killing_equals_adjoint_trace(name):
    alg = build_algebra(name)
    for a, b in product(range(alg.dim), repeat=2):
        u, v = alg.basis_vector(a), alg.basis_vector(b)
        assert alg.adjoint_trace_form(u, v) == alg.killing(u, v)


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_root_grading(name):
    alg = build_algebra(name)
    rs = alg.root_system
    for a, b in product(rs.roots, repeat=2):
        w = alg.bracket(alg.E(a), alg.E(b))
        s = tuple(x + y for x, y in zip(a, b))
        support = {k for k, x in enumerate(w) if x}
        if not any(s):
            assert w == alg.h_alpha(a)
        elif s in rs.root_set:
            assert support == {alg.index_of_root(s)}
        else:
            assert not support
    for i in range(alg.rank):
        for r in rs.roots:
            w = alg.bracket(alg.H(i), alg.E(r))
            assert w == tuple(x * rs.pair(r, rs.simple(i)) for x in alg.E(r))


def test_bracket_examples():
    alg = build_algebra("A2")
    x = AlgebraElement(alg, vec([1, 2, 0, Gaussian(0, 1), 0, 3, 0, 1]))
    assert not any(bracket(x, x).coeffs)
    assert not any(alg.bracket(alg.H(0), alg.H(1)))
    other = build_algebra("A2")
    with pytest.raises(ManinError):
        bracket(x, other.element("H1"))


def test_killing_vanishes_off_opposite_pairs():
    alg = build_algebra("B2")
    rs = alg.root_system
    for a, b in product(rs.roots, repeat=2):
        val = alg.killing(alg.E(a), alg.E(b))
        assert val == (1 if a == negate(b) else 0)


def test_parabolic_examples():
    alg = build_algebra("A2")
    empty = parabolic_data(alg, ())
    assert empty.g1.dim == 0
    assert empty.n1_plus == alg.span(alg.E(r) for r in alg.root_system.positive_roots)
    assert empty.r1 == alg.cartan_subalgebra
    one = parabolic_data(alg, (0,))
    assert one.g1.dim == 3
    assert one.n1_plus == alg.span([alg.E((0, 1)), alg.E((1, 1))])
    full = parabolic_data(alg, (0, 1))
    assert full.n1_plus.dim == 0
    assert full.p1_plus.dim == alg.dim
    m = parabolic_data(alg, (0,), other=(1,)).m1
    assert m == alg.span([alg.E((-1, 0))])


@pytest.mark.parametrize("name,subset", [("A2", (0,)), ("A3", (0, 2)), ("B2", (1,)),
                                         ("G2", (0,)), ("A3", ())])
def test_parabolic_pieces_are_subalgebras_and_orthogonality(name, subset):
    alg = build_algebra(name)
    p = parabolic_data(alg, subset)
    for sp in (p.g1, p.n1_plus, p.n1_minus, p.p1_plus, p.p1_minus, p.r1):
        assert is_subalgebra(alg, sp)
    assert alg.orthogonal_complement(p.p1_plus) == p.n1_plus
    assert p.p1_plus.dim == p.r1.dim + p.n1_plus.dim


def test_is_subalgebra_examples():
    alg = build_algebra("A1")
    n_plus = alg.span([alg.E((1,))])
    assert is_subalgebra(alg, n_plus)
    check = is_subalgebra(alg, alg.span([alg.E((1,)), alg.E((-1,))]))
    assert not check and check.witness == (0, 1)
    borel = alg.span([alg.H(0), alg.E((1,))])
    cert = is_subalgebra(alg, borel)
    assert cert and (0, 1) in cert.certificate


@pytest.mark.parametrize("name", ["A1", "A2", "B2"])
def test_commutant_dimension_is_one(name):
    assert commutant_dimension(build_algebra(name)) == 1


def test_commutant_detects_non_simple():
    from manintriples.liealg import StructureAlgebra

    # abelian 2-dim algebra: every matrix commutes
    table = [[(), ()], [(), ()]]
    assert commutant_dimension(StructureAlgebra(table, ["x", "y"])) == 4


@pytest.mark.parametrize("name", ["A2", "A3", "D4", "D5"])
def test_diagram_lifts_are_automorphisms(name):
    alg = build_algebra(name)
    for s in diagram_automorphisms(alg.root_system):
        imgs = lift_simple_map(alg, {i: s(i) for i in range(alg.rank)})
        m = map_from_images(alg, imgs)
        assert is_automorphism(alg, m)


def test_realified_algebra_is_lie():
    alg = build_algebra("A1")
    real = alg.realified()
    assert real.dim == 6 and real.field == "real"
    assert real.jacobi_defect() is None
