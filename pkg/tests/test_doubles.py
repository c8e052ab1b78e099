from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from manintriples.doubles import (
    DoubleVariant,
    build_double,
    double_conjugation,
    q_form,
    real_double,
)
from manintriples.errors import ManinError, VariantError
from manintriples.exactlin import Gaussian, complexify_vector, rank
from manintriples.liealg import build_algebra
from manintriples.realform import RealFormDescriptor


def ad_invariant(d, form):
    for z, a, b in product(range(d.dim), repeat=3):
        ez, ea, eb = d.basis_vector(z), d.basis_vector(a), d.basis_vector(b)
        if form(d.bracket(ez, ea), eb) + form(ea, d.bracket(ez, eb)):
            return False
    return True


def test_variant_tags():
    assert [v.tag for v in DoubleVariant] == ["A1C", "A2C", "A1R", "A2R", "A3R"]
    assert DoubleVariant.parse("Split") is DoubleVariant.parse("A2C")
    assert DoubleVariant.RealCase3.is_real and not DoubleVariant.Nilpotent.is_real
    with pytest.raises(VariantError):
        DoubleVariant.parse("A4C")


@pytest.mark.parametrize("variant", ["Nilpotent", "Split"])
def test_complex_doubles_are_lie_with_invariant_form(variant):
    d = build_double(build_algebra("A1"), variant)
    assert d.dim == 6
    assert d.jacobi_defect() is None
    Q = q_form(d, Gaussian(2, 1))
    assert rank(Q.gram) == 6
    assert ad_invariant(d, Q)


@pytest.mark.parametrize("variant", ["RealCase1", "RealCase2", "RealCase3"])
@pytest.mark.parametrize("name", ["su2", "sl2R"])
def test_real_doubles_are_lie_with_invariant_form(name, variant):
    d = real_double(RealFormDescriptor.parse(name).build(), variant)
    assert d.field == "real" and d.dim == 6
    assert d.jacobi_defect() is None
    Q = q_form(d, 1)
    assert rank(Q.gram) == 6
    assert all(x.is_real for row in Q.gram.rows for x in row)
    assert ad_invariant(d, Q)


def test_split_idempotent_blocks_commute():
    alg = build_algebra("A2")
    d = build_double(alg, "Split")
    x, y = alg.E((1, 0)), alg.E((0, 1))
    assert not any(d.bracket(d.first(x), d.second(y)))
    assert d.bracket(d.first(x), d.first(y)) == d.first(alg.bracket(x, y))


def test_nilpotent_j_squares_to_zero():
    alg = build_algebra("A1")
    d = build_double(alg, "Nilpotent")
    x, y = alg.E((1,)), alg.E((-1,))
    assert not any(d.bracket(d.second(x), d.second(y)))
    assert d.bracket(d.first(x), d.second(y)) == d.second(alg.bracket(x, y))


def test_realcase2_j_squares_to_quarter():
    rf = RealFormDescriptor.parse("sl2R").build()
    d = real_double(rf, "RealCase2")
    n = d.base_dim
    a, b = d.basis_vector(n), d.basis_vector(n + 1)
    expected = d.base.bracket(d.base.basis_vector(0), d.base.basis_vector(1))
    assert d.bracket(a, b)[:n] == tuple(x / 4 for x in expected)


def test_realcase3_form_is_twice_imaginary_killing():
    rf = RealFormDescriptor.parse("su2").build()
    d = real_double(rf, "RealCase3")
    Q = q_form(d)
    alg = rf.algebra
    for a, b in product(range(d.dim), repeat=2):
        u, v = complexify_vector(d.basis_vector(a)), complexify_vector(d.basis_vector(b))
        assert Q(d.basis_vector(a), d.basis_vector(b)) == 2 * alg.killing(u, v).im


def test_form_rejects_zero_scale_and_bad_variants():
    alg = build_algebra("A1")
    with pytest.raises(ManinError):
        q_form(build_double(alg, "Split"), 0)
    with pytest.raises(VariantError):
        build_double(alg, "RealCase1")
    with pytest.raises(VariantError):
        real_double(RealFormDescriptor.parse("su2").build(), "Split")
    with pytest.raises(VariantError):
        build_double(alg, "Nilpotent").diagonal(alg.H(0))


def test_double_conjugation_is_involutive_automorphism():
    rf = RealFormDescriptor.parse("sl3R").build()
    d = build_double(rf.algebra, "Split")
    sb = double_conjugation(d, rf.sigma)
    assert sb.semilinear.is_involution()
    for a, b in product(range(0, d.dim, 3), repeat=2):
        x, y = d.basis_vector(a), d.basis_vector(b)
        assert sb(d.bracket(x, y)) == d.bracket(sb(x), sb(y))
    assert sb.fixed_space().dim == d.dim
    x = rf.algebra.E((1, 0))
    assert sb(sb.tilde(x)) == sb.tilde(x)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=6, max_size=6),
       st.lists(st.integers(-5, 5), min_size=6, max_size=6),
       st.integers(1, 4))
def test_split_form_symmetric_property(xs, ys, s):
    d = build_double(build_algebra("A1"), "Split")
    Q = q_form(d, s)
    x = tuple(Gaussian(v) for v in xs)
    y = tuple(Gaussian(0, v) for v in ys)
    assert Q(x, y) == Q(y, x)
