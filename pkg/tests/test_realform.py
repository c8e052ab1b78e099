import pytest

from manintriples.errors import IncompatibleSignsError, InvalidSpecError
from manintriples.exactlin import I, Matrix, complexify_vector, scale
from manintriples.liealg import build_algebra, is_subalgebra
from manintriples.realform import (
    SHORTHANDS,
    RealFormDescriptor,
    SignCharacter,
    build_theta,
    sigma_from,
    tau,
)
from manintriples.rootsys import DiagramAutomorphism, negate

# (compact, noncompact, null) signature of the Killing form on g(R)
SIGNATURES = {
    "su2": (0, 3, 0),
    "sl2R": (2, 1, 0),
    "su3": (0, 8, 0),
    "su21": (4, 4, 0),
    "sl3R": (5, 3, 0),
}


@pytest.mark.parametrize("name", sorted(SHORTHANDS))
def test_shorthand_signatures(name):
    rf = RealFormDescriptor.parse(name).build()
    assert rf.killing_signature() == SIGNATURES[name]
    assert rf.g_real.dim == rf.algebra.dim
    assert rf.k_part.dim + rf.m_part.dim == rf.algebra.dim


@pytest.mark.parametrize("name", sorted(SHORTHANDS))
def test_sigma_is_conjugation(name):
    rf = RealFormDescriptor.parse(name).build()
    s = rf.sigma
    assert s.semilinear.is_involution()
    assert s.bracket_defect() is None
    assert s.killing_defect() is None
    real_alg = rf.algebra.realified()
    assert is_subalgebra(real_alg, rf.g_real)


def test_compact_conjugation_on_a1():
    alg = build_algebra("A1")
    t = tau(alg)
    H, E, F = alg.H(0), alg.E((1,)), alg.E((-1,))
    assert t(H) == tuple(-x for x in H)
    # (alpha, alpha) = 1/2 under the Killing form, so k_alpha = 1/4
    assert t(E) == tuple(x * -4 for x in F)
    assert t(F) == tuple(x / -4 for x in E)
    assert t(scale(I, H)) == scale(I, H)


def test_root_maps():
    rf = RealFormDescriptor.parse("sl3R").build()
    rm = rf.sigma.root_map()
    # the outer form swaps alpha1 and alpha2 and negates
    assert rm[(1, 0)] == (0, -1)
    assert rm[(1, 1)] == (-1, -1)
    inner = RealFormDescriptor.parse("su21").build().sigma.root_map()
    assert all(inner[r] == negate(r) for r in inner)


def test_cartan_real_dimensions():
    assert RealFormDescriptor.parse("su3").build().cartan_real().dim == 2
    assert RealFormDescriptor.parse("sl3R").build().cartan_real().dim == 2


def test_k_and_m_bracket_relations():
    rf = RealFormDescriptor.parse("su21").build()
    alg = rf.algebra.realified()
    assert is_subalgebra(alg, rf.k_part)
    for x in rf.m_part.basis:
        for y in rf.m_part.basis:
            assert rf.k_part.contains(alg.bracket(x, y))


def test_theta_validation():
    alg = build_algebra("A2")
    swap = DiagramAutomorphism((1, 0))
    with pytest.raises(IncompatibleSignsError):
        build_theta(alg, swap, 1, SignCharacter((-1, 1)))
    with pytest.raises(IncompatibleSignsError):
        build_theta(alg, None, 1)
    with pytest.raises(IncompatibleSignsError):
        build_theta(alg, None, 2)
    with pytest.raises(IncompatibleSignsError):
        SignCharacter((1, 0))
    theta = build_theta(alg, swap, 1)
    assert theta.matrix @ theta.matrix == Matrix.identity(alg.dim)
    assert not sigma_from(theta, alg).inner


def test_descriptor_errors():
    with pytest.raises(InvalidSpecError):
        RealFormDescriptor.parse("so5")
    with pytest.raises(InvalidSpecError):
        RealFormDescriptor.from_dict({"family": "A"})
    with pytest.raises(InvalidSpecError):
        RealFormDescriptor.from_dict({"family": "A", "rank": 2, "s": [0, 0]})
    with pytest.raises(InvalidSpecError):
        RealFormDescriptor.from_dict({"family": "A", "rank": 2, "epsilon": 1, "s": [1, 0],
                                      "chi": [1, -1]}).build()
    d = {"family": "A", "rank": 2, "epsilon": 1, "s": [1, 0], "chi": [1, 1]}
    assert RealFormDescriptor.from_dict(d).as_dict() == d


def test_real_form_vectors_are_fixed():
    rf = RealFormDescriptor.parse("sl2R").build()
    for v in rf.g_real.basis:
        x = complexify_vector(v)
        assert rf.sigma(x) == x


def test_outer_a3_form_builds():
    rf = RealFormDescriptor.from_dict({"family": "A", "rank": 3, "epsilon": 1, "s": [2, 1, 0],
                                       "chi": [1, 1, 1]}).build()
    assert sum(rf.killing_signature()) == 15
    assert rf.sigma.bracket_defect() is None


def test_theta_rejects_non_diagram_permutation():
    alg = build_algebra("A3")
    with pytest.raises(IncompatibleSignsError):
        build_theta(alg, DiagramAutomorphism((1, 0, 2)), 1)
