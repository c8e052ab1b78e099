"""Acceptance criteria, each run against its wall-clock limit.

Every criterion prints one ``PASS``/``FAIL`` line (also when pytest captures
output).  Run directly with ``python tests/test_acceptance.py`` for the
summary alone.
"""

import contextlib
import io
import json
import random
import sys
import time
from fractions import Fraction
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import brute_force_phi  # noqa: E402

from manintriples.bd import (  # noqa: E402
    PhiMap,
    canonical_extension,
    cartan_candidates,
    chains,
    check_iv,
    check_v_forms,
    enumerate_phi,
    group_A_phi,
    witness_search,
    NotFoundInSpace,
    Witness,
    PhiExtension,
)
from manintriples.cli import main  # noqa: E402
from manintriples.doubles import build_double, double_conjugation  # noqa: E402
from manintriples.errors import NotComplementError, NotIsotropicError  # noqa: E402
from manintriples.exactlin import (  # noqa: E402
    I,
    Gaussian,
    Matrix,
    echelon_basis,
    realify_vector,
    scale,
)
from manintriples.liealg import build_algebra, commutant_dimension  # noqa: E402
from manintriples.manin import (  # noqa: E402
    build_W_Phi,
    build_W_phi,
    build_W_sigma_phi_a,
    check_sigma_invariance,
    extension_from_Phi,
    isotropic_graph,
    split_triple,
    verify_manin,
)
from manintriples.realform import RealFormDescriptor  # noqa: E402
from manintriples.rootsys import negate, root_system  # noqa: E402
from manintriples.serialize import dumps, triple_from_json, triple_to_json  # noqa: E402


def _cli(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


# ---------------------------------------------------------------- criteria


def structure_constants():
    for name in ["A1", "A2", "A3", "B2", "C3", "G2"]:
        alg = build_algebra(name)
        n = alg.dim
        basis = [alg.basis_vector(k) for k in range(n)]
        assert alg.jacobi_defect() is None, name
        for a, b in product(range(n), repeat=2):
            x = alg.bracket(basis[a], basis[b])
            y = alg.bracket(basis[b], basis[a])
            assert all(p == -q for p, q in zip(x, y)), name
        K = alg.killing_matrix.rows
        for z in range(n):
            cols = alg.table[z]
            for a in range(n):
                for b in range(n):
                    lhs = sum((c * K[k][b] for k, c in cols[a]), Gaussian(0))
                    rhs = sum((c * K[a][k] for k, c in cols[b]), Gaussian(0))
                    assert lhs + rhs == 0, (name, z, a, b)
        for r in alg.root_system.positive_roots:
            assert alg.killing(alg.E(r), alg.E(negate(r))) == 1


def commutant():
    for name in ["A1", "A2", "B2"]:
        assert commutant_dimension(build_algebra(name)) == 1, name


def bd_enumeration():
    assert len(enumerate_phi(root_system("A", 2))) == 3
    for family, rank in [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("G", 2)]:
        rs = root_system(family, rank)
        got = enumerate_phi(rs)
        assert {frozenset(p.as_dict().items()) for p in got} == brute_force_phi(rs)
        assert len(got) == len(brute_force_phi(rs))
        for phi in got:
            members = [i for c in chains(phi) for i in c.roots]
            assert sorted(members) == list(phi.pi0)


def split_property_suite():
    for name in ["A1", "A2", "B2"]:
        alg = build_algebra(name)
        d = build_double(alg, "Split")
        for phi in enumerate_phi(alg.root_system):
            ext = canonical_extension(alg, phi)
            if ext is None or not check_iv(ext):
                continue
            rep = verify_manin(split_triple(ext, d))
            assert rep.passed, (name, phi.describe(), rep.failures())


SU2_W = [["1", "0", "0", "0", "0", "0"], ["0", "0", "1", "0", "0", "0"], ["0", "0", "0", "1", "0", "0"]]


def example_su2():
    code, out = _cli("classify-real", "su2")
    assert code == 0
    (entry,) = json.loads(out)["results"]
    assert entry["verification"]["passed"]
    assert entry["triple"]["w_basis"] == SU2_W
    alg = build_algebra("A1")
    E = alg.E((1,))
    expected = echelon_basis([realify_vector(alg.H(0)), realify_vector(E), realify_vector(scale(I, E))],
                             6, "real")
    assert triple_from_json(entry["triple"]).w_sub == expected


def example_sl2r():
    rf = RealFormDescriptor.parse("sl2R").build()
    classes = group_A_phi(PhiMap.empty(), rf.sigma.theta.s)
    assert [a.signs for a in classes] == [(1,), (-1,)]
    found = [isinstance(witness_search(a, rf.sigma), Witness) for a in classes]
    assert found == [True, False]
    assert isinstance(witness_search(classes[1], rf.sigma), NotFoundInSpace)


def example_sl3r():
    rf = RealFormDescriptor.parse("sl3R").build()
    alg = rf.algebra
    ext = canonical_extension(alg, PhiMap.from_dict({0: 1}))
    group = group_A_phi(ext, rf.sigma.theta.s)
    assert [a.signs for a in group] == [(1, 1), (-1, -1)]
    Ws = {}
    for a in group:
        t = build_W_sigma_phi_a(ext, a, rf)
        assert verify_manin(t).passed
        assert t.w_sub.dim == 8
        Ws[a.signs] = t.w_sub
    # the conjugate-pair vectors E_a1 + a(-a1) sigma(E_a2) carry the sign
    for c in (1, I):
        x = scale(c, alg.E((1, 0)))
        partner = rf.sigma(scale(c, alg.E((0, 1))))
        plus = realify_vector(tuple(p + q for p, q in zip(x, partner)))
        minus = realify_vector(tuple(p - q for p, q in zip(x, partner)))
        assert Ws[(1, 1)].contains(plus) and not Ws[(1, 1)].contains(minus)
        assert Ws[(-1, -1)].contains(minus) and not Ws[(-1, -1)].contains(plus)
    # everything else is shared
    common = Ws[(1, 1)].intersect(Ws[(-1, -1)])
    assert common.dim == 6


def _random_skew(rng, n):
    S = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            S[i][j], S[j][i] = v, -v
    return Matrix(S)


def _rand_q(rng):
    return Fraction(rng.choice([-1, 1]) * rng.randint(1, 7), rng.randint(1, 5))


def phi_property_suite():
    rng = random.Random(20240601)
    for name in ["su2", "su3"]:
        rf = RealFormDescriptor.parse(name).build()
        alg = rf.algebra
        n = alg.rank
        amb = 2 * alg.dim
        for _ in range(20):
            base = isotropic_graph(alg, _random_skew(rng, n))
            # random basis of the same subspace
            mixed = []
            for _ in range(n):
                coeffs = [_rand_q(rng) for _ in base.basis]
                mixed.append(tuple(sum((c * v[k] for c, v in zip(coeffs, base.basis)), Fraction(0))
                                   for k in range(amb)))
            Phi = echelon_basis(mixed, amb, "real")
            if Phi.dim != n:
                Phi = base
            assert Phi == base
            assert verify_manin(build_W_Phi(rf, Phi)).passed
        rejected = 0
        for k in range(20):
            if k % 2 == 0:
                # isotropic, but meets the compact torus or is too small
                if n == 1:
                    Phi = echelon_basis([realify_vector(scale(Gaussian(0, _rand_q(rng)), alg.H(0)))]
                                        if k % 4 == 0 else [], amb, "real")
                else:
                    u = [_rand_q(rng) for _ in range(n)]
                    w = [_rand_q(rng) for _ in range(n)]
                    hu, hw = alg.embed_cartan(u), alg.embed_cartan(w)
                    ratio = alg.killing(hw, hu) / alg.killing(hu, hu)
                    hw = tuple(p - ratio * q for p, q in zip(hw, hu))
                    Phi = echelon_basis([realify_vector(scale(I, hu)), realify_vector(hw)], amb, "real")
                expected = NotComplementError
            else:
                # complement of t, but not isotropic
                S = _random_skew(rng, n).rows
                S = [list(r) for r in S]
                S[0][0] = _rand_q(rng)
                Phi = isotropic_graph(alg, Matrix(S))
                expected = NotIsotropicError
            with pytest.raises(expected):
                build_W_Phi(rf, Phi)
            rejected += 1
        assert rejected == 20


_FORMS = [
    ("A", 2, 0, [0, 1], [1, 1]),
    ("A", 2, 0, [0, 1], [-1, 1]),
    ("A", 2, 1, [1, 0], [1, 1]),
    ("A", 3, 0, [0, 1, 2], [1, 1, 1]),
    ("A", 3, 0, [0, 1, 2], [1, -1, 1]),
    ("A", 3, 1, [2, 1, 0], [1, 1, 1]),
    ("A", 3, 1, [2, 1, 0], [-1, 1, -1]),
]
_TWISTS = [Gaussian(1), Gaussian(-1), Gaussian(0, 1), Gaussian(0, -1), Gaussian(2), Gaussian(1, 1)]


def _random_extension(rng, rf):
    alg = rf.algebra
    if rf.inner and rng.random() < 0.25:
        return extension_from_Phi(rf, isotropic_graph(alg, _random_skew(rng, alg.rank)))
    phis = enumerate_phi(alg.root_system)
    phi = phis[rng.randrange(len(phis))]
    cands = [m for _, m in zip(range(6), cartan_candidates(alg, phi))]
    rng.shuffle(cands)
    for m in cands:
        ext = PhiExtension.from_cartan_map(alg, phi, m)
        if check_iv(ext):
            if rng.random() < 0.5:
                ext = ext.with_torus([rng.choice(_TWISTS) for _ in range(alg.rank)])
            return ext
    return None


def condition_v_coherence():
    rng = random.Random(77)
    forms = [RealFormDescriptor.from_dict(dict(zip(["family", "rank", "epsilon", "s", "chi"], f))).build()
             for f in _FORMS]
    doubles = {}
    count, outcomes = 0, set()
    while count < 50:
        rf = forms[count % len(forms)]
        ext = _random_extension(rng, rf)
        if ext is None:
            continue
        alg = rf.algebra
        if id(alg) not in doubles:
            doubles[id(alg)] = build_double(alg, "Split")
        d = doubles[id(alg)]
        direct, squared = check_v_forms(ext, rf.sigma)
        assert direct == squared
        invariant = check_sigma_invariance(build_W_phi(ext, d), double_conjugation(d, rf.sigma))
        assert invariant == direct
        outcomes.add((rf.inner, direct))
        count += 1
    # both outcomes occur for both kinds of form
    assert outcomes == {(True, True), (True, False), (False, True), (False, False)}


def round_trip():
    runs = [("classify-complex", "A", "1"), ("classify-complex", "A", "2"), ("classify-complex", "B", "2"),
            ("classify-real", "su2"), ("classify-real", "sl2R"), ("classify-real", "su3"),
            ("classify-real", "su21"), ("classify-real", "sl3R")]
    total = 0
    for argv in runs:
        code, out = _cli(*argv)
        assert code == 0, argv
        doc = json.loads(out)
        triples = []

        def walk(node):
            if isinstance(node, dict):
                if "triple" in node:
                    triples.append(node["triple"])
                for v in node.values():
                    walk(v)
            elif isinstance(node, list):
                for v in node:
                    walk(v)

        walk(doc["results"])
        assert triples, argv
        for tr in triples:
            text = dumps(tr)
            assert dumps(triple_to_json(triple_from_json(json.loads(text)))) == text
            buf_in = io.StringIO(text)
            old = sys.stdin
            sys.stdin = buf_in
            try:
                code, _ = _cli("verify", "-")
            finally:
                sys.stdin = old
            assert code == 0
            total += 1
    assert total >= 10


CRITERIA = [
    (1, "structure constants (A1 A2 A3 B2 C3 G2)", structure_constants, 10),
    (2, "commutant dimension one (A1 A2 B2)", commutant, 5),
    (3, "BD enumeration vs brute force, chains partition", bd_enumeration, 5),
    (4, "W(phi) Manin property suite (A1 A2 B2)", split_property_suite, 30),
    (5, "su(2) golden W = RH + CE+", example_su2, 1),
    (6, "sl(2,R) sign classes and witnesses", example_sl2r, 5),
    (7, "sl(3,R) A^phi(R) and W(sigma,phi,a)", example_sl3r, 10),
    (8, "W_Phi randomized accept/reject (su2, su3)", phi_property_suite, 30),
    (9, "condition v coherence on 50 extensions", condition_v_coherence, 60),
    (10, "classify -> verify JSON round trip", round_trip, 5),
]


def _run(number, label, fn, limit):
    start = time.perf_counter()
    error = None
    try:
        fn()
    except Exception as exc:  # report, then re-raise in pytest
        error = exc
    elapsed = time.perf_counter() - start
    ok = error is None and elapsed < limit
    reason = "" if ok else (f" ({type(error).__name__}: {error})" if error else " (over time limit)")
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {label} [{elapsed:.2f}s / {limit}s]{reason}"
    return ok, line, error, elapsed


@pytest.mark.parametrize("number,label,fn,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_acceptance(number, label, fn, limit, capsys):
    ok, line, error, elapsed = _run(number, label, fn, limit)
    with capsys.disabled():
        print("\n" + line)
    if error is not None:
        raise error
    assert elapsed < limit, line


if __name__ == "__main__":
    results = [_run(*c) for c in CRITERIA]
    for _, line, _, _ in results:
        print(line)
    sys.exit(0 if all(r[0] for r in results) else 1)
