"""Independent reference computations used by the test suite."""

from fractions import Fraction
from itertools import combinations, permutations

from manintriples.exactlin import (
    ZERO,
    Matrix,
    full_space,
    kernel,
    lincomb,
    quotient_basis,
    rank,
    sub,
)


def brute_force_phi(rs):
    """All maps Pi1 -> Pi2 satisfying i)-iii), by exhaustive search over subsets.

    Returns a set of frozensets of (source, image) pairs; nilpotency is checked
    by iterating the map ``rank + 1`` times.
    """
    n = rs.rank
    gram = rs.killing_gram
    out = set()
    for size in range(n + 1):
        for dom in combinations(range(n), size):
            for img in permutations(range(n), size):
                m = dict(zip(dom, img))
                if any(gram[m[a]][m[b]] != gram[a][b] for a in dom for b in dom):
                    continue
                ok = True
                for a in dom:
                    cur = a
                    for _ in range(n + 1):
                        if cur not in m:
                            break
                        cur = m[cur]
                    else:
                        ok = False
                    if not ok:
                        break
                if ok:
                    out.add(frozenset(m.items()))
    return out


def solve_case1(alg, L, require_skew=True, require_cocycle=True):
    """Solve the linear system for ``f: L -> g/L^perp`` under the selected conditions.

    Returns ``(reps, perp, solutions)``: ``reps`` spans a complement of
    ``L^perp`` and each solution is a list of ``f``-columns in ``g`` (a basis
    of the solution space).
    """
    perp = alg.orthogonal_complement(L)
    reps = quotient_basis(full_space(alg.dim), perp)
    basis = L.basis
    m, r = len(basis), len(reps)
    nvar = m * r

    def columns(x):
        return [lincomb(x[k * r:(k + 1) * r], reps, alg.dim) for k in range(m)]

    def residuals(x):
        f = columns(x)
        out = []
        for a in range(m):
            for b in range(m):
                if require_skew:
                    out.append(alg.killing(basis[a], f[b]) + alg.killing(f[a], basis[b]))
                if not require_cocycle:
                    continue
                br = alg.bracket(basis[a], basis[b])
                coords = L.coordinates(br)
                diff = sub(lincomb(coords, f, alg.dim),
                           sub(alg.bracket(basis[a], f[b]), alg.bracket(basis[b], f[a])))
                out.extend(alg.killing(diff, l) for l in basis)
        return out

    cols = []
    for v in range(nvar):
        x = [ZERO] * nvar
        x[v] = x[v] + 1
        cols.append(residuals(x))
    mat = Matrix.from_columns(cols) if cols else None
    sol = kernel(mat, ncols=nvar) if mat is not None and mat.nrows else None
    vectors = sol.basis if sol is not None else [tuple(1 if i == j else 0 for i in range(nvar))
                                                 for j in range(nvar)]
    return reps, perp, [columns(v) for v in vectors]


def bijective(alg, perp, fcols):
    gens = list(fcols) + list(perp.basis)
    return rank(gens) == alg.dim if gens else alg.dim == 0


def block_form(alg, variant, x, y):
    """Invariant form on a complex double computed blockwise from the Killing form."""
    n = alg.dim
    x1, x2, y1, y2 = x[:n], x[n:], y[:n], y[n:]
    if variant == "Split":
        return alg.killing(x1, y1) - alg.killing(x2, y2)
    return alg.killing(x1, y2) + alg.killing(x2, y1)


def closed_by_rank(d, V):
    """Bracket closure via ranks, without coordinates or certificates."""
    for a in V.basis:
        for b in V.basis:
            if rank(list(V.basis) + [d.bracket(a, b)]) != V.dim:
                return False
    return True


def random_combination(rng, vectors, n, lo=-3, hi=3):
    return lincomb([Fraction(rng.randint(lo, hi)) for _ in vectors], vectors, n)
