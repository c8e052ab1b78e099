"""Complex simple Lie algebras in the Weyl basis ``{H_k, E_a, E_-a}``.

The basis is normalized by ``K(E_a, E_-a) = 1`` and ``K(H_a, H) = a(H)``, so
``[H, E_a] = a(H) E_a`` and ``[E_a, E_-a] = H_a``.  Structure constants come
from a Chevalley basis (extraspecial-pair recursion) followed by a rescaling of
the negative root vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import AutomorphismError, DimensionError, ManinError
from .exactlin import (
    ONE,
    ZERO,
    Gaussian,
    Matrix,
    Subspace,
    as_scalar,
    echelon_basis,
    full_space,
    kernel,
    orthogonal_complement,
    scale,
    unit_vector,
    vec,
)
from .rootsys import Root, RootSystem, build_root_system, negate, RootSystemSpec


def _g(x) -> Gaussian:
    return x if isinstance(x, Gaussian) else Gaussian(x)


class StructureAlgebra:
    """A finite-dimensional algebra given by a sparse structure-constant table.

    ``table[i][j]`` is a tuple of ``(k, c)`` pairs meaning
    ``[e_i, e_j] = sum c e_k``.  ``field`` is ``complex`` for algebras over
    Q(i) and ``real`` for algebras over Q.
    """

    def __init__(self, table, labels: Sequence[str], field: str = "complex"):
        self.table = table
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.field = field
        if len(table) != self.dim or any(len(r) != self.dim for r in table):
            raise DimensionError("structure table does not match the label count")

    def bracket(self, u: Sequence[Gaussian], v: Sequence[Gaussian]) -> tuple:
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionError("element length does not match the algebra")
        out = [ZERO] * self.dim
        nv = [(j, y) for j, y in enumerate(v) if y]
        for i, x in enumerate(u):
            if not x:
                continue
            row = self.table[i]
            for j, y in nv:
                entries = row[j]
                if entries:
                    xy = x * y
                    for k, c in entries:
                        out[k] = out[k] + xy * c
        return tuple(out)

    def basis_vector(self, k: int) -> tuple:
        return unit_vector(self.dim, k)

    def ad_matrix(self, x: Sequence[Gaussian]) -> Matrix:
        cols = [self.bracket(x, self.basis_vector(k)) for k in range(self.dim)]
        return Matrix.from_columns(cols)

    def ad_basis(self, i: int) -> Matrix:
        rows = [[ZERO] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            for k, c in self.table[i][j]:
                rows[k][j] = c
        return Matrix(rows)

    def realified(self) -> "StructureAlgebra":
        """The same algebra over Q with basis ``e_0, i e_0, e_1, i e_1, ...``."""
        if self.field != "complex":
            raise ManinError("algebra is already real")
        n = self.dim
        table = [[() for _ in range(2 * n)] for _ in range(2 * n)]
        for p in range(n):
            for q in range(n):
                entries = self.table[p][q]
                if not entries:
                    continue
                plain, times_i, times_m1 = [], [], []
                for k, c in entries:
                    a, b = Gaussian(c.re), Gaussian(c.im)
                    if a:
                        plain.append((2 * k, a))
                        times_i.append((2 * k + 1, a))
                        times_m1.append((2 * k, -a))
                    if b:
                        plain.append((2 * k + 1, b))
                        times_i.append((2 * k, -b))
                        times_m1.append((2 * k + 1, -b))
                table[2 * p][2 * q] = tuple(plain)
                table[2 * p][2 * q + 1] = tuple(times_i)
                table[2 * p + 1][2 * q] = tuple(times_i)
                table[2 * p + 1][2 * q + 1] = tuple(times_m1)
        labels = []
        for lab in self.labels:
            labels += [lab, f"i*{lab}"]
        return StructureAlgebra(table, labels, "real")

    def jacobi_defect(self) -> tuple | None:
        """First basis triple violating the Jacobi identity, or ``None``."""
        n = self.dim
        for a in range(n):
            ea = self.basis_vector(a)
            for b in range(a + 1, n):
                eb = self.basis_vector(b)
                ab = self.bracket(ea, eb)
                for c in range(b + 1, n):
                    ec = self.basis_vector(c)
                    t1 = self.bracket(ab, ec)
                    t2 = self.bracket(self.bracket(eb, ec), ea)
                    t3 = self.bracket(self.bracket(ec, ea), eb)
                    if any(x + y + z for x, y, z in zip(t1, t2, t3)):
                        return a, b, c
        return None


@dataclass(frozen=True)
class AlgebraElement:
    algebra: StructureAlgebra
    coeffs: tuple

    def _check(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            raise ManinError("elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-x for x in self.coeffs))

    def __rmul__(self, c):
        return AlgebraElement(self.algebra, scale(c, self.coeffs))

    def as_dict(self) -> dict:
        return {self.algebra.labels[k]: x for k, x in enumerate(self.coeffs) if x}

    def __repr__(self):
        terms = " + ".join(f"({x})*{lab}" for lab, x in self.as_dict().items()) or "0"
        return f"<{terms}>"


def bracket(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._check(y)
    return AlgebraElement(x.algebra, x.algebra.bracket(x.coeffs, y.coeffs))


def killing(x: AlgebraElement, y: AlgebraElement) -> Gaussian:
    x._check(y)
    alg = x.algebra
    if not isinstance(alg, WeylBasisAlgebra):
        raise ManinError("the Killing form is defined here for Weyl-basis algebras")
    return alg.killing(x.coeffs, y.coeffs)


# --------------------------------------------------------------------------
# Chevalley constants


def _chevalley_constants(rs: RootSystem):
    """``N(a, b)`` with ``[e_a, e_b] = N(a, b) e_(a+b)`` in a Chevalley basis.

    Extraspecial pairs get ``+(p + 1)``; all other constants follow from the
    standard relations, using ``N(-a, -b) = -N(a, b)``.
    """
    roots = rs.root_set
    pos_index = {r: k for k, r in enumerate(rs.positive_roots)}
    norm = {r: rs.pair(r, r) for r in rs.roots}

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    def is_pos(a):
        return a in pos_index

    def p_of(a, b):
        k = 0
        cur = b
        while True:
            cur = tuple(x - y for x, y in zip(cur, a))
            if cur in roots:
                k += 1
            else:
                return k

    extraspecial = {}
    for xi in rs.positive_roots:
        for a in rs.positive_roots:
            b = tuple(x - y for x, y in zip(xi, a))
            if b in pos_index:
                extraspecial[xi] = (a, b)
                break

    memo: dict = {}

    def N(a, b) -> Fraction:
        s = add(a, b)
        if s not in roots:
            return Fraction(0)
        key = (a, b)
        if key in memo:
            return memo[key]
        if is_pos(a) and is_pos(b):
            if pos_index[a] > pos_index[b]:
                val = -N(b, a)
            else:
                g, d = extraspecial[s]
                if (g, d) == (a, b):
                    val = Fraction(p_of(a, b) + 1)
                else:
                    mg, md = negate(g), negate(d)
                    total = Fraction(0)
                    bg = add(b, mg)
                    if bg in roots:
                        total += N(b, mg) * N(a, md) / norm[bg]
                    ag = add(a, mg)
                    if ag in roots:
                        total += N(mg, a) * N(b, md) / norm[ag]
                    val = norm[s] / (p_of(g, d) + 1) * total
        elif not is_pos(a) and not is_pos(b):
            val = -N(negate(a), negate(b))
        elif is_pos(a):
            c = negate(s)
            if is_pos(c):
                val = norm[c] / norm[b] * N(c, a)
            else:
                val = norm[c] / norm[a] * N(b, c)
        else:
            val = -N(b, a)
        memo[key] = val
        return val

    return N


class WeylBasisAlgebra(StructureAlgebra):
    """The complex simple Lie algebra attached to a root system."""

    def __init__(self, rs: RootSystem):
        self.root_system = rs
        n = rs.rank
        pos = rs.positive_roots
        npos = len(pos)
        self.rank = n
        self.npos = npos
        self._root_index = {}
        for k, r in enumerate(pos):
            self._root_index[r] = n + k
            self._root_index[negate(r)] = n + npos + k
        self._basis_roots = (None,) * n + pos + tuple(negate(r) for r in pos)
        labels = [f"H{k + 1}" for k in range(n)]
        labels += ["E(" + ",".join(str(c) for c in r) + ")" for r in pos]
        labels += ["E(" + ",".join(str(-c) for c in r) + ")" for r in pos]

        N = _chevalley_constants(rs)
        self._chevalley = N
        dim = n + 2 * npos
        table = [[() for _ in range(dim)] for _ in range(dim)]
        roots = rs.root_set

        def resc(r):
            return Fraction(1) if r in rs._index else rs.pair(r, r) / 2

        for i in range(n):
            simple = rs.simple(i)
            for r, idx in self._root_index.items():
                w = rs.pair(r, simple)
                if w:
                    table[i][idx] = ((idx, _g(w)),)
                    table[idx][i] = ((idx, _g(-w)),)
        for a, ia in self._root_index.items():
            for b, ib in self._root_index.items():
                s = tuple(x + y for x, y in zip(a, b))
                if not any(s):
                    table[ia][ib] = tuple((k, _g(c)) for k, c in enumerate(a) if c)
                elif s in roots:
                    c = resc(a) * resc(b) / resc(s) * N(a, b)
                    table[ia][ib] = ((self._root_index[s], _g(c)),)
        super().__init__(table, labels, "complex")

    # ---- labels and special elements

    def index_of_root(self, r: Root) -> int:
        try:
            return self._root_index[tuple(r)]
        except KeyError:
            raise ManinError(f"{r} is not a root") from None

    def root_of_index(self, k: int) -> Root | None:
        return self._basis_roots[k]

    def E(self, r: Root) -> tuple:
        return self.basis_vector(self.index_of_root(r))

    def H(self, i: int) -> tuple:
        return self.basis_vector(i)

    def h_alpha(self, r: Root) -> tuple:
        v = [ZERO] * self.dim
        for k, c in enumerate(r):
            v[k] = _g(c)
        return tuple(v)

    def element(self, v) -> AlgebraElement:
        if isinstance(v, str):
            v = self.basis_vector(self.labels.index(v))
        return AlgebraElement(self, vec(v))

    def cartan_part(self, v: Sequence[Gaussian]) -> tuple:
        return tuple(v[: self.rank])

    def embed_cartan(self, h: Sequence) -> tuple:
        return tuple(vec(h)) + (ZERO,) * (self.dim - self.rank)

    def root_value(self, r: Root, v: Sequence[Gaussian]) -> Gaussian:
        """``r(H)`` for the Cartan component of ``v``."""
        gram = self.root_system.killing_gram
        total = ZERO
        for i, c in enumerate(r):
            if c:
                for j in range(self.rank):
                    if v[j] and gram[i][j]:
                        total = total + v[j] * (c * gram[i][j])
        return total

    # ---- Killing form

    @cached_property
    def killing_matrix(self) -> Matrix:
        n = self.dim
        rows = [[ZERO] * n for _ in range(n)]
        gram = self.root_system.killing_gram
        for i in range(self.rank):
            for j in range(self.rank):
                rows[i][j] = _g(gram[i][j])
        for k in range(self.npos):
            a, b = self.rank + k, self.rank + self.npos + k
            rows[a][b] = rows[b][a] = ONE
        return Matrix(rows)

    def killing(self, u: Sequence[Gaussian], v: Sequence[Gaussian]) -> Gaussian:
        n, npos = self.rank, self.npos
        gram = self.root_system.killing_gram
        total = ZERO
        for i in range(n):
            if u[i]:
                for j in range(n):
                    if v[j] and gram[i][j]:
                        total = total + u[i] * v[j] * gram[i][j]
        for k in range(npos):
            a, b = n + k, n + npos + k
            if u[a] and v[b]:
                total = total + u[a] * v[b]
            if u[b] and v[a]:
                total = total + u[b] * v[a]
        return total

    def adjoint_trace_form(self, u, v) -> Gaussian:
        """``tr(ad u ad v)``; an independent route to the Killing form, up to scale."""
        total = ZERO
        for k in range(self.dim):
            w = self.bracket(u, self.bracket(v, self.basis_vector(k)))
            total = total + w[k]
        return total

    def orthogonal_complement(self, V: Subspace) -> Subspace:
        return orthogonal_complement(V, self.killing_matrix)

    # ---- root subsets

    def subsystem_roots(self, subset) -> tuple:
        """Positive roots supported on ``subset`` (in root order)."""
        subset = set(subset)
        return tuple(r for r in self.root_system.positive_roots
                     if all(c == 0 or i in subset for i, c in enumerate(r)))

    def span(self, vectors) -> Subspace:
        return echelon_basis(list(vectors), self.dim, "complex")

    @cached_property
    def cartan_subalgebra(self) -> Subspace:
        return self.span(self.H(i) for i in range(self.rank))


def build_algebra(rs: RootSystem | RootSystemSpec | str) -> WeylBasisAlgebra:
    if isinstance(rs, str):
        rs = RootSystemSpec.parse(rs)
    if isinstance(rs, RootSystemSpec):
        rs = build_root_system(rs)
    return WeylBasisAlgebra(rs)


# --------------------------------------------------------------------------
# Parabolic data and subalgebra checks


@dataclass(frozen=True)
class ParabolicData:
    subset: tuple
    g1: Subspace
    h1: Subspace
    n1_plus: Subspace
    n1_minus: Subspace
    p1_plus: Subspace
    p1_minus: Subspace
    r1: Subspace
    m1: Subspace | None


def parabolic_data(alg: WeylBasisAlgebra, subset, other=None) -> ParabolicData:
    """Spans attached to a subset of simple roots.

    ``other`` (a second subset) enables ``m1 = g1 ∩ n2^-``.
    """
    subset = tuple(sorted(set(subset)))
    if any(i < 0 or i >= alg.rank for i in subset):
        raise ManinError("subset contains an index outside the simple roots")
    inner = alg.subsystem_roots(subset)
    outer = [r for r in alg.root_system.positive_roots if r not in inner]
    hs = [alg.H(i) for i in subset]
    g1 = alg.span([alg.E(r) for r in inner] + [alg.E(negate(r)) for r in inner] + hs)
    h1 = alg.span(hs)
    n_plus = alg.span(alg.E(r) for r in outer)
    n_minus = alg.span(alg.E(negate(r)) for r in outer)
    r1 = g1 + alg.cartan_subalgebra
    m1 = None
    if other is not None:
        m1 = g1.intersect(parabolic_data(alg, other).n1_minus)
    return ParabolicData(subset, g1, h1, n_plus, n_minus, r1 + n_plus, r1 + n_minus, r1, m1)


@dataclass(frozen=True)
class SubalgebraCheck:
    closed: bool
    certificate: dict
    witness: tuple | None = None

    def __bool__(self):
        return self.closed


def is_subalgebra(alg: StructureAlgebra, V: Subspace) -> SubalgebraCheck:
    """Bracket closure of ``V``; the certificate maps basis index pairs to coordinates."""
    if V.ambient_dim != alg.dim:
        raise DimensionError("subspace does not live in this algebra")
    cert = {}
    basis = V.basis
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            w = alg.bracket(basis[a], basis[b])
            coords = V.coordinates(w)
            if coords is None:
                return SubalgebraCheck(False, cert, (a, b))
            cert[(a, b)] = coords
    return SubalgebraCheck(True, cert)


def commutant_dimension(alg: StructureAlgebra) -> int:
    """Dimension of the space of linear maps commuting with every ``ad_x``."""
    n = alg.dim
    rows = []
    for x in range(n):
        ad = alg.table[x]
        # ad[j] lists (k, c) with ad_x e_j = sum c e_k, i.e. A[k][j] = c
        cols = [dict(ad[j]) for j in range(n)]
        for i in range(n):
            for k in range(n):
                row = {}
                # (M A)[i][k] = sum_j M[i][j] A[j][k]
                for j, c in ad[k]:
                    row[i * n + j] = row.get(i * n + j, ZERO) + c
                # (A M)[i][k] = sum_j A[i][j] M[j][k]
                for j in range(n):
                    c = cols[j].get(i)
                    if c:
                        row[j * n + k] = row.get(j * n + k, ZERO) - c
                row = {key: val for key, val in row.items() if val}
                if row:
                    dense = [ZERO] * (n * n)
                    for key, val in row.items():
                        dense[key] = val
                    rows.append(tuple(dense))
    rows = list(dict.fromkeys(rows))
    return kernel(rows, ncols=n * n).dim


# --------------------------------------------------------------------------
# Lifting maps of simple roots to Lie homomorphisms


def lift_simple_map(alg: WeylBasisAlgebra, simple_map: dict) -> dict:
    """Extend ``alpha_i -> alpha_m(i)`` to a homomorphism of the subalgebra.

    The domain is generated by ``E_{±alpha_i}`` for ``i`` in ``simple_map``.
    Returns images of the basis vectors of that subalgebra (root vectors and
    ``H_i``), keyed by basis index.  The map must be an isometry of the
    simple roots involved.
    """
    rs = alg.root_system
    dom = sorted(simple_map)
    for i in dom:
        for j in dom:
            if rs.killing_gram[i][j] != rs.killing_gram[simple_map[i]][simple_map[j]]:
                raise AutomorphismError("simple-root map is not an isometry")
    n = alg.rank

    def map_root(r):
        out = [0] * n
        for i, c in enumerate(r):
            if c:
                out[simple_map[i]] += c
        return tuple(out)

    images: dict = {}
    for i in dom:
        images[i] = alg.H(simple_map[i])
    for r in alg.subsystem_roots(dom):
        for sign in (1, -1):
            root = r if sign == 1 else negate(r)
            idx = alg.index_of_root(root)
            if sum(r) == 1:
                images[idx] = alg.E(map_root(root))
                continue
            i = next(i for i in dom if r[i] > 0 and tuple(
                c - (1 if k == i else 0) for k, c in enumerate(r)) in rs._index)
            eta = tuple(c - (1 if k == i else 0) for k, c in enumerate(r))
            simple = rs.simple(i)
            if sign == -1:
                simple, eta = negate(simple), negate(eta)
            a, b = alg.index_of_root(simple), alg.index_of_root(eta)
            (k, c), = alg.table[a][b]
            assert k == idx
            img = alg.bracket(images[a], images[b])
            images[idx] = scale(c.inverse(), img)
            if not images[idx][alg.index_of_root(map_root(root))]:
                raise AutomorphismError("lifted image is not a root vector of the mapped root")
    return images


def map_from_images(alg: StructureAlgebra, images: dict) -> Matrix:
    """Square matrix whose column ``k`` is ``images[k]`` (zero when absent)."""
    cols = [images.get(k, (ZERO,) * alg.dim) for k in range(alg.dim)]
    return Matrix.from_columns(cols)


def automorphism_defect(alg: StructureAlgebra, m: Matrix, indices=None) -> tuple | None:
    """First basis pair where ``m`` fails to respect brackets, or ``None``."""
    idx = range(alg.dim) if indices is None else list(indices)
    cols = {k: m.column(k) for k in idx}
    for a in idx:
        for b in idx:
            if b <= a:
                continue
            lhs = m.apply(alg.bracket(alg.basis_vector(a), alg.basis_vector(b)))
            rhs = alg.bracket(cols[a], cols[b])
            if lhs != rhs:
                return a, b
    return None


def is_automorphism(alg: StructureAlgebra, m: Matrix) -> bool:
    from .exactlin import rank

    return m.shape == (alg.dim, alg.dim) and rank(m) == alg.dim and automorphism_defect(alg, m) is None


def exp_nilpotent(m: Matrix, max_terms: int = 64) -> Matrix:
    """``exp(m)`` for nilpotent ``m``."""
    n = m.nrows
    result = Matrix.identity(n)
    term = Matrix.identity(n)
    for k in range(1, max_terms):
        term = (term @ m).scaled(Gaussian(Fraction(1, k)))
        if not any(x for r in term.rows for x in r):
            return result
        result = result + term
    raise ManinError("matrix is not nilpotent")


__all__ = [
    "AlgebraElement",
    "ParabolicData",
    "StructureAlgebra",
    "SubalgebraCheck",
    "WeylBasisAlgebra",
    "automorphism_defect",
    "bracket",
    "build_algebra",
    "commutant_dimension",
    "exp_nilpotent",
    "full_space",
    "is_automorphism",
    "is_subalgebra",
    "killing",
    "lift_simple_map",
    "map_from_images",
    "parabolic_data",
    "as_scalar",
]
