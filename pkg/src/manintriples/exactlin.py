"""Exact linear algebra over the Gaussian rationals Q(i).

Vectors are plain tuples of :class:`Gaussian`.  Spans are kept in reduced row
echelon form, so two :class:`Subspace` objects are equal exactly when their
echelon bases coincide.  A complex space can be viewed as a rational space of
twice the dimension ("realified"); coordinates are then interleaved as
``(re_0, im_0, re_1, im_1, ...)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionError, ManinError, NotInvolutiveError

if os.environ.get("MANINTRIPLES_PURE_PYTHON") == "1":  # pragma: no cover
    from ._kernel_py import rref_zi as _rref_zi

    BACKEND = "python"
else:
    try:  # pragma: no cover - exercised through BACKEND
        from ._kernel import rref_zi as _rref_zi

        BACKEND = "cython"
    except ImportError:  # pragma: no cover
        from ._kernel_py import rref_zi as _rref_zi

        BACKEND = "python"


class Gaussian:
    """An element ``(a + b*i) / d`` of Q(i) with ``d > 0`` and ``gcd(a, b, d) = 1``."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = lcm(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        g = gcd(a, b, d)
        self._a, self._b, self._d = a // g, b // g, d // g

    @classmethod
    def _make(cls, a: int, b: int, d: int) -> "Gaussian":
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        obj = object.__new__(cls)
        obj._a, obj._b, obj._d = a, b, d
        return obj

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def parts(self) -> tuple[int, int, int]:
        """The normalized integer triple ``(a, b, d)``."""
        return self._a, self._b, self._d

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "Gaussian":
        if self._b == 0:
            return self
        return Gaussian._make(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Squared absolute value ``re^2 + im^2``."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def inverse(self) -> "Gaussian":
        a, b, d = self._a, self._b, self._d
        n = a * a + b * b
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return Gaussian._make(a * d, -b * d, n)

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, d = self._a, self._b, self._d
        oa, ob, od = o
        if d == od:
            return Gaussian._make(a + oa, b + ob, d)
        return Gaussian._make(a * od + oa * d, b * od + ob * d, d * od)

    __radd__ = __add__

    def __neg__(self):
        return Gaussian._make(-self._a, -self._b, self._d)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, d = self._a, self._b, self._d
        oa, ob, od = o
        if d == od:
            return Gaussian._make(a - oa, b - ob, d)
        return Gaussian._make(a * od - oa * d, b * od - ob * d, d * od)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, d = self._a, self._b, self._d
        oa, ob, od = o
        return Gaussian._make(a * oa - b * ob, a * ob + b * oa, d * od)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * Gaussian._make(*o).inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Gaussian._make(*o) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(n)):
            result = result * base
        return result

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self._a, self._b, self._d) == o

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __repr__(self):
        return f"Gaussian({self.re}, {self.im})"

    def __str__(self):
        re, im = self.re, self.im
        if not im:
            return str(re)
        if not re:
            return f"{im}*i"
        sign = "+" if im > 0 else "-"
        return f"{re}{sign}{abs(im)}*i"


def _coerce(x):
    if isinstance(x, Gaussian):
        return x._a, x._b, x._d
    if isinstance(x, int):
        return x, 0, 1
    if isinstance(x, Fraction):
        return x.numerator, 0, x.denominator
    return None


ZERO = Gaussian._make(0, 0, 1)
ONE = Gaussian._make(1, 0, 1)
I = Gaussian._make(0, 1, 1)

Vector = tuple  # tuple[Gaussian, ...]


def as_scalar(x) -> Gaussian:
    if isinstance(x, Gaussian):
        return x
    if isinstance(x, complex):
        raise TypeError("floating-point complex values are not exact")
    return Gaussian(x)


def vec(entries: Iterable) -> tuple:
    return tuple(as_scalar(e) for e in entries)


def zero_vector(n: int) -> tuple:
    return (ZERO,) * n


def unit_vector(n: int, k: int, value=ONE) -> tuple:
    v = [ZERO] * n
    v[k] = as_scalar(value)
    return tuple(v)


def is_zero_vector(v: Sequence[Gaussian]) -> bool:
    return not any(v)


def add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def scale(c, v):
    c = as_scalar(c)
    if not c:
        return (ZERO,) * len(v)
    return tuple(c * x for x in v)


def conj_vector(v):
    return tuple(x.conjugate() for x in v)


def lincomb(coeffs, vectors, n: int | None = None):
    """``sum(c_k * v_k)``; ``n`` gives the length when ``vectors`` is empty."""
    vectors = list(vectors)
    if not vectors:
        if n is None:
            raise DimensionError("cannot infer length of an empty combination")
        return (ZERO,) * n
    out = list(ZERO for _ in vectors[0])
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for j, x in enumerate(v):
            if x:
                out[j] = out[j] + c * x
    return tuple(out)


# --------------------------------------------------------------------------
# Matrices


class Matrix:
    """Dense immutable matrix of Gaussian rationals."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        self.rows = tuple(vec(r) for r in rows)
        self.nrows = len(self.rows)
        if self.rows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise DimensionError("ragged matrix rows")
            self.ncols = widths.pop()
            if ncols is not None and ncols != self.ncols:
                raise DimensionError("declared column count disagrees with rows")
        else:
            self.ncols = ncols or 0

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([unit_vector(n, k) for k in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([zero_vector(ncols) for _ in range(nrows)], ncols=ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        columns = [vec(c) for c in columns]
        if not columns:
            return cls([() for _ in range(nrows or 0)], ncols=0)
        return cls(zip(*columns))

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls([unit_vector(n, k, entries[k]) for k in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        if not self.rows:
            return Matrix([], ncols=0)
        return Matrix(zip(*self.rows))

    T = property(transpose)

    def conjugate(self) -> "Matrix":
        return Matrix([conj_vector(r) for r in self.rows])

    def apply(self, v: Sequence[Gaussian]) -> tuple:
        if len(v) != self.ncols:
            raise DimensionError(f"vector of length {len(v)} for {self.ncols} columns")
        nz = [(j, x) for j, x in enumerate(v) if x]
        out = []
        for r in self.rows:
            acc = ZERO
            for j, x in nz:
                e = r[j]
                if e:
                    acc = acc + e * x
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionError("incompatible matrix shapes")
            cols = [self.apply(c) for c in other.columns()]
            if not cols:
                return Matrix.zeros(self.nrows, 0)
            return Matrix.from_columns(cols)
        return self.apply(other)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        return Matrix([add(a, b) for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        return Matrix([sub(a, b) for a, b in zip(self.rows, other.rows)])

    def scaled(self, c) -> "Matrix":
        return Matrix([scale(c, r) for r in self.rows])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_real(self) -> bool:
        return all(x.is_real() for r in self.rows for x in r)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"


# --------------------------------------------------------------------------
# Echelon machinery


def _to_integer_rows(rows):
    re_rows, im_rows = [], []
    for row in rows:
        den = 1
        for x in row:
            d = x._d
            if d != 1:
                den = lcm(den, d)
        re_rows.append([x._a * (den // x._d) for x in row])
        im_rows.append([x._b * (den // x._d) for x in row])
    return re_rows, im_rows


def rref(rows: Sequence[Sequence[Gaussian]], ncols: int) -> tuple[list[tuple], list[int]]:
    """Reduced row echelon form of ``rows``; zero rows are dropped.

    Returns the normalized rows (pivot entries equal to one) and their pivot
    columns.
    """
    for r in rows:
        if len(r) != ncols:
            raise DimensionError(f"row of length {len(r)} in a {ncols}-column system")
    re_rows, im_rows = _to_integer_rows(rows)
    R, Im, pivots = _rref_zi(re_rows, im_rows, ncols)
    out = []
    make = Gaussian._make
    for rr, ri, c in zip(R, Im, pivots):
        pr, pi = rr[c], ri[c]
        n = pr * pr + pi * pi
        out.append(
            tuple(
                make(xr * pr + xi * pi, xi * pr - xr * pi, n) if (xr or xi) else ZERO
                for xr, xi in zip(rr, ri)
            )
        )
    return out, pivots


_FIELDS = ("complex", "real")


@dataclass(frozen=True, eq=False)
class Subspace:
    """An echelonized span inside ``Q(i)^n`` (``complex``) or ``Q^n`` (``real``)."""

    ambient_dim: int
    basis: tuple
    pivots: tuple
    field: str = "complex"

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.field == other.field
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.field, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, field={self.field})"

    def residual(self, v: Sequence[Gaussian]) -> tuple:
        """``v`` minus its projection along the echelon basis (zero iff ``v`` is inside)."""
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length does not match the ambient dimension")
        w = list(v)
        for row, c in zip(self.basis, self.pivots):
            x = w[c]
            if x:
                for j, y in enumerate(row):
                    if y:
                        w[j] = w[j] - x * y
        return tuple(w)

    def contains(self, v: Sequence[Gaussian]) -> bool:
        if self.field == "real" and not all(x.is_real() for x in v):
            return False
        return not any(self.residual(v))

    __contains__ = contains

    def coordinates(self, v: Sequence[Gaussian]) -> tuple | None:
        """Coefficients of ``v`` in the echelon basis, or ``None`` if ``v`` is outside."""
        if not self.contains(v):
            return None
        return tuple(v[c] for c in self.pivots)

    def is_subspace_of(self, other: "Subspace") -> bool:
        _same_setting(self, other)
        return all(other.contains(b) for b in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return self.is_subspace_of(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        _same_setting(self, other)
        return echelon_basis(self.basis + other.basis, self.ambient_dim, self.field)

    def intersect(self, other: "Subspace") -> "Subspace":
        return intersection(self, other)

    def vectors(self) -> list[tuple]:
        return list(self.basis)


def _same_setting(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError("subspaces live in different ambient spaces")
    if a.field != b.field:
        raise ManinError("cannot mix complex and real-restricted subspaces")


def echelon_basis(vectors: Iterable[Sequence], ambient_dim: int | None = None,
                  field: str = "complex") -> Subspace:
    """The reduced-echelon span of ``vectors``."""
    if field not in _FIELDS:
        raise ValueError(f"unknown field tag {field!r}")
    rows = [vec(v) for v in vectors]
    if ambient_dim is None:
        if not rows:
            raise DimensionError("ambient dimension needed for an empty spanning set")
        ambient_dim = len(rows[0])
    for r in rows:
        if len(r) != ambient_dim:
            raise DimensionError(f"vector of length {len(r)} in ambient dimension {ambient_dim}")
        if field == "real" and not all(x.is_real() for x in r):
            raise ManinError("non-real vector in a real-restricted span")
    basis, pivots = rref(rows, ambient_dim)
    return Subspace(ambient_dim, tuple(basis), tuple(pivots), field)


def zero_subspace(n: int, field: str = "complex") -> Subspace:
    return Subspace(n, (), (), field)


def full_space(n: int, field: str = "complex") -> Subspace:
    return Subspace(n, tuple(unit_vector(n, k) for k in range(n)), tuple(range(n)), field)


def _rows_of(m) -> tuple[list[tuple], int]:
    if isinstance(m, Matrix):
        return list(m.rows), m.ncols
    rows = [vec(r) for r in m]
    if not rows:
        raise DimensionError("cannot infer the column count of an empty row list")
    return rows, len(rows[0])


def rank(m) -> int:
    rows, ncols = _rows_of(m)
    return len(rref(rows, ncols)[1])


def kernel(m, field: str = "complex", ncols: int | None = None) -> Subspace:
    """Null space ``{v : m v = 0}``; ``field='real'`` requires a rational matrix."""
    if isinstance(m, Matrix):
        rows, n = list(m.rows), m.ncols
    else:
        rows = [vec(r) for r in m]
        n = ncols if ncols is not None else (len(rows[0]) if rows else None)
        if n is None:
            raise DimensionError("column count required for an empty system")
    if field == "real" and not all(x.is_real() for r in rows for x in r):
        raise ManinError("real kernel requested for a non-real matrix")
    red, pivots = rref(rows, n)
    pivset = set(pivots)
    out = []
    for f in range(n):
        if f in pivset:
            continue
        v = [ZERO] * n
        v[f] = ONE
        for row, c in zip(red, pivots):
            if row[f]:
                v[c] = -row[f]
        out.append(tuple(v))
    return echelon_basis(out, n, field)


def intersection(a: Subspace, b: Subspace) -> Subspace:
    _same_setting(a, b)
    n = a.ambient_dim
    if not a.basis or not b.basis:
        return zero_subspace(n, a.field)
    cols = list(a.basis) + [scale(-1, v) for v in b.basis]
    system = Matrix.from_columns(cols)
    ker = kernel(system, field=a.field)
    p = a.dim
    vecs = [lincomb(c[:p], a.basis, n) for c in ker.basis]
    return echelon_basis(vecs, n, a.field)


def orthogonal_complement(v: Subspace, gram: Matrix) -> Subspace:
    """``{x : B(b, x) = 0 for all b in v}`` for the bilinear form with Gram matrix ``gram``."""
    n = v.ambient_dim
    if gram.shape != (n, n):
        raise DimensionError("Gram matrix does not match the ambient dimension")
    rows = [gram.transpose().apply(b) for b in v.basis]
    if not rows:
        return full_space(n, v.field)
    return kernel(rows, field=v.field, ncols=n)


def quotient_basis(V: Subspace, U: Subspace) -> list[tuple]:
    """Vectors of ``V`` that complete a basis of ``U`` to a basis of ``V``."""
    _same_setting(V, U)
    if not U.is_subspace_of(V):
        raise ManinError("quotient_basis requires U to be contained in V")
    current = U
    reps = []
    for b in V.basis:
        if current.contains(b):
            continue
        reps.append(b)
        current = echelon_basis(current.basis + (b,), V.ambient_dim, V.field)
    return reps


class SpanSolver:
    """Express vectors as combinations of a fixed list of generators."""

    def __init__(self, vectors: Sequence[Sequence], ambient_dim: int):
        self.vectors = [vec(v) for v in vectors]
        self.n = ambient_dim
        m = len(self.vectors)
        rows = [tuple(v) + unit_vector(m, k) for k, v in enumerate(self.vectors)]
        red, piv = rref(rows, ambient_dim + m) if rows else ([], [])
        self._rows = [(r, c) for r, c in zip(red, piv) if c < ambient_dim]
        self.m = m

    def coordinates(self, v: Sequence[Gaussian]) -> tuple | None:
        if len(v) != self.n:
            raise DimensionError("vector length does not match the solver")
        w = list(v) + [ZERO] * self.m
        for row, c in self._rows:
            x = w[c]
            if x:
                for j, y in enumerate(row):
                    if y:
                        w[j] = w[j] - x * y
        if any(w[: self.n]):
            return None
        return tuple(-x for x in w[self.n:])


# --------------------------------------------------------------------------
# Real restriction


def realify_vector(v: Sequence[Gaussian]) -> tuple:
    out = []
    for x in v:
        a, b, d = x._a, x._b, x._d
        out.append(Gaussian._make(a, 0, d))
        out.append(Gaussian._make(b, 0, d))
    return tuple(out)


def complexify_vector(r: Sequence[Gaussian]) -> tuple:
    if len(r) % 2:
        raise DimensionError("realified vectors have even length")
    return tuple(r[2 * k] + I * r[2 * k + 1] for k in range(len(r) // 2))


def realify(V: Subspace) -> Subspace:
    """The same span viewed over Q, in interleaved (re, im) coordinates."""
    if V.field != "complex":
        raise ManinError("subspace is already real-restricted")
    vecs = []
    for b in V.basis:
        vecs.append(realify_vector(b))
        vecs.append(realify_vector(scale(I, b)))
    return echelon_basis(vecs, 2 * V.ambient_dim, "real")


def complex_span(R: Subspace) -> Subspace:
    """The complex span of a real-restricted subspace, back in ``Q(i)^(n/2)``."""
    if R.field != "real":
        raise ManinError("complex_span expects a real-restricted subspace")
    return echelon_basis([complexify_vector(b) for b in R.basis], R.ambient_dim // 2, "complex")


def real_part_subspace(vectors: Iterable[Sequence], n: int) -> Subspace:
    """Real span of complex vectors, returned realified."""
    return echelon_basis([realify_vector(v) for v in vectors], 2 * n, "real")


# --------------------------------------------------------------------------
# Semilinear maps


class SemilinearMap:
    """The map ``v -> L * conj(v)``."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Matrix):
        if matrix.nrows != matrix.ncols:
            raise DimensionError("semilinear maps here are square")
        self.matrix = matrix

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    def __call__(self, v: Sequence[Gaussian]) -> tuple:
        return self.matrix.apply(conj_vector(v))

    def compose(self, other: "SemilinearMap") -> Matrix:
        """Linear matrix of ``self o other``."""
        return self.matrix @ other.matrix.conjugate()

    def compose_linear(self, m: Matrix) -> "SemilinearMap":
        """``self o m`` for a linear ``m``."""
        return SemilinearMap(self.matrix @ m.conjugate())

    def square(self) -> Matrix:
        return self.compose(self)

    def is_involution(self) -> bool:
        return self.square() == Matrix.identity(self.dim)

    def image(self, V: Subspace) -> Subspace:
        if V.field != "complex":
            raise ManinError("semilinear image expects a complex subspace")
        return echelon_basis([self(b) for b in V.basis], V.ambient_dim, "complex")

    def realified_matrix(self) -> Matrix:
        """Rational matrix of the map in interleaved coordinates."""
        n = self.dim
        rows = [[ZERO] * (2 * n) for _ in range(2 * n)]
        for q, row in enumerate(self.matrix.rows):
            for p, x in enumerate(row):
                if not x:
                    continue
                a, b = Gaussian(x.re), Gaussian(x.im)
                # (a + ib)(x - iy) = (a x + b y) + i(b x - a y)
                rows[2 * q][2 * p] = a
                rows[2 * q][2 * p + 1] = b
                rows[2 * q + 1][2 * p] = b
                rows[2 * q + 1][2 * p + 1] = -a
        return Matrix(rows)


def semilinear_fixed_space(s: SemilinearMap) -> Subspace:
    """Rational solution space of ``v = L conj(v)``, realified."""
    if not s.is_involution():
        raise NotInvolutiveError("semilinear map does not square to the identity")
    m = s.realified_matrix() - Matrix.identity(2 * s.dim)
    return kernel(m, field="real")


def linear_realified_matrix(m: Matrix) -> Matrix:
    """Rational matrix of a complex-linear map in interleaved coordinates."""
    n_r, n_c = m.nrows, m.ncols
    rows = [[ZERO] * (2 * n_c) for _ in range(2 * n_r)]
    for q, row in enumerate(m.rows):
        for p, x in enumerate(row):
            if not x:
                continue
            a, b = Gaussian(x.re), Gaussian(x.im)
            rows[2 * q][2 * p] = a
            rows[2 * q][2 * p + 1] = -b
            rows[2 * q + 1][2 * p] = b
            rows[2 * q + 1][2 * p + 1] = a
    return Matrix(rows)


# --------------------------------------------------------------------------
# Signature of rational symmetric forms


def signature(gram: Matrix) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` counts of a rational symmetric form.

    Uses congruence transforms only, so the result is exact.
    """
    if gram.nrows != gram.ncols:
        raise DimensionError("Gram matrix must be square")
    if not gram.is_real():
        raise ManinError("signature needs a rational matrix")
    a = [[x.re for x in r] for r in gram.rows]
    n = len(a)
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ManinError("Gram matrix is not symmetric")
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/column i <- i + j makes the diagonal entry 2 a_ij
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        d = a[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            f = a[i][piv] / d
            if f:
                for k in active:
                    a[i][k] -= f * a[piv][k]
        for i in active:
            a[i][piv] = a[piv][i] = Fraction(0)
    return pos, neg, n - pos - neg
