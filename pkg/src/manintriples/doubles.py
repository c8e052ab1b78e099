"""Double algebras ``g ⊗ A`` and their invariant forms.

Complex doubles use two coordinate blocks of length ``dim g``:

* ``Nilpotent`` (``A1C``): blocks ``(1, j)`` with ``j^2 = 0``;
* ``Split`` (``A2C``): blocks ``(e, f)`` with ``e = 1/2 + j``, ``f = 1/2 - j``,
  ``j^2 = 1/4``, so ``e`` and ``f`` are orthogonal idempotents.

Real doubles: ``RealCase1``/``RealCase2`` are ``g(R) ⊗ R[J]/(J^2 - c)`` with
``c = 0`` or ``1/4`` in ``(1, J)`` blocks, and ``RealCase3`` is the realification
of ``g`` with the rational form ``2 Im K``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import ManinError, VariantError
from .exactlin import (
    ZERO,
    Gaussian,
    Matrix,
    SemilinearMap,
    Subspace,
    as_scalar,
    semilinear_fixed_space,
)
from .liealg import StructureAlgebra, WeylBasisAlgebra
from .realform import Conjugation, RealFormData


class DoubleVariant(Enum):
    Nilpotent = "A1C"
    Split = "A2C"
    RealCase1 = "A1R"
    RealCase2 = "A2R"
    RealCase3 = "A3R"

    @property
    def tag(self) -> str:
        return self.value

    @property
    def is_real(self) -> bool:
        return self.value.endswith("R")

    @classmethod
    def parse(cls, x) -> "DoubleVariant":
        if isinstance(x, DoubleVariant):
            return x
        for v in cls:
            if x in (v.name, v.value):
                return v
        raise VariantError(f"unknown double variant {x!r}")


class DoubleAlgebra(StructureAlgebra):
    """``g ⊗ A`` as a structure algebra with a bilinear pairing on the base."""

    def __init__(self, base: StructureAlgebra, variant: DoubleVariant, table, labels, field,
                 base_pairing: Matrix, real_form: RealFormData | None = None,
                 complex_algebra: WeylBasisAlgebra | None = None):
        super().__init__(table, labels, field)
        self.base = base
        self.variant = variant
        self.base_pairing = base_pairing
        self.real_form = real_form
        self.complex_algebra = complex_algebra

    @property
    def tag(self) -> str:
        return self.variant.tag

    @property
    def base_dim(self) -> int:
        return self.base.dim

    def pair(self, x: Sequence, y: Sequence) -> tuple:
        """Concatenate two base-algebra vectors into block coordinates."""
        if self.variant is DoubleVariant.RealCase3:
            raise VariantError("the realified double has a single block")
        return tuple(x) + tuple(y)

    def first(self, x: Sequence) -> tuple:
        return self.pair(x, (ZERO,) * self.base_dim)

    def second(self, y: Sequence) -> tuple:
        return self.pair((ZERO,) * self.base_dim, y)

    def blocks(self, v: Sequence) -> tuple[tuple, tuple]:
        n = self.base_dim
        return tuple(v[:n]), tuple(v[n:])

    def diagonal(self, x: Sequence) -> tuple:
        """``x e + x f`` in the Split double."""
        if self.variant is not DoubleVariant.Split:
            raise VariantError("the diagonal embedding is defined for the Split double")
        return self.pair(x, x)


def _blocked_table(base: StructureAlgebra, j_square) -> list:
    """Table of ``g ⊗ R[j]/(j^2 - c)`` in ``(1, j)`` blocks."""
    n = base.dim
    table = [[() for _ in range(2 * n)] for _ in range(2 * n)]
    c = as_scalar(j_square)
    for p in range(n):
        for q in range(n):
            entries = base.table[p][q]
            if not entries:
                continue
            table[p][q] = entries
            shifted = tuple((k + n, v) for k, v in entries)
            table[p][q + n] = shifted
            table[p + n][q] = shifted
            if c:
                table[p + n][q + n] = tuple((k, v * c) for k, v in entries)
    return table


def _split_table(base: StructureAlgebra) -> list:
    n = base.dim
    table = [[() for _ in range(2 * n)] for _ in range(2 * n)]
    for p in range(n):
        for q in range(n):
            entries = base.table[p][q]
            if entries:
                table[p][q] = entries
                table[p + n][q + n] = tuple((k + n, v) for k, v in entries)
    return table


def build_double(alg: WeylBasisAlgebra, variant) -> DoubleAlgebra:
    variant = DoubleVariant.parse(variant)
    if variant is DoubleVariant.Nilpotent:
        labels = list(alg.labels) + [f"{lab}*j" for lab in alg.labels]
        table = _blocked_table(alg, 0)
    elif variant is DoubleVariant.Split:
        labels = [f"{lab}*e" for lab in alg.labels] + [f"{lab}*f" for lab in alg.labels]
        table = _split_table(alg)
    else:
        raise VariantError("use real_double for the real variants")
    return DoubleAlgebra(alg, variant, table, labels, "complex", alg.killing_matrix,
                         complex_algebra=alg)


@dataclass(frozen=True)
class InvariantForm:
    scale: Gaussian
    gram: Matrix

    def __call__(self, x: Sequence, y: Sequence) -> Gaussian:
        total = ZERO
        rows = self.gram.rows
        ny = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            row = rows[i]
            for j, b in ny:
                g = row[j]
                if g:
                    total = total + a * b * g
        return total


def q_form(d: DoubleAlgebra, scale=1) -> InvariantForm:
    scale = as_scalar(scale)
    if not scale:
        raise ManinError("the invariant form needs a nonzero scale")
    n = d.base_dim
    K = d.base_pairing.rows
    rows = [[ZERO] * d.dim for _ in range(d.dim)]
    v = d.variant
    if v is DoubleVariant.Split:
        for p in range(n):
            for q in range(n):
                if K[p][q]:
                    rows[p][q] = scale * K[p][q]
                    rows[p + n][q + n] = -scale * K[p][q]
    elif v is DoubleVariant.RealCase3:
        n = d.complex_algebra.dim
        for p in range(n):
            for q in range(n):
                k = K[p][q]
                if k:
                    # 2 Im K(x, y) for x, y in {e_p, i e_p}
                    re, im = Gaussian(k.re), Gaussian(k.im)
                    rows[2 * p][2 * q] = scale * 2 * im
                    rows[2 * p][2 * q + 1] = scale * 2 * re
                    rows[2 * p + 1][2 * q] = scale * 2 * re
                    rows[2 * p + 1][2 * q + 1] = -scale * 2 * im
    else:
        for p in range(n):
            for q in range(n):
                if K[p][q]:
                    rows[p][q + n] = scale * K[p][q]
                    rows[p + n][q] = scale * K[p][q]
    return InvariantForm(scale, Matrix(rows))


def real_structure_algebra(rf: RealFormData) -> tuple[StructureAlgebra, Matrix]:
    """``g(R)`` on the echelon basis of ``rf.g_real``, with its Killing Gram matrix."""
    alg = rf.algebra
    real_alg = alg.realified()
    basis = rf.g_real.basis
    m = len(basis)
    table = [[() for _ in range(m)] for _ in range(m)]
    for a in range(m):
        for b in range(m):
            w = real_alg.bracket(basis[a], basis[b])
            coords = rf.g_real.coordinates(w)
            if coords is None:
                raise ManinError("real form is not bracket-closed")
            table[a][b] = tuple((k, c) for k, c in enumerate(coords) if c)
    labels = [f"u{k + 1}" for k in range(m)]
    return StructureAlgebra(table, labels, "real"), rf.killing_gram()


def real_double(rf: RealFormData, variant) -> DoubleAlgebra:
    variant = DoubleVariant.parse(variant)
    alg = rf.algebra
    if variant is DoubleVariant.RealCase3:
        real_alg = alg.realified()
        return DoubleAlgebra(real_alg, variant, real_alg.table, real_alg.labels, "real",
                             alg.killing_matrix, real_form=rf, complex_algebra=alg)
    if variant not in (DoubleVariant.RealCase1, DoubleVariant.RealCase2):
        raise VariantError("real_double builds the real variants only")
    base, gram = real_structure_algebra(rf)
    c = 0 if variant is DoubleVariant.RealCase1 else Fraction(1, 4)
    labels = list(base.labels) + [f"{lab}*J" for lab in base.labels]
    return DoubleAlgebra(base, variant, _blocked_table(base, c), labels, "real", gram,
                         real_form=rf, complex_algebra=alg)


class DoubleConjugation:
    """``xe + yf -> sigma(y) e + sigma(x) f`` on the Split double."""

    def __init__(self, d: DoubleAlgebra, sigma: Conjugation):
        if d.variant is not DoubleVariant.Split:
            raise VariantError("the swap conjugation lives on the Split double")
        self.double = d
        self.sigma = sigma
        n = d.base_dim
        L = sigma.matrix.rows
        rows = [[ZERO] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            for j in range(n):
                if L[i][j]:
                    rows[i][j + n] = L[i][j]
                    rows[i + n][j] = L[i][j]
        self.semilinear = SemilinearMap(Matrix(rows))

    def __call__(self, v: Sequence) -> tuple:
        return self.semilinear(v)

    def image(self, W: Subspace) -> Subspace:
        return self.semilinear.image(W)

    def tilde(self, x: Sequence) -> tuple:
        """``x e + sigma(x) f``."""
        return self.double.pair(x, self.sigma(x))

    def fixed_space(self) -> Subspace:
        return semilinear_fixed_space(self.semilinear)


def double_conjugation(d: DoubleAlgebra, sigma: Conjugation) -> DoubleConjugation:
    return DoubleConjugation(d, sigma)


__all__ = [
    "DoubleAlgebra",
    "DoubleConjugation",
    "DoubleVariant",
    "InvariantForm",
    "build_double",
    "double_conjugation",
    "q_form",
    "real_double",
    "real_structure_algebra",
]
