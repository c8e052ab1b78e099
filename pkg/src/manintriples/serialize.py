"""Exact JSON encoding of scalars, vectors, BD data and Manin triples."""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .doubles import DoubleVariant, build_double, q_form, real_double
from .errors import SchemaError
from .exactlin import Gaussian, Subspace, echelon_basis
from .liealg import build_algebra
from .manin import ManinTriple
from .realform import RealFormDescriptor

_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR = re.compile(rf"^(?:(?P<re>{_RAT})(?:(?P<sign>[+-])(?P<im>\d+(?:/\d+)?)\*i)?|(?P<pure>{_RAT})\*i)$")


def scalar_to_str(x) -> str:
    if not isinstance(x, Gaussian):
        x = Gaussian(x)
    return str(x)


def scalar_from_str(text) -> Gaussian:
    if isinstance(text, int) and not isinstance(text, bool):
        return Gaussian(text)
    if not isinstance(text, str):
        raise SchemaError(f"scalar must be a string, got {text!r}")
    m = _SCALAR.match(text.replace(" ", ""))
    if not m:
        raise SchemaError(f"malformed scalar {text!r}")
    try:
        if m.group("pure") is not None:
            return Gaussian(0, Fraction(m.group("pure")))
        im = Fraction(m.group("im")) if m.group("im") else Fraction(0)
        if m.group("sign") == "-":
            im = -im
        return Gaussian(Fraction(m.group("re")), im)
    except ZeroDivisionError:
        raise SchemaError(f"zero denominator in {text!r}") from None


def vector_to_json(v) -> list:
    return [scalar_to_str(x) for x in v]


def vector_from_json(data, length: int | None = None) -> tuple:
    if not isinstance(data, list):
        raise SchemaError("vector must be a list of scalars")
    if length is not None and len(data) != length:
        raise SchemaError(f"vector has length {len(data)}, expected {length}")
    return tuple(scalar_from_str(x) for x in data)


def subspace_to_json(V: Subspace) -> list:
    return [vector_to_json(b) for b in V.basis]


def dumps(obj) -> str:
    """Canonical text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


# --------------------------------------------------------------------------
# Triples


def triple_to_json(t: ManinTriple) -> dict:
    d = t.double
    rf = d.real_form
    alg = d.complex_algebra
    desc = None
    if rf is not None:
        theta = rf.sigma.theta
        desc = {"family": alg.root_system.spec.family, "rank": alg.rank, "epsilon": theta.epsilon,
                "s": list(theta.s.perm), "chi": list(theta.chi.signs)}
    return {
        "double_variant": d.tag,
        "field": "R" if d.field == "real" else "C",
        "algebra": alg.root_system.spec.name,
        "real_form": desc,
        "g_basis": subspace_to_json(t.g_sub),
        "w_basis": subspace_to_json(t.w_sub),
        "form_scale": scalar_to_str(t.form.scale),
    }


def triple_from_json(data) -> ManinTriple:
    if not isinstance(data, dict):
        raise SchemaError("triple must be a JSON object")
    for key in ("double_variant", "field", "g_basis", "w_basis", "form_scale", "algebra"):
        if key not in data:
            raise SchemaError(f"triple is missing {key!r}")
    try:
        variant = DoubleVariant.parse(data["double_variant"])
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
    field = {"C": "complex", "R": "real"}.get(data["field"])
    if field is None or (field == "real") != variant.is_real:
        raise SchemaError("field does not match the double variant")
    try:
        alg = build_algebra(data["algebra"])
    except (ValueError, TypeError) as exc:
        raise SchemaError(f"bad algebra: {exc}") from None
    if variant.is_real:
        if not isinstance(data.get("real_form"), dict):
            raise SchemaError("real doubles need a 'real_form' descriptor")
        try:
            rf = RealFormDescriptor.from_dict(data["real_form"]).build(alg)
        except ValueError as exc:
            raise SchemaError(f"bad real form: {exc}") from None
        d = real_double(rf, variant)
    else:
        d = build_double(alg, variant)
    scale = scalar_from_str(data["form_scale"])
    if not scale:
        raise SchemaError("form_scale must be nonzero")

    def space(key):
        rows = data[key]
        if not isinstance(rows, list):
            raise SchemaError(f"{key} must be a list of vectors")
        vecs = [vector_from_json(r, d.dim) for r in rows]
        if field == "real" and any(not x.is_real for v in vecs for x in v):
            raise SchemaError(f"{key} has non-real entries in a real double")
        return echelon_basis(vecs, d.dim, field)

    return ManinTriple(space("g_basis"), space("w_basis"), d, q_form(d, scale))


__all__ = [
    "dumps",
    "scalar_from_str",
    "scalar_to_str",
    "subspace_to_json",
    "triple_from_json",
    "triple_to_json",
    "vector_from_json",
    "vector_to_json",
]
