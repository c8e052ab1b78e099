"""Command-line front end: ``manin <verb> ...``.

Exit codes: 0 when everything verifies, 1 on a mathematical failure,
2 on usage errors or malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Sequence

from . import __version__
from .bd import (
    PhiMap,
    canonical_extension,
    chains,
    check_iv,
    check_v_forms,
    enumerate_phi,
    group_A_phi,
    is_admissible,
    witness_search,
)
from .errors import ManinError, PreconditionError, SchemaError
from .exactlin import echelon_basis, realify_vector
from .liealg import build_algebra
from .manin import build_W_Phi, build_W_sigma_phi_a, split_triple, verify_manin
from .realform import SHORTHANDS, RealFormDescriptor, SignCharacter
from .rootsys import RootSystemSpec, build_root_system
from .serialize import (
    dumps,
    scalar_to_str,
    subspace_to_json,
    triple_from_json,
    triple_to_json,
    vector_from_json,
    vector_to_json,
)

DEFAULT_SEARCH_DEPTH = 2


class UsageError(Exception):
    pass


def _spec(family: str, rank: str | int) -> RootSystemSpec:
    try:
        return RootSystemSpec(family, int(rank))
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def _phi_json(phi: PhiMap) -> dict:
    return {"map": phi.describe(), "chains": [list(c.roots) for c in chains(phi)]}


def _triple_entry(t) -> dict:
    rep = verify_manin(t)
    return {"triple": triple_to_json(t), "verification": rep.as_dict()}


# --------------------------------------------------------------------------
# Verbs


def run_roots(args) -> tuple[dict, int]:
    rs = build_root_system(_spec(args.family, args.rank))
    results = [{"root": list(r), "height": rs.height(r)} for r in rs.positive_roots]
    extra = {"cartan_matrix": [[int(x) for x in row] for row in rs.cartan],
             "killing_gram": [[scalar_to_str(x) for x in row] for row in rs.killing_gram],
             "positive_root_count": len(rs.positive_roots)}
    return {"input": {"family": args.family, "rank": int(args.rank)}, "results": results, **extra}, 0


def run_bd_list(args) -> tuple[dict, int]:
    rs = build_root_system(_spec(args.family, args.rank))
    results = [{"index": k, **_phi_json(phi)} for k, phi in enumerate(enumerate_phi(rs))]
    return {"input": {"family": args.family, "rank": int(args.rank)}, "results": results}, 0


def run_classify_complex(args) -> tuple[dict, int]:
    alg = build_algebra(_spec(args.family, args.rank))
    results, ok = [], True
    for phi in enumerate_phi(alg.root_system):
        entry = _phi_json(phi)
        ext = canonical_extension(alg, phi)
        if ext is None:
            entry["status"] = "no_rational_extension"
        elif not check_iv(ext):
            entry["status"] = "condition_iv_fails"
        else:
            entry["status"] = "built"
            entry["cartan_extension"] = {"reps": [vector_to_json(v) for v in ext.cartan_reps],
                                         "images": [vector_to_json(v) for v in ext.cartan_images]}
            entry.update(_triple_entry(split_triple(ext)))
            ok &= entry["verification"]["passed"]
        results.append(entry)
    return {"input": {"family": args.family, "rank": int(args.rank)}, "results": results}, 0 if ok else 1


def _load_json_arg(text: str):
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from None


def _descriptor(args) -> RealFormDescriptor:
    if (args.form is None) == (args.descriptor is None):
        raise UsageError("give either a shorthand or --descriptor")
    try:
        if args.form is not None:
            return RealFormDescriptor.parse(args.form)
        return RealFormDescriptor.from_dict(_load_json_arg(args.descriptor))
    except ManinError as exc:
        raise UsageError(str(exc)) from None


def _search_depth(args) -> int:
    if args.search_depth is not None:
        depth = args.search_depth
    else:
        raw = os.environ.get("MANIN_SEARCH_DEPTH", str(DEFAULT_SEARCH_DEPTH))
        try:
            depth = int(raw)
        except ValueError:
            raise UsageError(f"MANIN_SEARCH_DEPTH must be an integer, got {raw!r}") from None
    if depth < 0:
        raise UsageError("search depth must be non-negative")
    return depth


def _sign_classes(phi: PhiMap, rf, depth: int, ext=None) -> list:
    out = []
    for a in group_A_phi(ext if ext is not None else phi, rf.sigma.theta.s):
        out.append({"a": list(a.signs), "witness": witness_search(a, rf.sigma, depth).as_dict()})
    return out


def run_classify_real(args) -> tuple[dict, int]:
    desc = _descriptor(args)
    depth = _search_depth(args)
    try:
        rf = desc.build()
    except ManinError as exc:
        raise UsageError(str(exc)) from None
    alg = rf.algebra
    head = {"input": {"descriptor": desc.as_dict(), "search_depth": depth},
            "killing_signature": list(rf.killing_signature())}
    results, ok = [], True
    if rf.inner:
        if args.phi is not None:
            rows = _load_json_arg(args.phi)
            try:
                vecs = [realify_vector(alg.embed_cartan(vector_from_json(r, alg.rank))) for r in rows]
            except (SchemaError, TypeError) as exc:
                raise UsageError(f"bad Phi: {exc}") from None
            Phi = echelon_basis(vecs, 2 * alg.dim, "real")
        else:
            Phi = echelon_basis([realify_vector(alg.H(k)) for k in range(alg.rank)], 2 * alg.dim, "real")
        try:
            t = build_W_Phi(rf, Phi)
        except ManinError as exc:
            return {**head, "results": [{"kind": "W_Phi", "error": type(exc).__name__,
                                         "message": str(exc)}]}, 1
        entry = {"kind": "W_Phi", "Phi": subspace_to_json(Phi), **_triple_entry(t),
                 "sign_classes": _sign_classes(PhiMap.empty(), rf, depth)}
        ok &= entry["verification"]["passed"]
        results.append(entry)
        return {**head, "results": results}, 0 if ok else 1
    if args.extension is not None:
        raw = _load_json_arg(args.extension)
        try:
            mapping = {int(k): int(v) for k, v in dict(raw["map"]).items()}
            if not is_admissible(alg.root_system, mapping):
                raise UsageError("extension map violates conditions i)-iii)")
            phis = [PhiMap.from_dict(mapping)]
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"bad extension file: {exc}") from None
    else:
        phis = enumerate_phi(alg.root_system)
    for phi in phis:
        entry = {"kind": "W_sigma_phi_a", **_phi_json(phi)}
        ext = canonical_extension(alg, phi)
        if ext is None:
            entry["status"] = "no_rational_extension"
        elif not check_iv(ext):
            entry["status"] = "condition_iv_fails"
        else:
            direct, squared = check_v_forms(ext, rf.sigma)
            entry["condition_v"] = {"direct": direct, "squared": squared}
            if not (direct and squared):
                entry["status"] = "condition_v_fails"
            else:
                try:
                    classes = _sign_classes(phi, rf, depth, ext)
                except PreconditionError as exc:
                    entry["status"] = "s_incompatible"
                    entry["message"] = str(exc)
                    results.append(entry)
                    continue
                entry["status"] = "built"
                entry["sign_classes"] = []
                for cls in classes:
                    t = build_W_sigma_phi_a(ext, SignCharacter(tuple(cls["a"])), rf)
                    item = {**cls, **_triple_entry(t)}
                    ok &= item["verification"]["passed"]
                    entry["sign_classes"].append(item)
        results.append(entry)
    return {**head, "results": results}, 0 if ok else 1


def _collect_triples(doc) -> list:
    if isinstance(doc, dict) and "results" in doc:
        found = []

        def walk(node):
            if isinstance(node, dict):
                if "triple" in node:
                    found.append(node["triple"])
                for key in sorted(node):
                    if key != "triple":
                        walk(node[key])
            elif isinstance(node, list):
                for x in node:
                    walk(x)

        walk(doc["results"])
        if not found:
            raise UsageError("report contains no triples")
        return found
    return [doc]


def run_verify(args) -> tuple[dict, int]:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from None
    results, ok = [], True
    for data in _collect_triples(doc):
        try:
            t = triple_from_json(data)
        except SchemaError as exc:
            raise UsageError(f"schema error: {exc}") from None
        rep = verify_manin(t).as_dict()
        ok &= rep["passed"]
        results.append({"double_variant": data["double_variant"], "verification": rep})
    return {"input": {"file": args.file}, "results": results}, 0 if ok else 1


# --------------------------------------------------------------------------
# Output


def _tsv_cell(x) -> str:
    if isinstance(x, (dict, list)):
        return json.dumps(x, sort_keys=True, separators=(",", ":"))
    return str(x)


def to_tsv(report: dict) -> str:
    rows = report.get("results", [])
    keys = sorted({k for r in rows for k in r})
    lines = ["\t".join(keys)]
    for r in rows:
        lines.append("\t".join(_tsv_cell(r.get(k, "")) for k in keys))
    return "\n".join(lines) + "\n"


VERBS = {
    "roots": run_roots,
    "bd-list": run_bd_list,
    "classify-complex": run_classify_complex,
    "classify-real": run_classify_real,
    "verify": run_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="manin", description="Manin triples of simple Lie algebras.")
    parser.add_argument("--version", action="version", version=f"manin {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in ("roots", "bd-list", "classify-complex"):
        p = sub.add_parser(verb, parents=[common])
        p.add_argument("family")
        p.add_argument("rank")
    p = sub.add_parser("classify-real", parents=[common])
    p.add_argument("form", nargs="?", help=f"shorthand: {', '.join(sorted(SHORTHANDS))}")
    p.add_argument("--descriptor", help="JSON descriptor {family, rank, epsilon, s, chi} or a file")
    p.add_argument("--phi", help="inner forms: JSON list of Cartan vectors spanning Phi, or a file")
    p.add_argument("--extension", help='outer forms: JSON {"map": {"0": 1}} restricting phi, or a file')
    p.add_argument("--search-depth", type=int, default=None)
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("file", help="triple or report JSON; '-' reads stdin")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        body, code = VERBS[args.verb](args)
    except UsageError as exc:
        print(f"manin: error: {exc}", file=sys.stderr)
        return 2
    report = {"tool": "manintriples", "version": __version__, "command": args.verb, **body}
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 6)
    sys.stdout.write(dumps(report) if args.format == "json" else to_tsv(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
