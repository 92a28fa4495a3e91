"""File-based command line: check, construct, suite, catalog.

Exit status discipline: 0 = everything passed; 1 = a mathematical failure
(a check failed or a construction hypothesis was violated; the report
carries the witness); 2 = usage or structural error (bad file, unknown
name, ill-formed document).  The two failure kinds are never conflated.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import catalog as cat
from . import constructions as cons
from . import quadratic as quad
from .checks import (
    Verdict,
    check_bracket_operator_conditions,
    is_averaging,
    is_centroid,
    is_derivation,
    is_morphism,
    is_rota_baxter,
    is_weak_morphism,
)
from .errors import HypothesisError, StructureError
from .io import ParsedDocument, document_digest, parse_document, serialize_document
from .scalars import ScalarField, prime_field, rationals

__all__ = ["main"]


def _parse_field_label(label: str) -> ScalarField:
    if label in ("Q", "rationals"):
        return rationals()
    if label.startswith("F") and label[1:].isdigit():
        return prime_field(int(label[1:]))
    raise StructureError(f"unknown field label {label!r} (use Q or F<p>)")


def _load_document(path: str) -> ParsedDocument:
    p = Path(path)
    if not p.is_file():
        raise StructureError(f"no such file: {path}")
    return parse_document(p.read_text(encoding="utf-8"))


def _witness_json(field: ScalarField, w):
    if w is None:
        return None
    return {
        "identity": w.identity,
        "indices": list(w.indices),
        "left": None if w.left is None else [field.to_json(v) for v in w.left],
        "right": None if w.right is None else [field.to_json(v) for v in w.right],
    }


def _print_witness_text(field: ScalarField, w, out):
    print(f"  identity: {w.identity}", file=out)
    print(f"  indices:  {list(w.indices)}", file=out)
    if w.left is not None:
        print(f"  left:     {[field.format(v) for v in w.left]}", file=out)
        print(f"  right:    {[field.format(v) for v in w.right]}", file=out)


# ---------------------------------------------------------------------------
# check

def _named_map(doc: ParsedDocument, name: str):
    if name == "alpha":
        return doc.algebra.alpha
    if name not in doc.maps:
        raise StructureError(f"document defines no map {name!r}")
    return doc.maps[name]


def _named_form(doc: ParsedDocument, name: str):
    if name not in doc.forms:
        raise StructureError(f"document defines no form {name!r}")
    return doc.forms[name]


def _run_check(doc: ParsedDocument, name: str, args) -> Verdict:
    a = doc.algebra
    if name in cat.CHECKS_BY_NAME:
        if args.maps:
            raise StructureError(f"check {name!r} takes no map arguments")
        return cat.run_named_check(a, name)
    map_checks = {
        "weak_morphism": lambda m: is_weak_morphism(a, a, m),
        "morphism": lambda m: is_morphism(a, a, m),
        "derivation": lambda m: is_derivation(a, m),
        "averaging": lambda m: is_averaging(a, m, args.side),
        "centroid": lambda m: is_centroid(a, m, args.side),
        "rota_baxter": lambda m: is_rota_baxter(
            a, m, a.field.parse(args.weight) if args.weight is not None else 0
        ),
        "bracket_operator_conditions": lambda m: check_bracket_operator_conditions(a, m),
    }
    if name in map_checks:
        if len(args.maps) != 1:
            raise StructureError(f"check {name!r} needs exactly one map name")
        return map_checks[name](_named_map(doc, args.maps[0]))
    if name == "quadratic_structure":
        if args.form is None:
            raise StructureError("check quadratic_structure needs --form")
        if args.maps:
            raise StructureError("check quadratic_structure takes no map arguments")
        return quad.check_quadratic_structure(a, _named_form(doc, args.form))
    if name == "symmetric_automorphism":
        if args.form is None or len(args.maps) != 1:
            raise StructureError(
                "check symmetric_automorphism needs --form and one map name"
            )
        return quad.is_symmetric_automorphism(
            a, _named_form(doc, args.form), _named_map(doc, args.maps[0])
        )
    raise StructureError(f"unknown check {name!r}")


def cmd_check(args) -> int:
    doc = _load_document(args.algebra)
    verdict = _run_check(doc, args.check, args)
    field = doc.algebra.field
    if args.format == "machine":
        print(json.dumps({
            "command": "check",
            "algebra": args.algebra,
            "check": args.check,
            "passes": verdict.passes,
            "witness": _witness_json(field, verdict.witness),
        }, indent=2))
    else:
        status = "PASS" if verdict.passes else "FAIL"
        print(f"check {args.check} on {args.algebra}: {status}")
        if verdict.witness is not None:
            _print_witness_text(field, verdict.witness, sys.stdout)
    return 0 if verdict.passes else 1


# ---------------------------------------------------------------------------
# construct

def _parse_xi(field: ScalarField, text: str, dim: int):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != dim:
        raise StructureError(f"--xi needs {dim} comma-separated scalars")
    return tuple(field.parse(p) for p in parts)


def _run_construct(doc: ParsedDocument, args, checked: bool):
    """Returns (algebra, forms_out, extra_input_paths)."""
    a = doc.algebra
    op = args.op
    unary_map_ops = {
        "yau_twist": cons.yau_twist,
        "centroid_twist": cons.centroid_twist,
        "derivation_product": cons.derivation_product,
        "composed_derivation_product": cons.composed_derivation_product,
        "averaging_product": cons.averaging_product,
        "bracket_operator_product": cons.bracket_operator_product,
    }
    if op in unary_map_ops:
        if len(args.maps) != 1:
            raise StructureError(f"construct {op!r} needs exactly one map name")
        return unary_map_ops[op](a, _named_map(doc, args.maps[0]), checked=checked), {}, []
    if op == "power_twist":
        if args.n is None:
            raise StructureError("construct power_twist needs --n")
        return cons.power_twist(a, args.n, checked=checked), {}, []
    if op == "xi_square_twist":
        if args.xi is None:
            raise StructureError("construct xi_square_twist needs --xi")
        xi = _parse_xi(a.field, args.xi, a.dim)
        return cons.xi_square_twist(a, xi, checked=checked), {}, []
    if op == "commutator_algebra":
        return cons.commutator_algebra(a), {}, []
    if op == "untwist_involutive":
        return cons.untwist_involutive(a, checked=checked), {}, []
    if op == "regular_lie_untwist":
        return cons.regular_lie_untwist(a, checked=checked), {}, []
    if op in ("direct_sum", "tensor_product"):
        if args.with_ is None:
            raise StructureError(f"construct {op!r} needs --with FILE")
        other = _load_document(args.with_)
        if op == "direct_sum":
            return cons.direct_sum(a, other.algebra), {}, [args.with_]
        return cons.tensor_product(a, other.algebra, checked=checked), {}, [args.with_]
    quadratic_ops = {
        "quadratic_yau_twist": True,
        "quadratic_commutator": False,
        "regular_quadratic_commutator": False,
        "quadratic_untwist_involutive": False,
    }
    if op in quadratic_ops:
        if args.form is None:
            raise StructureError(f"construct {op!r} needs --form")
        form = _named_form(doc, args.form)
        if op == "quadratic_yau_twist":
            if len(args.maps) != 1:
                raise StructureError("quadratic_yau_twist needs one map name")
            out, fout = quad.quadratic_yau_twist(
                a, form, _named_map(doc, args.maps[0]), checked=checked
            )
        elif op == "quadratic_commutator":
            out, fout = quad.quadratic_commutator(a, form, checked=checked)
        elif op == "regular_quadratic_commutator":
            out, fout = quad.regular_quadratic_commutator(a, form, checked=checked)
        else:
            out, fout = quad.quadratic_untwist_involutive(a, form, checked=checked)
        return out, {args.form: fout}, []
    raise StructureError(f"unknown construction {op!r}")


def cmd_construct(args) -> int:
    doc = _load_document(args.algebra)
    field = doc.algebra.field
    try:
        out, forms_out, extra_paths = _run_construct(doc, args, not args.unchecked)
    except HypothesisError as exc:
        if args.format == "machine":
            print(json.dumps({
                "command": "construct",
                "op": args.op,
                "passes": False,
                "failed_hypothesis": exc.requirement,
                "witness": _witness_json(
                    field, getattr(exc.verdict, "witness", None)
                ),
                "detail": exc.detail,
            }, indent=2))
        else:
            print(f"construct {args.op} on {args.algebra}: HYPOTHESIS FAILED")
            print(f"  requirement: {exc.requirement}")
            if exc.detail:
                print(f"  detail: {exc.detail}")
            w = getattr(exc.verdict, "witness", None)
            if w is not None:
                _print_witness_text(field, w, sys.stdout)
        return 1
    arguments = {}
    if args.maps:
        arguments["maps"] = list(args.maps)
    for key in ("n", "xi", "form"):
        v = getattr(args, key)
        if v is not None:
            arguments[key] = v
    if args.with_ is not None:
        arguments["with"] = args.with_
    inputs = [args.algebra] + extra_paths
    provenance = {
        "construction": args.op,
        "arguments": arguments,
        "inputs": [
            document_digest(Path(p).read_text(encoding="utf-8")) for p in inputs
        ],
    }
    text = serialize_document(out, forms=forms_out, provenance=provenance)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        if args.format == "machine":
            print(json.dumps({
                "command": "construct", "op": args.op, "passes": True,
                "out": args.out,
            }, indent=2))
        else:
            print(f"construct {args.op} on {args.algebra}: OK -> {args.out}")
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# suite

def _normalize_checkspec(spec):
    if isinstance(spec, str):
        return {"check": spec}
    if isinstance(spec, dict) and "check" in spec:
        return dict(spec)
    raise StructureError(f"bad check spec {spec!r}")


def _suite_check(doc_like, spec, forms_out) -> Verdict:
    """Run one check spec against an algebra plus its maps/forms context."""
    a, maps, forms = doc_like
    name = spec["check"]
    if name in cat.CHECKS_BY_NAME:
        return cat.run_named_check(a, name)
    def need_map():
        mname = spec.get("map")
        if mname is None:
            raise StructureError(f"check {name!r} in suite needs a map")
        if mname == "alpha":
            return a.alpha
        if mname not in maps:
            raise StructureError(f"suite row uses undefined map {mname!r}")
        return maps[mname]
    if name == "weak_morphism":
        return is_weak_morphism(a, a, need_map())
    if name == "morphism":
        return is_morphism(a, a, need_map())
    if name == "derivation":
        return is_derivation(a, need_map())
    if name == "averaging":
        return is_averaging(a, need_map(), spec.get("side", "both"))
    if name == "centroid":
        return is_centroid(a, need_map(), spec.get("side", "both"))
    if name == "rota_baxter":
        return is_rota_baxter(a, need_map(), spec.get("weight", 0))
    if name == "bracket_operator_conditions":
        return check_bracket_operator_conditions(a, need_map())
    if name == "quadratic_structure":
        fname = spec.get("form")
        if fname is None:
            raise StructureError("quadratic_structure in suite needs a form")
        form = (forms_out or {}).get(fname) or forms.get(fname)
        if form is None:
            raise StructureError(f"suite row uses undefined form {fname!r}")
        return quad.check_quadratic_structure(a, form)
    if name == "symmetric_automorphism":
        fname = spec.get("form")
        if fname is None or fname not in forms:
            raise StructureError("symmetric_automorphism in suite needs a defined form")
        return quad.is_symmetric_automorphism(a, forms[fname], need_map())
    raise StructureError(f"unknown check {name!r}")


class _ConstructArgs:
    """Adapter so suite rows reuse the construct dispatcher."""

    def __init__(self, row_cons, base_dir: Path):
        self.op = row_cons["name"]
        self.maps = [row_cons["map"]] if "map" in row_cons else []
        self.n = row_cons.get("n")
        xi = row_cons.get("xi")
        self.xi = ",".join(str(v) for v in xi) if xi is not None else None
        self.form = row_cons.get("form")
        w = row_cons.get("with")
        self.with_ = str(base_dir / w) if w is not None else None


def _row_algebra(row, base_dir: Path):
    src = row.get("algebra")
    if isinstance(src, str):
        doc = _load_document(str(base_dir / src))
        return doc.algebra, doc.maps, doc.forms
    if isinstance(src, dict) and "recipe" in src:
        field = _parse_field_label(src.get("field", "Q"))
        entry = cat.build_entry(src["recipe"], field, **src.get("params", {}))
        return entry.algebra, entry.maps, entry.forms
    raise StructureError(f"row needs an algebra path or recipe, got {src!r}")


def _run_suite_row(row, base_dir: Path, unchecked: bool):
    """Returns a result dict; raises StructureError for ill-formed rows."""
    name = row.get("name", "<unnamed>")
    a, maps, forms = _row_algebra(row, base_dir)
    result = {"name": name, "passes": True}

    def fail(stage, check_name, witness, field, detail=""):
        result["passes"] = False
        result["stage"] = stage
        result["check"] = check_name
        result["witness"] = _witness_json(field, witness)
        if detail:
            result["detail"] = detail
        return result

    for spec in map(_normalize_checkspec, row.get("hypothesis_checks", ())):
        v = _suite_check((a, maps, forms), spec, None)
        if not v:
            return fail("hypothesis", spec["check"], v.witness, a.field)
    forms_out = None
    if "construction" in row:
        cargs = _ConstructArgs(row["construction"], base_dir)
        doc_like = ParsedDocument(a, maps, forms)
        try:
            a, forms_out, _ = _run_construct(doc_like, cargs, not unchecked)
        except HypothesisError as exc:
            return fail(
                "construct", exc.requirement,
                getattr(exc.verdict, "witness", None), doc_like.algebra.field,
                exc.detail,
            )
        maps = {}
    for spec in map(_normalize_checkspec, row.get("conclusion_checks", ())):
        v = _suite_check((a, maps, forms), spec, forms_out)
        if not v:
            return fail("conclusion", spec["check"], v.witness, a.field)
    return result


def builtin_suite_path(name: str) -> Path:
    ref = resources.files("colorhom") / "suites" / f"{name}.json"
    p = Path(str(ref))
    if not p.is_file():
        raise StructureError(f"no builtin suite {name!r}")
    return p


def cmd_suite(args) -> int:
    manifest_arg = args.manifest
    if manifest_arg.startswith("builtin:"):
        manifest_path = builtin_suite_path(manifest_arg.split(":", 1)[1])
    else:
        manifest_path = Path(manifest_arg)
        if not manifest_path.is_file():
            raise StructureError(f"no such manifest: {manifest_arg}")
    try:
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise StructureError(f"manifest syntax: {exc}") from None
    if not isinstance(manifest, dict) or "rows" not in manifest:
        raise StructureError("manifest must be an object with a rows list")
    base_dir = manifest_path.parent
    results = [
        _run_suite_row(row, base_dir, args.unchecked) for row in manifest["rows"]
    ]
    ok = all(r["passes"] for r in results)
    if args.format == "machine":
        print(json.dumps({
            "command": "suite",
            "manifest": str(manifest_arg),
            "rows": results,
            "passes": ok,
        }, indent=2))
    else:
        for r in results:
            if r["passes"]:
                print(f"row '{r['name']}': PASS")
            else:
                print(
                    f"row '{r['name']}': FAIL at {r['stage']} ({r['check']})"
                )
                if r.get("witness"):
                    w = r["witness"]
                    print(f"  identity: {w['identity']}")
                    print(f"  indices:  {w['indices']}")
                    if w["left"] is not None:
                        print(f"  left:     {w['left']}")
                        print(f"  right:    {w['right']}")
        print(f"suite: {'PASS' if ok else 'FAIL'} ({len(results)} rows)")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# catalog

def cmd_catalog(args) -> int:
    field = _parse_field_label(args.field)
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.dim is not None:
        params["dim"] = args.dim
    if args.c is not None:
        params["c"] = field.parse(args.c)
    entry = cat.build_entry(args.recipe, field, **params)
    text = serialize_document(entry.algebra, maps=entry.maps, forms=entry.forms)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        if args.format == "machine":
            print(json.dumps({
                "command": "catalog",
                "recipe": args.recipe,
                "claims": list(entry.recipe.claims),
                "out": args.out,
            }, indent=2))
        else:
            print(f"catalog {args.recipe}: OK -> {args.out}")
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorhom",
        description="Exact checks and constructions for graded color Hom-algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--seed", type=int, default=0,
                        help="forwarded to anything that samples")
    common.add_argument("--budget", type=int, default=10000,
                        help="forwarded to anything that samples")

    p = sub.add_parser("check", parents=[common], help="run one check on a document")
    p.add_argument("algebra", help="algebra document (JSON)")
    p.add_argument("check", help="check name")
    p.add_argument("maps", nargs="*", help="map names used by the check")
    p.add_argument("--form", help="form name for quadratic checks")
    p.add_argument("--weight", help="weight scalar for rota_baxter")
    p.add_argument("--side", choices=("left", "right", "both"), default="both")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", parents=[common],
                       help="build a new document from a construction")
    p.add_argument("algebra", help="input algebra document (JSON)")
    p.add_argument("op", help="construction name")
    p.add_argument("maps", nargs="*", help="map names used by the construction")
    p.add_argument("--with", dest="with_", metavar="FILE",
                   help="second algebra document for direct_sum / tensor_product")
    p.add_argument("--n", type=int, help="power for power_twist")
    p.add_argument("--xi", help="comma-separated vector for xi_square_twist")
    p.add_argument("--form", help="form name for quadratic constructions")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--unchecked", action="store_true",
                   help="skip hypothesis validation")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("suite", parents=[common], help="run a manifest of theorem rows")
    p.add_argument("manifest", help="manifest file, or builtin:theorems")
    p.add_argument("--unchecked", action="store_true",
                   help="skip hypothesis validation inside constructions")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("catalog", parents=[common],
                       help="materialize a catalog instance as a document")
    p.add_argument("recipe", help="recipe name")
    p.add_argument("--field", default="Q", help="Q or F<p>")
    p.add_argument("--n", type=int)
    p.add_argument("--dim", type=int)
    p.add_argument("--c", help="scalar parameter")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StructureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HypothesisError as exc:
        # constructions reached outside cmd_construct's handler
        print(f"hypothesis failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
