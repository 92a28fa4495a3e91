"""File format: one JSON document per algebra, exact scalars, canonical form.

Sections, in canonical order: field, group, bicharacter, basis, product,
alpha, then optional maps, forms, provenance.  Scalars are JSON integers
when integral and strings "n/d" otherwise; floats are rejected (nothing in
this package is approximate).  The product is sparse: sorted [i, j, k,
value] triples.  Canonical serialization is deterministic byte for byte;
parse accepts non-canonical spellings (unsorted triples, "6/8") and
re-serialization canonicalizes them.  The provenance section records how a
document was constructed; it is ignored by parsing and never part of the
canonical form.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field as dc_field

from .core import (
    ColorHomAlgebra,
    GradedBasis,
    GradedLinearMap,
    identity_map,
    make_algebra,
)
from .errors import StructureError
from .grading import Bicharacter, GradeGroup
from .quadratic import BilinearFormStructure
from .scalars import ScalarField, prime_field, rationals

__all__ = [
    "ParsedDocument",
    "serialize_document",
    "parse_document",
    "document_digest",
]


@dataclass
class ParsedDocument:
    algebra: ColorHomAlgebra
    maps: dict = dc_field(default_factory=dict)
    forms: dict = dc_field(default_factory=dict)
    provenance: dict | None = None


def _field_to_json(f: ScalarField):
    if f.characteristic == 0:
        return {"kind": "rationals"}
    return {"kind": "prime-field", "p": f.p}


def _scalar_from_json(f: ScalarField, v, where: str):
    if isinstance(v, bool) or isinstance(v, float):
        raise StructureError(f"{where}: scalar must be an integer or \"n/d\" string")
    if isinstance(v, int):
        return f.from_int(v)
    if isinstance(v, str):
        return f.parse(v)
    raise StructureError(f"{where}: bad scalar {v!r}")


def _matrix_to_json(f: ScalarField, rows):
    return [[f.to_json(v) for v in row] for row in rows]


def _map_to_json(f: ScalarField, m: GradedLinearMap):
    out = {}
    if not m.is_even:
        out["degree"] = list(m.degree.coords)
    out["matrix"] = _matrix_to_json(f, m.matrix)
    return out


def serialize_document(
    algebra: ColorHomAlgebra,
    maps: dict | None = None,
    forms: dict | None = None,
    provenance: dict | None = None,
) -> str:
    """Canonical text (plus the non-canonical provenance section if given)."""
    f = algebra.field
    doc = {
        "field": _field_to_json(f),
        "group": {
            "free_rank": algebra.group.free_rank,
            "torsion_orders": list(algebra.group.torsion_orders),
        },
        "bicharacter": {
            "gen_table": _matrix_to_json(f, algebra.bicharacter.gen_table)
        },
        "basis": {"degrees": [list(d.coords) for d in algebra.degrees]},
    }
    triples = []
    n = algebra.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = algebra.structure[i][j][k]
                if v != 0:
                    triples.append([i, j, k, f.to_json(v)])
    doc["product"] = {"triples": triples}
    doc["alpha"] = {"matrix": _matrix_to_json(f, algebra.alpha.matrix)}
    if maps:
        doc["maps"] = {
            name: _map_to_json(f, maps[name]) for name in sorted(maps)
        }
    if forms:
        alpha_matrix = algebra.alpha.matrix
        ident_matrix = identity_map(algebra.basis).matrix
        section = {}
        for name in sorted(forms):
            form = forms[name]
            if form.companion.matrix == ident_matrix:
                companion = "id"
            elif form.companion.matrix == alpha_matrix:
                companion = "alpha"
            else:
                companion = None
                for mname in sorted(maps or {}):
                    if maps[mname].matrix == form.companion.matrix:
                        companion = mname
                        break
                if companion is None:
                    raise StructureError(
                        f"form {name!r}: companion is not id, alpha, or a named map"
                    )
            entry = {"gram": _matrix_to_json(f, form.gram), "companion": companion}
            if not form.require_even:
                entry["require_even"] = False
            section[name] = entry
        doc["forms"] = section
    if provenance is not None:
        doc["provenance"] = provenance
    return _emit(doc, 0) + "\n"


def _emit(obj, level: int) -> str:
    """Indented JSON, but lists of scalars stay on one line.

    Keeps structure-constant triples and matrix rows readable while the
    output remains plain JSON with a stable byte representation.
    """
    pad = "  " * level
    inner = "  " * (level + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        rows = (
            f"{inner}{json.dumps(str(k))}: {_emit(v, level + 1)}"
            for k, v in obj.items()
        )
        return "{\n" + ",\n".join(rows) + "\n" + pad + "}"
    if isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) for v in obj):
            return json.dumps(obj)
        rows = (f"{inner}{_emit(v, level + 1)}" for v in obj)
        return "[\n" + ",\n".join(rows) + "\n" + pad + "]"
    return json.dumps(obj)


def document_digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def _expect(cond: bool, message: str):
    if not cond:
        raise StructureError(message)


def parse_document(text: str) -> ParsedDocument:
    """Parse and validate; raises StructureError on anything ill-formed.

    Mathematical properties are not checked here beyond what every algebra
    must satisfy (valid bicharacter, even product, even alpha); identities
    are the job of the check verbs.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"syntax: {exc}") from None
    _expect(isinstance(doc, dict), "document must be a JSON object")
    for section in ("field", "group", "bicharacter", "basis", "product", "alpha"):
        _expect(section in doc, f"missing section {section!r}")

    fsec = doc["field"]
    _expect(isinstance(fsec, dict) and "kind" in fsec, "field: need a kind")
    if fsec["kind"] == "rationals":
        field = rationals()
    elif fsec["kind"] == "prime-field":
        _expect("p" in fsec, "field: prime-field needs p")
        field = prime_field(fsec["p"])
    else:
        raise StructureError(f"field: unknown kind {fsec['kind']!r}")

    gsec = doc["group"]
    _expect(isinstance(gsec, dict), "group: must be an object")
    group = GradeGroup(
        gsec.get("free_rank", 0), tuple(gsec.get("torsion_orders", ()))
    )

    bsec = doc["bicharacter"]
    _expect(isinstance(bsec, dict) and "gen_table" in bsec, "bicharacter: need gen_table")
    table = [
        [_scalar_from_json(field, v, "bicharacter") for v in row]
        for row in bsec["gen_table"]
    ]
    bichar = Bicharacter(field, group, tuple(tuple(r) for r in table))

    dsec = doc["basis"]
    _expect(isinstance(dsec, dict) and "degrees" in dsec, "basis: need degrees")
    degrees = []
    for idx, coords in enumerate(dsec["degrees"]):
        _expect(
            isinstance(coords, list) and all(isinstance(c, int) and not isinstance(c, bool) for c in coords),
            f"basis: degree {idx} must be a list of integers",
        )
        degrees.append(group.element(coords))
    basis = GradedBasis(field, group, tuple(degrees))
    n = basis.dim

    psec = doc["product"]
    _expect(isinstance(psec, dict) and "triples" in psec, "product: need triples")
    structure = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
    for entry in psec["triples"]:
        _expect(
            isinstance(entry, list) and len(entry) == 4,
            f"product: triple {entry!r} must be [i, j, k, value]",
        )
        i, j, k, v = entry
        for x in (i, j, k):
            _expect(
                isinstance(x, int) and not isinstance(x, bool) and 0 <= x < n,
                f"product: index out of range in {entry!r}",
            )
        structure[i][j][k] = structure[i][j][k] + _scalar_from_json(
            field, v, f"product[{i},{j},{k}]"
        )

    asec = doc["alpha"]
    _expect(isinstance(asec, dict) and "matrix" in asec, "alpha: need matrix")
    alpha_rows = [
        [_scalar_from_json(field, v, "alpha") for v in row] for row in asec["matrix"]
    ]
    alpha = GradedLinearMap(basis, tuple(tuple(r) for r in alpha_rows))

    algebra = make_algebra(
        basis,
        bichar,
        tuple(tuple(tuple(c) for c in plane) for plane in structure),
        alpha,
    )

    maps = {}
    for name, msec in (doc.get("maps") or {}).items():
        _expect(isinstance(msec, dict) and "matrix" in msec, f"maps.{name}: need matrix")
        deg = None
        if "degree" in msec:
            deg = group.element(msec["degree"])
        rows = [
            [_scalar_from_json(field, v, f"maps.{name}") for v in row]
            for row in msec["matrix"]
        ]
        maps[name] = GradedLinearMap(basis, tuple(tuple(r) for r in rows), deg)

    forms = {}
    for name, fsec2 in (doc.get("forms") or {}).items():
        _expect(isinstance(fsec2, dict) and "gram" in fsec2, f"forms.{name}: need gram")
        companion_name = fsec2.get("companion", "id")
        if companion_name == "id":
            companion = identity_map(basis)
        elif companion_name == "alpha":
            companion = alpha
        elif companion_name in maps:
            companion = maps[companion_name]
        else:
            raise StructureError(
                f"forms.{name}: companion {companion_name!r} is not id, alpha, "
                "or a map defined in this document"
            )
        gram = [
            [_scalar_from_json(field, v, f"forms.{name}") for v in row]
            for row in fsec2["gram"]
        ]
        forms[name] = BilinearFormStructure(
            basis,
            tuple(tuple(r) for r in gram),
            companion,
            require_even=fsec2.get("require_even", True),
        )

    provenance = doc.get("provenance")
    return ParsedDocument(algebra, maps, forms, provenance)
