"""Serialization: canonical bytes, exact scalars, and strict parsing."""

import json
from fractions import Fraction
from importlib import resources

import pytest

from colorhom.catalog import (
    build_entry,
    pairing_form,
    scaling_morphism,
    standard_entries,
    truncated_polynomial,
)
from colorhom.core import identity_map, make_map
from colorhom.errors import StructureError
from colorhom.grading import GroupElement
from colorhom.io import (
    document_digest,
    parse_document,
    serialize_document,
)
from colorhom.quadratic import BilinearFormStructure
from colorhom.scalars import prime_field, rationals
from colorhom.suite_instances import instance_documents


Q = rationals()


@pytest.mark.parametrize("field", [Q, prime_field(7)], ids=["Q", "F7"])
def test_serialize_parse_round_trip_is_byte_identical(field):
    for entry in standard_entries(field):
        text = serialize_document(entry.algebra, entry.maps, entry.forms)
        doc = parse_document(text)
        again = serialize_document(doc.algebra, doc.maps, doc.forms)
        assert again == text, entry.recipe.name
        assert doc.algebra.structure == entry.algebra.structure
        assert doc.algebra.alpha.matrix == entry.algebra.alpha.matrix
        assert doc.algebra.degrees == entry.algebra.degrees


def test_output_is_plain_json():
    entry = build_entry("truncated_polynomial", Q, n=3)
    text = serialize_document(entry.algebra, entry.maps, entry.forms)
    doc = json.loads(text)
    assert list(doc) == ["field", "group", "bicharacter", "basis", "product", "alpha", "maps", "forms"]
    assert doc["product"]["triples"] == sorted(doc["product"]["triples"])


def test_duplicate_triples_accumulate():
    a = truncated_polynomial(2)
    text = serialize_document(a)
    doc = json.loads(text)
    doc["product"]["triples"] = [[0, 0, 0, 1], [0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1]]
    parsed = parse_document(json.dumps(doc))
    assert parsed.algebra.structure[0][0][0] == Fraction(2)


def test_non_canonical_spellings_canonicalize():
    a = truncated_polynomial(2)
    doc = json.loads(serialize_document(a))
    doc["product"]["triples"] = [[1, 0, 1, "6/6"], [0, 1, 1, 1], [0, 0, 0, "2/2"]]
    parsed = parse_document(json.dumps(doc))
    assert serialize_document(parsed.algebra) == serialize_document(a)
    assert parsed.algebra.structure[1][0][1] == Fraction(1)


def test_floats_and_bools_are_rejected():
    a = truncated_polynomial(2)
    base = json.loads(serialize_document(a))

    bad = json.loads(json.dumps(base))
    bad["product"]["triples"][0][3] = 1.5
    with pytest.raises(StructureError):
        parse_document(json.dumps(bad))

    bad = json.loads(json.dumps(base))
    bad["product"]["triples"][0][3] = True
    with pytest.raises(StructureError):
        parse_document(json.dumps(bad))

    bad = json.loads(json.dumps(base))
    bad["basis"]["degrees"][0] = [True]
    with pytest.raises(StructureError):
        parse_document(json.dumps(bad))


def test_parse_rejects_malformed_documents():
    with pytest.raises(StructureError) as info:
        parse_document("{not json")
    assert str(info.value).startswith("syntax:")
    with pytest.raises(StructureError):
        parse_document(json.dumps([1, 2, 3]))

    a = truncated_polynomial(2)
    base = json.loads(serialize_document(a))
    for section in ("field", "group", "bicharacter", "basis", "product", "alpha"):
        broken = {k: v for k, v in base.items() if k != section}
        with pytest.raises(StructureError):
            parse_document(json.dumps(broken))

    bad = json.loads(json.dumps(base))
    bad["field"] = {"kind": "reals"}
    with pytest.raises(StructureError):
        parse_document(json.dumps(bad))

    bad = json.loads(json.dumps(base))
    bad["product"]["triples"] = [[0, 0, 5, 1]]
    with pytest.raises(StructureError):
        parse_document(json.dumps(bad))


def test_companion_encoding_id_alpha_and_named_map():
    a = truncated_polynomial(3)
    text = serialize_document(a, {}, {"pairing": pairing_form(a)})
    assert json.loads(text)["forms"]["pairing"]["companion"] == "id"

    entry = build_entry("involutive_quadratic_polynomial", Q, n=3)
    text = serialize_document(entry.algebra, entry.maps, entry.forms)
    assert json.loads(text)["forms"]["pairing"]["companion"] == "alpha"
    parsed = parse_document(text)
    assert parsed.forms["pairing"].companion.matrix == parsed.algebra.alpha.matrix

    scale = scaling_morphism(a, 2)
    form = BilinearFormStructure(a.basis, pairing_form(a).gram, scale)
    text = serialize_document(a, {"scale2": scale}, {"twisted": form})
    assert json.loads(text)["forms"]["twisted"]["companion"] == "scale2"
    parsed = parse_document(text)
    assert parsed.forms["twisted"].companion.matrix == scale.matrix

    with pytest.raises(StructureError):
        serialize_document(a, {}, {"twisted": form})  # companion not nameable

    doc = json.loads(serialize_document(a, {}, {"pairing": pairing_form(a)}))
    doc["forms"]["pairing"]["companion"] = "ghost"
    with pytest.raises(StructureError):
        parse_document(json.dumps(doc))


def test_odd_maps_round_trip_with_their_degree():
    entry = build_entry("super_commutative_line", Q)
    sl = entry.algebra
    odd = GroupElement(sl.group, (1,))
    raising = make_map(sl.basis, ((0, 0), (1, 0)), degree=odd)
    text = serialize_document(sl, {"raise": raising})
    doc = json.loads(text)
    assert doc["maps"]["raise"]["degree"] == [1]
    parsed = parse_document(text)
    assert parsed.maps["raise"].degree == odd
    assert parsed.maps["raise"].matrix == raising.matrix


def test_digest_is_stable_and_prefixed():
    text = serialize_document(truncated_polynomial(2))
    d = document_digest(text)
    assert d.startswith("sha256:") and len(d) == 7 + 64
    assert d == document_digest(text)
    assert d != document_digest(text + " ")


def test_provenance_survives_round_trip_but_not_canonical_form():
    a = truncated_polynomial(2)
    prov = {"construction": "example", "arguments": {"n": 2}, "inputs": []}
    text = serialize_document(a, provenance=prov)
    parsed = parse_document(text)
    assert parsed.provenance == prov
    assert serialize_document(parsed.algebra) == serialize_document(a)


def test_shipped_instances_match_the_generator():
    shipped = resources.files("colorhom.suites").joinpath("instances")
    docs = instance_documents()
    names = {p.name[:-5] for p in shipped.iterdir() if p.name.endswith(".json")}
    assert names == set(docs)
    for name, text in docs.items():
        on_disk = shipped.joinpath(f"{name}.json").read_text(encoding="utf-8")
        assert on_disk == text, name
        parsed = parse_document(on_disk)
        assert serialize_document(
            parsed.algebra, parsed.maps, parsed.forms, parsed.provenance
        ) == on_disk, name
