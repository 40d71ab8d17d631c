from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weakbrace import io
from weakbrace.brace import WeakBrace
from weakbrace.constructions import DoubleSystem, MatchedSystem, double_semidirect, matched_product
from weakbrace.enumeration import enumerate_inverse_semigroups, enumerate_weak_braces
from weakbrace.errors import MalformedDocument, MalformedTable
from weakbrace.fixtures import fixture_documents, fixture_objects, write_fixtures
from weakbrace.semigroup import CayleyTable
from weakbrace.solutions import PairMap

DOCS = fixture_documents()


@pytest.mark.parametrize("name", sorted(DOCS))
def test_shipped_fixture_matches_builder(name, fixture_dir):
    shipped = io.load(fixture_dir / f"{name}.json")
    assert shipped == DOCS[name]


def test_no_stray_fixtures(fixture_dir):
    assert {p.stem for p in fixture_dir.glob("*.json")} == set(DOCS)


def test_write_fixtures_is_reproducible(tmp_path, fixture_dir):
    for path in write_fixtures(tmp_path):
        assert path.read_text() == (fixture_dir / path.name).read_text()


@pytest.mark.parametrize("name", sorted(DOCS))
def test_roundtrip(name):
    doc = DOCS[name]
    assert io.parse(io.dumps(doc)) == doc
    assert io.parse(io.dumps(doc, pretty=True)) == doc
    assert io.parse(io.emit(doc)) == doc


@pytest.mark.parametrize("name", sorted(DOCS))
def test_documents_rebuild_objects(name):
    obj = fixture_objects()[name]
    doc = DOCS[name]
    if isinstance(obj, CayleyTable):
        assert io.to_table(doc) == obj
    elif isinstance(obj, WeakBrace):
        assert io.to_weak_brace(doc) == obj
    elif isinstance(obj, PairMap):
        assert io.to_pair_map(doc) == obj
    elif isinstance(obj, MatchedSystem):
        assert matched_product(io.to_system(doc)) == matched_product(obj)
    elif isinstance(obj, DoubleSystem):
        assert double_semidirect(io.to_system(doc)) == double_semidirect(obj)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([wb for n in (1, 2, 3, 4) for wb in enumerate_weak_braces(n)]
                       + [t for n in (1, 2, 3) for t in enumerate_inverse_semigroups(n)]))
def test_roundtrip_enumerated(obj):
    doc = io.to_document(obj)
    assert io.parse(io.dumps(doc)) == doc


def test_bare_payloads_infer_kind():
    assert io.parse('{"table": [[0]]}').kind == "semigroup"
    assert io.parse({"add": [[0]], "mul": [[0]]}).kind == "weak-brace"
    assert io.parse({"map": [[0, 0]]}).kind == "pair-map"
    sys_doc = io.emit(DOCS["semidirect_3x3_system"])
    del sys_doc["beta"], sys_doc["kind"]
    doc = io.parse(sys_doc)
    assert doc.kind == "matched-system"
    assert io.to_system(doc).beta.is_trivial()


@pytest.mark.parametrize("text", [
    "not json",
    "[1, 2]",
    '{"kind": "semigroup"}',
    '{"kind": "nonsense", "table": [[0]]}',
    '{"schemaVersion": "2", "table": [[0]]}',
    '{"order": 3}',
])
def test_malformed_documents(text):
    with pytest.raises(MalformedDocument):
        io.parse(text)


def test_malformed_payloads():
    with pytest.raises(MalformedDocument):
        io.to_table(io.parse({"order": 3, "table": [[0]]}))
    with pytest.raises(MalformedDocument):
        io.to_table(io.parse({"table": [0, 1]}))
    with pytest.raises(MalformedTable):
        io.to_table(io.parse({"table": [[0, 5], [1, 0]]}))
    with pytest.raises(MalformedDocument):
        io.to_pair_map(io.parse({"map": [[0, 0], [0, 1], [1, 0]]}))
    with pytest.raises(MalformedDocument):
        io.to_pair_map(io.parse({"order": 1, "map": [[0, 3]]}))
    with pytest.raises(MalformedDocument):
        io.to_weak_brace(io.parse({"table": [[0]]}))
    with pytest.raises(MalformedDocument):
        io.load("/nonexistent/file.json")
    with pytest.raises(TypeError):
        io.to_document(42)


def test_pretty_output_is_valid_json():
    text = io.dumps(DOCS["sym3_circ"], pretty=True)
    obj = json.loads(text)
    assert obj["schemaVersion"] == "1" and obj["kind"] == "weak-brace"
    assert len(text.splitlines()) > 12  # one table row per line
