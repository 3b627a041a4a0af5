import json

import pytest

from fuscat import catalog
from fuscat.category_data import validate_fusion_ring
from fuscat.errors import ParseError, SemanticError, UnsupportedConfigurationError
from fuscat.fact_homology import CLOSED, CYLINDER
from fuscat.io import (
    parse_category_file,
    parse_class,
    parse_surface_spec,
    resolve_embedding,
    serialize_category,
)

from conftest import CATALOG_IDS


def _doc(**over):
    doc = {"name": "T", "simples": ["1", "x"], "unit": "1", "fusion": [["1", "1", "1", 1], ["1", "x", "x", 1], ["x", "1", "x", 1], ["x", "x", "1", 1]]}
    doc.update(over)
    return json.dumps(doc)


@pytest.mark.parametrize("cid", CATALOG_IDS)
def test_round_trip_byte_canonical(cid):
    text = catalog.get_entry(cid).category_file
    assert serialize_category(parse_category_file(text)) == text


def test_round_trip_canonicalizes_order():
    doc = json.loads(_doc())
    doc["fusion"].reverse()
    text = json.dumps(doc)
    canon = serialize_category(parse_category_file(text))
    assert canon != text
    assert serialize_category(parse_category_file(canon)) == canon
    assert parse_category_file(canon).ring == parse_category_file(text).ring


def test_fibonacci_file_valid():
    cat = parse_category_file(catalog.get_entry("fibonacci").category_file)
    assert cat.ring.n == 2 and validate_fusion_ring(cat.ring).ok


def test_empty_fusion_one_simple():
    cat = parse_category_file(json.dumps({"name": "V", "simples": ["1"], "unit": "1", "fusion": []}))
    assert cat.ring.n == 1 and cat.ring.tensor.sum() == 0
    # the file is parsed as given; the unit law is the validator's business
    assert not validate_fusion_ring(cat.ring).ok


def test_negative_multiplicity():
    doc = json.loads(_doc())
    doc["fusion"][2][3] = -1
    with pytest.raises(SemanticError, match=r"negative multiplicity at fusion\[2\]"):
        parse_category_file(json.dumps(doc))


def test_syntax_error_has_position():
    with pytest.raises(ParseError) as exc:
        parse_category_file('{\n  "name": "x",\n  "simples": [1,,]\n}')
    assert exc.value.line == 3 and exc.value.column is not None
    with pytest.raises(ParseError):
        parse_category_file(b"\xff\xfe")


@pytest.mark.parametrize(
    "over,path",
    [
        ({"unit": "z"}, "unit"),
        ({"fusion": [["1", "y", "1", 1]]}, "fusion[0][1]"),
        ({"fusion": [["1", "1", "1", 1], ["1", "1", "1", 1]]}, "fusion[1]"),
        ({"fusion": [["1", "1", "1"]]}, "fusion[0]"),
        ({"simples": ["1", "1"]}, "simples[1]"),
        ({"twists": {"1": [1, 0], "x": [2, 0]}}, "twists.x"),
        ({"twists": {"1": [1, 0]}}, "twists.x"),
        ({"base": {"category": "Vec", "embedding": {"1": "q"}}}, "base.embedding.1"),
        ({"bogus": 1}, "bogus"),
    ],
)
def test_semantic_errors_carry_path(over, path):
    with pytest.raises(SemanticError) as exc:
        parse_category_file(_doc(**over))
    assert exc.value.path == path


def test_twist_modulus_tolerance():
    ok = _doc(twists={"1": [1, 0], "x": [1 + 5e-7, 0]})
    assert parse_category_file(ok).ribbon is not None


def test_class_grammar(ising):
    R = ising.ring
    assert parse_class(R, "sigma,sigma").to_dict() == {"1": 1, "eps": 1}
    assert parse_class(R, "2*sigma").to_dict() == {"sigma": 2}
    assert parse_class(R, "3*1+eps").to_dict() == {"1": 3, "eps": 1}
    assert parse_class(R, ["sigma", "2*eps"]).to_dict() == {"sigma": 2}
    assert parse_class(R, {"eps": 2}).to_dict() == {"eps": 2}
    for bad in ["tau", "0*sigma", "*sigma", "", {"eps": -1}, 5]:
        with pytest.raises(SemanticError):
            parse_class(R, bad)


def test_surface_examples(ising):
    R = ising.ring
    s = parse_surface_spec('{"variant":"closed","genus":1,"defects":[]}', R)
    assert (s.variant, s.genus, s.defects) == (CLOSED, 1, ())
    s = parse_surface_spec('{"variant":"closed","genus":0,"defects":[["sigma"],["sigma"]]}', R)
    assert [d.to_dict() for d in s.defects] == [{"sigma": 1}] * 2
    s = parse_surface_spec('{"variant":"cylinder","defect_fpdim":4}', R)
    assert s.variant == CYLINDER and s.defect_fpdim == 4
    s = parse_surface_spec('{"genus":2,"handle":"3*1+eps"}', R)
    assert s.handle_override.to_dict() == {"1": 3, "eps": 1}


def test_surface_errors(ising):
    R = ising.ring
    with pytest.raises(SemanticError, match="nonnegative"):
        parse_surface_spec('{"genus":-1}', R)
    with pytest.raises(UnsupportedConfigurationError):
        parse_surface_spec('{"variant":"torus-network"}', R)
    with pytest.raises(UnsupportedConfigurationError):
        parse_surface_spec('{"variant":"closed","lines":[["M"]]}', R)
    with pytest.raises(SemanticError):
        parse_surface_spec('{"variant":"cylinder","defect_fpdim":4,"defects":[["sigma"]]}', R)
    with pytest.raises(SemanticError) as exc:
        parse_surface_spec('{"defects":[["nope"]]}', R)
    assert exc.value.path == "defects[0]"
    with pytest.raises(ParseError):
        parse_surface_spec("{genus: 1}", R)


def test_resolve_embedding(ising):
    rep = catalog.load("rep_z2")
    target = catalog.load("rep_z2_over_rep_z2")
    emb = resolve_embedding(target, rep)
    assert emb.map == (0, 1)
    vec = catalog.load("trivial")
    assert resolve_embedding(catalog.load("ising"), vec).map == (0,)
    with pytest.raises(SemanticError):
        resolve_embedding(catalog.load("ising"), rep)
    with pytest.raises(SemanticError, match="declared over"):
        resolve_embedding(target, catalog.load("svec"))
