import json

import pytest

from leibniz_levi.errors import FormatError
from leibniz_levi.fileformat import (algebra_to_dict, load_algebra, parse_algebra, parse_map,
                                     render_algebra, render_map, save_algebra)

GOOD = {"name": "tiny", "dim": 2, "basis": ["a", "b"],
        "products": [{"left": "a", "right": "a", "result": [["1/2", "b"]]}]}


def doc(**changes):
    d = json.loads(json.dumps(GOOD))
    d.update(changes)
    return json.dumps(d)


def test_round_trip_corpus(fixtures, tmp_path):
    for A in fixtures.values():
        B = parse_algebra(render_algebra(A))
        assert B == A
        save_algebra(A, tmp_path / "a.json")
        assert load_algebra(tmp_path / "a.json") == A


def test_entry_counts(fixtures):
    # 9 antisymmetric pairs in both orders plus 9 one-sided rows
    assert len(algebra_to_dict(fixtures["example_3_9"])["products"]) == 27
    prods = algebra_to_dict(fixtures["L201"])["products"]
    assert {"left": "y1", "right": "y2", "result": [["1", "y1"]]} in prods
    assert {"left": "y2", "right": "y1", "result": [["-1", "y1"]]} in prods


def test_parse_values():
    A = parse_algebra(doc())
    assert A.product(0, 0) == (0, 0.5)
    assert A.name == "tiny"


@pytest.mark.parametrize("text,needle", [
    ("{", "not valid JSON"),
    (doc(dim=3), "basis"),
    (doc(basis=["a", "a"]), "duplicate"),
    (doc(dim=-1), "dim"),
    (doc(dim="2"), "dim"),
    (doc(products=[{"left": "a", "right": "c", "result": []}]), "unknown basis name 'c'"),
    (doc(products=[{"left": "a", "right": "a", "result": [["1/0", "b"]]}]), "zero denominator"),
    (doc(products=[{"left": "a", "right": "a", "result": [["x", "b"]]}]), "malformed rational"),
    (doc(products=[{"left": "a", "right": "a", "result": [[0.5, "b"]]}]), "rational string"),
    (doc(products=[{"left": "a", "right": "a", "result": []}] * 2), "duplicate entry"),
    (doc(products=[{"left": "a", "right": "a"}]), "products[0]"),
    (json.dumps({"dim": 0, "basis": []}), "products"),
])
def test_rejections(text, needle):
    with pytest.raises(FormatError) as exc:
        parse_algebra(text)
    assert needle in str(exc.value)


def test_max_dim(monkeypatch):
    monkeypatch.setenv("MAX_DIM", "1")
    with pytest.raises(FormatError, match="MAX_DIM"):
        parse_algebra(doc())


def test_missing_file(tmp_path):
    with pytest.raises(FormatError, match="cannot read"):
        load_algebra(tmp_path / "nope.json")


def test_map_round_trip(l201):
    pairs = [(l201.e("e"), l201.vector({"x0": 2})), (l201.e("f"), l201.vector({"x2": "1/3"}))]
    assert parse_map(render_map(l201, pairs), l201) == pairs
    with pytest.raises(FormatError, match="map"):
        parse_map('{"maps": []}', l201)
    with pytest.raises(FormatError, match="unknown basis"):
        parse_map('{"map": [{"from": [["1", "q"]], "to": []}]}', l201)
