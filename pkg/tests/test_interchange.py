import json

import pytest
from hypothesis import given, strategies as st

from coalglab.coalgebra import Subspace, check_coalgebra, kronecker_quiver, path_coalgebra, single_arrow, two_cycle
from coalglab.comodule import Comodule, DimensionVector, check_comodule
from coalglab.corpus import group_coalgebra_twisted
from coalglab.embeddings import NilpotentFreeModule, QuiverRep
from coalglab.errors import InputError
from coalglab.exactlin import GF, QQ
from coalglab.interchange import (VERSION, canonicalize, detect_kind, dumps, from_doc, load, loads, to_doc)


def objects():
    c = path_coalgebra(two_cycle(), 2)
    return [
        c,
        group_coalgebra_twisted(QQ),
        path_coalgebra(single_arrow(), 1, GF(5)),
        Comodule.regular(c),
        kronecker_quiver(3),
        DimensionVector.of(a=2, b=1),
        c.span_labels("a", "alpha"),
        NilpotentFreeModule(GF(3), 2, [[[0, 1], [0, 0]]]),
        QuiverRep(kronecker_quiver(2), QQ, {"a": 1, "b": 2}, {"x0": [["1/2", 0]], "x1": [[0, -3]]}),
    ]


@pytest.mark.parametrize("obj", objects(), ids=lambda o: type(o).__name__)
def test_round_trip_is_byte_identical(obj):
    text = dumps(to_doc(obj))
    again = dumps(to_doc(loads(text)))
    assert again == text
    assert canonicalize(text) == text


def test_round_trip_preserves_structure():
    c = path_coalgebra(two_cycle(), 2)
    assert loads(dumps(to_doc(c))) == c
    m = loads(dumps(to_doc(Comodule.regular(c))))
    assert check_comodule(m) and m.rho == Comodule.regular(c).rho


def test_rationals_are_reduced():
    doc = {"version": VERSION, "field": "Q", "basis": ["g"], "delta": [[0, 0, 0, "2/2"]], "counit": ["2/4"]}
    out = json.loads(canonicalize(json.dumps(doc)))
    assert out["counit"] == ["1/2"]
    assert out["delta"] == [[0, 0, 0, "1"]]


def test_finite_field_scalars_are_reduced():
    doc = {"version": VERSION, "field": "GF:3", "basis": ["g"], "delta": [[0, 0, 0, "4"]], "counit": ["-2"]}
    out = json.loads(canonicalize(json.dumps(doc)))
    assert out["delta"][0][3] == "1" and out["counit"] == ["1"]


def test_bad_version():
    doc = {"version": "coalglab/0", "field": "Q", "basis": [], "delta": [], "counit": []}
    with pytest.raises(InputError, match="version"):
        from_doc(doc)


def test_schema_error_names_the_path():
    doc = {"version": VERSION, "field": "Q", "basis": ["g"], "delta": [[0, 0, 0, "x"]], "counit": ["1"]}
    with pytest.raises(InputError, match=r"\$\.delta\[0\]"):
        from_doc(doc)


def test_json_syntax_error_has_location():
    with pytest.raises(InputError, match=r"<input>:1:\d+"):
        loads('{"version": ')


def test_non_coassociative_document_loads_but_fails_check():
    # Delta(x) = x (x) x + x (x) y
    doc = {"version": VERSION, "field": "Q", "basis": ["x", "y"],
           "delta": [[0, 0, 0, "1"], [0, 0, 1, "1"], [1, 1, 1, "1"]], "counit": ["1", "1"]}
    c = from_doc(doc)
    rep = check_coalgebra(c)
    assert not rep and rep.violations


def test_index_out_of_range():
    doc = {"version": VERSION, "field": "Q", "basis": ["g"], "delta": [[0, 3, 0, "1"]], "counit": ["1"]}
    with pytest.raises(InputError, match="delta"):
        from_doc(doc)


def test_comodule_references_coalgebra_file(tmp_path):
    c = path_coalgebra(single_arrow(), 1)
    (tmp_path / "c.json").write_text(dumps(to_doc(c)))
    m = Comodule.simple(c, "b")
    doc = to_doc(m)
    doc["coalgebra"] = "c.json"
    (tmp_path / "m.json").write_text(dumps(doc))
    back = load(tmp_path / "m.json")
    assert back.coalgebra == c and back.rho == m.rho


def test_missing_file():
    with pytest.raises(InputError, match="cannot read"):
        load("/nonexistent/coalgebra.json")


def test_kind_detection():
    assert detect_kind(to_doc(kronecker_quiver(2))) == "quiver"
    assert detect_kind({"version": VERSION, "kind": "report"}) == "report"
    with pytest.raises(InputError):
        detect_kind({"version": VERSION, "mystery": 1})


@given(st.lists(st.fractions(max_denominator=30), min_size=1, max_size=4))
def test_subspace_round_trip(vec):
    v = Subspace.span(QQ, len(vec), [vec])
    assert loads(dumps(to_doc(v))) == v
