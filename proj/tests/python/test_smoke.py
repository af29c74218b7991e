import json

import pytest

import nowicki


def test_normalize_word():
    assert nowicki.normalize("x2*x1", "meta", 2) == "x1*x2 + [x2,x1]"
    assert nowicki.normalize("[x2,x1]*[x4,x3]", "meta", 2) == "0"


def test_derive_and_constants():
    assert nowicki.derive("x2", "comm", 1) == "x1"
    assert nowicki.is_constant("x1*x4 - x2*x3", "comm", 2)
    assert not nowicki.is_constant("x2", "comm", 2)
    assert nowicki.derive("y1^2", "grass", 1) == "2*x1*y1 - [x1,y1]"


def test_kernel_dimensions():
    assert sum(len(c["basis"]) for c in nowicki.kernel("comm", 2, 2)) == 4
    assert sum(len(c["basis"]) for c in nowicki.kernel("meta", 2, 2)) == 8
    assert sum(len(c["basis"]) for c in nowicki.kernel("grass", 1, 4)) == 2
    assert nowicki.kernel_dimension("comm", 2, [1, 1], 1) == 1


def test_span_certificates():
    assert all(r["ok"] for r in nowicki.span_check("comm", 2, 4))
    assert all(r["ok"] for r in nowicki.span_check("grass", 2, 4))
    literal = nowicki.span_check("grass", 2, 4, ranges="literal")
    assert {tuple(r["key"][0]) + (r["key"][1],) for r in literal if not r["ok"]} == {(2, 2, 2), (1, 3, 2)}


def test_embedding_round_trip():
    image = nowicki.embed("[x2,x1]", 2)
    assert nowicki.pullback(image, 2) == "[x2,x1]"
    with pytest.raises(ValueError):
        nowicki.pullback("a1", 2)


def test_json_round_trip():
    doc = nowicki.to_json("1/2*x1 + [x2,x1]", "meta", 1)
    assert json.loads(doc)["algebra"] == "meta"
    assert nowicki.from_json(doc) == ("meta", 1, "1/2*x1 + [x2,x1]")


def test_straighten():
    assert sorted(nowicki.straighten("alpha(1,3)*alpha(2,4)", 4)) == [
        ("1", "alpha(1,2)*alpha(3,4)"),
        ("1", "alpha(1,4)*alpha(2,3)"),
    ]


def test_generators_and_relations():
    assert nowicki.nowicki_generators(2) == ["x1", "x3", "x1*x4 - x2*x3"]
    names = dict(nowicki.module_generators(2))
    assert names["g1(1)"] == "[x1,x2]"
    assert len(nowicki.grassmann_generators(2)) == 26
    assert all(r["failures"] == 0 for r in nowicki.verify("relations", 3))


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        nowicki.normalize("x1 +", "comm", 2)
    with pytest.raises(ValueError):
        nowicki.kernel("nope", 2, 1)
