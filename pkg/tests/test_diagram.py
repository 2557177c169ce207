import json

import pytest

from effsq.classes import MorphismClass
from effsq.diagram import DiagramBuilder, DiagramError, load_fixture, parse_diagram, serialize_diagram
from effsq.errors import IllDefined, NotCommutative
from effsq.generate import GeneratorConfig, InstanceGenerator
from effsq.groups import free, identity

FIXTURES = ("fold_square", "span_2_3", "double", "cube", "near_miss_cube", "ill_defined")


def doc(**parts):
    base = {"version": "effsq/1", "groups": {"Z": {"generators": 1, "relations": []}},
            "homs": {"id": {"src": "Z", "dst": "Z", "matrix": [[1]]}}}
    base.update(parts)
    return json.dumps(base)


def test_minimal_document():
    d = parse_diagram(doc())
    assert d.hom("id") == identity(free(1))


@pytest.mark.parametrize("name", [f for f in FIXTURES if f != "ill_defined"])
def test_fixture_round_trip_is_byte_identical(name):
    text = load_fixture(name)
    assert serialize_diagram(parse_diagram(text)) == text


def test_ill_defined_hom_rejected():
    with pytest.raises(IllDefined) as info:
        parse_diagram(load_fixture("ill_defined"))
    assert "$.homs." in str(info.value)


def test_schema_errors_carry_a_path():
    bad = json.loads(doc())
    bad["groups"]["Z"]["generators"] = "one"
    with pytest.raises(DiagramError) as info:
        parse_diagram(json.dumps(bad))
    assert info.value.path == "$.groups.Z.generators"


def test_unknown_references():
    with pytest.raises(DiagramError) as info:
        parse_diagram(doc(homs={"h": {"src": "Q", "dst": "Z", "matrix": [[1]]}}))
    assert info.value.path == "$.homs.h.src"
    with pytest.raises(DiagramError) as info:
        parse_diagram(doc(squares={"s": {"f": "id", "g": "id", "h": "id", "k": "nope"}}))
    assert info.value.path == "$.squares.s.k"


def test_non_commuting_square_named():
    homs = {"id": {"src": "Z", "dst": "Z", "matrix": [[1]]}, "two": {"src": "Z", "dst": "Z", "matrix": [[2]]}}
    with pytest.raises(NotCommutative) as info:
        parse_diagram(doc(homs=homs, squares={"s": {"f": "id", "g": "two", "h": "id", "k": "id"}}))
    assert "$.squares.s" in str(info.value) and "h.f != k.g" in str(info.value)


def test_malformed_json_positioned():
    with pytest.raises(DiagramError) as info:
        parse_diagram('{"version": ')
    assert info.value.path.startswith("line 1 column")


def test_wrong_shape_matrix():
    with pytest.raises(DiagramError) as info:
        parse_diagram(doc(homs={"h": {"src": "Z", "dst": "Z", "matrix": [[1, 2]]}}))
    assert info.value.path == "$.homs.h.matrix"


@pytest.mark.parametrize("seed", range(10))
def test_builder_round_trip(seed):
    gen = InstanceGenerator(GeneratorConfig(seed=seed))
    b = DiagramBuilder("mono")
    b.square(gen.square(MorphismClass.MONO))
    b.cube(gen.cube(MorphismClass.MONO))
    text = serialize_diagram(b.doc)
    back = parse_diagram(text)
    assert serialize_diagram(back) == text
    assert back.square("square") == b.doc.square("square")
    assert back.cube("cube") == b.doc.cube("cube")
