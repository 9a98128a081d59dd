""" Unit test cases for the high level api: loading data from labels and
    descriptors, reading weights and running the certificate suites.
"""
from fractions import Fraction

import pytest
from qsympairs import api
from qsympairs.errors import ValidationError
from qsympairs.qfield import Q
from qsympairs.rootdata import cartan_init


@pytest.fixture
def a2_datum():
    return cartan_init("A2")


def test_datum_from_cartan(a2_datum):
    assert api.datum_from_cartan("A2") == a2_datum
    assert api.datum_from_cartan("[[2,-1],[-1,2]]") == a2_datum
    assert api.datum_from_cartan([[2, -1], [-1, 2]]) == a2_datum
    assert api.datum_from_cartan({"series": "A", "rank": 2}) == a2_datum
    assert api.datum_from_cartan({"matrix": [[2, -1], [-1, 2]]}) == a2_datum
    assert api.datum_from_cartan({"label": "A1xA1"}).rank == 2

def test_datum_from_cartan_errors():
    with pytest.raises(ValidationError):
        api.datum_from_cartan("[[2,-1],")
    with pytest.raises(ValidationError):
        api.datum_from_cartan({"rank": 2})
    with pytest.raises(ValidationError):
        api.datum_from_cartan(5)

def test_diagram_map(a2_datum):
    assert api.diagram_map(a2_datum, "id") == (0, 1)
    assert api.diagram_map(a2_datum, None) == (0, 1)
    assert api.diagram_map(a2_datum, "flip") == (1, 0)
    assert api.diagram_map(a2_datum, [2, 1]) == (1, 0)
    assert api.diagram_map(a2_datum, {"1": 2, "2": 1}) == (1, 0)
    with pytest.raises(ValidationError):
        api.diagram_map(a2_datum, 3)

def test_load_theta():
    descriptor, data = api.load_theta("P4")
    assert descriptor["name"] == "a2levi"
    assert data.pi_theta == (0,)
    assert data.p == {1: 1}

def test_load_theta_needs_cartan():
    with pytest.raises(ValidationError):
        api.load_theta({"name": "broken", "pi_theta": []})

def test_load_algebra_sources():
    with pytest.raises(ValidationError):
        api.load_algebra()
    with pytest.raises(ValidationError):
        api.load_algebra(cartan="A1", config="P1")
    assert api.load_algebra(config="P1", degree_bound=4).rank == 1

def test_shift_params():
    assert api.shift_params({"c": {"1": "q"}}) == {"c": {0: "q"}, "s": {}}
    assert api.shift_params({}) == {"c": {}, "s": {}}
    with pytest.raises(ValidationError):
        api.shift_params({"c": ["q"]})

def test_load_pair_with_params(a2, a2flip):
    pair = api.load_pair("P3", params='{"c": {"1": "q"}}', ctx=a2)
    assert pair.name == "a2flip"
    assert pair.c == {0: Q}
    assert pair.generators[1] == a2flip.generators[1]

def test_parse_weight(a2_datum):
    third = Fraction(1, 3)
    assert api.parse_weight("w:1,0", a2_datum) == (2 * third, third)
    assert api.parse_weight("r:1,1", a2_datum) == (1, 1)
    assert api.parse_weight("R: 1/2, 0", a2_datum) == (Fraction(1, 2), 0)

def test_parse_weight_errors(a2_datum):
    with pytest.raises(ValidationError):
        api.parse_weight("1,0", a2_datum)
    with pytest.raises(ValidationError):
        api.parse_weight("w:1", a2_datum)
    with pytest.raises(ValidationError):
        api.parse_weight("r:a,b", a2_datum)

def test_parse_vector():
    assert api.parse_vector("1,-1", 2) == (1, -1)
    assert api.parse_vector("r:0,2", 2) == (0, 2)
    with pytest.raises(ValidationError):
        api.parse_vector("1/2,0", 2)
    with pytest.raises(ValidationError):
        api.parse_vector("1", 2)

def test_parse_indices():
    assert api.parse_indices("1,2", 2) == (0, 1)
    assert api.parse_indices("", 2) == ()
    assert api.parse_indices(None, 2) == ()
    with pytest.raises(ValidationError):
        api.parse_indices("3", 2)
    with pytest.raises(ValidationError):
        api.parse_indices("a", 2)

def test_pair_report(a1split):
    report, summary = api.pair_report(a1split)
    assert report["name"] == "a1split"
    assert report["generators"] == {"B1": "y1 t1 + q^-2 * x1"}
    assert report["relations"] == []
    assert report["theta"]["involutive"] is True
    assert summary == [
        {"name": "coideal B1", "passed": True},
        {"name": "presentation relations", "passed": True},
    ]

def test_suites(a2split):
    assert len(api.coideal_certificates(a2split)) == 2
    assert len(api.serre_defects(a2split)) == 2
    assert len(api.support_checks(a2split)) == 2
