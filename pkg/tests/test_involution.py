""" Unit test cases for Satake data validation and the quantum lift of Theta.
"""
import pytest
from qsympairs.errors import ArgumentError, ValidationError
from qsympairs.involution import (
    admissible_sequence,
    theta_tilde_torus,
    theta_tilde_y,
    validate_satake,
)
from qsympairs.uq import weight


@pytest.fixture
def a3flip():
    return validate_satake("A3", [1], (2, 1, 0))


def test_split_data():
    data = validate_satake("A2", [], (0, 1))
    assert data.p == {0: 0, 1: 1}
    assert data.pi_star == (0, 1)
    assert data.sequences == {0: (), 1: ()}
    assert data.is_involutive

def test_flip_data():
    data = validate_satake("A2", [], (1, 0))
    assert data.p == {0: 1, 1: 0}
    assert data.pi_star == (0,)
    assert data.partner(1) == 0
    assert data.outside() == (0, 1)

def test_sequence_through_fixed_root(a3flip):
    assert a3flip.pi_theta == (1,)
    assert a3flip.p == {0: 2, 2: 0}
    assert a3flip.sequences[0] == ((1, 1),)
    assert a3flip.m(0) == 1
    assert a3flip.is_involutive
    assert admissible_sequence(a3flip, 0) == ((1,), (1,))

def test_odd_sequence_is_flagged():
    data = validate_satake("A2", [0], (0, 1))
    assert data.p == {1: 1}
    assert data.m(1) == 1
    assert data.odd == (1,)
    assert not data.is_involutive
    assert data.to_dict()["involutive"] is False

def test_admissible_sequence_outside_pi_star(a3flip):
    with pytest.raises(ArgumentError):
        admissible_sequence(a3flip, 2)
    with pytest.raises(ArgumentError):
        admissible_sequence(a3flip, 1)

def test_invalid_satake_data():
    with pytest.raises(ValidationError):
        validate_satake("A2", [0], (1, 0))
    with pytest.raises(ValidationError):
        validate_satake("A2", [0, 1], (0, 1))
    with pytest.raises(ValidationError):
        validate_satake("A2", [3], (0, 1))

def test_to_dict_is_one_based(a3flip):
    report = a3flip.to_dict()
    assert report["pi_theta"] == [2]
    assert report["d"] == [3, 2, 1]
    assert report["p"] == {"1": 3, "3": 1}
    assert report["sequences"]["1"] == {"indices": [2], "powers": [1], "m": 1}

def test_lift_of_y_split(a1):
    data = validate_satake("A1", [], (0,))
    assert theta_tilde_y(data, a1, 0) == a1.t(0, -1) * a1.x(0)

def test_lift_of_y_flip(a2):
    data = validate_satake("A2", [], (1, 0))
    assert theta_tilde_y(data, a2, 0) == a2.t(1, -1) * a2.x(1)
    assert theta_tilde_y(data, a2, 1) == a2.t(0, -1) * a2.x(0)

def test_lift_of_y_has_theta_weight(a2):
    data = validate_satake("A2", [0], (0, 1))
    image = theta_tilde_y(data, a2, 1)
    assert weight(image) == (1, 1)
    with pytest.raises(ArgumentError):
        theta_tilde_y(data, a2, 0)

def test_lift_of_torus():
    data = validate_satake("A2", [], (1, 0))
    assert theta_tilde_torus(data, (1, 0)) == (0, 1)
