""" Unit test cases for the classical oracles at q = 1.
"""
from fractions import Fraction

import pytest
from sympy import diag, zeros
from qsympairs.classical import (
    ChevalleyAlgebra,
    ClassicalReport,
    bracket,
    bracket_sequence,
    bracket_sign,
    chevalley_init,
    involution_oracle,
    weyl_dimension,
)
from qsympairs.errors import ValidationError
from qsympairs.rootdata import cartan_init


@pytest.fixture
def sl3():
    return ChevalleyAlgebra("A2")


def test_weyl_dimension_a2():
    assert weyl_dimension("A2", (Fraction(2, 3), Fraction(1, 3))) == 3
    assert weyl_dimension("A2", (1, 1)) == 8
    assert weyl_dimension("A2", (0, 0)) == 1

def test_weyl_dimension_b2():
    datum = cartan_init("B2")
    assert weyl_dimension(datum, datum.fundamental_weight(0)) == 5
    assert weyl_dimension(datum, datum.fundamental_weight(1)) == 4

def test_matrix_sizes(sl3):
    assert sl3.size == 3
    assert ChevalleyAlgebra("B2").size == 5
    assert ChevalleyAlgebra("A1xA1").size == 4

def test_cartan_relations(sl3):
    assert sl3.h[0] == diag(1, -1, 0)
    assert bracket(sl3.h[0], sl3.e[1]) == -sl3.e[1]

def test_root_vectors(sl3):
    highest = zeros(3, 3)
    highest[0, 2] = 1
    assert sl3.root_vector((1, 1)) == highest
    assert sl3.root_vector((-1, -1)) == -highest.T
    assert sl3.coroot((1, 1)) == diag(1, 0, -1)
    with pytest.raises(ValidationError):
        sl3.root_vector((1, -1))

def test_combination(sl3):
    assert sl3.combination([(1, (0,)), (2, (1,))]) == sl3.e[0] + 2 * sl3.e[1]
    assert sl3.combination([(1, (0, 1))]) == sl3.e_word((0, 1))

def test_bracket_sequence_and_sign(sl3):
    value = bracket_sequence(sl3, ((1, 1),), 0)
    assert value == -sl3.root_vector((1, 1))
    assert bracket_sign(sl3.root_vector((1, 1)), value) == -1
    assert bracket_sign(value, value) == 1
    assert bracket_sign(sl3.e[0], sl3.e[1]) is None
    assert bracket_sign(sl3.e[0], zeros(3, 3)) is None

def test_no_matrix_model():
    assert chevalley_init("G2") is None
    assert chevalley_init("A2") is not None

def test_unavailable_oracle_passes():
    report = involution_oracle(None, None, {}, {})
    assert not report.available
    assert report.passed
    assert report.to_dict() == {"available": False}
    assert ClassicalReport(available=True, involutive=False).passed
