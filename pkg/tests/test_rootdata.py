""" Unit test cases for root data, lattice involutions, restricted roots and
    the weight tests.
"""
from fractions import Fraction

import pytest
from qsympairs.errors import ArgumentError, ValidationError
from qsympairs.rootdata import (
    cartan_init,
    cartan_matrix,
    fixed_lattice_basis,
    flocal_torus_test,
    identify_cartan,
    kostant_partitions,
    parse_label,
    restricted_roots,
    satake_permutation,
    spherical_weight_test,
    theta_lattice,
)

HALF = Fraction(1, 2)


@pytest.fixture
def a2_datum():
    return cartan_init("A2")

@pytest.fixture
def a2_flip_theta(a2_datum):
    return theta_lattice(a2_datum, [], (1, 0))

@pytest.fixture
def a2_split_theta(a2_datum):
    return theta_lattice(a2_datum, [], (0, 1))


def test_cartan_matrices():
    assert cartan_matrix("A", 2) == ((2, -1), (-1, 2))
    assert cartan_matrix("B", 2) == ((2, -1), (-2, 2))
    assert cartan_matrix("G", 2) == ((2, -3), (-1, 2))

def test_no_finite_type():
    with pytest.raises(ValidationError):
        cartan_matrix("E", 5)
    with pytest.raises(ValidationError):
        cartan_matrix("B", 1)

def test_parse_label():
    assert parse_label("A1xA1") == [("A", 1), ("A", 1)]
    assert parse_label("B2+A1") == [("B", 2), ("A", 1)]
    with pytest.raises(ValidationError):
        parse_label("Q3")

def test_positive_root_counts():
    assert len(cartan_init("A2").positive_roots) == 3
    assert len(cartan_init("B2").positive_roots) == 4
    assert len(cartan_init("G2").positive_roots) == 6
    assert len(cartan_init("D4").positive_roots) == 12
    assert len(cartan_init("A1xA1").positive_roots) == 2

def test_matrix_identification():
    assert cartan_init([[2, -1], [-1, 2]]).label == "A2"
    assert cartan_init([[2, -2], [-1, 2]]).label == "B2"
    assert identify_cartan(((2, 0), (0, 2))) == "A1xA1"

def test_invalid_cartan_matrices():
    with pytest.raises(ValidationError):
        cartan_init([[2, 1], [1, 2]])
    with pytest.raises(ValidationError):
        cartan_init([[2, -1], [0, 2]])
    with pytest.raises(ValidationError):
        cartan_init([[2, -2], [-2, 2]])
    with pytest.raises(ValidationError):
        cartan_init([[3]])

def test_symmetrized_form():
    b2 = cartan_init("B2")
    assert b2.lengths == (4, 2)
    assert b2.d(0) == 2 and b2.d(1) == 1
    assert b2.inner((1, 0), (0, 1)) == -2
    assert b2.inner((1, 1), (1, 1)) == 2

def test_weight_coordinates(a2_datum):
    assert a2_datum.weight_to_root((1, 0)) == (Fraction(2, 3), Fraction(1, 3))
    assert a2_datum.root_to_weight((1, 1)) == (1, 1)
    assert a2_datum.rho() == (1, 1)
    assert a2_datum.longest_image(a2_datum.fundamental_weight(0)) == (
        Fraction(-1, 3), Fraction(-2, 3)
    )

def test_dominance_and_weights(a2_datum):
    assert a2_datum.is_dominant_integral((1, 1))
    assert not a2_datum.is_dominant_integral((1, 0))
    assert a2_datum.is_weight_of((1, 1), (0, 0))
    assert a2_datum.is_weight_of((1, 1), (-1, -1))
    assert not a2_datum.is_weight_of((1, 1), (2, 0))

def test_diagram_automorphisms(a2_datum):
    assert a2_datum.flip() == (1, 0)
    assert len(cartan_init("D4").diagram_automorphisms()) == 6
    with pytest.raises(ValidationError):
        cartan_init("A1").flip()
    with pytest.raises(ValidationError):
        cartan_init("D4").flip()

def test_parabolic_longest_word(a2_datum):
    assert len(a2_datum.parabolic_longest_word([0, 1])) == 3
    assert a2_datum.parabolic_longest_word([0]) == (0,)

def test_theta_of_the_flip(a2_flip_theta):
    assert a2_flip_theta.to_list() == [[0, -1], [-1, 0]]
    assert a2_flip_theta.is_involution()
    assert fixed_lattice_basis(a2_flip_theta) == [(1, -1)]

def test_theta_with_fixed_root(a2_datum):
    theta = theta_lattice(a2_datum, [0], (0, 1))
    assert theta.apply((1, 0)) == (1, 0)
    assert theta.apply((0, 1)) == (-1, -1)

def test_theta_rejects_incompatible_d(a2_datum):
    with pytest.raises(ValidationError):
        theta_lattice(a2_datum, [0], (1, 0))
    with pytest.raises(ValidationError):
        theta_lattice(cartan_init("B2"), [], (1, 0))

def test_satake_permutation(a2_datum, a2_flip_theta, a2_split_theta):
    assert satake_permutation(a2_datum, a2_flip_theta) == {0: 1, 1: 0}
    assert satake_permutation(a2_datum, a2_split_theta) == {0: 0, 1: 1}

def test_restricted_roots_split(a2_datum, a2_split_theta):
    system = restricted_roots(a2_datum, a2_split_theta)
    assert system.labels == ["A2"]
    assert system.is_reduced
    assert set(system.multiplicities.values()) == {1}
    assert system.variation_pairs == ()

def test_restricted_roots_flip(a2_datum, a2_flip_theta):
    system = restricted_roots(a2_datum, a2_flip_theta)
    assert system.labels == ["BC1"]
    assert not system.is_reduced
    assert system.multiplicities == {(HALF, HALF): 2, (1, 1): 1}
    assert system.variation_pairs == ((0, 1),)

def test_restricted_roots_diagonal():
    datum = cartan_init("A1xA1")
    system = restricted_roots(datum, theta_lattice(datum, [], (1, 0)))
    assert system.labels == ["A1"]
    assert system.multiplicities == {(HALF, HALF): 2}
    assert system.variation_pairs == ()

def test_spherical_weights_split(a2_datum, a2_split_theta):
    assert spherical_weight_test((Fraction(4, 3), Fraction(2, 3)), a2_datum, a2_split_theta)
    assert spherical_weight_test((2, 2), a2_datum, a2_split_theta)
    assert not spherical_weight_test((Fraction(2, 3), Fraction(1, 3)), a2_datum, a2_split_theta)
    assert not spherical_weight_test((1, 1), a2_datum, a2_split_theta)

def test_spherical_weights_flip(a2_datum, a2_flip_theta):
    assert spherical_weight_test((1, 1), a2_datum, a2_flip_theta)
    assert not spherical_weight_test((Fraction(2, 3), Fraction(1, 3)), a2_datum, a2_flip_theta)

def test_spherical_needs_dominant(a2_datum, a2_split_theta):
    with pytest.raises(ArgumentError):
        spherical_weight_test((1, 0), a2_datum, a2_split_theta)

def test_flocal_torus():
    a1 = cartan_init("A1")
    assert flocal_torus_test((-1,), a1)
    assert flocal_torus_test((-2,), a1)
    assert flocal_torus_test((0,), a1)
    assert not flocal_torus_test((1,), a1)
    assert not flocal_torus_test((-HALF,), a1)

@pytest.mark.parametrize("k", range(-4, 5))
def test_flocal_torus_multiples(k):
    assert flocal_torus_test((k,), cartan_init("A1")) == (k <= 0)

def test_kostant_partitions(a2_datum):
    assert kostant_partitions((1, 1), a2_datum) == 2
    assert kostant_partitions((2, 1), a2_datum) == 2
    assert kostant_partitions((2, 2), a2_datum) == 3
    assert kostant_partitions((1, 2), cartan_init("B2")) == 3
    with pytest.raises(ArgumentError):
        kostant_partitions((-1, 0), a2_datum)
