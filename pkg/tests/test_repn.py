""" Unit test cases for simple modules, invariants, real form scalings and
    the unitarity checks.
"""
from fractions import Fraction
from itertools import product

import pytest
from qsympairs import api
from qsympairs.errors import ArgumentError, ResourceError
from qsympairs.qfield import ONE, Q
from qsympairs.repn import (
    find_real_form_scaling,
    invariants,
    rescale,
    shapovalov_positivity,
    simple_module,
    spherical_check,
)


@pytest.fixture(scope="module")
def adjoint_a1(a1):
    return simple_module(a1, (1,))


def test_simple_module_dimension(adjoint_a1):
    assert adjoint_a1.dimension == 3
    assert adjoint_a1.weights() == {(1,): 1, (0,): 1, (-1,): 1}
    assert adjoint_a1.to_dict()["fundamental"] == ["2"]

def test_fundamental_module_a2(a2):
    module = simple_module(a2, a2.datum.fundamental_weight(0))
    assert module.dimension == 3
    assert module.verify_relations() == []

def test_module_relations_hold(adjoint_a1):
    assert adjoint_a1.verify_relations() == []

def test_contravariant_form(adjoint_a1):
    gram = adjoint_a1.gram().to_list()
    assert gram[0][0] == ONE
    assert gram[1][1] == ONE / Q + ONE / Q ** 3
    assert adjoint_a1.gram() == adjoint_a1.gram().transpose()

def test_positivity(adjoint_a1):
    report = shapovalov_positivity(adjoint_a1)
    assert report.passed
    assert len(report.spaces) == 3

@pytest.mark.parametrize("m", range(7))
def test_positivity_split_a1(a1, m):
    module = simple_module(a1, a1.datum.weight_to_root((m,)))
    assert module.dimension == m + 1
    assert shapovalov_positivity(module).passed

def test_module_arguments(a1):
    with pytest.raises(ArgumentError):
        simple_module(a1, (-1,))
    with pytest.raises(ArgumentError):
        simple_module(a1, (Fraction(1, 3),))
    with pytest.raises(ResourceError):
        simple_module(a1, (1,), budget=1)

def test_invariants_split_a1(a1, a1split, adjoint_a1):
    assert invariants(adjoint_a1, a1split).dimension == 1
    assert invariants(simple_module(a1, (Fraction(1, 2),)), a1split).dimension == 0

def test_spherical_check(a1, a1split, adjoint_a1):
    report = spherical_check(adjoint_a1, a1split)
    assert report.spherical
    assert report.passed
    report = spherical_check(simple_module(a1, (Fraction(1, 2),)), a1split)
    assert not report.spherical
    assert report.passed

def test_spherical_split_a2(a2, a2split):
    report = api.spherical(a2split, a2.datum.weight_to_root((2, 0)))
    assert report.spherical
    assert report.passed
    assert not api.spherical(a2split, a2.datum.fundamental_weight(0)).spherical

@pytest.mark.parametrize("m", range(9))
def test_spherical_classification_a1(a1, a1split, m):
    report = api.spherical(a1split, a1.datum.weight_to_root((m,)))
    assert report.dimension == (1 if m % 2 == 0 else 0)
    assert report.passed

@pytest.mark.parametrize("m1, m2", list(product(range(3), repeat=2)))
def test_spherical_classification_a2(a2, a2split, m1, m2):
    report = api.spherical(a2split, a2.datum.weight_to_root((m1, m2)))
    assert report.dimension == (1 if m1 % 2 == 0 and m2 % 2 == 0 else 0)
    assert report.passed

def test_rescale(a1):
    assert rescale(a1.x(0), {0: 2}) == a1.x(0) * Q
    assert rescale(a1.y(0) * a1.t(0), {0: 2}) == a1.y(0) * a1.t(0) * (ONE / Q)
    assert rescale(a1.t(0), {0: 2}) == a1.t(0)

def test_real_form_scaling(a1split):
    scaling = find_real_form_scaling(a1split)
    assert scaling.found
    assert scaling.exponents == {0: 2}
    assert scaling.partners == {0: 0}
    assert scaling.to_dict()["scalars"] == {"1": "q"}

def test_unitarity_split_a1(a1split):
    scaling, unitary, witness = api.unitarity(a1split, (1,))
    assert scaling.found
    assert unitary.passed
    assert witness.passed
    assert witness.invariant_dimension == 1
    assert witness.complement_dimension == 2
