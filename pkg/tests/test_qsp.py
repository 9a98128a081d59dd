""" Unit test cases for quantum symmetric pair presentations: generators,
    coideal certificates, deformed Serre relations, specialization and the
    parabolic generators.
"""
import pytest
from qsympairs import api
from qsympairs.errors import ArgumentError, PoleError, ValidationError
from qsympairs.filtrations import tip
from qsympairs.qfield import ONE, Q
from qsympairs.qsp import (
    build_pair,
    classical_image,
    coideal_certificate,
    independence_check,
    nonstandard_S_set,
    parabolic_generator,
    parabolic_shape_check,
    presentation_relations,
    serre_defect,
    specialize_pair,
    support_check,
    variation_indices,
)

# The catalog pairs P1 to P5 as fixture names
CATALOG = ("a1split", "a2split", "a2flip", "a2levi", "a1a1flip")


def test_split_generator(a1, a1split):
    b, = a1split.generators
    assert b == a1.y(0) * a1.t(0) + a1.x(0) * (ONE / Q ** 2)
    assert str(b) == "y1 t1 + q^-2 * x1"
    assert a1split.torus_basis == ()

def test_flip_generators(a1a1, a1a1flip):
    b1, b2 = a1a1flip.generators
    assert b1 == a1a1.y(0) * a1a1.t(0) + a1a1.t(1, -1) * a1a1.x(1) * a1a1.t(0)
    assert a1a1flip.torus_basis == ((1, -1),)

def test_levi_generators(a2, a2levi):
    assert a2levi.levi == (0,)
    assert a2levi.generators[0] == a2.y(0) * a2.t(0)
    assert not a2levi.theta_data.is_involutive

def test_parameter_indices(a2split, a2flip, a2levi):
    assert variation_indices(a2flip.theta_data) == (0, 1)
    assert variation_indices(a2split.theta_data) == ()
    assert variation_indices(a2levi.theta_data) == ()
    assert nonstandard_S_set(a2split.theta_data) == ()

def test_one_parameter_family(a2, a2flip):
    pair = build_pair(a2flip.theta_data, a2, c={0: "q"})
    assert pair.c == {0: Q}
    assert pair.generators[0] - a2.y(0) * a2.t(0) == (
        (a2flip.generators[0] - a2.y(0) * a2.t(0)) * Q
    )

def test_parameter_validation(a2, a1, a1split, a2flip, a2split):
    with pytest.raises(ValidationError):
        build_pair(a2flip.theta_data, a2, c={0: "2"})
    with pytest.raises(ValidationError):
        build_pair(a2flip.theta_data, a2, c={0: "1/(q - 1)"})
    with pytest.raises(ValidationError):
        build_pair(a2split.theta_data, a2, c={0: "q"})
    with pytest.raises(ValidationError):
        build_pair(a2split.theta_data, a2, s={0: "1"})
    with pytest.raises(ArgumentError):
        build_pair(a2split.theta_data, a1)

def test_nonstandard_shift(a1, a1split):
    assert nonstandard_S_set(a1split.theta_data) == (0,)
    pair = build_pair(a1split.theta_data, a1, s={0: "1"})
    assert pair.generators[0] == a1split.generators[0] + a1.t(0)

@pytest.mark.parametrize("name", CATALOG)
def test_coideal_certificates(request, name):
    pair = request.getfixturevalue(name)
    for i in pair.theta_data.outside():
        assert coideal_certificate(pair, i).passed

def test_coideal_certificates_with_parameters(a1, a2, a1split, a2flip):
    family = build_pair(a2flip.theta_data, a2, c={0: "q"})
    shifted = build_pair(a1split.theta_data, a1, s={0: "q - 1"})
    assert shifted.s == {0: Q - 1}
    for pair in (family, shifted):
        for i in pair.theta_data.outside():
            assert coideal_certificate(pair, i).passed

def test_coideal_remainder_split(a1, a1split):
    certificate = coideal_certificate(a1split, 0)
    (left, right), = certificate.components
    assert right == a1.one().words()[0]
    assert left == a1split.generators[0]
    assert certificate.failures == ()

def test_split_a2_serre_defect(a2split):
    relation = serre_defect(a2split, 0, 1)
    assert relation.text() == "q^-1 * B2"
    assert relation.verify(a2split)
    assert serre_defect(a2split, 1, 0).text() == "q^-1 * B1"

def test_diagonal_relation(a1a1, a1a1flip):
    relation = serre_defect(a1a1flip, 0, 1)
    expected = (a1a1.torus((-1, 1)) - a1a1.torus((1, -1))) / a1a1.q_difference(0)
    assert relation.lhs == expected
    assert relation.verify(a1a1flip)

def test_defects_verify(a2flip, a2levi):
    for pair in (a2flip, a2levi):
        for relation in api.serre_defects(pair):
            assert relation.verify(pair)

def test_serre_defect_needs_distinct(a2split):
    with pytest.raises(ArgumentError):
        serre_defect(a2split, 0, 0)

def test_levi_relation_vanishes(a2levi):
    relation = serre_defect(a2levi, 0, 1)
    assert not relation.lhs
    assert relation.terms == ()
    assert relation.text() == "0"
    assert relation.verify(a2levi)

def test_serre_defect_on_odd_data(a2levi):
    with pytest.raises(ValidationError):
        serre_defect(a2levi, 1, 0)

def test_defect_expansion_is_unique(a2split, a1a1flip):
    relation = serre_defect(a2split, 0, 1)
    assert not relation.degenerate
    assert relation.to_dict()["degenerate"] is False
    assert not serre_defect(a1a1flip, 0, 1).degenerate

@pytest.mark.parametrize("name", CATALOG)
def test_support_checks(request, name):
    pair = request.getfixturevalue(name)
    for check in api.support_checks(pair):
        assert check.passed
        assert check.applicable == pair.theta_data.is_involutive

def test_support_check_weight(a2split):
    check = support_check(a2split, 0, 1)
    assert check.weight == (2, 1)
    assert check.to_dict()["status"] == "passed"

def test_support_check_on_odd_data(a2levi):
    check = support_check(a2levi, 1, 0)
    assert not check.applicable
    assert check.passed
    assert check.to_dict()["status"] == "not applicable"

def test_presentation_relations(a2split, a2flip, a2levi, a1a1flip):
    for pair in (a2split, a2flip, a2levi, a1a1flip):
        assert presentation_relations(pair).passed

def test_independence(a1split, a2flip):
    report = independence_check(a1split, height=2, x_degree=1)
    assert report.count == 3
    assert report.passed
    assert independence_check(a2flip, height=1, x_degree=0).passed

def test_classical_image(a1, a1split):
    assert classical_image(a1split.generators[0]) == "f1 + e1"
    assert classical_image(a1.y(0) * a1.x(0) * Q) == "f1 e1"
    with pytest.raises(PoleError):
        classical_image(a1.x(0) * a1.y(0))

def test_specialize_split(a2split):
    report = specialize_pair(a2split)
    assert report.passed
    assert report.oracle.available
    assert report.oracle.homomorphism
    assert report.oracle.signs == {0: 1, 1: 1}

def test_specialize_levi(a2levi):
    report = specialize_pair(a2levi)
    assert report.to_dict()["classical"]["involutive"] is False
    assert report.levi[0]["index"] == 1

@pytest.mark.parametrize("name", CATALOG)
def test_specialize_catalog(request, name):
    pair = request.getfixturevalue(name)
    ctx = pair.ctx
    assert specialize_pair(pair).passed
    for i, b in enumerate(pair.generators):
        assert tip(b) == ctx.y(i) * ctx.t(i)

def test_parabolic_generator(a2):
    generator = parabolic_generator(a2, {0}, (0,), 1)
    expected = (a2.word(ys=(0, 1)) - a2.word(ys=(1, 0)) * Q) * a2.t(0) * a2.t(1)
    assert generator == expected

def test_parabolic_shape(a2):
    assert parabolic_shape_check(a2, {0}, (0,), 1).passed
    assert parabolic_shape_check(a2, {0}, (), 1).passed

def test_parabolic_arguments(a2):
    with pytest.raises(ArgumentError):
        parabolic_generator(a2, {0}, (0,), 0)
    with pytest.raises(ArgumentError):
        parabolic_generator(a2, {0}, (1,), 1)
