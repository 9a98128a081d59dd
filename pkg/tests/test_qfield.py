""" Unit test cases for exact coefficient arithmetic in Q(s), q = s^2.
"""
from fractions import Fraction

import pytest
from qsympairs.constants import Sign
from qsympairs.errors import ArgumentError, PoleError
from qsympairs.qfield import (
    ONE,
    Q,
    S,
    ZERO,
    compare,
    format_qrat,
    has_pole_at_one,
    is_positive,
    qbinom,
    qint,
    qpow,
    qrat,
    sign,
    specialize_q1,
)


def test_qint_small_values():
    assert qint(0) == ZERO
    assert qint(1) == ONE
    assert qint(2) == Q + ONE / Q
    assert qint(3) == Q ** 2 + 1 + ONE / Q ** 2

def test_qint_half_integer_exponent():
    assert qint(2, Fraction(1, 2)) == S + ONE / S

def test_qint_rejects_negative():
    with pytest.raises(ArgumentError):
        qint(-1)

def test_qbinom_symmetric_and_polynomial():
    assert qbinom(4, 2) == Q ** 4 + Q ** 2 + 2 + ONE / Q ** 2 + ONE / Q ** 4
    assert qbinom(5, 2) == qbinom(5, 3)
    assert qbinom(3, 0) == ONE

def test_qbinom_out_of_range():
    with pytest.raises(ArgumentError):
        qbinom(2, 3)

def test_qpow_half_integers():
    assert qpow(Fraction(1, 2)) == S
    assert qpow(-1) == ONE / Q
    with pytest.raises(ArgumentError):
        qpow(Fraction(1, 3))

def test_qrat_conversions():
    assert qrat(Fraction(1, 2)) * 2 == ONE
    assert qrat(3) == ONE * 3
    with pytest.raises(ArgumentError):
        qrat(True)
    with pytest.raises(ArgumentError):
        qrat("q")

def test_sign_at_q_one():
    assert sign(Q - 1) is Sign.POSITIVE
    assert sign(ONE - Q) is Sign.NEGATIVE
    assert sign(ZERO) is Sign.ZERO
    assert sign((Q - 1) ** 2) is Sign.POSITIVE
    assert is_positive(qint(2))
    assert compare(Q, ONE) is Sign.POSITIVE

def test_specialize_at_q_one():
    assert specialize_q1(qint(3)) == 3
    assert specialize_q1(qbinom(4, 2)) == 6
    assert specialize_q1((Q ** 2 - 1) / (Q - ONE / Q)) == 1

def test_specialize_pole():
    value = ONE / (Q - 1)
    assert has_pole_at_one(value)
    assert not has_pole_at_one(qint(2))
    with pytest.raises(PoleError):
        specialize_q1(value)

def test_format_laurent_polynomials():
    assert format_qrat(qint(2)) == "q + q^-1"
    assert format_qrat(qint(3)) == "q^2 + 1 + q^-2"
    assert format_qrat(qbinom(4, 2)) == "q^4 + q^2 + 2 + q^-2 + q^-4"
    assert format_qrat(ONE / Q) == "q^-1"
    assert format_qrat(-Q * 2) == "-2*q"
    assert format_qrat(ZERO) == "0"

def test_format_odd_powers_use_s():
    assert format_qrat(S + ONE / S) == "s + s^-1"

def test_format_fractions():
    assert format_qrat(ONE / (Q - ONE / Q)) == "1/(q - q^-1)"
    assert format_qrat((Q ** 2 + 1) / (Q - ONE / Q)) == "(q^2 + 1)/(q - q^-1)"
