"""
    Exact arithmetic in the coefficient field Q(s), where s^2 = q.

    Elements (``QRat``) are sympy ``FracElement`` instances of a single
    module-level field, so they are hashable and compare canonically: sympy
    stores every fraction with cancelled numerator and denominator and a
    denominator of positive leading coefficient.
"""
from fractions import Fraction

from cachetools import cached
from sympy import Symbol, ZZ
from sympy.polys.fields import FracElement

from qsympairs.constants import Sign
from qsympairs.errors import ArgumentError, PoleError


QDOMAIN = ZZ.frac_field(Symbol("s"))
QFIELD = QDOMAIN.field
S = QFIELD.gens[0]
Q = S ** 2
ONE = QFIELD.one
ZERO = QFIELD.zero


def qrat(value):
    """ Returns the given value as an element of the coefficient field.

    Args:
        value (Union[int, Fraction, FracElement]): A rational or field value.
    Returns:
        FracElement: The value in Q(s).
    Raises:
        ArgumentError: If the value has an unsupported type.
    """
    if isinstance(value, FracElement):
        return value
    if isinstance(value, bool):
        raise ArgumentError(f"Cannot convert a boolean to a coefficient: {value}")
    if isinstance(value, int):
        return QFIELD(value)
    if isinstance(value, Fraction):
        return QFIELD(value.numerator) / value.denominator
    raise ArgumentError(f"Cannot convert {value!r} to a coefficient")


def is_qrat(value):
    return isinstance(value, (FracElement, int, Fraction)) and not isinstance(value, bool)


def spow(k):
    """ Returns s^k for any integer k. """
    return S ** k if k >= 0 else ONE / S ** (-k)


def half_units(d):
    """ Returns 2d as an integer for a positive half-integer exponent d.

    Raises:
        ArgumentError: If d is not a half-integer.
    """
    doubled = Fraction(d) * 2
    if doubled.denominator != 1:
        raise ArgumentError(f"Exponent {d} is not a half-integer")
    return int(doubled)


def qpow(k):
    """ Returns q^k for an integer or half-integer k. """
    return spow(half_units(k))


@cached(cache={})
def qint(m, d=1):
    """ Returns the q-integer [m] at q_d = q^d, as a Laurent polynomial.

    Args:
        m (int): A nonnegative integer.
        d (Union[int, Fraction]): A positive half-integer exponent.
    Returns:
        FracElement: (q_d^m - q_d^-m) / (q_d - q_d^-1).
    """
    if m < 0:
        raise ArgumentError(f"q-integers are defined for m >= 0, got {m}")
    step = half_units(d)
    if step <= 0:
        raise ArgumentError(f"Exponent d must be positive, got {d}")
    return sum((spow(step * (m - 1 - 2 * k)) for k in range(m)), ZERO)


@cached(cache={})
def qfactorial(m, d=1):
    """ Returns [m]! at q_d. """
    result = ONE
    for k in range(1, m + 1):
        result = result * qint(k, d)
    return result


def qbinom(m, j, d=1):
    """ Returns the q-binomial coefficient [m choose j] at q_d.

    Raises:
        ArgumentError: If j > m or either is negative.
    """
    if j < 0 or m < 0 or j > m:
        raise ArgumentError(f"q-binomial needs 0 <= j <= m, got m={m}, j={j}")
    return qfactorial(m, d) / (qfactorial(j, d) * qfactorial(m - j, d))


def _tail_sign(poly):
    """ Returns the sign of the lowest nonzero Taylor coefficient at s = 1. """
    shifted = poly.shift(1)
    _, coefficient = min(shifted.terms(), key=lambda term: term[0])
    return Sign.POSITIVE if coefficient > 0 else Sign.NEGATIVE


def sign(f):
    """ Returns the sign of f in the ordered field of expansions at q = 1.
        f = (s - 1)^k g with g(1) != 0 is positive exactly when g(1) > 0.

    Args:
        f (FracElement): Any coefficient.
    Returns:
        Sign: POSITIVE, NEGATIVE or ZERO.
    """
    f = qrat(f)
    if not f:
        return Sign.ZERO
    return _tail_sign(f.numer) * _tail_sign(f.denom)


def compare(f, g):
    """ Returns the sign of f - g. """
    return sign(qrat(f) - qrat(g))


def is_positive(f):
    return sign(f) is Sign.POSITIVE


def _value_at_one(poly):
    return sum((int(c) for c in poly.coeffs()), 0) if poly else 0


def has_pole_at_one(f):
    """ Returns true if the reduced denominator of f vanishes at q = 1. """
    return _value_at_one(qrat(f).denom) == 0


def specialize_q1(f):
    """ Returns the value of f at q = 1.

    Args:
        f (FracElement): A coefficient in the localization at q = 1.
    Returns:
        Fraction: f(1).
    Raises:
        PoleError: If f has a pole at q = 1.
    """
    f = qrat(f)
    denominator = _value_at_one(f.denom)
    if denominator == 0:
        raise PoleError(f"Coefficient has a pole at q = 1")
    return Fraction(_value_at_one(f.numer), denominator)


def laurent_terms(poly, shift=0):
    """ Returns the nonzero terms of poly * s^shift as (exponent, coefficient)
        pairs, highest exponent first.
    """
    return sorted(
        ((monom[0] + shift, int(c)) for monom, c in poly.terms()),
        key=lambda term: -term[0],
    )


def balanced_form(f):
    """ Returns f as numerator / denominator Laurent polynomials in s, with
        the denominator centred on s^0 and a monomial denominator folded
        into the numerator.

    Returns:
        Tuple[List, List]: (exponent, Fraction) terms of the numerator and
            of the denominator, highest exponent first. The denominator is
            [(0, 1)] when it folds away.
    """
    f = qrat(f)
    denominator = laurent_terms(f.denom)
    top, bottom = denominator[0][0], denominator[-1][0]
    centre = (top + bottom) // 2
    numerator = laurent_terms(f.numer, -centre)
    denominator = [(e - centre, c) for e, c in denominator]
    if len(denominator) == 1:
        (exponent, coefficient), = denominator
        numerator = [
            (e - exponent, Fraction(c, coefficient)) for e, c in numerator
        ]
        return numerator, [(0, Fraction(1))]
    return (
        [(e, Fraction(c)) for e, c in numerator],
        [(e, Fraction(c)) for e, c in denominator],
    )


def format_laurent(terms, variable=None):
    """ Returns printable text for a Laurent polynomial given as
        (exponent, coefficient) pairs in s.
    """
    if not terms:
        return "0"
    if variable is None:
        variable = "q" if all(e % 2 == 0 for e, _ in terms) else "s"
    scale = 2 if variable == "q" else 1
    pieces = []
    for exponent, coefficient in terms:
        power = exponent // scale
        magnitude = abs(coefficient)
        if power == 0:
            body = str(magnitude)
        else:
            symbol = variable if power == 1 else f"{variable}^{power}"
            body = symbol if magnitude == 1 else f"{magnitude}*{symbol}"
        if not pieces:
            pieces.append(body if coefficient > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coefficient > 0 else f"- {body}")
    return " ".join(pieces)


def laurent_variable(*term_lists):
    exponents = [e for terms in term_lists for e, _ in terms]
    return "q" if all(e % 2 == 0 for e in exponents) else "s"


def format_qrat(f):
    """ Returns the canonical text of a coefficient, e.g. ``q + q^-1`` or
        ``(q^2 - 1)/(q - q^-1)``.
    """
    f = qrat(f)
    if not f:
        return "0"
    numerator, denominator = balanced_form(f)
    variable = laurent_variable(numerator, denominator)
    top = format_laurent(numerator, variable)
    if denominator == [(0, Fraction(1))]:
        return top
    bottom = format_laurent(denominator, variable)
    if len(numerator) > 1:
        top = f"({top})"
    return f"{top}/({bottom})"
