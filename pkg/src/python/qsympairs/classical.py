"""
    Classical oracles at q = 1: the Weyl dimension formula and matrix
    Chevalley generators for the series A, B, C and D and their direct sums.

    The matrix model carries the classical involution recovered from the
    q = 1 images of the quantum lift, and the bracket expressions that the
    admissible sequences stand for.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from sympy import Rational, diag, eye, zeros

from qsympairs.errors import ValidationError
from qsympairs.logging import LOGGER
from qsympairs.rootdata import cartan_init, sub


def weyl_dimension(datum, weight):
    """ Returns dim L(weight) = prod over positive roots of (weight + rho, b)/(rho, b).

    Args:
        datum (Union[RootDatum, str]): The root datum.
        weight (Tuple): A dominant integral weight in root coordinates.
    Returns:
        int: The dimension.
    """
    datum = cartan_init(datum)
    rho = datum.rho()
    shifted = tuple(Fraction(a) + Fraction(b) for a, b in zip(weight, rho))
    value = Fraction(1)
    for beta in datum.positive_roots:
        value *= Fraction(datum.inner(shifted, beta)) / Fraction(datum.inner(rho, beta))
    assert value.denominator == 1, (f"Weyl dimension of {weight} is not integral: {value}")
    return int(value)


def _rational(value):
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def _unit(size, a, b):
    """ Returns the matrix unit E_ab for 1-based a and b. """
    matrix = zeros(size, size)
    matrix[a - 1, b - 1] = 1
    return matrix


def _series_generators(series, n):
    """ Returns the matrix size and the raising and lowering generators of
        one simple component, Bourbaki numbering.
    """
    if series == "A":
        size = n + 1
        e = [_unit(size, i, i + 1) for i in range(1, n + 1)]
        return size, e, [m.T for m in e]
    if series == "B":
        size = 2 * n + 1
        e = [
            _unit(size, i, i + 1) - _unit(size, 2 * n + 1 - i, 2 * n + 2 - i)
            for i in range(1, n)
        ]
        e.append(_unit(size, n, n + 1) - _unit(size, n + 1, n + 2))
        f = [m.T for m in e[:-1]] + [2 * e[-1].T]
        return size, e, f
    if series == "C":
        size = 2 * n
        e = [
            _unit(size, i, i + 1) - _unit(size, 2 * n - i, 2 * n + 1 - i)
            for i in range(1, n)
        ]
        e.append(_unit(size, n, n + 1))
        return size, e, [m.T for m in e]
    if series == "D":
        size = 2 * n
        e = [
            _unit(size, i, i + 1) - _unit(size, 2 * n - i, 2 * n + 1 - i)
            for i in range(1, n)
        ]
        e.append(_unit(size, n - 1, n + 1) - _unit(size, n, n + 2))
        return size, e, [m.T for m in e]
    raise ValidationError(f"No matrix model for type {series}{n}")


def bracket(a, b):
    return a * b - b * a


class ChevalleyAlgebra:
    """ Chevalley generators e_i, f_i, h_i of a classical Lie algebra as
        exact matrices, block diagonal over the simple components.

    Args:
        datum (Union[RootDatum, str]): A root datum built from a type label.
    Raises:
        ValidationError: If a component has no matrix model.
    """

    def __init__(self, datum):
        self.datum = cartan_init(datum)
        if not self.datum.components:
            raise ValidationError(f"{self.datum.label} has no type label for a matrix model")
        blocks = [_series_generators(series, n) for series, n in self.datum.components]
        self.size = sum(size for size, _, _ in blocks)
        self.e, self.f = [], []
        offset = 0
        for size, e, f in blocks:
            for raising, lowering in zip(e, f):
                self.e.append(self._embed(raising, offset))
                self.f.append(self._embed(lowering, offset))
            offset += size
        self.h = [bracket(a, b) for a, b in zip(self.e, self.f)]
        self._check_cartan()
        self._positive, self._negative = self._root_vectors()

    def _embed(self, block, offset):
        pieces = []
        if offset:
            pieces.append(zeros(offset, offset))
        pieces.append(block)
        rest = self.size - offset - block.rows
        if rest:
            pieces.append(zeros(rest, rest))
        return diag(*pieces)

    def _check_cartan(self):
        cartan = self.datum.cartan
        for i, h in enumerate(self.h):
            for j, e in enumerate(self.e):
                assert bracket(h, e) == cartan[i][j] * e, (
                    f"Matrix model of {self.datum.label}: [h{i + 1}, e{j + 1}] "
                    f"!= {cartan[i][j]} e{j + 1}"
                )

    def _root_vectors(self):
        positive, negative = {}, {}
        for i in range(self.datum.rank):
            positive[self.datum.simple_root(i)] = self.e[i]
            negative[self.datum.simple_root(i)] = self.f[i]
        for gamma in self.datum.positive_roots:
            if gamma in positive:
                continue
            for i in range(self.datum.rank):
                lower = sub(gamma, self.datum.simple_root(i))
                if lower not in positive:
                    continue
                candidate = bracket(self.e[i], positive[lower])
                if not candidate.is_zero_matrix:
                    positive[gamma] = candidate
                    negative[gamma] = bracket(self.f[i], negative[lower])
                    break
        return positive, negative

    def root_vector(self, beta):
        """ Returns a nonzero vector of the root space of beta. """
        beta = tuple(beta)
        if beta in self._positive:
            return self._positive[beta]
        negated = tuple(-c for c in beta)
        if negated in self._negative:
            return self._negative[negated]
        raise ValidationError(f"{list(beta)} is not a root of {self.datum.label}")

    def coroot(self, beta):
        """ Returns h_beta, the coroot of beta as a combination of the h_i. """
        length = Fraction(self.datum.inner(beta, beta))
        result = zeros(self.size, self.size)
        for i, b in enumerate(beta):
            if b:
                result += _rational(Fraction(b) * self.datum.lengths[i] / length) * self.h[i]
        return result

    def e_word(self, letters):
        """ Returns the matrix product of e-generators named by a word. """
        result = eye(self.size)
        for i in letters:
            result = result * self.e[i]
        return result

    def combination(self, terms, images=None):
        """ Returns sum c * prod images[i] over (c, letters) terms, with the
            raising generators as the default images.
        """
        images = images or dict(enumerate(self.e))
        result = zeros(self.size, self.size)
        for coefficient, letters in terms:
            product = eye(self.size)
            for i in letters:
                product = product * images[i]
            result += _rational(coefficient) * product
        return result


def chevalley_init(datum):
    """ Returns the matrix model of a root datum, or None when its type has
        no matrix model.
    """
    try:
        return ChevalleyAlgebra(datum)
    except ValidationError as error:
        LOGGER.debug(f"Classical matrix oracle unavailable: {error}")
        return None


def bracket_sequence(algebra, steps, start):
    """ Returns (ad e_jr)^(mr) ... (ad e_j1)^(m1) e_start for steps applied in
        order, with divided powers.
    """
    result = algebra.e[start]
    for j, power in steps:
        for _ in range(power):
            result = bracket(algebra.e[j], result)
        result = result / factorial(power)
    return result


def bracket_sign(a, b):
    """ Returns +1 or -1 when a = +b or a = -b, None otherwise. """
    if b.is_zero_matrix:
        return None
    if a == b:
        return 1
    if a == -b:
        return -1
    return None


@dataclass
class ClassicalReport:
    available: bool
    involutive: bool = True
    homomorphism: bool = False
    theta_fixed: dict = field(default_factory=dict)
    signs: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.available or not self.involutive or (
            self.homomorphism and all(self.theta_fixed.values()))

    def to_dict(self):
        if not self.available:
            return {"available": False}
        return {
            "available": True,
            "involutive": self.involutive,
            "homomorphism": self.homomorphism,
            "theta_fixed": {str(i + 1): ok for i, ok in sorted(self.theta_fixed.items())},
            "signs": {str(i + 1): sign for i, sign in sorted(self.signs.items())},
        }


def involution_oracle(algebra, theta_data, expansions, sequences):
    """ Returns the classical checks of a quantum lift specialized at q = 1.

    The classical involution theta is defined on generators by
    theta(f_i) = Y_i, the q = 1 image of theta~(y_i) t_i, and theta(e_i) a
    root vector of weight Theta(alpha_i) scaled so that
    [theta(e_i), theta(f_i)] = h_Theta(alpha_i); it is the identity on
    pi_theta. A generator f_i + Y_i is theta-fixed exactly when
    theta(Y_i) = f_i.

    Args:
        algebra (Optional[ChevalleyAlgebra]): The matrix model, or None.
        theta_data (ThetaData): The Satake data.
        expansions (Dict[int, List]): For each index outside pi_theta the
            (coefficient, x-letters) terms of Y_i.
        sequences (Dict[int, Tuple]): The (start, steps) bracket sequence
            realising each Y_i classically.
    Returns:
        ClassicalReport: The checks, or an unavailable report.
    """
    if algebra is None:
        return ClassicalReport(available=False)
    theta = theta_data.theta
    images_e = dict(enumerate(algebra.e))
    images_f = dict(enumerate(algebra.f))
    report = ClassicalReport(available=True, involutive=theta_data.is_involutive)
    values = {i: algebra.combination(terms) for i, terms in expansions.items()}
    for j, value in values.items():
        beta = theta.apply(theta_data.datum.simple_root(j))
        root = algebra.root_vector(beta)
        target = algebra.coroot(beta)
        commutator = bracket(root, value)
        ratio = None
        for a, b in zip(commutator, target):
            if a != 0:
                ratio = b / a
                break
        if ratio is None or ratio * commutator != target:
            LOGGER.warning(f"No scaling of the root vector of {list(beta)} matches h")
            return report
        images_e[j] = ratio * root
        images_f[j] = value
    cartan = theta_data.datum.cartan
    rank = theta_data.datum.rank
    images_h = [bracket(images_e[i], images_f[i]) for i in range(rank)]
    report.homomorphism = all(
        bracket(images_h[i], images_e[j]) == cartan[i][j] * images_e[j]
        and bracket(images_h[i], images_f[j]) == -cartan[i][j] * images_f[j]
        and (i == j or bracket(images_e[i], images_f[j]).is_zero_matrix)
        for i in range(rank) for j in range(rank)
    )
    for i, terms in expansions.items():
        report.theta_fixed[i] = algebra.combination(terms, images_e) == algebra.f[i]
        start, steps = sequences[i]
        report.signs[i] = bracket_sign(values[i], bracket_sequence(algebra, steps, start))
    return report
