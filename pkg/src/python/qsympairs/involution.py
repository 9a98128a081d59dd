"""
    Satake data of a maximally split involution and the quantum lift of
    Theta on the generators y_i and the torus.

    An involution is given by the simple roots pi_theta it fixes and a
    diagram automorphism d. Theta = -w0 d, the permutation p of the
    remaining simple roots, a half set pi_star and one admissible sequence
    per index of pi_star are computed and validated once. Sequences are
    kept in application order: the first step acts first on
    t_p(i)^-1 x_p(i).
"""
from dataclasses import dataclass, field

from qsympairs.adjoint import adjoint_right_sequence
from qsympairs.errors import ArgumentError, InvariantViolation, ValidationError
from qsympairs.logging import LOGGER
from qsympairs.rootdata import (
    add,
    cartan_init,
    in_positive_span,
    satake_permutation,
    scale,
    sub,
    theta_fixed_simple,
    theta_lattice,
)
from qsympairs.uq import weight


@dataclass(frozen=True)
class ThetaData:
    """ Validated Satake data.

    Attributes:
        datum (RootDatum): The root datum.
        pi_theta (Tuple[int]): Indices of the simple roots fixed by Theta.
        d (Tuple[int]): The diagram automorphism as a permutation.
        theta (LatticeMap): The lattice involution Theta.
        p (Dict[int, int]): The permutation of the indices outside pi_theta.
        pi_star (Tuple[int]): One index per p-orbit, the lowest.
        sequences (Dict[int, Tuple]): Admissible (index, power) steps for
            every index of pi_star.
        odd (Tuple[int]): Indices with p(i) = i and odd m(i). The lift is
            still built for them, but Theta does not lift to an involution
            of the classical algebra.
    """
    datum: object
    pi_theta: tuple
    d: tuple
    theta: object
    p: dict = field(hash=False)
    pi_star: tuple
    sequences: dict = field(hash=False)
    odd: tuple = ()

    @property
    def is_involutive(self):
        return not self.odd

    def m(self, i):
        """ Returns m(i), the total power of the admissible sequence of i. """
        return sum(power for _, power in self.sequences[i])

    def outside(self):
        return tuple(i for i in range(self.datum.rank) if i not in self.pi_theta)

    def partner(self, i):
        """ Returns the index of pi_star in the p-orbit of i. """
        return i if i in self.pi_star else self.p[i]

    def to_dict(self):
        return {
            "involutive": self.is_involutive,
            "odd": [i + 1 for i in self.odd],
            "theta": self.theta.to_list(),
            "pi_theta": [i + 1 for i in self.pi_theta],
            "d": [i + 1 for i in self.d],
            "p": {str(i + 1): j + 1 for i, j in sorted(self.p.items())},
            "pi_star": [i + 1 for i in self.pi_star],
            "sequences": {
                str(i + 1): {
                    "indices": [j + 1 for j, _ in steps],
                    "powers": [power for _, power in steps],
                    "m": self.m(i),
                }
                for i, steps in sorted(self.sequences.items())
            },
        }


def _greedy_sequence(datum, pi_theta, start, target):
    """ Returns steps (j, m) that raise start to target through full
        alpha_j strings, picking the least usable j each time.

    Raises:
        ValidationError: If the target cannot be reached.
    """
    steps, current = [], tuple(start)
    while current != tuple(target):
        for j in pi_theta:
            pairing = datum.coroot_pairing(current, j)
            if pairing >= 0:
                continue
            raised = add(current, scale(-pairing, datum.simple_root(j)))
            if in_positive_span(sub(target, raised), set(pi_theta)):
                steps.append((j, int(-pairing)))
                current = raised
                break
        else:
            raise ValidationError(
                f"The weight {list(target)} cannot be reached from {list(start)} "
                f"by alpha-strings in pi_theta; the data is not a maximally "
                f"split involution"
            )
    return tuple(steps)


def validate_satake(datum, pi_theta, d):
    """ Returns the validated Satake data of an involution.

    Args:
        datum (Union[RootDatum, str]): The root datum or a type label.
        pi_theta (Iterable[int]): 0-based indices fixed by Theta.
        d (Sequence[int]): A diagram automorphism extending -w0 on pi_theta.
    Returns:
        ThetaData: The data with p, pi_star and admissible sequences.
    Raises:
        ValidationError: If any Satake condition fails.
    """
    datum = cartan_init(datum)
    theta = theta_lattice(datum, pi_theta, d)
    fixed = theta_fixed_simple(datum, theta)
    if set(fixed) != set(pi_theta):
        raise ValidationError(
            f"Theta fixes the simple roots {[i + 1 for i in fixed]}, "
            f"not exactly pi_theta = {sorted(i + 1 for i in pi_theta)}"
        )
    p = satake_permutation(datum, theta)
    pi_star = tuple(i for i in sorted(p) if i <= p[i])
    sequences, odd = {}, []
    for i in pi_star:
        target = theta.apply(scale(-1, datum.simple_root(i)))
        steps = _greedy_sequence(datum, fixed, datum.simple_root(p[i]), target)
        total = sum(power for _, power in steps)
        if p[i] == i and total % 2:
            LOGGER.warning(
                f"m({i + 1}) = {total} is odd although p({i + 1}) = {i + 1}; "
                f"the classical limit is not an involution"
            )
            odd.append(i)
        sequences[i] = steps
    data = ThetaData(
        datum=datum,
        pi_theta=tuple(fixed),
        d=tuple(d),
        theta=theta,
        p=p,
        pi_star=pi_star,
        sequences=sequences,
        odd=tuple(odd),
    )
    LOGGER.info(
        f"Satake data for {datum.label}: pi_theta {[i + 1 for i in fixed]}, "
        f"p {({i + 1: j + 1 for i, j in p.items()})}, pi_star {[i + 1 for i in pi_star]}"
    )
    return data


def admissible_sequence(theta_data, i):
    """ Returns the admissible sequence of an index of pi_star as parallel
        tuples of indices and powers.

    Raises:
        ArgumentError: If i is not in pi_star.
    """
    if i not in theta_data.pi_star:
        raise ArgumentError(f"Index {i + 1} is not in pi_star {[k + 1 for k in theta_data.pi_star]}")
    steps = theta_data.sequences[i]
    return tuple(j for j, _ in steps), tuple(m for _, m in steps)


def theta_tilde_y(theta_data, ctx, i):
    """ Returns the image of y_i under the quantum lift of Theta, a weight
        vector of weight -Theta(alpha_i) on the x side.

    Args:
        theta_data (ThetaData): The Satake data.
        ctx (AlgebraContext): The algebra of the same root datum.
        i (int): A 0-based index outside pi_theta.
    Returns:
        Element: The image in normal form.
    Raises:
        ArgumentError: If alpha_i is in pi_theta.
        InvariantViolation: If the image has the wrong weight.
    """
    if i in theta_data.pi_theta:
        raise ArgumentError(f"alpha_{i + 1} is in pi_theta, where y_{i + 1} is fixed")
    memo = ctx.memo("theta_tilde")
    key = (theta_data, i)
    if key in memo:
        return memo[key]
    datum = ctx.datum
    k = theta_data.partner(i)
    if k == i:
        start = theta_data.p[i]
        image = adjoint_right_sequence(
            ctx, theta_data.sequences[i], ctx.t(start, -1) * ctx.x(start)
        )
    else:
        steps = theta_data.sequences[k]
        image = adjoint_right_sequence(ctx, reversed(steps), ctx.t(k, -1) * ctx.x(k))
        if theta_data.m(k) % 2:
            image = -image
        if not image:
            LOGGER.warning(
                f"Reversed sequence of {k + 1} vanishes on t{k + 1}^-1 x{k + 1}; "
                f"using the greedy sequence of {i + 1}"
            )
            target = theta_data.theta.apply(scale(-1, datum.simple_root(i)))
            fallback = _greedy_sequence(
                datum, theta_data.pi_theta, datum.simple_root(k), target
            )
            image = adjoint_right_sequence(ctx, fallback, ctx.t(k, -1) * ctx.x(k))
    expected = scale(-1, theta_data.theta.apply(datum.simple_root(i)))
    if not image or weight(image) != expected:
        raise InvariantViolation(
            f"theta~(y{i + 1}) must be a nonzero vector of weight {list(expected)}"
        )
    memo[key] = image
    return image


def theta_tilde_torus(theta_data, vector):
    """ Returns Theta(-vector), the image of tau(vector). """
    return theta_data.theta.apply(scale(-1, vector))
