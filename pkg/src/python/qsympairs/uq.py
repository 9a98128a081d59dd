"""
    The quantized enveloping algebra U_q(g) in exact normal form.

    Every element is a combination of normal words y-word * tau(torus) *
    x-word, where both letter words are irreducible for the completed Serre
    rewriting system. Products are straightened with the cross relation
    x_i y_j - y_j x_i = delta_ij (t_i - t_i^-1)/(q_i - q_i^-1) and the torus
    relation tau(l) x_i tau(-l) = q^(l, a_i) x_i.
"""
import operator
from typing import NamedTuple

from cachetools import LRUCache, cachedmethod

from qsympairs import constants
from qsympairs.constants import Side
from qsympairs.errors import ArgumentError, NotHomogeneous, ResourceError, ValidationError
from qsympairs.logging import LOGGER
from qsympairs.qfield import ONE, ZERO, is_qrat, qbinom, qfactorial, qpow, qrat, spow
from qsympairs.rewriting import RewriteSystem, add_into
from qsympairs.rootdata import add, cartan_init, ht, scale, sub


class NormalWord(NamedTuple):
    ys: tuple
    torus: tuple
    xs: tuple

    @property
    def degree(self):
        return len(self.ys) + len(self.xs)

    def is_torus(self):
        return not self.ys and not self.xs


class AlgebraContext:
    """ U_q(g) for one root datum: generators, the completed rewriting
        system and the memo tables for products.

    Args:
        datum (Union[RootDatum, str]): The root datum or a type label.
        degree_bound (int): The completion degree D.
    Raises:
        ValidationError: If D is too small to hold the Serre relations.
        ResourceError: If completion exceeds its budgets.
    """

    def __init__(self, datum, degree_bound=constants.DEFAULT_DEGREE_BOUND,
                 rule_budget=constants.DEFAULT_RULE_BUDGET,
                 step_budget=constants.DEFAULT_STEP_BUDGET):
        self.datum = cartan_init(datum)
        self.rank = self.datum.rank
        orders = [
            1 - self.datum.cartan[i][j]
            for i in range(self.rank) for j in range(self.rank) if i != j
        ]
        minimum = 2 * (1 + max(orders, default=0))
        if degree_bound < minimum:
            raise ValidationError(
                f"Degree bound {degree_bound} is below the minimum {minimum} "
                f"for {self.datum.label}"
            )
        self.degree_bound = degree_bound
        self.rewriting = RewriteSystem(self.datum, degree_bound, rule_budget, step_budget)
        self._straighten_cache = LRUCache(maxsize=100_000)
        self._product_cache = LRUCache(maxsize=200_000)
        self._memos = {}
        LOGGER.info(
            f"Algebra context {self.datum.label} ready: "
            f"{len(self.rewriting.rules)} rewriting rules up to degree {degree_bound}"
        )

    def memo(self, name, maxsize=100_000):
        """ Returns the named memo table of this context. """
        if name not in self._memos:
            self._memos[name] = LRUCache(maxsize=maxsize)
        return self._memos[name]

    # ----------- SCALARS ----------
    def q_i(self, i):
        return qpow(self.datum.d(i))

    def q_difference(self, i):
        """ Returns q_i - q_i^-1. """
        return self.q_i(i) - ONE / self.q_i(i)

    def q_form(self, a, b):
        """ Returns q^(a, b) for root-lattice vectors a and b. """
        return spow(2 * self.datum.inner(a, b))

    def root_sum(self, letters):
        """ Returns the sum of the simple roots named by a word. """
        counts = [0] * self.rank
        for letter in letters:
            counts[letter] += 1
        return tuple(counts)

    def zero_torus(self):
        return (0,) * self.rank

    # ----------- GENERATORS ----------
    def element(self, terms=None):
        return Element(self, terms)

    def zero(self):
        return Element(self)

    def one(self):
        return self.scalar(ONE)

    def scalar(self, value):
        return Element(self, {NormalWord((), self.zero_torus(), ()): qrat(value)})

    def word(self, ys=(), torus=None, xs=()):
        """ Returns the normal form of the product ys * tau(torus) * xs. """
        torus = tuple(torus) if torus is not None else self.zero_torus()
        return Element(self, self.normalize(tuple(ys), torus, tuple(xs)))

    def x(self, i):
        self._check_index(i)
        return Element(self, {NormalWord((), self.zero_torus(), (i,)): ONE})

    def y(self, i):
        self._check_index(i)
        return Element(self, {NormalWord((i,), self.zero_torus(), ()): ONE})

    def t(self, i, power=1):
        self._check_index(i)
        return self.torus(scale(power, self.datum.simple_root(i)))

    def torus(self, vector):
        vector = tuple(int(c) for c in vector)
        if len(vector) != self.rank:
            raise ArgumentError(f"Torus vector {vector} must have {self.rank} entries")
        return Element(self, {NormalWord((), vector, ()): ONE})

    def generator(self, side, i):
        return self.x(i) if Side(side) is Side.X else self.y(i)

    def _check_index(self, i):
        if not 0 <= i < self.rank:
            raise ArgumentError(f"Generator index {i + 1} is out of range 1..{self.rank}")

    # ----------- NORMAL FORMS ----------
    def normalize(self, ys, torus, xs):
        """ Returns the normal form of ys * tau(torus) * xs as a term dictionary. """
        result = {}
        y_forms = self.rewriting.normal_word(ys)
        x_forms = self.rewriting.normal_word(xs)
        for y_word, y_coefficient in y_forms.items():
            for x_word, x_coefficient in x_forms.items():
                add_into(
                    result, {NormalWord(y_word, torus, x_word): y_coefficient * x_coefficient}
                )
        return result

    @cachedmethod(operator.attrgetter("_straighten_cache"))
    def straighten(self, xs, ys):
        """ Returns the x-word times the y-word rewritten as raw triples
            (y-word, torus, x-word), by moving the last x letter to the right.

        Returns:
            Dict[Tuple, FracElement]: Unreduced triples and their coefficients.
        """
        origin = self.zero_torus()
        if not xs:
            return {(ys, origin, ()): ONE}
        if not ys:
            return {((), origin, xs): ONE}
        rest, i = xs[:-1], xs[-1]
        # x_i * ys as (y-word, torus, trailing x-word) pieces
        pieces = {(ys, origin, (i,)): ONE}
        denominator = self.q_difference(i)
        alpha = self.datum.simple_root(i)
        for position, letter in enumerate(ys):
            if letter != i:
                continue
            tail = ys[position + 1:]
            exponent = self.datum.inner(alpha, self.root_sum(tail))
            remaining = ys[:position] + tail
            for epsilon in (1, -1):
                coefficient = epsilon * spow(-2 * epsilon * exponent) / denominator
                key = (remaining, scale(epsilon, alpha), ())
                add_into(pieces, {key: coefficient})
        result = {}
        for (y_word, nu, trailing), coefficient in pieces.items():
            for (ya, nua, xa), c in self.straighten(rest, y_word).items():
                shift = spow(-2 * self.datum.inner(nu, self.root_sum(xa)))
                add_into(result, {(ya, add(nua, nu), xa + trailing): coefficient * c * shift})
        return result

    @cachedmethod(operator.attrgetter("_product_cache"))
    def word_product(self, left, right):
        """ Returns the normal form of the product of two normal words.

        Args:
            left (NormalWord): The left factor.
            right (NormalWord): The right factor.
        Returns:
            Dict[NormalWord, FracElement]: The product as a term dictionary.
        """
        if left.degree + right.degree > self.degree_bound:
            raise ResourceError(
                f"Product of degree {left.degree + right.degree} exceeds the "
                f"degree bound {self.degree_bound}",
                degree=left.degree + right.degree,
            )
        result = {}
        for (y_part, nu, x_part), coefficient in self.straighten(left.xs, right.ys).items():
            scalar = (
                coefficient
                * spow(-2 * self.datum.inner(left.torus, self.root_sum(y_part)))
                * spow(-2 * self.datum.inner(right.torus, self.root_sum(x_part)))
            )
            torus = add(add(left.torus, nu), right.torus)
            add_into(result, self.normalize(left.ys + y_part, torus, x_part + right.xs), scalar)
        return result

    def multiply(self, a, b):
        result = {}
        for left, c in a.terms.items():
            for right, d in b.terms.items():
                add_into(result, self.word_product(left, right), c * d)
        return Element(self, result)

    def word_weight(self, word):
        return sub(self.root_sum(word.xs), self.root_sum(word.ys))

    def __repr__(self):
        return f"AlgebraContext({self.datum.label}, D={self.degree_bound})"


def algebra_init(datum, degree_bound=constants.DEFAULT_DEGREE_BOUND, **budgets):
    """ Returns the algebra context of a root datum with the Serre rewriting
        system completed to the given degree bound.

    Args:
        datum (Union[RootDatum, str]): A root datum or a type label.
        degree_bound (int): The completion degree D.
        **budgets: ``rule_budget`` and ``step_budget`` overrides.
    Returns:
        AlgebraContext: The context.
    """
    return AlgebraContext(datum, degree_bound, **budgets)


class Element:
    """ A finite combination of normal words with coefficients in Q(s). """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=None):
        self.ctx = ctx
        self.terms = {w: qrat(c) for w, c in (terms or {}).items() if c}

    def _coerce(self, other):
        if isinstance(other, Element):
            assert other.ctx is self.ctx, "Elements belong to different algebra contexts"
            return other
        if is_qrat(other):
            return self.ctx.scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Element(self.ctx, add_into(dict(self.terms), other.terms))

    __radd__ = __add__

    def __neg__(self):
        return Element(self.ctx, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Element(self.ctx, add_into(dict(self.terms), other.terms, -ONE))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.ctx.multiply(self, other)
        if is_qrat(other):
            scalar = qrat(other)
            return Element(self.ctx, {w: c * scalar for w, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if is_qrat(other):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if not is_qrat(other) or not qrat(other):
            raise ArgumentError("Elements can only be divided by nonzero scalars")
        return self * (ONE / qrat(other))

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ArgumentError(f"Elements have nonnegative integer powers only, got {exponent}")
        result = self.ctx.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, Element) else other
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def words(self):
        return list(self.terms)

    def coefficient(self, word):
        return self.terms.get(word, ZERO)

    def scalar_part(self):
        """ Returns the coefficient of the identity word. """
        return self.coefficient(NormalWord((), self.ctx.zero_torus(), ()))

    def filter(self, predicate):
        """ Returns the sum of the terms whose word satisfies the predicate. """
        return Element(self.ctx, {w: c for w, c in self.terms.items() if predicate(w)})

    def __str__(self):
        from qsympairs.printing import format_element
        return format_element(self)

    def __repr__(self):
        return f"Element({self})"


def normal_form(ctx, expression):
    """ Returns the canonical Element of an expression over the generators.

    Args:
        ctx (AlgebraContext): The algebra context.
        expression (Union[str, Element, Iterable]): Expression text, an
            Element, or (coefficient, letters) pairs with letters such as
            ``("x", 0)``, ``("y", 1)`` or ``("t", (1, 0))``.
    Returns:
        Element: The normal form.
    Raises:
        ResourceError: If a word exceeds the degree bound.
    """
    if isinstance(expression, Element):
        return expression
    if isinstance(expression, str):
        from qsympairs.parser import parse_element
        return parse_element(expression, ctx)
    result = ctx.zero()
    for coefficient, letters in expression:
        term = ctx.scalar(coefficient)
        for kind, value in letters:
            if kind == "x":
                factor = ctx.x(value)
            elif kind == "y":
                factor = ctx.y(value)
            elif kind in ("t", "K"):
                factor = ctx.torus(value)
            else:
                raise ArgumentError(f"Unknown letter kind {kind!r}")
            term = term * factor
        result = result + term
    return result


def weight(a):
    """ Returns the weight of a homogeneous element: the x-letters count
        positively and the y-letters negatively.

    Raises:
        NotHomogeneous: If the words have different weights, or a is zero.
    """
    weights = {a.ctx.word_weight(word) for word in a.terms}
    if len(weights) != 1:
        raise NotHomogeneous(
            "The zero element has no weight" if not weights
            else f"Element mixes the weights {sorted(weights)}"
        )
    return weights.pop()


def weight_components(a):
    """ Returns the homogeneous components of a keyed by weight. """
    components = {}
    for word, coefficient in a.terms.items():
        components.setdefault(a.ctx.word_weight(word), {})[word] = coefficient
    return {w: Element(a.ctx, terms) for w, terms in components.items()}


def divided_power(ctx, i, m, side=Side.X):
    """ Returns the divided power z_i^m / [m]_{q_i}! of x_i or y_i. """
    if m < 0:
        raise ArgumentError(f"Divided powers need m >= 0, got {m}")
    if m > ctx.degree_bound:
        raise ResourceError(f"Divided power of degree {m} exceeds the degree bound", degree=m)
    return ctx.generator(side, i) ** m / qfactorial(m, ctx.datum.d(i))


def serre_polynomial(ctx, i, j, a, b):
    """ Returns F_ij(a, b) = sum_m (-1)^m [1-a_ij choose m]_{q_i} a^(1-a_ij-m) b a^m.

    Raises:
        ArgumentError: If i = j.
    """
    if i == j:
        raise ArgumentError("The Serre polynomial F_ij needs i != j")
    order = 1 - ctx.datum.cartan[i][j]
    d_i = ctx.datum.d(i)
    powers = [ctx.one()]
    for _ in range(order):
        powers.append(powers[-1] * a)
    result = ctx.zero()
    for m in range(order + 1):
        coefficient = qbinom(order, m, d_i) * (1 if m % 2 == 0 else -1)
        result = result + powers[order - m] * b * powers[m] * coefficient
    return result


def pbw_dimension(ctx, mu):
    """ Returns the number of irreducible words of weight mu, the dimension
        of the weight space of U+ (or U-) of that weight.
    """
    if any(c < 0 for c in mu):
        raise ArgumentError(f"{mu} is not in the positive root cone")
    if ht(mu) == 0:
        return 1
    return len(ctx.rewriting.irreducible_words(mu))
