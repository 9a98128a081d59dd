"""
    Finite-dimensional simple modules L(lambda) built from the Verma module
    and the contravariant form S(a v, b v) = S(v, phi(kappa(a) b) v).

    Weight spaces of the Verma module have the irreducible y-words as basis.
    Each one is cut down to L(lambda) by the radical of its Gram matrix: the
    pivot words span the quotient and the action matrices are read back
    through the inverse of the pivot block.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from sympy.polys.matrices import DomainMatrix

from qsympairs import constants
from qsympairs.classical import weyl_dimension
from qsympairs.constants import Sign
from qsympairs.errors import ArgumentError, InvariantViolation, ResourceError
from qsympairs.hopf import counit, kappa
from qsympairs.linalg import field_matrix
from qsympairs.logging import LOGGER
from qsympairs.qfield import ONE, QDOMAIN, ZERO, format_qrat, qbinom, sign, spow
from qsympairs.rewriting import add_into
from qsympairs.rootdata import ht, spherical_weight_test, sub


@dataclass
class WeightSpace:
    """ One weight space lambda - mu of L(lambda).

    Attributes:
        mu (Tuple[int]): The depth below the highest weight.
        words (List[Tuple]): The Verma basis, irreducible y-words of weight mu.
        gram (List[List]): The Gram matrix on the Verma basis.
        pivots (Tuple[int]): Positions of the words spanning the quotient.
        inverse (DomainMatrix): The inverse of the pivot block of gram.
    """
    mu: tuple
    words: list
    gram: list
    pivots: tuple
    inverse: object = None
    index: dict = field(default_factory=dict)

    @property
    def dimension(self):
        return len(self.pivots)


class SimpleModule:
    """ The simple module of a dominant integral highest weight.

    Args:
        ctx (AlgebraContext): The algebra.
        highest (Tuple): The highest weight in root coordinates.
        budget (int): The largest total size of the Verma weight spaces.
    Raises:
        ArgumentError: If the weight is not dominant integral.
        ResourceError: If the budget or the degree bound is exceeded.
        InvariantViolation: If the dimension disagrees with Weyl's formula.
    """

    def __init__(self, ctx, highest, budget=constants.DEFAULT_MODULE_BUDGET):
        self.ctx = ctx
        self.datum = ctx.datum
        self.highest = tuple(highest)
        if not self.datum.is_dominant_integral(self.highest):
            raise ArgumentError(f"{list(self.highest)} is not dominant integral")
        self.depth = sub(self.highest, self.datum.longest_image(self.highest))
        self._x_memo = {}
        self._matrices = {}
        self.spaces = self._build_spaces(budget)
        self.offsets, total = {}, 0
        for mu, space in self.spaces.items():
            self.offsets[mu] = total
            total += space.dimension
        self.dimension = total
        expected = weyl_dimension(self.datum, self.highest)
        if self.dimension != expected:
            raise InvariantViolation(
                f"L({list(self.highest)}) has dimension {self.dimension}, "
                f"Weyl's formula gives {expected}"
            )
        LOGGER.info(
            f"Simple module L({list(self.highest)}) of {self.datum.label}: "
            f"dimension {self.dimension} over {len(self.spaces)} weights"
        )

    # ----------- VERMA MODULE ----------
    def _torus_scalar(self, vector, mu):
        """ Returns q^(vector, lambda - mu), the action of tau(vector) on the
            weight space lambda - mu.
        """
        value = Fraction(self.datum.inner(vector, sub(self.highest, mu))) * 2
        assert value.denominator == 1, (f"Torus {vector} is not integral on weight {mu}")
        return spow(int(value))

    def _y_apply(self, i, vector):
        result = {}
        for word, c in vector.items():
            add_into(result, self.ctx.rewriting.normal_word((i,) + word), c)
        return result

    def _x_on_word(self, i, word):
        """ Returns x_i y_word v as a Verma vector, by moving x_i to the right. """
        key = (i, word)
        if key in self._x_memo:
            return self._x_memo[key]
        result = {}
        if word:
            j, rest = word[0], word[1:]
            result = self._y_apply(j, self._x_on_word(i, rest))
            if i == j:
                alpha = self.datum.simple_root(i)
                numerator = (
                    self._torus_scalar(alpha, self.ctx.root_sum(rest))
                    - ONE / self._torus_scalar(alpha, self.ctx.root_sum(rest))
                )
                add_into(result, {rest: numerator / self.ctx.q_difference(i)})
        self._x_memo[key] = result
        return result

    def _x_apply(self, i, vector):
        result = {}
        for word, c in vector.items():
            add_into(result, self._x_on_word(i, word), c)
        return result

    def apply(self, element, vector, mu):
        """ Returns element * vector for a Verma vector of weight lambda - mu.

        Args:
            element (Element): Any element of the algebra.
            vector (Dict[Tuple, FracElement]): Coefficients on y-words.
            mu (Tuple[int]): The depth of the vector.
        Returns:
            Dict[Tuple, FracElement]: The image, possibly of mixed depth.
        """
        result = {}
        for word, c in element.terms.items():
            image, depth = dict(vector), tuple(mu)
            for i in reversed(word.xs):
                image = self._x_apply(i, image)
                depth = sub(depth, self.datum.simple_root(i))
            scalar = self._torus_scalar(word.torus, depth) * c
            for i in reversed(word.ys):
                image = self._y_apply(i, image)
            add_into(result, image, scalar)
        return result

    def _gram_entry(self, left, right):
        """ Returns S(y_left v, y_right v), the v-coefficient of
            kappa(y_left) y_right v.
        """
        vector, depth = {right: ONE}, self.ctx.root_sum(right)
        for i in left:
            vector = self._x_apply(i, vector)
            depth = sub(depth, self.datum.simple_root(i))
            scalar = ONE / self._torus_scalar(self.datum.simple_root(i), depth)
            vector = {w: c * scalar for w, c in vector.items()}
        return vector.get((), ZERO)

    def _build_spaces(self, budget):
        ranges = [range(int(c) + 1) for c in self.depth]
        candidates = sorted(
            (mu for mu in product(*ranges)
             if self.datum.is_weight_of(self.highest, sub(self.highest, mu))),
            key=lambda mu: (ht(mu), mu),
        )
        spaces, total = {}, 0
        for mu in candidates:
            words = self.ctx.rewriting.irreducible_words(mu) if any(mu) else [()]
            total += len(words)
            if total > budget:
                raise ResourceError(
                    f"Verma weight spaces of L({list(self.highest)}) exceed the "
                    f"module budget {budget}",
                    degree=ht(mu),
                )
            gram = [[self._gram_entry(a, b) for b in words] for a in words]
            _, pivots = field_matrix(gram, len(words)).rref()
            if not pivots:
                continue
            block = field_matrix([[gram[a][b] for b in pivots] for a in pivots])
            spaces[mu] = WeightSpace(
                mu=mu,
                words=words,
                gram=gram,
                pivots=tuple(pivots),
                inverse=block.inv(),
                index={word: k for k, word in enumerate(words)},
            )
            LOGGER.debug(f"Weight space {list(mu)}: Verma {len(words)}, simple {len(pivots)}")
        return spaces

    # ----------- MATRICES ----------
    def weights(self):
        """ Returns the weights lambda - mu with their multiplicities. """
        return {sub(self.highest, mu): space.dimension for mu, space in self.spaces.items()}

    def _coordinates(self, vector, mu):
        """ Returns the coordinates in L(lambda) of a Verma vector of depth mu. """
        space = self.spaces.get(tuple(mu))
        if space is None or not vector:
            return None
        column = [ZERO] * len(space.words)
        for word, c in vector.items():
            column[space.index[word]] = c
        paired = [
            sum((space.gram[p][k] * column[k] for k in range(len(column)) if column[k]), ZERO)
            for p in space.pivots
        ]
        solved = space.inverse * field_matrix([[value] for value in paired], 1)
        return [row[0] for row in solved.to_list()]

    def element_matrix(self, element):
        """ Returns the matrix of an element on the basis of L(lambda). """
        entries = [[ZERO] * self.dimension for _ in range(self.dimension)]
        for mu, space in self.spaces.items():
            for column, p in enumerate(space.pivots):
                source = self.offsets[mu] + column
                image = self.apply(element, {space.words[p]: ONE}, mu)
                by_depth = {}
                for word, c in image.items():
                    by_depth.setdefault(self.ctx.root_sum(word), {})[word] = c
                for depth, vector in by_depth.items():
                    coordinates = self._coordinates(vector, depth)
                    if coordinates is None:
                        continue
                    for row, value in enumerate(coordinates):
                        entries[self.offsets[depth] + row][source] += value
        return field_matrix(entries, self.dimension)

    def generator_matrix(self, kind, i):
        """ Returns the matrix of x_i, y_i or t_i (kind ``x``, ``y``, ``t``). """
        key = (kind, i)
        if key not in self._matrices:
            element = {"x": self.ctx.x, "y": self.ctx.y, "t": self.ctx.t}[kind](i)
            self._matrices[key] = self.element_matrix(element)
        return self._matrices[key]

    def gram(self):
        """ Returns the form S on the basis of L(lambda), block diagonal by weight. """
        entries = [[ZERO] * self.dimension for _ in range(self.dimension)]
        for mu, space in self.spaces.items():
            start = self.offsets[mu]
            for a, p in enumerate(space.pivots):
                for b, r in enumerate(space.pivots):
                    entries[start + a][start + b] = space.gram[p][r]
        return field_matrix(entries, self.dimension)

    def identity(self):
        return DomainMatrix.eye(self.dimension, QDOMAIN)

    def zero_matrix(self):
        return DomainMatrix.zeros((self.dimension, self.dimension), QDOMAIN)

    def verify_relations(self):
        """ Returns the names of the defining relations that fail on the
            action matrices; empty when they all hold.
        """
        failures = []
        datum, ctx = self.datum, self.ctx
        x = [self.generator_matrix("x", i) for i in range(ctx.rank)]
        y = [self.generator_matrix("y", i) for i in range(ctx.rank)]
        t = [self.generator_matrix("t", i) for i in range(ctx.rank)]
        inverse = [self.element_matrix(ctx.t(i, -1)) for i in range(ctx.rank)]
        for i in range(ctx.rank):
            for j in range(ctx.rank):
                expected = self.zero_matrix()
                if i == j:
                    expected = (t[i] - inverse[i]) * (ONE / ctx.q_difference(i))
                if x[i] * y[j] - y[j] * x[i] != expected:
                    failures.append(f"[x{i + 1}, y{j + 1}]")
                scalar = ctx.q_form(datum.simple_root(i), datum.simple_root(j))
                if t[i] * x[j] * inverse[i] != x[j] * scalar:
                    failures.append(f"t{i + 1} x{j + 1} t{i + 1}^-1")
                if t[i] * y[j] * inverse[i] != y[j] * (ONE / scalar):
                    failures.append(f"t{i + 1} y{j + 1} t{i + 1}^-1")
                if i != j:
                    order = 1 - datum.cartan[i][j]
                    for name, z in (("x", x), ("y", y)):
                        total = self.zero_matrix()
                        for m in range(order + 1):
                            term = z[j]
                            for _ in range(order - m):
                                term = z[i] * term
                            for _ in range(m):
                                term = term * z[i]
                            coefficient = qbinom(order, m, datum.d(i)) * (1 if m % 2 == 0 else -1)
                            total = total + term * coefficient
                        if total != self.zero_matrix():
                            failures.append(f"Serre {name}{i + 1}{name}{j + 1}")
        return failures

    def to_dict(self):
        return {
            "highest_weight": list(map(str, self.highest)),
            "fundamental": list(map(str, self.datum.root_to_weight(self.highest))),
            "dimension": self.dimension,
            "weights": [
                {"weight": [str(c) for c in weight], "multiplicity": dimension}
                for weight, dimension in self.weights().items()
            ],
        }


def simple_module(ctx, highest, budget=constants.DEFAULT_MODULE_BUDGET):
    """ Returns L(highest) for a dominant integral weight in root coordinates. """
    return SimpleModule(ctx, highest, budget)


# ----------- INVARIANTS ----------
def invariant_conditions(pair, exponents=None):
    """ Returns (element, counit) pairs whose joint eigenvectors are the
        invariants of B: B_i outside pi_theta, x_j, y_j and t_j on pi_theta
        and the Theta-fixed torus basis.
    """
    ctx = pair.ctx
    conditions = []
    for i, b in enumerate(pair.generators):
        if i not in pair.levi:
            b = rescale(b, exponents) if exponents else b
            conditions.append((b, counit(b)))
    for j in pair.levi:
        conditions.extend([(ctx.x(j), ZERO), (ctx.y(j), ZERO), (ctx.t(j), ONE)])
    for vector in pair.torus_basis:
        conditions.append((ctx.torus(vector), ONE))
    return conditions


@dataclass
class InvariantSpace:
    dimension: int
    basis: list

    def to_dict(self):
        return {
            "dimension": self.dimension,
            "basis": [[format_qrat(c) for c in vector] for vector in self.basis],
        }


def invariants(module, pair, exponents=None):
    """ Returns the space of v in L(lambda) with b v = epsilon(b) v for all
        generators b of B, solved exactly.
    """
    identity = module.identity()
    blocks = [
        module.element_matrix(element) - identity * value
        for element, value in invariant_conditions(pair, exponents)
    ]
    if module.dimension == 0:
        return InvariantSpace(0, [])
    if not blocks:
        basis = identity.to_list()
        return InvariantSpace(len(basis), basis)
    stacked = blocks[0].vstack(*blocks[1:]) if len(blocks) > 1 else blocks[0]
    basis = stacked.nullspace().to_list()
    LOGGER.info(f"Invariants of L({list(module.highest)}): dimension {len(basis)}")
    return InvariantSpace(len(basis), basis)


@dataclass
class SphericalReport:
    """ The invariant dimension of L(lambda) against the weight criterion. """
    weight: tuple
    dimension: int
    weight_test: bool

    @property
    def spherical(self):
        return self.dimension == 1

    @property
    def passed(self):
        return self.dimension <= 1 and self.spherical == self.weight_test

    def to_dict(self):
        return {
            "weight": [str(c) for c in self.weight],
            "spherical": self.spherical,
            "invariant_dimension": self.dimension,
            "weight_test": self.weight_test,
            "passed": self.passed,
        }


def spherical_check(module, pair):
    """ Returns the dimension of the invariants of L(lambda) next to the
        spherical weight test; the two agree and the dimension is at most 1.
    """
    dimension = invariants(module, pair).dimension
    test = spherical_weight_test(module.highest, module.datum, pair.theta_data.theta)
    report = SphericalReport(module.highest, dimension, test)
    if not report.passed:
        LOGGER.error(
            f"L({list(module.highest)}) has {dimension} invariants but the weight "
            f"test says {test}"
        )
    return report


# ----------- POSITIVITY ----------
@dataclass
class PositivityReport:
    spaces: list

    @property
    def passed(self):
        return all(space["positive"] for space in self.spaces)

    def to_dict(self):
        return {"passed": self.passed, "spaces": self.spaces}


def shapovalov_positivity(module):
    """ Returns the signs of the norms of an orthogonalized basis of every
        weight space, the pivots of an LU decomposition of its Gram block.
    """
    spaces = []
    for mu, space in module.spaces.items():
        block = field_matrix([[space.gram[a][b] for b in space.pivots] for a in space.pivots])
        _, upper, swaps = block.lu()
        entries = upper.to_list()
        norms = [entries[k][k] for k in range(space.dimension)]
        signs = [sign(norm) for norm in norms]
        spaces.append({
            "weight": [str(c) for c in sub(module.highest, mu)],
            "norms": [format_qrat(n) for n in norms],
            "positive": not swaps and all(s is Sign.POSITIVE for s in signs),
        })
    return PositivityReport(spaces)


# ----------- REAL FORMS ----------
def rescale(element, exponents):
    """ Returns the image of an element under x_i -> s^e_i x_i and
        y_i -> s^-e_i y_i, a Hopf algebra automorphism fixing the torus.
    """
    ctx = element.ctx
    terms = {}
    for word, c in element.terms.items():
        power = sum(exponents.get(i, 0) for i in word.xs) - sum(exponents.get(i, 0) for i in word.ys)
        terms[word] = c * spow(power)
    return ctx.element(terms)


def _proportional(a, b):
    if not a or not b or set(a.terms) != set(b.terms):
        return False
    word = next(iter(b.terms))
    return a == b * (a.terms[word] / b.terms[word])


def _kappa_partner(pair, image, scaled):
    """ Returns k when image is a scalar multiple of scaled[k] tau(l) for a
        Theta-fixed l, None otherwise.
    """
    ctx, theta = pair.ctx, pair.theta_data.theta
    for k, b in scaled.items():
        alpha = ctx.datum.simple_root(k)
        for word in image.terms:
            if word.ys != (k,) or word.xs:
                continue
            shift = sub(word.torus, alpha)
            if theta.apply(shift) != shift:
                continue
            if _proportional(image, b * ctx.torus(shift)):
                return k
    return None


@dataclass
class ScalingResult:
    exponents: dict = None
    partners: dict = field(default_factory=dict)

    @property
    def found(self):
        return self.exponents is not None

    def to_dict(self):
        if not self.found:
            return {"found": False, "result": "NotFound"}
        return {
            "found": True,
            "exponents": {str(i + 1): e for i, e in sorted(self.exponents.items())},
            "scalars": {str(i + 1): format_qrat(spow(e)) for i, e in sorted(self.exponents.items())},
            "kappa_partners": {f"B{i + 1}": f"B{k + 1}" for i, k in sorted(self.partners.items())},
        }


def find_real_form_scaling(pair, bound=constants.SCALING_SEARCH_BOUND):
    """ Returns exponents e_i in [-bound, bound] such that kappa maps every
        rescaled generator B_i into a scalar multiple of a rescaled B_k times
        a Theta-fixed torus element, searching smallest exponents first.
        The Levi indices keep e = 0; kappa swaps x_j and y_j t_j there.
    """
    outside = pair.theta_data.outside()
    images = {i: kappa(pair.generators[i]) for i in outside}
    candidates = sorted(
        product(range(-bound, bound + 1), repeat=len(outside)),
        key=lambda e: (sum(abs(c) for c in e), e),
    )
    for values in candidates:
        exponents = dict(zip(outside, values))
        inverse = {i: -e for i, e in exponents.items()}
        scaled = {i: rescale(pair.generators[i], exponents) for i in outside}
        partners = {}
        for i in outside:
            # kappa(rescale(b, e)) = rescale(kappa(b), -e)
            k = _kappa_partner(pair, rescale(images[i], inverse), scaled)
            if k is None:
                break
            partners[i] = k
        else:
            LOGGER.info(f"Real form scaling found: {exponents}")
            return ScalingResult(exponents=exponents, partners=partners)
    LOGGER.warning(f"No real form scaling with exponents in [-{bound}, {bound}]")
    return ScalingResult()


def scaled_generators(pair, exponents):
    """ Returns the named generators of the rescaled coideal subalgebra. """
    ctx = pair.ctx
    named = [
        (f"B{i + 1}", rescale(b, exponents))
        for i, b in enumerate(pair.generators) if i not in pair.levi
    ]
    for j in pair.levi:
        named.append((f"x{j + 1}", ctx.x(j)))
        named.append((f"y{j + 1} t{j + 1}", ctx.word(ys=(j,), torus=ctx.datum.simple_root(j))))
    for vector in pair.torus_basis:
        named.append((f"K{list(vector)}", ctx.torus(vector)))
    return named


@dataclass
class UnitaryReport:
    contravariant: dict
    positive: bool
    symmetric: bool
    kappa_stable: bool

    @property
    def passed(self):
        return (
            self.kappa_stable and self.positive and self.symmetric
            and all(self.contravariant.values())
        )

    def to_dict(self):
        return {
            "passed": self.passed,
            "kappa_stable": self.kappa_stable,
            "positive": self.positive,
            "symmetric": self.symmetric,
            "contravariant": self.contravariant,
        }


def unitary_check(module, pair, scaling):
    """ Returns the unitarity checks of L(lambda) for the rescaled coideal
        subalgebra: S(b v, w) = S(v, kappa(b) w) on every generator,
        positive norms, a symmetric form and kappa-stability of the
        generator set.
    """
    gram = module.gram()
    symmetric = gram == gram.transpose()
    positive = shapovalov_positivity(module).passed
    if not scaling.found:
        return UnitaryReport({}, positive, symmetric, kappa_stable=False)
    contravariant = {}
    for name, b in scaled_generators(pair, scaling.exponents):
        left = module.element_matrix(b).transpose() * gram
        right = gram * module.element_matrix(kappa(b))
        contravariant[name] = left == right
    return UnitaryReport(contravariant, positive, symmetric, kappa_stable=True)


@dataclass
class ReducibilityWitness:
    invariant_dimension: int
    complement_dimension: int
    stable: dict

    @property
    def passed(self):
        return all(self.stable.values())

    def to_dict(self):
        return {
            "passed": self.passed,
            "invariant_dimension": self.invariant_dimension,
            "complement_dimension": self.complement_dimension,
            "stable": self.stable,
        }


def complete_reducibility_witness(module, pair, scaling):
    """ Returns the check that the S-orthogonal complement of the invariants
        of the rescaled coideal subalgebra is stable under its generators.
    """
    exponents = scaling.exponents if scaling.found else {}
    space = invariants(module, pair, exponents)
    if not space.dimension:
        return ReducibilityWitness(0, module.dimension, {})
    gram = module.gram()
    rows = field_matrix(space.basis, module.dimension) * gram
    complement = rows.nullspace()
    stable = {}
    for name, b in scaled_generators(pair, exponents):
        image = rows * module.element_matrix(b) * complement.transpose()
        stable[name] = image.is_zero_matrix
    return ReducibilityWitness(space.dimension, complement.shape[0], stable)
