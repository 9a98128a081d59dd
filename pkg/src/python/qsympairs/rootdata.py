"""
    Root systems, lattice involutions and the weight tests used by quantum
    symmetric pairs.

    Vectors are tuples of coordinates in the basis of simple roots. Weights
    that are not in the root lattice use ``Fraction`` coordinates; helpers
    convert to and from fundamental-weight coordinates.
"""
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd

from cachetools import cached
from sympy import Matrix, Rational

from qsympairs.errors import ArgumentError, InvariantViolation, ValidationError
from qsympairs.logging import LOGGER


POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

_LABEL_RE = re.compile(r"^([A-Ga-g])(\d+)$")


def ht(gamma):
    """ Returns the height of a root-lattice vector (sum of its coordinates).

    Args:
        gamma (Tuple[int]): Coordinates in the basis of simple roots.
    Returns:
        int: The height.
    """
    return sum(gamma)


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a):
    return tuple(c * x for x in a)


def zero(n):
    return (0,) * n


def unit(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def is_nonnegative(vector):
    return all(c >= 0 for c in vector)


def to_rational(value):
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def from_rational(value):
    return _normalize(Fraction(int(value.p), int(value.q)))


def _normalize(value):
    value = Fraction(value)
    return int(value) if value.denominator == 1 else value


def cartan_matrix(series, rank):
    """ Returns the Cartan matrix of a simple type, a_ij = 2(a_i,a_j)/(a_i,a_i).

    Args:
        series (str): One of A-G.
        rank (int): The rank.
    Returns:
        Tuple[Tuple[int]]: The Cartan matrix, Bourbaki numbering.
    Raises:
        ValidationError: If the series and rank do not name a finite type.
    """
    series = series.upper()
    valid = {
        "A": rank >= 1, "B": rank >= 2, "C": rank >= 2, "D": rank >= 3,
        "E": rank in (6, 7, 8), "F": rank == 4, "G": rank == 2,
    }
    if not valid.get(series, False):
        raise ValidationError(f"No finite type {series}{rank}")
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if series == "G":
        bond(0, 1, -3, -1)
    elif series == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif series == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, rank - 1):
            bond(i, i + 1)
    else:
        for i in range(rank - 1):
            bond(i, i + 1)
        if series == "B":
            bond(rank - 2, rank - 1, -1, -2)
        elif series == "C":
            bond(rank - 2, rank - 1, -2, -1)
        elif series == "D":
            a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0
            bond(rank - 3, rank - 1)
    return tuple(tuple(row) for row in a)


def parse_label(label):
    """ Returns the simple components named by a type label such as ``A2``,
        ``A1xA1`` or ``B2+A1``.

    Returns:
        List[Tuple[str, int]]: (series, rank) per component.
    Raises:
        ValidationError: If the label cannot be read.
    """
    parts = re.split(r"\s*[x×+*]\s*", label.strip())
    components = []
    for part in parts:
        match = _LABEL_RE.match(part)
        if not match:
            raise ValidationError(f"Cannot read Cartan type label: {label!r}")
        components.append((match.group(1).upper(), int(match.group(2))))
    return components


def block_diagonal(blocks):
    size = sum(len(b) for b in blocks)
    result = [[0] * size for _ in range(size)]
    offset = 0
    for block in blocks:
        for i, row in enumerate(block):
            for j, value in enumerate(row):
                result[offset + i][offset + j] = value
        offset += len(block)
    return tuple(tuple(row) for row in result)


class LatticeMap:
    """ An integer matrix acting on root-lattice coordinates. Column j is
        the image of the j-th simple root.
    """

    def __init__(self, rows):
        self.rows = tuple(tuple(int(v) for v in row) for row in rows)
        self.size = len(self.rows)

    @classmethod
    def identity(cls, n):
        return cls([unit(n, i) for i in range(n)])

    @classmethod
    def from_columns(cls, columns):
        n = len(columns)
        return cls([[columns[j][i] for j in range(n)] for i in range(n)])

    @classmethod
    def permutation(cls, perm):
        n = len(perm)
        return cls.from_columns([unit(n, perm[j]) for j in range(n)])

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def apply(self, vector):
        return tuple(
            _normalize(sum(Fraction(a) * v for a, v in zip(row, vector)))
            for row in self.rows
        )

    def compose(self, other):
        """ Returns self after other. """
        return LatticeMap.from_columns(
            [self.apply(other.column(j)) for j in range(self.size)]
        )

    def negated(self):
        return LatticeMap([[-v for v in row] for row in self.rows])

    def is_identity(self):
        return self == LatticeMap.identity(self.size)

    def is_involution(self):
        return self.compose(self).is_identity()

    def permutes(self, roots):
        roots = set(roots)
        return all(self.apply(beta) in roots for beta in roots)

    def to_list(self):
        return [list(row) for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, LatticeMap) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"LatticeMap({self.to_list()})"


class RootDatum:
    """ A finite root system given by its Cartan matrix, with the symmetrized
        form normalised so that short roots have squared length 2.
    """

    def __init__(self, cartan, label=None, components=None):
        self.cartan = tuple(tuple(int(a) for a in row) for row in cartan)
        self.rank = len(self.cartan)
        self.label = label or "custom"
        self.components = components
        self._validate()
        self.lengths = self._symmetrize()
        self.form = tuple(
            tuple(self.cartan[i][j] * self.lengths[i] // 2 for j in range(self.rank))
            for i in range(self.rank)
        )
        self._check_positive_definite()
        self.positive_roots = self._enumerate_positive_roots()
        self.roots = frozenset(self.positive_roots) | frozenset(
            scale(-1, beta) for beta in self.positive_roots
        )
        self._check_root_count()

    @classmethod
    def from_label(cls, label):
        """ Returns the datum of a (possibly reducible) type label. """
        components = parse_label(label)
        blocks = [cartan_matrix(series, rank) for series, rank in components]
        name = "x".join(f"{series}{rank}" for series, rank in components)
        return cls(block_diagonal(blocks), label=name, components=components)

    def _validate(self):
        n = self.rank
        if n == 0 or any(len(row) != n for row in self.cartan):
            raise ValidationError("Cartan matrix must be a nonempty square matrix")
        for i in range(n):
            if self.cartan[i][i] != 2:
                raise ValidationError(f"Diagonal entry a_{i + 1}{i + 1} must be 2")
            for j in range(n):
                if i == j:
                    continue
                if self.cartan[i][j] > 0:
                    raise ValidationError(
                        f"Off-diagonal entry a_{i + 1}{j + 1} must be nonpositive"
                    )
                if (self.cartan[i][j] == 0) != (self.cartan[j][i] == 0):
                    raise ValidationError(
                        f"a_{i + 1}{j + 1} and a_{j + 1}{i + 1} must vanish together"
                    )

    def _symmetrize(self):
        n = self.rank
        lengths = [None] * n
        for start in range(n):
            if lengths[start] is not None:
                continue
            lengths[start] = Fraction(1)
            component, stack = [start], [start]
            while stack:
                i = stack.pop()
                for j in range(n):
                    if i == j or self.cartan[i][j] == 0:
                        continue
                    expected = lengths[i] * self.cartan[i][j] / self.cartan[j][i]
                    if lengths[j] is None:
                        lengths[j] = expected
                        component.append(j)
                        stack.append(j)
                    elif lengths[j] != expected:
                        raise ValidationError("Cartan matrix is not symmetrizable")
            shortest = min(lengths[i] for i in component)
            for i in component:
                lengths[i] = lengths[i] * 2 / shortest
        if any(length.denominator != 1 for length in lengths):
            raise ValidationError("Cartan matrix has non-integral root lengths")
        return tuple(int(length) for length in lengths)

    def _check_positive_definite(self):
        gram = Matrix(self.form)
        for k in range(1, self.rank + 1):
            if gram[:k, :k].det() <= 0:
                raise ValidationError("Cartan matrix is not of finite type")

    def _enumerate_positive_roots(self):
        n = self.rank
        found = {unit(n, i) for i in range(n)}
        frontier = list(found)
        while frontier:
            beta = frontier.pop()
            for i in range(n):
                image = self.reflect(beta, i)
                if is_nonnegative(image) and image not in found:
                    found.add(image)
                    frontier.append(image)
        return tuple(sorted(found, key=lambda beta: (ht(beta), tuple(-c for c in beta))))

    def _check_root_count(self):
        if not self.components:
            return
        expected = sum(
            POSITIVE_ROOT_COUNTS[series](rank) for series, rank in self.components
        )
        if expected != len(self.positive_roots):
            raise InvariantViolation(
                f"{self.label}: found {len(self.positive_roots)} positive roots, "
                f"expected {expected}"
            )

    # ----------- FORM ----------
    def inner(self, a, b):
        """ Returns the symmetrized inner product (a, b). """
        total = sum(
            Fraction(a[i]) * self.form[i][j] * Fraction(b[j])
            for i in range(self.rank) for j in range(self.rank)
            if a[i] and b[j]
        )
        return _normalize(total)

    def d(self, i):
        """ Returns d_i with q_i = q^{d_i}, i.e. (a_i, a_i)/2. """
        return self.lengths[i] // 2

    def coroot_pairing(self, vector, i):
        """ Returns <vector, a_i^v> = 2(vector, a_i)/(a_i, a_i). """
        return _normalize(Fraction(2 * self.inner(vector, self.simple_root(i)), self.lengths[i]))

    def simple_root(self, i):
        return unit(self.rank, i)

    def reflect(self, vector, i):
        pairing = self.coroot_pairing(vector, i)
        return tuple(
            _normalize(c - pairing) if k == i else c for k, c in enumerate(vector)
        )

    def reflection_map(self, i):
        return LatticeMap.from_columns(
            [self.reflect(self.simple_root(j), i) for j in range(self.rank)]
        )

    def is_root(self, vector):
        return tuple(vector) in self.roots

    def zero(self):
        return zero(self.rank)

    # ----------- WEIGHTS ----------
    def root_to_weight(self, vector):
        """ Returns fundamental-weight coordinates of a root-coordinate vector. """
        return tuple(self.coroot_pairing(vector, i) for i in range(self.rank))

    def weight_to_root(self, weight):
        """ Returns root coordinates of a vector given in fundamental weights. """
        solution = Matrix(self.cartan).solve(Matrix([to_rational(w) for w in weight]))
        return tuple(_normalize(Fraction(int(c.p), int(c.q))) for c in solution)

    def fundamental_weight(self, i):
        return self.weight_to_root(unit(self.rank, i))

    def rho(self):
        return self.weight_to_root((1,) * self.rank)

    def is_dominant_integral(self, vector):
        weight = self.root_to_weight(vector)
        return all(isinstance(w, int) and w >= 0 for w in weight)

    def dominant_conjugate(self, vector):
        vector = tuple(vector)
        changed = True
        while changed:
            changed = False
            for i in range(self.rank):
                if self.coroot_pairing(vector, i) < 0:
                    vector = self.reflect(vector, i)
                    changed = True
        return vector

    def longest_image(self, weight):
        """ Returns w0(weight) for a dominant weight, by descending to the
            antidominant element of its orbit.
        """
        vector = tuple(weight)
        changed = True
        while changed:
            changed = False
            for i in range(self.rank):
                if self.coroot_pairing(vector, i) > 0:
                    vector = self.reflect(vector, i)
                    changed = True
        return vector

    def is_weight_of(self, highest, vector):
        """ Returns true if vector is a weight of the simple module with the
            given dominant highest weight.
        """
        difference = sub(highest, vector)
        if not all(Fraction(c).denominator == 1 and c >= 0 for c in difference):
            return False
        gap = sub(highest, self.dominant_conjugate(vector))
        return all(Fraction(c).denominator == 1 and c >= 0 for c in gap)

    # ----------- WEYL GROUP ----------
    def parabolic_longest_word(self, subset):
        """ Returns a reduced word for the longest element of the parabolic
            Weyl group generated by the given simple reflections, by greedy
            descent: extend w by s_i while w(a_i) is still positive.
        """
        subset = sorted(subset)
        word, current = [], LatticeMap.identity(self.rank)
        while True:
            for i in subset:
                image = current.apply(self.simple_root(i))
                if is_nonnegative(image):
                    word.append(i)
                    current = current.compose(self.reflection_map(i))
                    break
            else:
                return tuple(word)

    def word_map(self, word):
        current = LatticeMap.identity(self.rank)
        for i in word:
            current = current.compose(self.reflection_map(i))
        return current

    def diagram_automorphisms(self):
        """ Returns all permutations d of the simple roots with a_{d(i)d(j)} = a_ij. """
        n, found = self.rank, []

        def extend(partial):
            k = len(partial)
            if k == n:
                found.append(tuple(partial))
                return
            for image in range(n):
                if image in partial:
                    continue
                if self.cartan[image][image] != self.cartan[k][k]:
                    continue
                if all(
                    self.cartan[partial[j]][image] == self.cartan[j][k]
                    and self.cartan[image][partial[j]] == self.cartan[k][j]
                    for j in range(k)
                ):
                    extend(partial + [image])

        extend([])
        return found

    def is_diagram_automorphism(self, perm):
        n = self.rank
        if sorted(perm) != list(range(n)):
            return False
        return all(
            self.cartan[perm[i]][perm[j]] == self.cartan[i][j]
            for i in range(n) for j in range(n)
        )

    def flip(self):
        """ Returns the unique nontrivial diagram automorphism.

        Raises:
            ValidationError: If there is none, or more than one.
        """
        nontrivial = [
            perm for perm in self.diagram_automorphisms()
            if perm != tuple(range(self.rank))
        ]
        if len(nontrivial) != 1:
            raise ValidationError(
                f"{self.label} has {len(nontrivial)} nontrivial diagram "
                f"automorphisms; give the permutation explicitly"
            )
        return nontrivial[0]

    def __eq__(self, other):
        return isinstance(other, RootDatum) and self.cartan == other.cartan

    def __hash__(self):
        return hash(self.cartan)

    def __repr__(self):
        return f"RootDatum({self.label})"


def cartan_init(source):
    """ Returns a RootDatum from a type label or an explicit Cartan matrix.

    Args:
        source (Union[str, Sequence[Sequence[int]]]): ``"A2"``, ``"A1xA1"``
            or a Cartan matrix.
    Returns:
        RootDatum: The validated datum with its positive roots.
    Raises:
        ValidationError: For a non-Cartan or non-finite matrix.
    """
    if isinstance(source, RootDatum):
        return source
    if isinstance(source, str):
        datum = RootDatum.from_label(source)
    else:
        datum = RootDatum(source)
        datum.label = identify_cartan(datum.cartan)
    LOGGER.debug(f"Root datum {datum.label}: {len(datum.positive_roots)} positive roots")
    return datum


def _equivalent(a, b):
    """ Returns true if two Cartan matrices agree up to a relabelling. """
    n = len(a)
    if n != len(b):
        return False

    def extend(partial):
        k = len(partial)
        if k == n:
            return True
        for image in range(n):
            if image in partial:
                continue
            if all(
                b[partial[j]][image] == a[j][k] and b[image][partial[j]] == a[k][j]
                for j in range(k)
            ):
                if extend(partial + [image]):
                    return True
        return False

    return extend([])


def identify_cartan(cartan):
    """ Returns a type label for a Cartan matrix, e.g. ``B2`` or ``A1xA1``.
        Components are found from the Dynkin graph and compared with the
        catalogue of simple types.
    """
    n = len(cartan)
    seen, labels = set(), []
    for start in range(n):
        if start in seen:
            continue
        component, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            component.append(i)
            for j in range(n):
                if j not in seen and cartan[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        component.sort()
        block = [[cartan[i][j] for j in component] for i in component]
        labels.append(_identify_simple(block))
    return "x".join(labels)


def _identify_simple(block):
    rank = len(block)
    for series in "ABCDEFG":
        try:
            candidate = cartan_matrix(series, rank)
        except ValidationError:
            continue
        if _equivalent(block, candidate):
            return f"{series}{rank}"
    return f"?{rank}"


# ----------- LATTICE LINEAR ALGEBRA ----------
def integer_kernel(rows):
    """ Returns a basis of primitive integer vectors of the rational kernel
        of an integer matrix.
    """
    matrix = Matrix(rows)
    basis = []
    for vector in matrix.nullspace():
        denominators = [int(Rational(c).q) for c in vector]
        lcm = reduce(lambda x, y: x * y // gcd(x, y), denominators, 1)
        integral = [int(Rational(c) * lcm) for c in vector]
        divisor = reduce(gcd, (abs(c) for c in integral if c), 0) or 1
        integral = tuple(c // divisor for c in integral)
        first = next(c for c in integral if c)
        basis.append(integral if first > 0 else tuple(-c for c in integral))
    return basis


def solve_coordinates(basis, vector):
    """ Returns coordinates of vector in the given (independent) basis. """
    if not basis:
        return ()
    matrix = Matrix([[to_rational(b[i]) for b in basis] for i in range(len(vector))])
    target = Matrix([to_rational(v) for v in vector])
    solution, params = matrix.gauss_jordan_solve(target)
    return tuple(_normalize(Fraction(int(c.p), int(c.q))) for c in solution)


def fixed_lattice_basis(theta):
    """ Returns an integer basis of {l : theta(l) = l}. """
    n = theta.size
    rows = [[theta.rows[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    return integer_kernel(rows)


def minus_lattice_basis(theta):
    """ Returns an integer basis of the (-1)-eigenspace of theta. """
    n = theta.size
    rows = [[theta.rows[i][j] + (1 if i == j else 0) for j in range(n)] for i in range(n)]
    return integer_kernel(rows)


def is_theta_fixed(theta, vector):
    return theta.apply(vector) == tuple(vector)


# ----------- INVOLUTIONS ----------
def theta_lattice(datum, pi_theta, d):
    """ Returns the lattice involution Theta = -w0 d.

    Args:
        datum (RootDatum): The root datum.
        pi_theta (Iterable[int]): Indices of the simple roots fixed by Theta.
        d (Sequence[int]): A diagram automorphism as a permutation of indices.
    Returns:
        LatticeMap: Theta, an involutive automorphism of the root system.
    Raises:
        ValidationError: If d is not a diagram automorphism extending -w0 on
            pi_theta, or Theta is not an involution fixing pi_theta.
    """
    pi_theta = sorted(set(pi_theta))
    d = tuple(d)
    if any(i < 0 or i >= datum.rank for i in pi_theta):
        raise ValidationError(f"pi_theta indices out of range: {[i + 1 for i in pi_theta]}")
    if not datum.is_diagram_automorphism(d):
        raise ValidationError(f"{[i + 1 for i in d]} is not a diagram automorphism")
    w0 = datum.word_map(datum.parabolic_longest_word(pi_theta))
    for i in pi_theta:
        if w0.apply(datum.simple_root(i)) != scale(-1, datum.simple_root(d[i])):
            raise ValidationError(
                f"d must agree with -w0 on pi_theta; fails at index {i + 1}"
            )
    theta = w0.compose(LatticeMap.permutation(d)).negated()
    if not theta.is_involution():
        raise ValidationError("Theta = -w0 d does not square to the identity")
    for i in pi_theta:
        if theta.apply(datum.simple_root(i)) != datum.simple_root(i):
            raise ValidationError(f"Theta does not fix alpha_{i + 1}")
    if not theta.permutes(datum.roots):
        raise ValidationError("Theta does not permute the roots")
    return theta


def theta_fixed_simple(datum, theta):
    return tuple(
        i for i in range(datum.rank)
        if theta.apply(datum.simple_root(i)) == datum.simple_root(i)
    )


def in_positive_span(vector, subset):
    """ Returns true if vector is an N-combination of the simple roots in subset. """
    return all(
        Fraction(c).denominator == 1 and c >= 0 and (c == 0 or k in subset)
        for k, c in enumerate(vector)
    )


def satake_permutation(datum, theta):
    """ Returns the permutation p of the simple roots outside pi_theta with
        Theta(-a_i) - a_p(i) in the positive span of pi_theta.

    Raises:
        ValidationError: If p is not uniquely defined or not an involution.
    """
    pi_theta = set(theta_fixed_simple(datum, theta))
    outside = [i for i in range(datum.rank) if i not in pi_theta]
    p = {}
    for i in outside:
        target = theta.apply(scale(-1, datum.simple_root(i)))
        matches = [
            j for j in outside
            if in_positive_span(sub(target, datum.simple_root(j)), pi_theta)
        ]
        if len(matches) != 1:
            raise ValidationError(
                f"theta(-alpha_{i + 1}) - alpha_j must lie in the positive span "
                f"of pi_theta for exactly one j; found {[j + 1 for j in matches]}"
            )
        p[i] = matches[0]
    if any(p[p[i]] != i for i in p):
        raise ValidationError("The permutation p is not an involution")
    return p


# ----------- RESTRICTED ROOTS ----------
@dataclass(frozen=True)
class RestrictedComponent:
    label: str
    simple: tuple
    roots: tuple
    cartan: tuple

    @property
    def is_bc(self):
        return self.label.startswith("BC")


@dataclass(frozen=True)
class RestrictedSystem:
    roots: tuple
    multiplicities: dict
    basis: tuple
    coordinates: dict
    simple: tuple
    components: tuple
    variation_pairs: tuple
    support: frozenset = field(default=frozenset())

    @property
    def labels(self):
        return [component.label for component in self.components]

    @property
    def is_reduced(self):
        return not any(component.is_bc for component in self.components)


def restriction(theta, vector):
    """ Returns (vector - theta(vector)) / 2, the restriction to the
        (-1)-eigenspace of theta.
    """
    image = theta.apply(vector)
    return tuple(_normalize(Fraction(a - b) / 2) for a, b in zip(vector, image))


def restricted_roots(datum, theta):
    """ Returns the restricted root system of theta with its components
        classified, BC components flagged and the index pairs {r, p(r)}
        that admit a one-parameter family of coideal subalgebras.

    Args:
        datum (RootDatum): The root datum.
        theta (LatticeMap): A valid lattice involution.
    Returns:
        RestrictedSystem: The classified restricted roots.
    """
    n = datum.rank
    pi_theta = set(theta_fixed_simple(datum, theta))
    multiplicities = {}
    for beta in datum.positive_roots:
        image = restriction(theta, beta)
        if any(image):
            multiplicities[image] = multiplicities.get(image, 0) + 1
    positive = tuple(sorted(multiplicities, key=lambda v: (sum(v), v)))
    support = frozenset(positive) | frozenset(scale(-1, v) for v in positive)
    basis = tuple(minus_lattice_basis(theta))
    coordinates = {v: solve_coordinates(basis, v) for v in positive}

    simple = []
    for i in range(n):
        if i in pi_theta:
            continue
        image = restriction(theta, datum.simple_root(i))
        if image not in simple:
            simple.append(image)
    simple = tuple(simple)

    expansions = {v: solve_coordinates(simple, v) for v in positive}
    components = []
    unassigned = set(range(len(simple)))
    while unassigned:
        start = min(unassigned)
        members, stack = {start}, [start]
        while stack:
            a = stack.pop()
            for b in list(unassigned - members):
                if datum.inner(simple[a], simple[b]) != 0:
                    members.add(b)
                    stack.append(b)
        unassigned -= members
        members = tuple(sorted(members))
        roots = tuple(
            v for v in positive
            if all(c == 0 or k in members for k, c in enumerate(expansions[v]))
        )
        cartan = tuple(
            tuple(
                _normalize(Fraction(2 * datum.inner(simple[a], simple[b]))
                           / datum.inner(simple[a], simple[a]))
                for b in members
            )
            for a in members
        )
        nonreduced = any(scale(2, v) in multiplicities for v in roots)
        if nonreduced:
            label = f"BC{len(members)}"
        else:
            label = _identify_simple([list(row) for row in cartan])
        components.append(RestrictedComponent(label, members, roots, cartan))

    p = satake_permutation(datum, theta)
    pairs = tuple(
        (r, p[r]) for r in sorted(p)
        if p[r] != r and r < p[r]
        and datum.inner(datum.simple_root(r), theta.apply(datum.simple_root(r))) != 0
    )
    LOGGER.debug(
        f"Restricted roots of {datum.label}: {[c.label for c in components]}, "
        f"variation pairs {[(r + 1, s + 1) for r, s in pairs]}"
    )
    return RestrictedSystem(
        roots=positive,
        multiplicities=multiplicities,
        basis=basis,
        coordinates=coordinates,
        simple=simple,
        components=tuple(components),
        variation_pairs=pairs,
        support=support,
    )


# ----------- WEIGHT TESTS ----------
def spherical_weight_test(weight, datum, theta):
    """ Returns true if the dominant weight is spherical for theta: it is
        orthogonal to the theta-fixed lattice and its restriction pairs
        integrally with every restricted root.

    Args:
        weight (Tuple): A dominant integral weight in root coordinates.
        datum (RootDatum): The root datum.
        theta (LatticeMap): The lattice involution.
    Returns:
        bool: True if the weight is spherical.
    Raises:
        ArgumentError: If the weight is not dominant integral.
    """
    weight = tuple(weight)
    if not datum.is_dominant_integral(weight):
        raise ArgumentError(f"Weight {weight} is not dominant integral")
    for vector in fixed_lattice_basis(theta):
        if datum.inner(weight, vector) != 0:
            return False
    restricted = restriction(theta, weight)
    for beta in restricted_roots(datum, theta).roots:
        ratio = Fraction(datum.inner(restricted, beta)) / Fraction(datum.inner(beta, beta))
        if ratio.denominator != 1:
            return False
    return True


def flocal_torus_test(vector, datum):
    """ Returns true if (vector, a_i)/(a_i, a_i) is a nonpositive integer for
        every simple root, the criterion for tau(vector) to be ad-locally finite.
    """
    for i in range(datum.rank):
        ratio = Fraction(datum.inner(vector, datum.simple_root(i))) / datum.lengths[i]
        if ratio.denominator != 1 or ratio > 0:
            return False
    return True


@cached(cache={})
def _partitions(mu, roots):
    if not any(mu):
        return 1
    if not roots:
        return 0
    first, rest = roots[0], roots[1:]
    total = _partitions(mu, rest)
    remainder = sub(mu, first)
    if is_nonnegative(remainder):
        total += _partitions(remainder, roots)
    return total


def kostant_partitions(mu, datum):
    """ Returns the number of ways to write mu as an N-combination of
        positive roots.

    Args:
        mu (Tuple[int]): A vector in the positive root cone.
        datum (RootDatum): The root datum.
    Returns:
        int: The Kostant partition count.
    """
    mu = tuple(mu)
    if not is_nonnegative(mu):
        raise ArgumentError(f"{mu} is not in the positive root cone")
    return _partitions(mu, datum.positive_roots)
