"""
    Quantum symmetric pairs: the coideal subalgebra B generated by the Levi
    part, the Theta-fixed torus and the elements
    B_i = y_i t_i + c_i theta~(y_i) t_i (+ s_i t_i), with its coideal
    certificates, deformed Serre relations and q = 1 specialization.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from qsympairs import classical
from qsympairs.adjoint import adjoint_left, adjoint_right
from qsympairs.constants import Side
from qsympairs.errors import ArgumentError, InvariantViolation, PoleError, ValidationError
from qsympairs.filtrations import project_coset, support, tip
from qsympairs.hopf import TensorElement, coproduct, counit
from qsympairs.involution import theta_tilde_y
from qsympairs.linalg import in_span, rank
from qsympairs.logging import LOGGER
from qsympairs.parser import parse_qrat
from qsympairs.printing import (
    format_defect,
    format_linear,
    format_monomial,
    format_vector,
    format_word,
    word_order_key,
)
from qsympairs.qfield import ONE, ZERO, format_qrat, has_pole_at_one, qrat, specialize_q1, spow
from qsympairs.rootdata import add, fixed_lattice_basis, is_nonnegative, scale, sub
from qsympairs.uq import Element, NormalWord, serre_polynomial, weight


# ----------- PRESENTATION ----------
@dataclass(eq=False)
class PairPresentation:
    """ The generators of a quantum symmetric pair coideal subalgebra.

    Attributes:
        theta_data (ThetaData): The Satake data.
        ctx (AlgebraContext): The ambient algebra.
        generators (Tuple[Element]): B_i for every index; y_i t_i on pi_theta.
        c (Dict[int, FracElement]): One-parameter family values.
        s (Dict[int, FracElement]): Nonstandard shifts.
        torus_basis (Tuple[Tuple[int]]): A basis of the Theta-fixed lattice.
        name (str): The pair name used in reports.
    """
    theta_data: object
    ctx: object
    generators: tuple
    c: dict
    s: dict
    torus_basis: tuple
    name: str = "custom"
    _monomials: dict = field(default_factory=dict, repr=False)

    @property
    def levi(self):
        return self.theta_data.pi_theta

    def names(self):
        """ Returns the generators keyed by their printed names ``B1``, ``B2``. """
        return {f"B{i + 1}": b for i, b in enumerate(self.generators)}

    def monomial(self, indices):
        """ Returns the ordered product B_j1 ... B_jk, 1 for the empty tuple. """
        indices = tuple(indices)
        if indices not in self._monomials:
            if not indices:
                value = self.ctx.one()
            else:
                value = self.monomial(indices[:-1]) * self.generators[indices[-1]]
            self._monomials[indices] = value
        return self._monomials[indices]

    def is_levi_torus_word(self, word):
        """ Returns true if a normal word lies in M+ T_Theta: no y-letters,
            x-letters from pi_theta and a Theta-fixed torus.
        """
        return (
            not word.ys
            and all(i in self.levi for i in word.xs)
            and self.theta_data.theta.apply(word.torus) == tuple(word.torus)
        )

    def to_dict(self):
        return {
            "name": self.name,
            "generators": {name: str(b) for name, b in self.names().items()},
            "c": {str(i + 1): format_qrat(v) for i, v in sorted(self.c.items())},
            "s": {str(i + 1): format_qrat(v) for i, v in sorted(self.s.items())},
            "torus_basis": [list(v) for v in self.torus_basis],
            "levi": [i + 1 for i in self.levi],
        }


def variation_indices(theta_data):
    """ Returns the indices r with p(r) != r and (alpha_r, Theta alpha_r) != 0,
        where B_r admits a one-parameter family.
    """
    datum, theta = theta_data.datum, theta_data.theta
    return tuple(
        r for r in sorted(theta_data.p)
        if theta_data.p[r] != r
        and datum.inner(datum.simple_root(r), theta.apply(datum.simple_root(r))) != 0
    )


def nonstandard_S_set(theta_data):
    """ Returns the indices where a shift s_i t_i may be added: alpha_i with
        Theta(alpha_i) = -alpha_i and 2(alpha_i, alpha_j)/(alpha_j, alpha_j)
        even for every other such alpha_j.
    """
    datum, theta = theta_data.datum, theta_data.theta
    first = [
        i for i in theta_data.outside()
        if theta.apply(datum.simple_root(i)) == scale(-1, datum.simple_root(i))
    ]

    def even(i, j):
        ratio = Fraction(2 * datum.inner(datum.simple_root(i), datum.simple_root(j)),
                         datum.lengths[j])
        return ratio.denominator == 1 and ratio.numerator % 2 == 0

    return tuple(i for i in first if all(even(i, j) for j in first))


def _coefficients(values, kind):
    result = {}
    for index, value in (values or {}).items():
        index = int(index)
        value = parse_qrat(value) if isinstance(value, str) else qrat(value)
        if has_pole_at_one(value):
            raise ValidationError(f"{kind}_{index + 1} = {format_qrat(value)} has a pole at q = 1")
        result[index] = value
    return result


def build_pair(theta_data, ctx, c=None, s=None, name="custom"):
    """ Returns the presentation of the coideal subalgebra of an involution.

    Args:
        theta_data (ThetaData): Validated Satake data.
        ctx (AlgebraContext): The algebra of the same root datum.
        c (Dict[int, Union[str, FracElement]]): 0-based one-parameter family
            values, each specializing to 1.
        s (Dict[int, Union[str, FracElement]]): 0-based shifts on the
            nonstandard set.
        name (str): The pair name for reports.
    Returns:
        PairPresentation: The generators and the Theta-fixed torus basis.
    Raises:
        ValidationError: For parameters outside their admissible indices
            or with a pole at q = 1.
    """
    if ctx.datum != theta_data.datum:
        raise ArgumentError("The algebra and the Satake data have different root data")
    c, s = _coefficients(c, "c"), _coefficients(s, "s")
    allowed = variation_indices(theta_data)
    for r, value in c.items():
        if r not in allowed:
            raise ValidationError(
                f"c_{r + 1} is not allowed: a one-parameter family needs p(r) != r "
                f"and (alpha_r, Theta alpha_r) != 0, which holds for {[k + 1 for k in allowed]}"
            )
        if specialize_q1(value) != 1:
            raise ValidationError(f"c_{r + 1} = {format_qrat(value)} must specialize to 1")
    special = nonstandard_S_set(theta_data)
    for i in s:
        if i not in special:
            raise ValidationError(
                f"s_{i + 1} is not allowed: shifts need Theta(alpha_i) = -alpha_i with "
                f"even pairings, which holds for {[k + 1 for k in special]}"
            )
    datum = ctx.datum
    generators = []
    for i in range(ctx.rank):
        b = ctx.word(ys=(i,), torus=datum.simple_root(i))
        if i not in theta_data.pi_theta:
            t = ctx.t(i)
            b = b + theta_tilde_y(theta_data, ctx, i) * t * c.get(i, ONE)
            if i in s:
                b = b + t * s[i]
        if counit(b) != s.get(i, ZERO):
            raise InvariantViolation(f"B{i + 1} has counit {format_qrat(counit(b))}")
        generators.append(b)
    pair = PairPresentation(
        theta_data=theta_data,
        ctx=ctx,
        generators=tuple(generators),
        c=c,
        s=s,
        torus_basis=tuple(fixed_lattice_basis(theta_data.theta)),
        name=name,
    )
    LOGGER.info(f"Built pair {name} on {datum.label} with {len(generators)} generators")
    return pair


# ----------- COIDEAL CERTIFICATE ----------
@dataclass
class CoidealCertificate:
    index: int
    components: tuple
    failures: tuple

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {
            "index": self.index + 1,
            "passed": self.passed,
            "remainder": [
                {"left": str(left), "right": format_word(right)}
                for left, right in self.components
            ],
            "counterexamples": [format_word(word) for word in self.failures],
        }


def coideal_certificate(pair, i):
    """ Returns the decomposition of Delta(B_i) - t_i (x) B_i by right tensor
        factors, each of which must lie in M+ T_Theta.
    """
    ctx = pair.ctx
    b = pair.generators[i]
    remainder = coproduct(b) - TensorElement.pure(ctx.t(i), b)
    grouped = {}
    for (left, right), c in remainder.items():
        grouped.setdefault(right, {})[left] = c
    components = tuple(
        (Element(ctx, terms), right)
        for right, terms in sorted(
            grouped.items(), key=lambda item: word_order_key(ctx, item[0]), reverse=True
        )
    )
    failures = tuple(right for _, right in components if not pair.is_levi_torus_word(right))
    if failures:
        LOGGER.warning(f"Coideal certificate of B{i + 1} fails on {len(failures)} right factors")
    return CoidealCertificate(index=i, components=components, failures=failures)


# ----------- DEFORMED SERRE RELATIONS ----------
@dataclass(eq=False)
class Relation:
    """ F_ij(B_i, B_j) = sum over J of B_J c_J with c_J in M+ T_Theta. """
    indices: tuple
    lhs: object
    terms: tuple
    degenerate: bool = False

    def rhs(self, pair):
        result = pair.ctx.zero()
        for indices, coefficient in self.terms:
            result = result + pair.monomial(indices) * coefficient
        return result

    def verify(self, pair):
        return self.lhs == self.rhs(pair)

    def text(self):
        return format_defect(self.terms)

    def to_dict(self):
        i, j = self.indices
        return {
            "i": i + 1,
            "j": j + 1,
            "lhs": f"F_{i + 1}{j + 1}(B{i + 1}, B{j + 1})",
            "defect": self.text(),
            "terms": [
                {"J": [k + 1 for k in indices], "monomial": format_monomial(indices),
                 "c": str(coefficient)}
                for indices, coefficient in self.terms
            ],
            "degenerate": self.degenerate,
        }


def serre_defect(pair, i, j):
    """ Returns the deformed Serre relation of (i, j).

    The lower order terms are found by division on leading y-words: the
    y-word part of B_w is y_w tau(wt w) up to q^e, so the largest y-word w
    of the remainder fixes c_w, and B_w c_w is subtracted.

    Raises:
        ArgumentError: If i = j.
        ValidationError: If a coefficient leaves M+ T_Theta on data with odd
            sequences, which lie outside the relation's hypotheses.
        InvariantViolation: If a coefficient leaves M+ T_Theta on involutive
            data.
    """
    if i == j:
        raise ArgumentError("Serre relations need i != j")
    ctx, datum = pair.ctx, pair.ctx.datum
    lhs = serre_polynomial(ctx, i, j, pair.generators[i], pair.generators[j])
    top = add(scale(1 - datum.cartan[i][j], datum.simple_root(i)), datum.simple_root(j))
    remainder, terms = lhs, []
    while remainder:
        length = max(len(word.ys) for word in remainder.terms)
        leading = max(word.ys for word in remainder.terms if len(word.ys) == length)
        part = Element(ctx, {
            NormalWord((), word.torus, word.xs): c
            for word, c in remainder.terms.items() if word.ys == leading
        })
        shift = sum(datum.form[a][b] for a, b in combinations(leading, 2))
        coefficient = ctx.torus(scale(-1, ctx.root_sum(leading))) * part * spow(2 * shift)
        outside = [word for word in coefficient.terms if not pair.is_levi_torus_word(word)]
        if outside:
            message = (
                f"Defect coefficient of {format_monomial(leading)} in F_{i + 1}{j + 1} "
                f"leaves M+ T_Theta at {format_word(outside[0])}"
            )
            if not pair.theta_data.is_involutive:
                odd = ", ".join(str(k + 1) for k in pair.theta_data.odd)
                raise ValidationError(
                    f"{message}; the Satake data has odd sequences at {odd}, "
                    f"so deformed Serre relations are not available"
                )
            raise InvariantViolation(message)
        gap = sub(top, ctx.root_sum(leading))
        if not is_nonnegative(gap) or not any(gap):
            raise InvariantViolation(
                f"Defect term {format_monomial(leading)} is not below {format_vector(top)}"
            )
        terms.append((leading, coefficient))
        remainder = remainder - pair.monomial(leading) * coefficient
        assert all(word.ys != leading for word in remainder.terms), (
            f"Leading word {leading} survived its own subtraction"
        )
    degenerate = rank([pair.monomial(indices) for indices, _ in terms]) < len(terms)
    relation = Relation(indices=(i, j), lhs=lhs, terms=tuple(terms), degenerate=degenerate)
    LOGGER.info(f"F_{i + 1}{j + 1}(B{i + 1}, B{j + 1}) = {relation.text()}")
    return relation


# ----------- SUPPORT CHECK ----------
@dataclass
class SupportCheck:
    """ Components of the top coset of F_ij(B_i, B_j). Data with odd
        sequences is out of scope and the check is not applicable there.
    """
    indices: tuple
    weight: tuple
    components: tuple
    applicable: bool = True

    @property
    def passed(self):
        return not self.applicable or all(ok for _, _, ok in self.components)

    @property
    def status(self):
        if not self.applicable:
            return "not applicable"
        return "passed" if self.passed else "failed"

    def to_dict(self):
        return {
            "i": self.indices[0] + 1,
            "j": self.indices[1] + 1,
            "lambda": list(self.weight),
            "passed": self.passed,
            "applicable": self.applicable,
            "status": self.status,
            "components": [
                {"beta": list(beta), "gamma": list(gamma), "ok": ok}
                for beta, gamma, ok in self.components
            ],
        }


def support_check(pair, i, j):
    """ Returns the check that every nonzero component pi_{b,c} P_l(Y) of
        Y = F_ij(B_i, B_j) in the top coset l = (1 - a_ij) alpha_i + alpha_j
        has [b, c] != 0 and tau(l - b), tau(l - c) outside T_Theta.
    """
    if i == j:
        raise ArgumentError("The support check needs i != j")
    ctx, datum, theta = pair.ctx, pair.ctx.datum, pair.theta_data.theta
    lam = add(scale(1 - datum.cartan[i][j], datum.simple_root(i)), datum.simple_root(j))
    top = project_coset(
        serre_polynomial(ctx, i, j, pair.generators[i], pair.generators[j]), lam
    )

    def fixed(vector):
        return theta.apply(vector) == tuple(vector)

    components = tuple(
        (beta, gamma, (any(beta) or any(gamma))
         and not fixed(sub(lam, beta)) and not fixed(sub(lam, gamma)))
        for beta, gamma in sorted(support(top))
    )
    applicable = pair.theta_data.is_involutive
    if not applicable:
        LOGGER.warning(
            f"Support check of F_{i + 1}{j + 1} is not applicable to data with odd sequences"
        )
    return SupportCheck(
        indices=(i, j), weight=lam, components=components, applicable=applicable
    )


# ----------- SPECIALIZATION ----------
def _classical_body(word):
    return " ".join([f"f{i + 1}" for i in word.ys] + [f"e{i + 1}" for i in word.xs]) or "1"


def classical_image(element):
    """ Returns the q = 1 image of an element as text over e_i and f_i, with
        every torus element sent to 1.

    Raises:
        PoleError: If a coefficient has a pole at q = 1.
    """
    ctx = element.ctx
    values, order = {}, []
    for word in sorted(element.terms, key=lambda w: word_order_key(ctx, w), reverse=True):
        body = _classical_body(word)
        if body not in values:
            order.append(body)
            values[body] = Fraction(0)
        values[body] += specialize_q1(element.terms[word])
    return format_linear([(qrat(values[body]), body) for body in order])


@dataclass
class SpecializationReport:
    generators: list
    levi: list
    torus: list
    tips: dict
    oracle: object

    @property
    def passed(self):
        return (
            all(entry["passed"] for entry in self.generators)
            and all(self.tips.values())
            and self.oracle.passed
        )

    def to_dict(self):
        return {
            "passed": self.passed,
            "generators": self.generators,
            "levi": self.levi,
            "torus": self.torus,
            "tips": {f"B{i + 1}": ok for i, ok in sorted(self.tips.items())},
            "classical": self.oracle.to_dict(),
        }


def _lift_expansion(pair, i):
    """ Returns the (value at q = 1, x-letters) terms of c_i theta~(y_i) t_i. """
    ctx = pair.ctx
    part = pair.generators[i] - ctx.word(ys=(i,), torus=ctx.datum.simple_root(i))
    if i in pair.s:
        part = part - ctx.t(i) * pair.s[i]
    terms = []
    for word, c in part.terms.items():
        if word.ys:
            raise InvariantViolation(f"theta~(y{i + 1}) t{i + 1} has y-letters")
        terms.append((specialize_q1(c), word.xs))
    return terms


def _bracket_sequences(theta_data):
    sequences = {}
    for i in theta_data.outside():
        k = theta_data.partner(i)
        if k == i:
            sequences[i] = (theta_data.p[i], theta_data.sequences[i])
        else:
            sequences[i] = (k, tuple(reversed(theta_data.sequences[k])))
    return sequences


def specialize_pair(pair):
    """ Returns the q = 1 specialization report of a presentation: the
        classical image of every generator, the Levi and torus images, the
        tip shape of every B_i and the classical involution checks.
    """
    ctx, theta_data = pair.ctx, pair.theta_data
    generators, expansions = [], {}
    for i, b in enumerate(pair.generators):
        entry = {"name": f"B{i + 1}", "passed": True}
        try:
            entry["image"] = classical_image(b)
            if i not in pair.levi:
                expansions[i] = _lift_expansion(pair, i)
        except PoleError as error:
            entry.update(passed=False, error=str(error))
        generators.append(entry)
    levi = [
        {
            "index": j + 1,
            "images": {
                f"x{j + 1}": f"e{j + 1}",
                f"y{j + 1} t{j + 1}": f"f{j + 1}",
                f"(t{j + 1} - t{j + 1}^-1)/(q_{j + 1} - q_{j + 1}^-1)": f"h{j + 1}",
            },
        }
        for j in pair.levi
    ]
    torus = [
        {
            "vector": list(vector),
            "image": format_linear([
                (qrat(c * ctx.datum.d(k)), f"h{k + 1}") for k, c in enumerate(vector)
            ]),
        }
        for vector in pair.torus_basis
    ]
    tips = {
        i: tip(b) == ctx.word(ys=(i,), torus=ctx.datum.simple_root(i))
        for i, b in enumerate(pair.generators)
    }
    if len(expansions) == len(theta_data.outside()):
        oracle = classical.involution_oracle(
            classical.chevalley_init(ctx.datum), theta_data, expansions,
            _bracket_sequences(theta_data),
        )
    else:
        oracle = classical.ClassicalReport(available=False)
    return SpecializationReport(generators, levi, torus, tips, oracle)


# ----------- PRESENTATION RELATIONS ----------
@dataclass
class RelationChecks:
    checks: list

    @property
    def passed(self):
        return all(ok for _, ok in self.checks)

    def to_dict(self):
        return {"passed": self.passed, "checks": [{"name": n, "ok": ok} for n, ok in self.checks]}


def presentation_relations(pair):
    """ Returns the exact checks of the defining relations of B: conjugation
        by the Theta-fixed torus, commutation with the Levi part, the tip
        of every B_i and the commutation of x_j with B_i for j in pi_theta.
    """
    ctx, datum = pair.ctx, pair.ctx.datum
    checks = []
    for vector in pair.torus_basis:
        tau, inverse = ctx.torus(vector), ctx.torus(scale(-1, vector))
        for i, b in enumerate(pair.generators):
            scalar = spow(-2 * datum.inner(vector, datum.simple_root(i)))
            checks.append((
                f"K{format_vector(vector)} B{i + 1} K{format_vector(scale(-1, vector))}",
                tau * b * inverse == b * scalar,
            ))
    for j in pair.levi:
        e = ctx.t(j, -1) * ctx.x(j)
        for i, b in enumerate(pair.generators):
            expected = ctx.zero()
            if i == j:
                expected = (ctx.t(j) - ctx.t(j, -1)) / ctx.q_difference(j)
            checks.append((f"[t{j + 1}^-1 x{j + 1}, B{i + 1}]", e * b - b * e == expected))
            if i not in pair.levi:
                scalar = spow(-2 * datum.inner(datum.simple_root(j), datum.simple_root(i)))
                checks.append((
                    f"x{j + 1} B{i + 1} = q^(-a{j + 1}, a{i + 1}) B{i + 1} x{j + 1}",
                    ctx.x(j) * b == b * ctx.x(j) * scalar,
                ))
    for i, b in enumerate(pair.generators):
        checks.append((
            f"tip(B{i + 1})",
            tip(b) == ctx.word(ys=(i,), torus=datum.simple_root(i)),
        ))
    return RelationChecks(checks)


@dataclass
class IndependenceReport:
    count: int
    rank: int

    @property
    def passed(self):
        return self.count == self.rank

    def to_dict(self):
        return {"elements": self.count, "rank": self.rank, "passed": self.passed}


def _box(rank, height, allowed):
    """ Returns the vectors supported on allowed indices with height <= height. """
    ranges = [range(height + 1) if k in allowed else range(1) for k in range(rank)]
    return [v for v in product(*ranges) if sum(v) <= height]


def independence_check(pair, height=2, x_degree=1):
    """ Returns the rank check that the elements B_J m are linearly
        independent, for irreducible y-words J of height <= height and m
        running over x-words in pi_theta of degree <= x_degree times the
        tori 0 and +-basis of the Theta-fixed lattice.
    """
    ctx = pair.ctx
    rewriting = ctx.rewriting
    y_words = []
    for mu in _box(ctx.rank, height, set(range(ctx.rank))):
        y_words.extend(rewriting.irreducible_words(mu) if any(mu) else [()])
    x_words = []
    for nu in _box(ctx.rank, x_degree, set(pair.levi)):
        x_words.extend(rewriting.irreducible_words(nu) if any(nu) else [()])
    tori = [ctx.zero_torus()]
    for vector in pair.torus_basis:
        tori.extend([tuple(vector), scale(-1, vector)])
    elements = [
        pair.monomial(J) * ctx.word(torus=torus, xs=xs)
        for J in y_words for xs in x_words for torus in tori
    ]
    report = IndependenceReport(count=len(elements), rank=rank(elements))
    LOGGER.info(f"Independence of {report.count} elements B_J m: rank {report.rank}")
    return report


# ----------- PARABOLIC GENERATORS ----------
def _check_parabolic(ctx, pi_prime, indices, j):
    pi_prime = set(pi_prime)
    if j in pi_prime:
        raise ArgumentError(f"alpha_{j + 1} must lie outside pi' {sorted(k + 1 for k in pi_prime)}")
    if not 0 <= j < ctx.rank or any(not 0 <= k < ctx.rank for k in pi_prime):
        raise ArgumentError("Parabolic indices are out of range")
    outside = [k + 1 for k in indices if k not in pi_prime]
    if outside:
        raise ArgumentError(f"Acting indices {outside} are not in pi'")


def parabolic_generator(ctx, pi_prime, indices, j, side=Side.Y):
    """ Returns Y_{I,j} = (ad y_i1 ... y_ir) y_j t_j on the Y side or
        X_{I,j} = (ad_r x_i1 ... x_ir) x_j t_j^-1 on the X side.

    Raises:
        ArgumentError: If j is in pi' or an acting index is not.
    """
    indices = tuple(indices)
    _check_parabolic(ctx, pi_prime, indices, j)
    alpha = ctx.datum.simple_root(j)
    if Side(side) is Side.Y:
        return adjoint_left(ctx.word(ys=indices), ctx.word(ys=(j,), torus=alpha))
    return adjoint_right(ctx.word(xs=indices), ctx.word(torus=scale(-1, alpha), xs=(j,)))


@dataclass
class ShapeReport:
    side: object
    failures: list

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {"side": Side(self.side).value, "passed": self.passed, "failures": self.failures}


def _parabolic_span(ctx, pi_prime, j, mu, side):
    words = ctx.rewriting.irreducible_words(mu) if any(mu) else [()]
    return [parabolic_generator(ctx, pi_prime, word, j, side) for word in words]


def parabolic_shape_check(ctx, pi_prime, indices, j, side=Side.Y):
    """ Returns the check of the coproduct shape of a parabolic generator:
        Delta(Y) - Y (x) 1 has left factors in M t_j without x-letters and
        right factors in (ad M-)(y_j t_j); mirrored on the X side.
    """
    side = Side(side)
    pi_prime = set(pi_prime)
    element = parabolic_generator(ctx, pi_prime, indices, j, side)
    one = ctx.one()
    if side is Side.Y:
        remainder = coproduct(element) - TensorElement.pure(element, one)
        fixed_leg, span_leg, sign = 0, 1, 1
    else:
        remainder = coproduct(element) - TensorElement.pure(one, element)
        fixed_leg, span_leg, sign = 1, 0, -1
    grouped = {}
    for key, c in remainder.items():
        grouped.setdefault(key[fixed_leg], {})[key[span_leg]] = c
    failures = []
    for word, terms in grouped.items():
        letters = word.ys if side is Side.Y else word.xs
        other = word.xs if side is Side.Y else word.ys
        torus_ok = all(
            c == (sign if k == j else 0)
            for k, c in enumerate(word.torus) if k not in pi_prime
        )
        if other or not torus_ok or any(k not in pi_prime for k in letters):
            failures.append(f"factor {format_word(word)} is outside M t_j")
            continue
        part = Element(ctx, terms)
        offset = weight(part)
        mu = sub(scale(-sign, offset), ctx.datum.simple_root(j))
        if not is_nonnegative(mu) or any(c and k not in pi_prime for k, c in enumerate(mu)):
            failures.append(f"paired factor {part} has weight {list(offset)}")
            continue
        if not in_span(_parabolic_span(ctx, pi_prime, j, mu, side), part):
            failures.append(f"paired factor {part} is outside the adjoint span")
    return ShapeReport(side=side, failures=failures)
