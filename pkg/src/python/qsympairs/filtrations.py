"""
    Gradings and filtrations of U_q(g) read in U-G+U0 coordinates.

    A normal word y-word * tau(nu) * x-word is regrouped as
    q^c * y-word * G(x-word) * tau(nu + wt x-word), where G(x-word) is the
    product of the letters x_i t_i^-1. The projections pi_{l,m} keep the part
    with y-letters summing to l and x-letters summing to m; the coset
    projections keep the part with a given torus nu + wt x-word.
"""
from itertools import combinations

from qsympairs.errors import ArgumentError
from qsympairs.qfield import spow
from qsympairs.rootdata import add, ht


def support_pair(ctx, word):
    """ Returns [lambda, mu], the root sums of the y-word and of the x-word. """
    return ctx.root_sum(word.ys), ctx.root_sum(word.xs)


def coset(ctx, word):
    """ Returns the torus t of the coset U-G+t that contains the word. """
    return add(word.torus, ctx.root_sum(word.xs))


def regroup(ctx, word):
    """ Returns the scalar, y-word, G+ word and torus of a normal word read
        in U-G+U0 coordinates.

    Returns:
        Tuple[FracElement, Tuple, Tuple, Tuple]: (scalar, ys, g-word, torus)
            with word = scalar * ys * G(g-word) * tau(torus).
    """
    mu = ctx.root_sum(word.xs)
    exponent = ctx.datum.inner(word.torus, mu)
    for a, b in combinations(word.xs, 2):
        exponent += ctx.datum.inner(ctx.datum.simple_root(a), ctx.datum.simple_root(b))
    return spow(2 * exponent), word.ys, word.xs, add(word.torus, mu)


def support(a):
    """ Returns supp(a): the set of pairs [lambda, mu] with pi_{l,m}(a) != 0. """
    return {support_pair(a.ctx, word) for word in a.terms}


def project_trihomog(a, lam, mu):
    """ Returns pi_{lambda,mu}(a), the component in U-_{-lambda} G+_mu U0. """
    lam, mu = tuple(lam), tuple(mu)
    return a.filter(lambda word: support_pair(a.ctx, word) == (lam, mu))


def phi(a):
    """ Returns the U0 component pi_{0,0}(a). """
    origin = a.ctx.zero_torus()
    return project_trihomog(a, origin, origin)


def project_coset(a, t):
    """ Returns P_t(a), the component of a in U-G+tau(t). """
    t = tuple(t)
    return a.filter(lambda word: coset(a.ctx, word) == t)


def cosets(a):
    return {coset(a.ctx, word) for word in a.terms}


def _require_nonzero(a, name):
    if not a:
        raise ArgumentError(f"{name} is undefined for the zero element")


def bidegree(a):
    """ Returns the lexicographically largest (ht lambda, ht mu) over supp(a).

    Raises:
        ArgumentError: If a is zero.
    """
    _require_nonzero(a, "bidegree")
    return max((ht(lam), ht(mu)) for lam, mu in support(a))


def max_support(a):
    """ Returns max(a): the support pairs whose heights equal the bidegree. """
    top = bidegree(a)
    return {(lam, mu) for lam, mu in support(a) if (ht(lam), ht(mu)) == top}


def tip(a):
    """ Returns the sum of pi_{lambda,mu}(a) over max(a). """
    top = max_support(a)
    return a.filter(lambda word: support_pair(a.ctx, word) in top)


def word_degree(ctx, word):
    """ Returns the degree of a normal word for deg(x_i t_i^-1) = deg(y_i) = 1
        and deg(t_i) = -1.
    """
    return len(word.ys) + len(word.xs) - ht(coset(ctx, word))


def degree_F(a):
    """ Returns the degree of a for the height filtration.

    Raises:
        ArgumentError: If a is zero.
    """
    _require_nonzero(a, "degree_F")
    return max(word_degree(a.ctx, word) for word in a.terms)


def max_height_support(a):
    """ Returns, for each coset U-G+t met by a, the support pairs of a in
        that coset with the largest ht(lambda + mu).

    Returns:
        Dict[Tuple, Set]: Coset torus mapped to its maximal support pairs.
    """
    _require_nonzero(a, "max_height_support")
    grouped = {}
    for word in a.terms:
        grouped.setdefault(coset(a.ctx, word), set()).add(support_pair(a.ctx, word))
    result = {}
    for t, pairs in grouped.items():
        top = max(ht(add(lam, mu)) for lam, mu in pairs)
        result[t] = {(lam, mu) for lam, mu in pairs if ht(add(lam, mu)) == top}
    return result


def is_transversal(pairs):
    """ Returns true if distinct pairs [l, m] != [l', m'] always have l != l'
        and m != m'.
    """
    pairs = list(set(pairs))
    return all(
        a[0] != b[0] and a[1] != b[1] for a, b in combinations(pairs, 2)
    )
