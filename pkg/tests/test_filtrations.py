""" Unit test cases for supports, projections, bidegrees and the height
    filtration.
"""
import random
from itertools import product

import pytest
from qsympairs.errors import ArgumentError
from qsympairs.filtrations import (
    bidegree,
    coset,
    cosets,
    degree_F,
    is_transversal,
    max_height_support,
    max_support,
    phi,
    project_coset,
    project_trihomog,
    regroup,
    support,
    support_pair,
    tip,
)
from qsympairs.hopf import coproduct
from qsympairs.qfield import ONE, Q
from qsympairs.rootdata import add, scale


@pytest.fixture
def xy(a1):
    return a1.x(0) * a1.y(0)


def random_element(ctx, rng, terms=5):
    """ Returns a sum of products of at most four generators with small
        integer coefficients.
    """
    letters = []
    for i in range(ctx.rank):
        letters.extend([ctx.x(i), ctx.y(i), ctx.t(i), ctx.t(i, -1)])
    total = ctx.zero()
    for _ in range(terms):
        word = ctx.one()
        for _ in range(rng.randint(1, 4)):
            word = word * rng.choice(letters)
        total = total + word * rng.randint(-3, 3)
    return total


def test_support(xy):
    assert support(xy) == {((1,), (1,)), ((0,), (0,))}

def test_bidegree_and_tip(a1, xy):
    assert bidegree(xy) == (1, 1)
    assert max_support(xy) == {((1,), (1,))}
    assert tip(xy) == a1.y(0) * a1.x(0)

def test_bidegree_orders_lexicographically(a2):
    a = a2.y(0) + a2.x(0) * a2.x(1) + a2.y(1) * a2.x(0)
    assert bidegree(a) == (1, 1)
    assert tip(a) == a2.y(1) * a2.x(0)

def test_projections(a1, xy):
    assert project_trihomog(xy, (1,), (1,)) == a1.y(0) * a1.x(0)
    assert phi(xy) == (a1.t(0) - a1.t(0, -1)) / a1.q_difference(0)
    assert not project_trihomog(xy, (1,), (0,))

def test_projections_sum_to_element(a2):
    a = a2.x(0) * a2.y(0) * a2.y(1) + a2.t(1)
    total = a2.zero()
    for lam, mu in support(a):
        total = total + project_trihomog(a, lam, mu)
    assert total == a

def test_coset_projection(a1, xy):
    assert cosets(xy) == {(1,), (-1,)}
    expected = a1.y(0) * a1.x(0) + a1.t(0) / a1.q_difference(0)
    assert project_coset(xy, (1,)) == expected
    assert project_coset(xy, (-1,)) == a1.t(0, -1) * (-ONE / a1.q_difference(0))

def test_regroup_scalar(a1):
    word = (a1.x(0) * a1.x(0)).words()[0]
    scalar, ys, g_word, torus = regroup(a1, word)
    assert scalar == Q ** 2
    assert g_word == (0, 0)
    assert torus == (2,)

def test_height_degree(a1, xy):
    assert degree_F(xy) == 1
    assert degree_F(a1.y(0)) == 1
    assert degree_F(a1.x(0)) == 0
    assert degree_F(a1.t(0, -1)) == 1

def test_max_height_support(a1, xy):
    assert max_height_support(xy) == {(1,): {((1,), (1,))}, (-1,): {((0,), (0,))}}

def test_zero_has_no_degree(a1):
    with pytest.raises(ArgumentError):
        bidegree(a1.zero())
    with pytest.raises(ArgumentError):
        degree_F(a1.zero())

def test_transversal_pairs():
    assert is_transversal([((1,), (0,)), ((0,), (1,))])
    assert not is_transversal([((1,), (0,)), ((1,), (1,))])
    assert is_transversal([((1,), (0,))])

@pytest.mark.parametrize("seed", range(6))
def test_projections_reconstitute(a2, seed):
    a = random_element(a2, random.Random(seed))
    by_coset, by_support = a2.zero(), a2.zero()
    for t in cosets(a):
        by_coset = by_coset + project_coset(a, t)
    for lam, mu in support(a):
        by_support = by_support + project_trihomog(a, lam, mu)
    assert by_coset == a
    assert by_support == a

def test_coproduct_support_rule(a2):
    origin = a2.zero_torus()
    for height in range(1, 5):
        for letters in product(range(a2.rank), repeat=height):
            for split in range(height + 1):
                ys, xs = letters[:split], letters[split:]
                b = a2.word(ys=ys)
                for i in xs:
                    b = b * a2.x(i) * a2.t(i, -1)
                lam, mu = a2.root_sum(ys), a2.root_sum(xs)
                assert support(b) == {(lam, mu)}
                for first, second in coproduct(b).terms:
                    gamma, alpha = support_pair(a2, first)
                    beta, xi = support_pair(a2, second)
                    assert add(gamma, beta) == lam
                    assert add(alpha, xi) == mu
                    assert coset(a2, first) == origin
                    assert coset(a2, second) == scale(-1, add(gamma, alpha))
