""" Unit test cases for exact linear algebra over Q(s).
"""
from qsympairs.linalg import in_span, nullspace, rank, solve_combination
from qsympairs.qfield import ONE, Q, ZERO


def test_rank_of_elements(a1):
    x, y = a1.x(0), a1.y(0)
    assert rank([x, x * Q, y]) == 2
    assert rank([]) == 0
    assert rank([a1.zero()]) == 0

def test_span_membership(a1):
    x, y = a1.x(0), a1.y(0)
    assert in_span([x, y], x * 2 + y * Q)
    assert not in_span([x], y)
    assert in_span([x], a1.zero())

def test_solve_combination(a1):
    x, y = a1.x(0), a1.y(0)
    assert solve_combination([x, y], x * 2 + y * 3) == [ONE * 2, ONE * 3]
    assert solve_combination([x], y) is None

def test_nullspace():
    kernel = nullspace([[ONE, -Q]], 2)
    assert len(kernel) == 1
    a, b = kernel[0]
    assert a == b * Q
    assert nullspace([], 2) == [[ONE, ZERO], [ZERO, ONE]]
