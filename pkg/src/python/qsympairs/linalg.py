"""
    Exact linear algebra over Q(s) for spans of Elements and module matrices.
"""
from sympy.polys.matrices import DomainMatrix

from qsympairs.qfield import QDOMAIN, ZERO, qrat


def field_matrix(rows, columns=None):
    """ Returns a DomainMatrix over Q(s) from nested lists of coefficients. """
    rows = [[qrat(value) for value in row] for row in rows]
    width = columns if columns is not None else (len(rows[0]) if rows else 0)
    return DomainMatrix(rows, (len(rows), width), QDOMAIN)


def coefficient_rows(elements, words=None):
    """ Returns the coefficient rows of Elements over a common word list.

    Returns:
        Tuple[List[List], List]: The rows and the word order of the columns.
    """
    if words is None:
        found = {}
        for element in elements:
            for word in element.terms:
                found.setdefault(word, len(found))
        words = list(found)
    rows = [[element.coefficient(word) for word in words] for element in elements]
    return rows, words


def rank(elements):
    """ Returns the dimension of the span of the Elements. """
    if not elements:
        return 0
    rows, words = coefficient_rows(elements)
    if not words:
        return 0
    return field_matrix(rows, len(words)).rank()


def in_span(elements, target):
    """ Returns true if target is a linear combination of the Elements. """
    if not target:
        return True
    return rank(list(elements) + [target]) == rank(list(elements))


def nullspace(rows, columns):
    """ Returns a basis of {v : M v = 0} as lists of coefficients. """
    if not rows:
        return [[ZERO if i != j else qrat(1) for i in range(columns)] for j in range(columns)]
    kernel = field_matrix(rows, columns).nullspace()
    return [list(row) for row in kernel.to_list()]


def solve_combination(elements, target):
    """ Returns coefficients c with sum c_k elements_k = target, or None when
        target is outside the span. The solution has zero entries on the
        non-pivot elements.
    """
    rows, words = coefficient_rows(list(elements) + [target])
    count = len(elements)
    if not words:
        return [ZERO] * count
    # columns are elements plus the target, rows are words
    augmented = [[rows[k][w] for k in range(count + 1)] for w in range(len(words))]
    reduced, pivots = field_matrix(augmented, count + 1).rref()
    if count in pivots:
        return None
    entries = reduced.to_list()
    solution = [ZERO] * count
    for row, column in enumerate(pivots):
        solution[column] = entries[row][count]
    return solution
