"""
    Canonical text for coefficients, normal words, elements and tensors.

    Terms print in descending order of (bidegree, y-word, torus, x-word).
    Consecutive terms whose coefficients share a balanced denominator are
    grouped over it, so x1 y1 prints as ``y1 x1 + (t1 - t1^-1)/(q - q^-1)``.
"""
from fractions import Fraction

from qsympairs.qfield import balanced_form, format_laurent, format_qrat, laurent_variable
from qsympairs.rootdata import ht

UNIT_DENOMINATOR = [(0, Fraction(1))]


def format_torus(torus):
    """ Returns tau(torus) as a product of t-powers, e.g. ``t1^-1 t2``. """
    pieces = []
    for index, power in enumerate(torus):
        if power == 1:
            pieces.append(f"t{index + 1}")
        elif power:
            pieces.append(f"t{index + 1}^{power}")
    return " ".join(pieces)


def format_word(word):
    """ Returns the text of a normal word, ``1`` for the identity. """
    pieces = [f"y{i + 1}" for i in word.ys]
    torus = format_torus(word.torus)
    if torus:
        pieces.append(torus)
    pieces.extend(f"x{i + 1}" for i in word.xs)
    return " ".join(pieces) or "1"


def word_order_key(ctx, word):
    return (
        (ht(ctx.root_sum(word.ys)), ht(ctx.root_sum(word.xs))),
        word.ys,
        word.torus,
        word.xs,
    )


def _piece(numerator, body, variable, alone):
    """ Returns (negative, text) for a numerator Laurent polynomial times a
        word or generator name.
    """
    if len(numerator) == 1:
        (exponent, coefficient), = numerator
        scalar = format_laurent([(exponent, abs(coefficient))], variable)
        if body == "1":
            text = scalar
        elif scalar == "1":
            text = body
        else:
            text = f"{scalar} * {body}"
        return coefficient < 0, text
    scalar = format_laurent(numerator, variable)
    if body == "1":
        return False, scalar if alone else f"({scalar})"
    return False, f"({scalar}) * {body}"


def _join(pieces):
    text = ""
    for negative, piece in pieces:
        if not text:
            text = f"-{piece}" if negative else piece
        else:
            text += f" - {piece}" if negative else f" + {piece}"
    return text


def format_linear(terms):
    """ Returns the text of a linear combination.

    Args:
        terms (List[Tuple[FracElement, str]]): Coefficients and the texts of
            the basis vectors they multiply, in printing order.
    Returns:
        str: The canonical text, ``0`` when empty.
    """
    terms = [(c, body) for c, body in terms if c]
    if not terms:
        return "0"
    forms = [(balanced_form(c), body) for c, body in terms]
    groups = []
    for (numerator, denominator), body in forms:
        if groups and groups[-1][0] == denominator and denominator != UNIT_DENOMINATOR:
            groups[-1][1].append((numerator, body))
        else:
            groups.append((denominator, [(numerator, body)]))
    alone = len(terms) == 1
    pieces = []
    for denominator, members in groups:
        variable = laurent_variable(denominator, *(n for n, _ in members))
        inner = [_piece(n, body, variable, alone and len(members) == 1) for n, body in members]
        if denominator == UNIT_DENOMINATOR:
            pieces.extend(inner)
            continue
        bottom = format_laurent(denominator, variable)
        if len(inner) == 1 and len(members[0][0]) == 1:
            negative, text = inner[0]
            pieces.append((negative, f"{text}/({bottom})"))
        else:
            pieces.append((False, f"({_join(inner)})/({bottom})"))
    return _join(pieces)


def format_element(element):
    """ Returns the canonical text of an Element. """
    ctx = element.ctx
    words = sorted(element.terms, key=lambda w: word_order_key(ctx, w), reverse=True)
    return format_linear([(element.terms[w], format_word(w)) for w in words])


def format_tensor(tensor):
    """ Returns the text of a TensorElement with legs joined by `` (x) ``. """
    ctx = tensor.ctx
    keys = sorted(
        tensor.terms,
        key=lambda key: tuple(word_order_key(ctx, w) for w in key),
        reverse=True,
    )
    return format_linear([
        (tensor.terms[key], " (x) ".join(format_word(w) for w in key)) for key in keys
    ])


def format_scalar(value):
    return format_qrat(value)


def format_vector(vector):
    """ Returns a lattice vector as text, e.g. ``[1, -1/2]``. """
    return "[" + ", ".join(str(c) for c in vector) + "]"


def format_monomial(indices, prefix="B"):
    """ Returns the text of an ordered product of named generators, e.g. ``B2 B1``. """
    return " ".join(f"{prefix}{i + 1}" for i in indices) or "1"


def format_defect(terms):
    """ Returns the text of sum_J B_J c_J for (J, c) pairs, e.g. ``q^-1 * B2``. """
    pieces = []
    for indices, coefficient in terms:
        name = format_monomial(indices)
        ctx = coefficient.ctx
        words = sorted(coefficient.terms, key=lambda w: word_order_key(ctx, w), reverse=True)
        for word in words:
            body = format_word(word)
            if body == "1":
                body = name
            elif indices:
                body = f"{name} {body}"
            pieces.append((coefficient.terms[word], body))
    return format_linear(pieces)
