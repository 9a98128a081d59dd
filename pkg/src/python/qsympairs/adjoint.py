"""
    Left and right adjoint actions of U_q(g) on itself.

    Generators act through explicit formulas. A normal word acts letter by
    letter: the left action applies its last letter first, the right action
    (a right action) its first letter first. The coproduct definitions
    sum a_(1) b sigma(a_(2)) and sum sigma(a_(1)) b a_(2) are kept as
    independent cross-checks.
"""
from qsympairs import constants
from qsympairs.errors import ArgumentError, ResourceError
from qsympairs.hopf import antipode, coproduct
from qsympairs.logging import LOGGER
from qsympairs.qfield import ONE, qfactorial
from qsympairs.rootdata import scale
from qsympairs.uq import Element


def _letters(word):
    """ Returns the letters of a normal word as ("y", i), ("t", torus), ("x", i). """
    letters = [("y", i) for i in word.ys]
    if any(word.torus):
        letters.append(("t", word.torus))
    letters.extend(("x", i) for i in word.xs)
    return letters


def _left_letter(ctx, kind, value, b):
    if kind == "y":
        t = ctx.t(value)
        return ctx.y(value) * b * t - b * ctx.y(value) * t
    if kind == "x":
        return ctx.x(value) * b - ctx.t(value) * b * ctx.t(value, -1) * ctx.x(value)
    return ctx.torus(value) * b * ctx.torus(scale(-1, value))


def _right_letter(ctx, kind, value, b):
    if kind == "y":
        return b * ctx.y(value) - ctx.y(value) * ctx.t(value) * b * ctx.t(value, -1)
    if kind == "x":
        t_inverse = ctx.t(value, -1)
        return t_inverse * b * ctx.x(value) - t_inverse * ctx.x(value) * b
    return ctx.torus(scale(-1, value)) * b * ctx.torus(value)


def adjoint_left(a, b):
    """ Returns (ad a) b for the left adjoint action.

    (ad y_i) b = y_i b t_i - b y_i t_i, (ad x_i) b = x_i b - t_i b t_i^-1 x_i
    and (ad tau) b = tau b tau^-1, extended to words by composition and to
    sums by linearity.

    Args:
        a (Element): The acting element.
        b (Element): The element acted upon.
    Returns:
        Element: (ad a) b in normal form.
    """
    ctx = a.ctx
    result = ctx.zero()
    for word, c in a.terms.items():
        image = b
        for kind, value in reversed(_letters(word)):
            image = _left_letter(ctx, kind, value, image)
        result = result + image * c
    return result


def adjoint_right(a, b):
    """ Returns (ad_r a) b for the right adjoint action.

    (ad_r y_i) b = b y_i - y_i t_i b t_i^-1, (ad_r x_i) b = t_i^-1 b x_i -
    t_i^-1 x_i b and (ad_r tau) b = tau^-1 b tau. A word acts with its
    first letter first.
    """
    ctx = a.ctx
    result = ctx.zero()
    for word, c in a.terms.items():
        image = b
        for kind, value in _letters(word):
            image = _right_letter(ctx, kind, value, image)
        result = result + image * c
    return result


def adjoint_right_sequence(ctx, sequence, b):
    """ Returns b acted on by divided powers of x letters in order: each step
        (i, m) applies (ad_r x_i)^m / [m]_{q_i}!.

    Args:
        ctx (AlgebraContext): The algebra context.
        sequence (Iterable[Tuple[int, int]]): (index, multiplicity) steps.
        b (Element): The starting element.
    Returns:
        Element: The result.
    """
    image = b
    for i, m in sequence:
        for _ in range(m):
            image = _right_letter(ctx, "x", i, image)
        image = image * (ONE / qfactorial(m, ctx.datum.d(i)))
    return image


def hopf_adjoint_left(a, b):
    """ Returns sum a_(1) b sigma(a_(2)), computed from the coproduct. """
    ctx = a.ctx
    result = ctx.zero()
    for (first, second), c in coproduct(a).items():
        right = antipode(Element(ctx, {second: ONE}))
        result = result + Element(ctx, {first: ONE}) * b * right * c
    return result


def hopf_adjoint_right(a, b):
    """ Returns sum sigma(a_(1)) b a_(2), computed from the coproduct. """
    ctx = a.ctx
    result = ctx.zero()
    for (first, second), c in coproduct(a).items():
        left = antipode(Element(ctx, {first: ONE}))
        result = result + left * b * Element(ctx, {second: ONE}) * c
    return result


def ad_nilpotence_order(ctx, a, b, bound=constants.DEFAULT_NILPOTENCE_BOUND):
    """ Returns the least s >= 1 with (ad a)^s b = 0.

    Raises:
        ArgumentError: If b is zero.
        ResourceError: If no such s <= bound exists, or the degree bound is
            reached first.
    """
    if not b:
        raise ArgumentError("ad-nilpotence is undefined for the zero element")
    image = b
    for order in range(1, bound + 1):
        image = adjoint_left(a, image)
        if not image:
            LOGGER.debug(f"ad-nilpotence order {order}")
            return order
    raise ResourceError(f"(ad a)^s b is nonzero for every s <= {bound}")
