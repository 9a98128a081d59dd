"""
    Hopf structure of U_q(g): tensor elements, coproduct, counit, antipode
    and the Chevalley antiautomorphism kappa.

    Delta(tau) = tau (x) tau, Delta(x_i) = x_i (x) 1 + t_i (x) x_i,
    Delta(y_i) = y_i (x) t_i^-1 + 1 (x) y_i. The antipode and kappa are
    anti-algebra maps, evaluated on a normal word by multiplying the images
    of its letters in reverse order.
"""
from qsympairs.errors import ArgumentError
from qsympairs.qfield import ONE, ZERO, is_qrat, qrat
from qsympairs.rewriting import add_into
from qsympairs.rootdata import scale
from qsympairs.uq import Element, NormalWord


class TensorElement:
    """ A finite combination of tensors of normal words. Each leg is kept in
        normal form on its own; there are no relations between legs.
    """

    __slots__ = ("ctx", "arity", "terms")

    def __init__(self, ctx, arity, terms=None):
        self.ctx = ctx
        self.arity = arity
        self.terms = {k: qrat(c) for k, c in (terms or {}).items() if c}
        assert all(len(k) == arity for k in self.terms), (
            f"Tensor legs do not match arity {arity}"
        )

    @classmethod
    def pure(cls, *elements):
        """ Returns e_1 (x) e_2 (x) ... for Elements e_k. """
        ctx = elements[0].ctx
        terms = {(): ONE}
        for element in elements:
            grown = {}
            for key, c in terms.items():
                for word, d in element.terms.items():
                    add_into(grown, {key + (word,): c * d})
            terms = grown
        return cls(ctx, len(elements), terms)

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        return TensorElement(self.ctx, self.arity, add_into(dict(self.terms), other.terms))

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        return TensorElement(
            self.ctx, self.arity, add_into(dict(self.terms), other.terms, -ONE)
        )

    def __neg__(self):
        return TensorElement(self.ctx, self.arity, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if is_qrat(other):
            scalar = qrat(other)
            return TensorElement(
                self.ctx, self.arity, {k: c * scalar for k, c in self.terms.items()}
            )
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        result = {}
        for left, c in self.terms.items():
            for right, d in other.terms.items():
                product = {(): c * d}
                for a, b in zip(left, right):
                    grown = {}
                    for key, e in product.items():
                        for word, f in self.ctx.word_product(a, b).items():
                            add_into(grown, {key + (word,): e * f})
                    product = grown
                add_into(result, product)
        return TensorElement(self.ctx, self.arity, result)

    def __rmul__(self, other):
        if is_qrat(other):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def _check(self, other):
        assert other.arity == self.arity, (
            f"Cannot combine tensors of arity {self.arity} and {other.arity}"
        )

    def __str__(self):
        from qsympairs.printing import format_tensor
        return format_tensor(self)

    def __repr__(self):
        return f"TensorElement({self})"


def tensor_one(ctx, arity=2):
    origin = NormalWord((), ctx.zero_torus(), ())
    return TensorElement(ctx, arity, {(origin,) * arity: ONE})


def tensor_apply(tensor, position, function):
    """ Returns the tensor with a map applied to one leg. A map returning a
        TensorElement splits the leg, so the arity grows.

    Args:
        tensor (TensorElement): The tensor.
        position (int): The 0-based leg.
        function (Callable[[Element], Union[Element, TensorElement]]): The map.
    Returns:
        TensorElement: The image.
    """
    if not 0 <= position < tensor.arity:
        raise ArgumentError(f"Tensor leg {position} is out of range")
    ctx, result, arity = tensor.ctx, {}, None
    for key, c in tensor.terms.items():
        image = function(Element(ctx, {key[position]: ONE}))
        if isinstance(image, TensorElement):
            legs = image.terms
            width = image.arity
        else:
            legs = {(word,): d for word, d in image.terms.items()}
            width = 1
        arity = tensor.arity - 1 + width
        for inner, d in legs.items():
            add_into(result, {key[:position] + inner + key[position + 1:]: c * d})
    if arity is None:
        return TensorElement(ctx, tensor.arity)
    return TensorElement(ctx, arity, result)


def contract(tensor):
    """ Returns the product of the legs, summed over the tensor. """
    ctx = tensor.ctx
    result = ctx.zero()
    for key, c in tensor.terms.items():
        product = ctx.one()
        for word in key:
            product = product * Element(ctx, {word: ONE})
        result = result + product * c
    return result


# ----------- COPRODUCT ----------
def generator_coproducts(ctx):
    """ Returns the coproducts of x_i and y_i keyed by letter. """
    table = ctx.memo("generator_coproducts")
    if "ready" not in table:
        for i in range(ctx.rank):
            t, t_inverse, one = ctx.t(i), ctx.t(i, -1), ctx.one()
            table[("x", i)] = TensorElement.pure(ctx.x(i), one) + TensorElement.pure(t, ctx.x(i))
            table[("y", i)] = TensorElement.pure(ctx.y(i), t_inverse) + TensorElement.pure(one, ctx.y(i))
        table["ready"] = True
    return table


def word_coproduct(ctx, word):
    memo = ctx.memo("coproduct")
    if word in memo:
        return memo[word]
    table = generator_coproducts(ctx)
    torus = ctx.torus(word.torus)
    result = tensor_one(ctx)
    for letter in word.ys:
        result = result * table[("y", letter)]
    result = result * TensorElement.pure(torus, torus)
    for letter in word.xs:
        result = result * table[("x", letter)]
    memo[word] = result
    return result


def coproduct(a):
    """ Returns Delta(a), the algebra-map extension of the generator coproducts.

    Args:
        a (Element): Any element.
    Returns:
        TensorElement: Delta(a) with both legs in normal form.
    """
    result = TensorElement(a.ctx, 2)
    for word, c in a.terms.items():
        result = result + word_coproduct(a.ctx, word) * c
    return result


def counit(a):
    """ Returns epsilon(a): the sum of the coefficients of the torus words. """
    return sum((c for word, c in a.terms.items() if word.is_torus()), ZERO)


def tensor_counit(tensor, position):
    """ Returns (id (x) epsilon (x) id)(tensor) with epsilon on one leg. A
        two-leg tensor collapses to an Element.
    """
    ctx, result = tensor.ctx, {}
    for key, c in tensor.terms.items():
        if key[position].is_torus():
            add_into(result, {key[:position] + key[position + 1:]: c})
    if tensor.arity == 2:
        return Element(ctx, {key[0]: c for key, c in result.items()})
    return TensorElement(ctx, tensor.arity - 1, result)


# ----------- ANTI-ALGEBRA MAPS ----------
def _anti_map(a, name, images):
    ctx, memo = a.ctx, a.ctx.memo(name)
    result = ctx.zero()
    for word, c in a.terms.items():
        if word not in memo:
            letters = (
                [images("y", i) for i in word.ys]
                + [images("t", word.torus)]
                + [images("x", i) for i in word.xs]
            )
            image = ctx.one()
            for factor in reversed(letters):
                image = image * factor
            memo[word] = image
        result = result + memo[word] * c
    return result


def antipode(a):
    """ Returns sigma(a) with sigma(t) = t^-1, sigma(x_i) = -t_i^-1 x_i and
        sigma(y_i) = -y_i t_i.
    """
    ctx = a.ctx

    def images(kind, value):
        if kind == "x":
            return -(ctx.t(value, -1) * ctx.x(value))
        if kind == "y":
            return -(ctx.y(value) * ctx.t(value))
        return ctx.torus(scale(-1, value))

    return _anti_map(a, "antipode", images)


def kappa(a):
    """ Returns kappa(a) with kappa(x_i) = y_i t_i, kappa(y_i) = t_i^-1 x_i
        and kappa(t) = t. Conjugation of coefficients is trivial on Q(s).
    """
    ctx = a.ctx

    def images(kind, value):
        if kind == "x":
            return ctx.y(value) * ctx.t(value)
        if kind == "y":
            return ctx.t(value, -1) * ctx.x(value)
        return ctx.torus(value)

    return _anti_map(a, "kappa", images)


def tensor_map(tensor, function):
    """ Returns the tensor with the same map applied to every leg. """
    result = tensor
    for position in range(tensor.arity):
        result = tensor_apply(result, position, function)
    return result
