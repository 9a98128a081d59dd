"""
    Text grammar for coefficients and algebra expressions.

    Coefficients: integers, ``q``, ``s`` (with s^2 = q), ``^`` signed integer
    powers, ``+ - * /`` and parentheses. Algebra expressions add the
    generators ``x1``, ``y2``, ``t1`` (powers such as ``t1^-1`` allowed),
    ``K[a1,...,an]`` for tau of a root-lattice vector, and named elements
    such as ``B1``. Juxtaposition is multiplication; division is by nonzero
    coefficients only.
"""
import pyparsing as pp

from qsympairs.errors import ParseError
from qsympairs.qfield import ONE, Q, S, qrat
from qsympairs.rootdata import scale
from qsympairs.uq import Element


class ExpressionParser:
    """ A parser bound to an optional algebra context and named elements.

    Args:
        ctx (Optional[AlgebraContext]): The algebra for generators. Without
            it only coefficients parse.
        names (Optional[Dict[str, Element]]): Named elements, e.g. ``B1``.
    """

    def __init__(self, ctx=None, names=None):
        self.ctx = ctx
        self.names = dict(names or {})
        self.grammar = self._build()

    # ----------- VALUE ARITHMETIC ----------
    def _element(self, value):
        return value if isinstance(value, Element) else self.ctx.scalar(value)

    def _multiply(self, a, b):
        if isinstance(a, Element) or isinstance(b, Element):
            return self._element(a) * self._element(b)
        return a * b

    def _add(self, a, b):
        if isinstance(a, Element) or isinstance(b, Element):
            return self._element(a) + self._element(b)
        return a + b

    def _power(self, text, loc, base, exponent):
        if not isinstance(base, Element):
            if exponent >= 0:
                return base ** exponent
            if not base:
                raise ParseError("Zero raised to a negative power", loc, text)
            return ONE / base ** (-exponent)
        if len(base.terms) == 1:
            (word, coefficient), = base.terms.items()
            if word.is_torus() and coefficient == ONE:
                return self.ctx.torus(scale(exponent, word.torus))
        if exponent < 0:
            raise ParseError("Only torus elements have negative powers", loc, text)
        return base ** exponent

    # ----------- GRAMMAR ----------
    def _build(self):
        expression = pp.Forward()
        exponent = pp.Regex(r"[+-]?\d+").set_parse_action(lambda t: int(t[0]))
        integer = pp.Regex(r"\d+").set_parse_action(lambda t: qrat(int(t[0])))
        q_symbol = pp.Regex(r"q(?![A-Za-z0-9_])").set_parse_action(lambda: Q)
        s_symbol = pp.Regex(r"s(?![A-Za-z0-9_])").set_parse_action(lambda: S)
        generator = pp.Regex(r"[xyt]\d+").set_parse_action(self._on_generator)
        torus = (
            pp.Suppress(pp.Literal("K") + pp.Literal("["))
            + pp.delimited_list(pp.Regex(r"[+-]?\d+"))
            + pp.Suppress("]")
        ).set_parse_action(self._on_torus)
        name = pp.Regex(r"(?!K\[)[A-Z][A-Za-z0-9_]*").set_parse_action(self._on_name)
        group = pp.Suppress("(") + expression + pp.Suppress(")")
        atom = integer | q_symbol | s_symbol | generator | torus | name | group
        power = (atom + pp.Optional(pp.Suppress("^") + exponent)).set_parse_action(
            self._on_power
        )
        product = (
            power + pp.ZeroOrMore(pp.Literal("*") + power | pp.Literal("/") + power | power)
        ).set_parse_action(self._on_product)
        sign = pp.one_of("+ -")
        expression <<= (
            pp.Optional(sign) + product + pp.ZeroOrMore(sign + product)
        ).set_parse_action(self._on_sum)
        return expression

    def _require_context(self, text, loc):
        if self.ctx is None:
            raise ParseError("Algebra generators need an algebra context", loc, text)

    def _on_generator(self, text, loc, tokens):
        self._require_context(text, loc)
        token = tokens[0]
        kind, index = token[0], int(token[1:]) - 1
        if not 0 <= index < self.ctx.rank:
            raise ParseError(
                f"Generator {token} is out of range 1..{self.ctx.rank}", loc, text
            )
        if kind == "x":
            return self.ctx.x(index)
        if kind == "y":
            return self.ctx.y(index)
        return self.ctx.t(index)

    def _on_torus(self, text, loc, tokens):
        self._require_context(text, loc)
        vector = [int(c) for c in tokens]
        if len(vector) != self.ctx.rank:
            raise ParseError(f"K[...] needs {self.ctx.rank} entries", loc, text)
        return self.ctx.torus(vector)

    def _on_name(self, text, loc, tokens):
        if tokens[0] not in self.names:
            raise ParseError(f"Unknown name {tokens[0]}", loc, text)
        return self.names[tokens[0]]

    def _on_power(self, text, loc, tokens):
        if len(tokens) == 1:
            return tokens[0]
        return self._power(text, loc, tokens[0], tokens[1])

    def _on_product(self, text, loc, tokens):
        value, index = tokens[0], 1
        while index < len(tokens):
            token = tokens[index]
            if isinstance(token, str) and token == "*":
                value = self._multiply(value, tokens[index + 1])
                index += 2
            elif isinstance(token, str) and token == "/":
                divisor = tokens[index + 1]
                if isinstance(divisor, Element) or not divisor:
                    raise ParseError("Division is by nonzero coefficients only", loc, text)
                value = self._multiply(value, ONE / divisor)
                index += 2
            else:
                value = self._multiply(value, token)
                index += 1
        return value

    def _on_sum(self, text, loc, tokens):
        tokens = list(tokens)
        negative = False
        if isinstance(tokens[0], str):
            negative = tokens.pop(0) == "-"
        value = -tokens[0] if negative else tokens[0]
        for sign, term in zip(tokens[1::2], tokens[2::2]):
            value = self._add(value, -term if sign == "-" else term)
        return value

    # ----------- ENTRY POINTS ----------
    def parse(self, text):
        """ Returns the value of the expression text.

        Raises:
            ParseError: On a syntax error, with the failing column.
        """
        try:
            return self.grammar.parse_string(text, parse_all=True)[0]
        except pp.ParseBaseException as error:
            raise ParseError(f"Cannot parse expression: {error.msg}", error.loc, text)


def parse_qrat(text):
    """ Returns the coefficient written in the text.

    Raises:
        ParseError: If the text is not a coefficient expression.
    """
    if isinstance(text, int):
        return qrat(text)
    return ExpressionParser().parse(str(text))


def parse_element(text, ctx, names=None):
    """ Returns the Element written in the text, in normal form. """
    value = ExpressionParser(ctx, names).parse(text)
    return value if isinstance(value, Element) else ctx.scalar(value)
