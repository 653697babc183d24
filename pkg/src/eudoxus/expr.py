"""A small expression language over the constructors.

Grammar::

    expr   := term { ("+" | "-") term }
    term   := factor { ("*" | "/") factor }
    factor := base [ "^" nat ]
    base   := int | int "/" nat | "pi" | "e" | "sqrt" "(" nat ")"
            | "root" "(" nat "," nat ")"
            | "polyroot" "(" intlist ";" int "," int ")"
            | "-" base | "(" expr ")"

``int "/" nat`` directly between two literals is a rational literal, so
``2/3^2`` means ``(2/3)^2``.
"""

import dataclasses
import re
import time
from fractions import Fraction
from typing import Optional, Tuple, Union

from .errors import SlopeError, ZeroDivisorError
from .real import Real, to_decimal

__all__ = [
    'ParseError', 'IntegerLiteral', 'RationalLiteral', 'Constant', 'Sqrt', 'Root',
    'PolyRoot', 'Neg', 'Add', 'Sub', 'Mul', 'Div', 'Pow', 'Node',
    'parse', 'to_source', 'build', 'eval_expr', 'EvalResult', 'MAX_DIGITS',
    'exact_decimal', 'decimal_upper_bound',
]

MAX_DIGITS = 50


class ParseError(ValueError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f'{message} at position {position}')


@dataclasses.dataclass(frozen=True)
class IntegerLiteral:
    value: int


@dataclasses.dataclass(frozen=True)
class RationalLiteral:
    p: int
    q: int


@dataclasses.dataclass(frozen=True)
class Constant:
    name: str


@dataclasses.dataclass(frozen=True)
class Sqrt:
    m: int


@dataclasses.dataclass(frozen=True)
class Root:
    m: int
    r: int


@dataclasses.dataclass(frozen=True)
class PolyRoot:
    coefficients: Tuple[int, ...]
    bracket: Tuple[int, int]


@dataclasses.dataclass(frozen=True)
class Neg:
    operand: 'Node'


@dataclasses.dataclass(frozen=True)
class Add:
    left: 'Node'
    right: 'Node'


@dataclasses.dataclass(frozen=True)
class Sub:
    left: 'Node'
    right: 'Node'


@dataclasses.dataclass(frozen=True)
class Mul:
    left: 'Node'
    right: 'Node'


@dataclasses.dataclass(frozen=True)
class Div:
    left: 'Node'
    right: 'Node'


@dataclasses.dataclass(frozen=True)
class Pow:
    base: 'Node'
    exponent: int


Node = Union[IntegerLiteral, RationalLiteral, Constant, Sqrt, Root, PolyRoot,
             Neg, Add, Sub, Mul, Div, Pow]

_TOKEN = re.compile(r'(\d+)|([A-Za-z_]\w*)|(\S)')
_BINARY = {'+': Add, '-': Sub, '*': Mul, '/': Div}


def _tokenize(source):
    tokens = []
    for m in _TOKEN.finditer(source):
        number, name, ch = m.groups()
        if number is not None:
            tokens.append(('int', int(number), m.start()))
        elif name is not None:
            tokens.append(('name', name, m.start()))
        elif ch in '+-*/^(),;':
            tokens.append((ch, ch, m.start()))
        else:
            raise ParseError(f'unexpected character {ch!r}', m.start())
    tokens.append(('end', None, len(source)))
    return tokens


class _Parser:
    def __init__(self, source):
        self.tokens = _tokenize(source)
        self.i = 0

    def peek(self, offset=0):
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def take(self, kind=None):
        tok = self.peek()
        if kind is not None and tok[0] != kind:
            want = 'a number' if kind == 'int' else repr(kind)
            got = 'end of input' if tok[0] == 'end' else repr(tok[1])
            raise ParseError(f'expected {want}, got {got}', tok[2])
        self.i += 1
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != 'end':
            raise ParseError(f'unexpected {tok[1]!r}', tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ('+', '-'):
            op = self.take()[0]
            node = _BINARY[op](node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] in ('*', '/'):
            op = self.take()[0]
            node = _BINARY[op](node, self.factor())
        return node

    def factor(self):
        node = self.base()
        if self.peek()[0] == '^':
            self.take()
            node = Pow(node, self.take('int')[1])
        return node

    def signed_int(self):
        if self.peek()[0] == '-':
            self.take()
            return -self.take('int')[1]
        return self.take('int')[1]

    def base(self):
        kind, value, pos = self.peek()
        if kind == 'int':
            self.take()
            if self.peek()[0] == '/' and self.peek(1)[0] == 'int':
                self.take()
                return RationalLiteral(value, self.take('int')[1])
            return IntegerLiteral(value)
        if kind == '-':
            self.take()
            return Neg(self.base())
        if kind == '(':
            self.take()
            node = self.expr()
            self.take(')')
            return node
        if kind == 'name':
            self.take()
            if value in ('pi', 'e'):
                return Constant(value)
            if value == 'sqrt':
                self.take('(')
                m = self.take('int')
                self.take(')')
                if m[1] < 1:
                    raise ParseError('sqrt needs a positive integer', m[2])
                return Sqrt(m[1])
            if value == 'root':
                self.take('(')
                m = self.take('int')
                self.take(',')
                r = self.take('int')
                self.take(')')
                if m[1] < 1:
                    raise ParseError('root needs a positive radicand', m[2])
                if r[1] < 2:
                    raise ParseError('root index must be at least 2', r[2])
                return Root(m[1], r[1])
            if value == 'polyroot':
                self.take('(')
                coeffs = [self.signed_int()]
                while self.peek()[0] == ',':
                    self.take()
                    coeffs.append(self.signed_int())
                self.take(';')
                lo = self.signed_int()
                self.take(',')
                hi = self.signed_int()
                self.take(')')
                if not any(coeffs[1:]):
                    raise ParseError('polyroot needs a polynomial of degree >= 1', pos)
                return PolyRoot(tuple(coeffs), (lo, hi))
            raise ParseError(f'unknown name {value!r}', pos)
        if kind == 'end':
            raise ParseError('unexpected end of input', pos)
        raise ParseError(f'unexpected {value!r}', pos)


def parse(source: str) -> Node:
    return _Parser(source).parse()


_ATOMS = (IntegerLiteral, RationalLiteral, Constant, Sqrt, Root, PolyRoot)
_SYMBOL = {Add: '+', Sub: '-', Mul: '*', Div: '/'}


def to_source(node: Node) -> str:
    """Render ``node`` so that ``parse(to_source(node)) == node``."""
    if isinstance(node, IntegerLiteral):
        return str(node.value)
    if isinstance(node, RationalLiteral):
        return f'{node.p}/{node.q}'
    if isinstance(node, Constant):
        return node.name
    if isinstance(node, Sqrt):
        return f'sqrt({node.m})'
    if isinstance(node, Root):
        return f'root({node.m}, {node.r})'
    if isinstance(node, PolyRoot):
        lo, hi = node.bracket
        return f'polyroot({",".join(map(str, node.coefficients))}; {lo}, {hi})'
    if isinstance(node, Neg):
        inner = to_source(node.operand)
        return '-' + (inner if isinstance(node.operand, _ATOMS + (Neg,)) else f'({inner})')
    if isinstance(node, Pow):
        inner = to_source(node.base)
        if not isinstance(node.base, _ATOMS + (Neg,)):
            inner = f'({inner})'
        return f'{inner}^{node.exponent}'
    left, right = to_source(node.left), to_source(node.right)
    if isinstance(node, Div) and right[0].isdigit():
        right = f'({right})'    # keep "1 / (3)" from reading as a literal
    return f'({left} {_SYMBOL[type(node)]} {right})'


def build(node: Node, session: Optional[dict] = None) -> Real:
    """Turn an expression tree into a :class:`Real`.

    ``session`` memoizes subtrees so repeated evaluations reuse slope caches.
    """
    if session is not None and node in session:
        return session[node]
    real = _build(node, session)
    if session is not None:
        session[node] = real
    return real


def _build(node, session):
    if isinstance(node, IntegerLiteral):
        return Real.integer(node.value)
    if isinstance(node, RationalLiteral):
        if node.q == 0:
            raise ZeroDivisorError(f'rational literal {node.p}/0')
        return Real.rational(node.p, node.q)
    if isinstance(node, Constant):
        return Real.pi() if node.name == 'pi' else Real.e()
    if isinstance(node, Sqrt):
        return Real.sqrt(node.m)
    if isinstance(node, Root):
        return Real.root(node.m, node.r)
    if isinstance(node, PolyRoot):
        return Real.polyroot(node.coefficients, node.bracket)
    if isinstance(node, Neg):
        return -build(node.operand, session)
    if isinstance(node, Pow):
        return build(node.base, session) ** node.exponent
    left, right = build(node.left, session), build(node.right, session)
    if isinstance(node, Add):
        return left + right
    if isinstance(node, Sub):
        return left - right
    if isinstance(node, Mul):
        return left * right
    if isinstance(node, Div):
        return left * right.inverse()
    raise TypeError(f'not an expression node: {node!r}')


def exact_decimal(value: Fraction) -> str:
    """Exact decimal expansion, or ``p/q`` when it does not terminate."""
    value = Fraction(value)
    d = value.denominator
    places = 0
    for prime in (2, 5):
        count = 0
        while d % prime == 0:
            d //= prime
            count += 1
        places = max(places, count)
    if d != 1:
        return f'{value.numerator}/{value.denominator}'
    scaled = abs(value.numerator) * 10**places // value.denominator
    whole, frac = divmod(scaled, 10**places)
    sign = '-' if value < 0 else ''
    return f'{sign}{whole}.{frac:0{places}d}' if places else f'{sign}{whole}'


def decimal_upper_bound(value: Fraction, significant: int = 4) -> str:
    """``value`` as a decimal string, exact if it terminates, otherwise
    rounded up at ``significant`` significant digits."""
    value = Fraction(value)
    if value < 0:
        raise ValueError('bounds are nonnegative')
    exact = exact_decimal(value)
    if '/' not in exact:
        return exact
    places = 0
    while value * 10**places < 10**(significant - 1):
        places += 1
    scaled = value * 10**places
    return exact_decimal(Fraction(-(-scaled.numerator // scaled.denominator), 10**places))


@dataclasses.dataclass
class EvalResult:
    expr: str
    decimal: str
    error_bound: Fraction
    certificate: str
    index_used: int
    wall_ms: int
    settled: bool

    def to_json(self):
        return {
            'expr': self.expr,
            'decimal': self.decimal,
            'error_bound': decimal_upper_bound(self.error_bound),
            'certificate': self.certificate,
            'index_used': self.index_used,
            'wall_ms': self.wall_ms,
        }

    def __str__(self):
        tag = '' if self.certificate == 'proven' else ' (uncertified)'
        return self.decimal + tag


def eval_expr(node: Node, digits: int = 10, eps=None, session=None,
              max_digits: int = MAX_DIGITS, source: Optional[str] = None) -> EvalResult:
    """Evaluate ``node`` to ``digits`` decimal places with a certified bound."""
    if not 0 <= digits <= max_digits:
        raise ValueError(f'digits must be between 0 and {max_digits}')
    start = time.perf_counter()
    real = build(node, session)
    rendering = to_decimal(real, digits, eps=eps)
    wall = int((time.perf_counter() - start) * 1000)
    return EvalResult(source if source is not None else to_source(node),
                      rendering.text, rendering.error_bound, rendering.trust.value,
                      rendering.approx.index, wall, rendering.settled)


def is_evaluation_error(exc: BaseException) -> bool:
    return isinstance(exc, (SlopeError, ZeroDivisionError))
