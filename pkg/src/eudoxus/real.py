"""Real numbers as slopes, with certified comparison and rendering.

Equality of reals is undecidable, so comparisons return one of ``LESS``,
``GREATER`` or ``INDISTINGUISHABLE`` together with the certified gap that
was reached.  Radii come straight from the defect bound: a slope ``lam``
with defect at most ``S`` satisfies ``|lam(n) - n x| <= S``, so
``lam(n)/n`` is within ``S/n`` of ``x``.  Approximating the raw slope this
way is cheaper than concentrating it first, which would multiply every
index by ``3S``.
"""

import dataclasses
import enum
import threading
from fractions import Fraction
from typing import Optional, Sequence

from . import arith
from . import constructors as cons
from .config import limits
from .errors import NotPositiveError, SlopeError
from .slope import Slope, Trust, concentrate

__all__ = [
    'Real', 'Order', 'Comparison', 'CertifiedApprox', 'Rendering', 'Side',
    'DEFAULT_EPS', 'approximate', 'sign_within', 'compare_within', 'to_decimal',
    'cauchy_term', 'dedekind_side', 'sup_finite', 'archimedean_witness',
]

DEFAULT_EPS = Fraction(1, 10**9)
LADDER_START = 8


class Real:
    """A real number, held as a representing slope.

    Arithmetic operators build new slopes lazily; nothing is evaluated until
    a comparison or approximation asks for it.  ``<``/``==`` are deliberately
    not overloaded; use :func:`compare_within`.
    """

    def __init__(self, slope: Slope, label: Optional[str] = None):
        if slope.certificate is None:
            raise ValueError('a Real needs a slope with a defect certificate')
        self.raw = slope
        self.label = label or slope.label
        self._normal = None
        self._witness = None
        self._lock = threading.Lock()

    @property
    def normal(self) -> Slope:
        """Well-adjusted representative, computed once."""
        if self._normal is None:
            with self._lock:
                if self._normal is None:
                    self._normal = concentrate(self.raw)
        return self._normal

    @property
    def trust(self) -> Trust:
        return self.raw.trust

    @classmethod
    def coerce(cls, value) -> 'Real':
        if isinstance(value, Real):
            return value
        if isinstance(value, int):
            return cls(cons.from_integer(value))
        if isinstance(value, Fraction):
            return cls(cons.from_rational(value.numerator, value.denominator))
        raise TypeError(f'cannot make a Real from {type(value).__name__}')

    # constructors

    @classmethod
    def integer(cls, j):
        return cls(cons.from_integer(j))

    @classmethod
    def rational(cls, p, q):
        return cls(cons.from_rational(p, q))

    @classmethod
    def sqrt(cls, m):
        return cls(cons.sqrt_nat(m))

    @classmethod
    def root(cls, m, r):
        return cls(cons.root_nat(m, r))

    @classmethod
    def polyroot(cls, coefficients, bracket):
        return cls(cons.poly_root(cons.HomogenizedPolynomial(coefficients, bracket)))

    @classmethod
    def pi(cls):
        return cls(cons.pi_slope())

    @classmethod
    def e(cls):
        return cls(cons.e_slope())

    # arithmetic

    def __add__(self, other):
        other = _maybe(other)
        return NotImplemented if other is None else Real(arith.add(self.raw, other.raw))

    __radd__ = __add__

    def __neg__(self):
        return Real(arith.negate(self.raw))

    def __sub__(self, other):
        other = _maybe(other)
        return NotImplemented if other is None else Real(arith.subtract(self.raw, other.raw))

    def __rsub__(self, other):
        other = _maybe(other)
        return NotImplemented if other is None else Real(arith.subtract(other.raw, self.raw))

    def __mul__(self, other):
        other = _maybe(other)
        return NotImplemented if other is None else Real(arith.multiply(self.raw, other.raw))

    def __rmul__(self, other):
        other = _maybe(other)
        return NotImplemented if other is None else Real(arith.multiply(other.raw, self.raw))

    def __truediv__(self, other):
        other = _maybe(other)
        return NotImplemented if other is None else self * other.inverse()

    def __rtruediv__(self, other):
        other = _maybe(other)
        return NotImplemented if other is None else other * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        return Real(arith.int_power(self.raw, e))

    def witness(self) -> int:
        """An index where the normal form exceeds 1 in absolute value."""
        if self._witness is None:
            self._witness = arith.find_witness(self.normal)
        return self._witness

    def inverse(self) -> 'Real':
        """Multiplicative inverse; raises ZeroDivisorError if no witness."""
        return Real(arith.inverse(self.normal, self.witness()))

    def __repr__(self):
        return f'Real({self.label!r}, {self.trust.value})'


def _maybe(value):
    try:
        return Real.coerce(value)
    except TypeError:
        return None


class Order(enum.Enum):
    LESS = 'less'
    GREATER = 'greater'
    INDISTINGUISHABLE = 'indistinguishable'


@dataclasses.dataclass(frozen=True)
class Comparison:
    order: Order
    #: certified bound on ``|x - y|`` when indistinguishable, else ``None``
    eps: Optional[Fraction]
    #: ladder index at which the answer was settled
    index: int
    trust: Trust

    @property
    def is_less(self):
        return self.order is Order.LESS

    @property
    def is_greater(self):
        return self.order is Order.GREATER

    @property
    def is_indistinguishable(self):
        return self.order is Order.INDISTINGUISHABLE

    def flipped(self):
        swap = {Order.LESS: Order.GREATER, Order.GREATER: Order.LESS}
        return dataclasses.replace(self, order=swap.get(self.order, self.order))


@dataclasses.dataclass(frozen=True)
class CertifiedApprox:
    midpoint: Fraction
    radius: Fraction
    index: int
    trust: Trust

    @property
    def lower(self):
        return self.midpoint - self.radius

    @property
    def upper(self):
        return self.midpoint + self.radius

    def intersects(self, other: 'CertifiedApprox') -> bool:
        return self.lower <= other.upper and other.lower <= self.upper


def approximate(x: Real, index: int) -> CertifiedApprox:
    """``lam(index)/index`` with radius ``S/index``."""
    if index < 1:
        raise ValueError('approximation index must be positive')
    lam = x.raw
    return CertifiedApprox(Fraction(lam(index), index), Fraction(lam.bound, index),
                           index, x.trust)


def sign_within(x: Real, eps=DEFAULT_EPS) -> Comparison:
    """Compare ``x`` with zero, giving up once ``|x| <= eps`` is certified.

    Walks the doubling ladder ``8, 16, 32, ...``.  With ``S`` the defect
    bound, ``lam(n) > S`` proves ``x > 0`` and ``|lam(n)| <= S`` proves
    ``|x| <= (|lam(n)| + S)/n``.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError('eps must be positive')
    lam = x.raw
    s = lam.bound
    n = LADDER_START
    while True:
        v = lam(n)
        if v > s:
            return Comparison(Order.GREATER, None, n, x.trust)
        if v < -s:
            return Comparison(Order.LESS, None, n, x.trust)
        gap = Fraction(abs(v) + s, n)
        if gap <= eps:
            return Comparison(Order.INDISTINGUISHABLE, gap, n, x.trust)
        n *= 2


def compare_within(x, y, eps=DEFAULT_EPS) -> Comparison:
    """Sign of ``x - y`` at precision ``eps``."""
    x, y = Real.coerce(x), Real.coerce(y)
    return sign_within(x - y, eps)


@dataclasses.dataclass(frozen=True)
class Rendering:
    text: str
    approx: CertifiedApprox
    trust: Trust
    #: False when the digits could not be pinned down and ``text`` is an interval
    settled: bool

    @property
    def error_bound(self) -> Fraction:
        """Bound on ``|decimal - x|`` (or the interval radius)."""
        if not self.settled:
            return self.approx.radius
        return abs(Fraction(self.text) - self.approx.midpoint) + self.approx.radius

    def __str__(self):
        return self.text if self.trust is Trust.PROVEN else f'{self.text} (uncertified)'


def _format_fixed(value: Fraction, digits: int) -> str:
    scaled = value.numerator * 10**digits
    # ``value`` already has a terminating expansion at ``digits`` places
    q = scaled // value.denominator
    sign = '-' if q < 0 else ''
    q = abs(q)
    whole, frac = divmod(q, 10**digits)
    if digits == 0:
        return f'{sign}{whole}'
    return f'{sign}{whole}.{frac:0{digits}d}'


def _round_fixed(value: Fraction, digits: int) -> str:
    text = _format_fixed(Fraction(round(value * 10**digits), 10**digits), digits)
    if text.startswith('-') and set(text[1:]) <= set('0.'):
        text = text[1:]
    return text


def _outward(value: Fraction, digits: int, up: bool) -> str:
    scaled = value * 10**digits
    q = -(-scaled.numerator // scaled.denominator) if up else scaled.numerator // scaled.denominator
    return _format_fixed(Fraction(q, 10**digits), digits)


def to_decimal(x: Real, digits: int, eps=None, max_doublings: int = 64) -> Rendering:
    """Round ``x`` to ``digits`` places with a certified answer.

    Starts at an index with radius at most ``10^-digits / 4`` (or ``eps`` if
    smaller) and doubles it while the certified interval straddles a
    rounding boundary.  If the index cap is hit first the result is an
    interval ``[lo, hi]`` and ``settled`` is False.
    """
    if digits < 0:
        raise ValueError('digits must be nonnegative')
    s = max(x.raw.bound, 1)
    n = 4 * s * 10**digits
    if eps is not None:
        eps = Fraction(eps)
        while Fraction(s, n) > eps:
            n *= 2
    last = None
    for _ in range(max_doublings):
        try:
            approx = approximate(x, n)
        except SlopeError:
            if last is None:
                raise
            break
        last = approx
        lo, hi = _round_fixed(approx.lower, digits), _round_fixed(approx.upper, digits)
        if lo == hi:
            return Rendering(lo, approx, x.trust, True)
        n *= 2
    text = f'[{_outward(last.lower, digits, False)}, {_outward(last.upper, digits, True)}]'
    return Rendering(text, last, x.trust, False)


def cauchy_term(x: Real, n: int) -> Fraction:
    """``r_n = lam(n+1)/(n+1)`` for the representing slope ``lam``.

    Successive terms satisfy ``|r_n - r_m| <= S (1/(n+1) + 1/(m+1))``.
    """
    if n < 0:
        raise ValueError('n must be nonnegative')
    return Fraction(x.raw(n + 1), n + 1)


class Side(enum.Enum):
    A = 'A'
    B = 'B'
    UNDETERMINED = 'boundary-undetermined'


def dedekind_side(x: Real, p: int, q: int, eps=DEFAULT_EPS) -> Side:
    """Which half of the cut of ``x`` the rational ``p/q`` falls into.

    An exact boundary point cannot be told apart from a near miss, so
    indistinguishable cases are reported as undetermined.
    """
    outcome = compare_within(Real.rational(p, q), x, eps)
    if outcome.is_less:
        return Side.A
    if outcome.is_greater:
        return Side.B
    return Side.UNDETERMINED


def sup_finite(xs: Sequence[Real]) -> Real:
    """Least upper bound of a finite nonempty family.

    The pointwise maximum of well-adjusted representatives has defect at
    most 4.
    """
    xs = [Real.coerce(x) for x in xs]
    if not xs:
        raise ValueError('sup_finite needs at least one element')
    normals = [x.normal for x in xs]
    trust = Trust.PROVEN
    for x in xs:
        trust = trust & x.trust
    label = 'sup(' + ', '.join(x.label for x in xs) + ')'
    return Real(Slope.certified(lambda n: max(k(n) for k in normals), 4, trust, label))


def archimedean_witness(a: Real, big: Real, check_eps=Fraction(1, 10**6)) -> int:
    """An ``N`` with ``N a > big``, for positive ``a``.

    Takes the first ``n`` on the ladder with ``lam(n) > 1`` and returns
    ``1 + max(Lam(2n), 0)`` where ``lam``, ``Lam`` are the normal forms of
    ``a`` and ``big``.
    """
    a, big = Real.coerce(a), Real.coerce(big)
    lam = a.normal
    n = 1
    while lam(n) <= 1:
        if lam(n) < -1 or n > min(limits.inverse_search_cap, limits.index_cap):
            raise NotPositiveError(f'{a.label} is not certifiably positive')
        n *= 2
    count = 1 + max(big.normal(2 * n), 0)
    result = compare_within(count * a, big, check_eps)
    if not result.is_greater:
        raise SlopeError(f'archimedean check failed: {count} * {a.label} vs {big.label}')
    return count
