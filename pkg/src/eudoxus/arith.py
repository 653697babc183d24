"""Field operations on slopes with defect-certificate propagation.

Sums are pointwise, products are compositions.  Each result carries a bound
derived from its operands' bounds:

* sum:      ``S(a+b) = S(a) + S(b)``
* negation: ``S(-a) = S(a)``
* product:  ``S(a o b) = 2 S(a) + (|a(1)| + S(a)) S(b)``
"""

from .config import limits
from .errors import SlopeError, ZeroDivisorError
from .slope import Slope, Trust, opt_div

__all__ = ['add', 'negate', 'subtract', 'multiply', 'product_bound',
           'find_witness', 'inverse', 'int_power', 'power_bound', 'identity']


def identity(j=1):
    return Slope.certified(lambda n: j * n, 0, Trust.PROVEN, str(j))


def add(a: Slope, b: Slope) -> Slope:
    return Slope.certified(lambda n: a(n) + b(n), a.bound + b.bound,
                           a.trust & b.trust, f'({a.label} + {b.label})')


def negate(a: Slope) -> Slope:
    return Slope.certified(lambda n: -a(n), a.bound, a.trust, f'-{a.label}')


def subtract(a: Slope, b: Slope) -> Slope:
    return Slope.certified(lambda n: a(n) - b(n), a.bound + b.bound,
                           a.trust & b.trust, f'({a.label} - {b.label})')


def product_bound(a: Slope, b: Slope) -> int:
    return 2 * a.bound + a.certificate.growth * b.bound


def multiply(a: Slope, b: Slope) -> Slope:
    """Composition ``n -> a(b(n))``."""
    return Slope.certified(lambda n: a(b(n)), product_bound(a, b),
                           a.trust & b.trust, f'({a.label} * {b.label})')


def find_witness(a: Slope, cap=None) -> int:
    """Smallest power of two ``k`` with ``|a(k)| > 1``, up to ``cap``."""
    cap = limits.inverse_search_cap if cap is None else cap
    k = 1
    while k <= cap:
        if abs(a(k)) > 1:
            return k
        k *= 2
    raise ZeroDivisorError(
        f'{a.label}: no index up to {cap} with |value| > 1; treating as zero')


def inverse(a: Slope, witness=None) -> Slope:
    """Right inverse of a well-adjusted slope ``a``.

    ``beta(v)`` is an ``n`` with ``|v - a(n)| <= |a(1)| + 1``, found by
    rounding ``v N / a(N)`` for a large ``N`` and scanning from there.

    The bound ``k (3|a(1)| + 7)`` uses the witness ``k``: ``|a(beta defect)|``
    is at most ``3|a(1)| + 5`` and ``|a(d)| >= d:k - 1`` for well-adjusted
    ``a``.  It rests on ``a`` actually being well adjusted, so the result is
    always labelled empirical.
    """
    if witness is None:
        witness = find_witness(a)
    elif abs(a(witness)) <= 1:
        raise ValueError(f'{witness} is not a witness: |a({witness})| <= 1')
    direction = 1 if a(witness) > 0 else -1
    slack = abs(a(1)) + 1

    def positive(v):
        need = max(4, v) * slack
        big = witness
        while abs(a(big)) <= need:
            big *= 2
        n = opt_div(v * big, a(big))
        # the estimate is within a few steps; 10**4 only guards against
        # a slope that is not actually well adjusted
        for _ in range(10**4):
            gap = v - a(n)
            if abs(gap) <= slack:
                return n
            n += direction if gap > 0 else -direction
        raise SlopeError(f'inverse scan for {v} did not converge; '
                         f'is {a.label} well adjusted?')

    bound = witness * (3 * abs(a(1)) + 7)
    return Slope.certified(positive, bound, Trust.EMPIRICAL, f'inv({a.label})')


def power_bound(a: Slope, e: int) -> int:
    s = a.bound
    x = a.certificate.growth
    return 3 * ((x + s)**e - x**e + 1)


def int_power(a: Slope, e: int) -> Slope:
    """``a`` to the ``e``-th power as ``n -> [a(n)^e / n^(e-1)]``.

    This stays equivalent to the ``e``-fold composition without the index
    blow-up that composition causes.
    """
    if e < 0:
        raise ValueError('exponent must be nonnegative')
    if e == 0:
        return identity(1)
    if e == 1:
        return a
    return Slope.certified(lambda n: a(n)**e // n**(e - 1), power_bound(a, e),
                           Trust.EMPIRICAL, f'{a.label}^{e}')
