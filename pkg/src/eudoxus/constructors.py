"""Concrete slopes: integers, rationals, radicals, polynomial roots, pi and e."""

import dataclasses
import math
from typing import Sequence, Tuple

import numpy as np
from mpmath.libmp import (from_int, mpf_e, mpf_shift, mpf_sign, mpi_div, mpi_log,
                          mpi_mul, mpi_sub, to_int)

from .config import limits
from .errors import InvalidBracketError, NonMonotoneError, ResourceLimitError
from .slope import Slope, Trust

__all__ = [
    'isqrt', 'iroot', 'from_integer', 'from_rational', 'sqrt_nat', 'root_nat',
    'HomogenizedPolynomial', 'poly_root', 'lattice_count', 'pi_slope',
    'circle_defect', 'steiner_compare', 'steiner_argmax', 'e_slope',
]


def isqrt(m: int) -> int:
    """Exact ``floor(sqrt(m))``."""
    if m < 0:
        raise ValueError(f'isqrt of negative number {m}')
    return math.isqrt(m)


def iroot(m: int, r: int) -> int:
    """Exact ``floor(m ** (1/r))`` for ``m >= 0``, ``r >= 1``."""
    if m < 0:
        raise ValueError(f'iroot of negative number {m}')
    if r < 1:
        raise ValueError(f'root index must be positive, got {r}')
    if r == 1 or m < 2:
        return m
    if r == 2:
        return math.isqrt(m)
    # Newton from above: start at a power of two not below the root
    x = 1 << -(-m.bit_length() // r)
    while True:
        y = ((r - 1) * x + m // x**(r - 1)) // r
        if y >= x:
            return x
        x = y


def _ceil_root(m, r):
    """Smallest ``k >= 0`` with ``k**r >= m``."""
    t = iroot(m, r)
    return t if t**r == m else t + 1


def from_integer(j: int) -> Slope:
    return Slope.certified(lambda n: j * n, 0, Trust.PROVEN, str(j))


def from_rational(p: int, q: int) -> Slope:
    """``n -> ceil(p n / q)`` for ``n > 0``, odd extension below."""
    if q <= 0:
        raise ValueError(f'denominator must be positive, got {q}')
    return Slope.certified(lambda n: -((-p * n) // q), 2, Trust.PROVEN, f'{p}/{q}')


def sqrt_nat(m: int) -> Slope:
    """``n -> min{k >= 0 : m n^2 <= k^2}``."""
    if m < 1:
        raise ValueError(f'sqrt_nat needs m >= 1, got {m}')
    root = math.isqrt(m)
    if root * root == m:
        return Slope.certified(lambda n: root * n, 0, Trust.PROVEN, f'sqrt({m})')
    # 8 is the classical bound for m = 2; a ceiling of a linear map never
    # has defect outside {-1, 0}, so 2 is safe for every other m
    bound = 8 if m == 2 else 2
    return Slope.certified(lambda n: _ceil_root(m * n * n, 2), bound,
                           Trust.PROVEN, f'sqrt({m})')


def root_nat(m: int, r: int) -> Slope:
    """``n -> min{k >= 0 : m n^r <= k^r}``, the ``r``-th root of ``m``."""
    if m < 1:
        raise ValueError(f'root_nat needs m >= 1, got {m}')
    if r < 2:
        raise ValueError(f'root index must be at least 2, got {r}')
    if r == 2:
        return sqrt_nat(m)
    root = iroot(m, r)
    if root**r == m:
        return Slope.certified(lambda n: root * n, 0, Trust.PROVEN, f'root({m},{r})')
    return Slope.certified(lambda n: _ceil_root(m * n**r, r), 2, Trust.PROVEN,
                           f'root({m},{r})')


@dataclasses.dataclass(frozen=True)
class HomogenizedPolynomial:
    """``P(x) = sum c_i x^i`` with an integer bracket where it changes sign.

    ``Q(k, n) = n^d P(k/n)`` is evaluated exactly in integers.
    """

    coefficients: Tuple[int, ...]
    bracket: Tuple[int, int]

    def __init__(self, coefficients: Sequence[int], bracket: Tuple[int, int]):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            raise ValueError('polynomial must have degree at least 1')
        object.__setattr__(self, 'coefficients', tuple(coeffs))
        object.__setattr__(self, 'bracket', (int(bracket[0]), int(bracket[1])))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        return sum(c * x**i for i, c in enumerate(self.coefficients))

    def homogenized(self, k: int, n: int) -> int:
        d = self.degree
        return sum(c * k**i * n**(d - i) for i, c in enumerate(self.coefficients))

    def shifted(self, a: int):
        """Coefficients of ``t -> P(a + t)``."""
        d = self.degree
        return [sum(c * math.comb(i, j) * a**(i - j)
                    for i, c in enumerate(self.coefficients) if i >= j)
                for j in range(d + 1)]

    def validate(self, sample_scales=(1, 2, 3, 5, 8, 13, 21, 34, 64)):
        """Check the bracket and that ``P`` increases on it."""
        lo, hi = self.bracket
        if not 0 <= lo < hi:
            raise InvalidBracketError(f'bracket {self.bracket} must satisfy 0 <= lo < hi')
        if not self(lo) < 0 < self(hi):
            raise InvalidBracketError(
                f'P({lo}) = {self(lo)} and P({hi}) = {self(hi)} do not bracket a root')
        tail = self.shifted(lo)[1:]
        if all(c >= 0 for c in tail):
            return
        for n in sample_scales:
            prev = self.homogenized(lo * n, n)
            for k in range(lo * n + 1, hi * n + 1):
                cur = self.homogenized(k, n)
                if cur <= prev:
                    raise NonMonotoneError(
                        f'P is not increasing on {self.bracket}: Q({k - 1},{n}) >= Q({k},{n})')
                prev = cur


def poly_root(poly: HomogenizedPolynomial) -> Slope:
    """``n -> min{k in [lo n, hi n] : Q(k, n) >= 0}`` by bisection."""
    poly.validate()
    lo, hi = poly.bracket
    q = poly.homogenized

    def positive(n):
        a, b = lo * n, hi * n          # q(a, n) < 0 <= q(b, n)
        while b - a > 1:
            mid = (a + b) // 2
            if q(mid, n) >= 0:
                b = mid
            else:
                a = mid
        return b

    label = 'polyroot(' + ','.join(map(str, poly.coefficients)) + f'; {lo},{hi})'
    return Slope.certified(positive, 3, Trust.PROVEN, label)


_CHUNK = 1 << 20


def lattice_count(m: int) -> int:
    """Number of ``(p, q)`` in ``Z^2`` with ``p^2 + q^2 <= m``."""
    if m < 0:
        raise ValueError(f'lattice_count of negative radius squared {m}')
    r = math.isqrt(m)
    if r > limits.lattice_row_budget:
        raise ResourceLimitError(f'lattice count over {r} rows exceeds the budget')
    # rows p = 1..r counted twice (p and -p), plus the row p = 0
    total = 2 * r + 1
    if r < 2048 or m >= 1 << 62:
        half = sum(2 * math.isqrt(m - p * p) + 1 for p in range(1, r + 1))
        return total + 2 * half
    half = 0
    for start in range(1, r + 1, _CHUNK):
        p = np.arange(start, min(start + _CHUNK, r + 1), dtype=np.int64)
        rest = m - p * p
        s = np.sqrt(rest.astype(np.float64)).astype(np.int64)
        s -= s * s > rest
        s += (s + 1) * (s + 1) <= rest
        half += int(s.sum()) * 2 + len(p)
    return total + 2 * half


def pi_slope() -> Slope:
    """``n -> [beta(n^2) / n]`` with ``beta`` the lattice count.

    The geometric error ``|beta(n) - n pi| <= 2 sqrt(2 n)`` gives a defect
    below 12; it is not proven here, so the certificate is empirical.
    """
    return Slope.certified(lambda n: lattice_count(n * n) // n, 12,
                           Trust.EMPIRICAL, 'pi')


def circle_defect(n: int) -> int:
    """``beta(n) - beta(n-1) - beta(1)``; unbounded, so ``beta`` is no slope."""
    if n < 1:
        raise ValueError('circle_defect needs n >= 1')
    return lattice_count(n) - lattice_count(n - 1) - lattice_count(1)


def _exact_compare(k1, k2, n):
    left = k1**k2 * n**k1
    right = k2**k1 * n**k2
    return (left > right) - (left < right)


def steiner_compare(k1: int, k2: int, n: int) -> int:
    """Sign of ``(k1/n)^(n/k1) - (k2/n)^(n/k2)``.

    Equivalent to comparing ``k1^k2 n^k1`` with ``k2^k1 n^k2``.  Small
    cases use those integers directly; large ones use outward-rounded
    interval logarithms and fall back to integers if the enclosure cannot
    separate the two sides.
    """
    if k1 == k2:
        return 0
    bits = max(k1, k2) * (max(k1, k2, n).bit_length() + 1)
    if bits <= 20000:
        return _exact_compare(k1, k2, n)
    prec = 64 + 4 * max(k1, k2, n).bit_length()
    while prec <= 8192:
        nn = (from_int(n), from_int(n))
        a = (from_int(k1), from_int(k1))
        b = (from_int(k2), from_int(k2))
        left = mpi_mul((from_int(k2),) * 2, mpi_log(mpi_div(a, nn, prec), prec), prec)
        right = mpi_mul((from_int(k1),) * 2, mpi_log(mpi_div(b, nn, prec), prec), prec)
        lo, hi = mpi_sub(left, right, prec)
        if mpf_sign(lo) > 0:
            return 1
        if mpf_sign(hi) < 0:
            return -1
        prec *= 2
    if 2 * bits > limits.steiner_bit_budget:
        raise ResourceLimitError(f'exact Steiner comparison at n={n} exceeds the bit budget')
    return _exact_compare(k1, k2, n)


# 2**200 * e, only used to guess where the maximum sits
_E_GUESS = int(to_int(mpf_shift(mpf_e(260), 200)))


def steiner_argmax(n: int, brute: bool = False) -> int:
    """Smallest ``k`` in ``[1, 4n]`` maximizing ``(k/n)^(n/k)``.

    ``k -> (k/n)^(n/k)`` rises then falls, so a local maximum found by
    walking from a guess is the global one.  ``brute`` scans the whole
    window instead.
    """
    if n < 1:
        raise ValueError('steiner_argmax needs n >= 1')
    top = 4 * n
    if brute or n <= 16:
        best = 1
        for k in range(2, top + 1):
            if steiner_compare(k, best, n) > 0:
                best = k
        return best
    k = min(max((n * _E_GUESS) >> 200, 1), top)
    while k < top and steiner_compare(k + 1, k, n) > 0:
        k += 1
    while k > 1 and steiner_compare(k - 1, k, n) >= 0:
        k -= 1
    return k


def e_slope() -> Slope:
    """Odd slope ``n -> argmax_k (k/n)^(n/k)``, which represents e."""
    return Slope.certified(steiner_argmax, 4, Trust.EMPIRICAL, 'e')
