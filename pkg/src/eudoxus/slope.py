"""Slopes: integer maps with bounded additive defect.

A slope is a map ``lam: Z -> Z`` for which ``lam(n+m) - lam(n) - lam(m)``
stays bounded.  Two slopes whose difference is bounded describe the same
real number.  Every slope built by this package is odd, so only the values
at positive indices are ever computed; negative indices are mirrored and
``lam(0) == 0``.
"""

import dataclasses
import enum
import random
import threading
from typing import Callable, Iterable, Optional, Tuple

from .config import limits
from .errors import CertificateViolation, ResourceLimitError

__all__ = [
    'Trust', 'DefectCertificate', 'Slope', 'evaluate', 'odd_extend',
    'opt_div', 'concentrate', 'defect_sample', 'default_sample_pairs',
    'empirical_certificate', 'equivalence_evidence',
]


class Trust(enum.Enum):
    """How a defect bound was obtained."""

    PROVEN = 'proven'
    EMPIRICAL = 'empirical'

    def __and__(self, other):
        if self is Trust.PROVEN and other is Trust.PROVEN:
            return Trust.PROVEN
        return Trust.EMPIRICAL


@dataclasses.dataclass(frozen=True)
class DefectCertificate:
    """Bound ``S`` on ``|lam(n+m) - lam(n) - lam(m)|`` plus ``lam(1)``."""

    bound: int
    value_at_one: int
    trust: Trust

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError(f'defect bound must be nonnegative, got {self.bound}')

    @property
    def growth(self):
        """Constant ``c`` with ``|lam(n)| <= c * |n|`` for every ``n``."""
        return abs(self.value_at_one) + self.bound


class Slope:
    """Lazily evaluated odd slope with a memo table.

    ``positive`` is only ever called with ``n >= 1``.  It must be pure: the
    cache may race and store the same value twice, which is harmless.
    """

    def __init__(self, positive: Callable[[int], int],
                 certificate: Optional[DefectCertificate] = None,
                 label: str = 'slope'):
        self._positive = positive
        self._cache = {}
        self._lock = threading.Lock()
        self.certificate = certificate
        self.label = label

    @classmethod
    def certified(cls, positive, bound, trust, label='slope'):
        slope = cls(positive, None, label)
        slope.certificate = DefectCertificate(bound, slope(1), trust)
        return slope

    def with_certificate(self, bound, trust):
        """Same evaluator and memo, different certificate."""
        twin = Slope(self._positive, None, self.label)
        twin._cache = self._cache
        twin._lock = self._lock
        twin.certificate = DefectCertificate(bound, self(1), trust)
        return twin

    @property
    def bound(self) -> int:
        return self._require_certificate().bound

    @property
    def trust(self) -> Trust:
        return self._require_certificate().trust

    def _require_certificate(self):
        if self.certificate is None:
            raise ValueError(f'{self.label} carries no defect certificate')
        return self.certificate

    def __call__(self, n: int) -> int:
        if n == 0:
            return 0
        m = -n if n < 0 else n
        value = self._cache.get(m)
        if value is None:
            if m > limits.index_cap:
                raise ResourceLimitError(
                    f'{self.label}: index {m} exceeds the cap {limits.index_cap}')
            value = self._positive(m)
            self._store(m, value)
        return -value if n < 0 else value

    def _store(self, m, value):
        cap = limits.cache_cap
        if cap is not None and len(self._cache) >= cap:
            with self._lock:
                if len(self._cache) >= cap:
                    # drop the largest tenth; small indices are reused the most
                    doomed = sorted(self._cache, reverse=True)[:max(1, cap // 10)]
                    for key in doomed:
                        self._cache.pop(key, None)
        self._cache[m] = value

    def cache_size(self) -> int:
        return len(self._cache)

    def __repr__(self):
        cert = self.certificate
        if cert is None:
            return f'Slope({self.label!r})'
        return f'Slope({self.label!r}, bound={cert.bound}, {cert.trust.value})'


def evaluate(slope: Slope, n: int) -> int:
    return slope(n)


def odd_extend(f: Callable[[int], int], label: str = 'odd') -> Slope:
    """Odd slope agreeing with ``f`` on positive integers (no certificate)."""
    return Slope(f, None, label)


def opt_div(p, q):
    """Optimal euclidean division: the integer ``r`` with
    ``2p - |q| <= 2qr < 2p + |q|``.

    This rounds ``p/q`` to the nearest integer; halves go down when ``q > 0``
    and up when ``q < 0``.  ``p`` may also be a numpy integer array.

    >>> opt_div(4, 7), opt_div(3, 7), opt_div(7, 2)
    (1, 0, 3)
    """
    if q == 0:
        raise ZeroDivisionError('optimal division by zero')
    if q > 0:
        return (2 * p + (q - 1)) // (2 * q)
    return (-q - 2 * p) // (-2 * q)


def concentrate(slope: Slope) -> Slope:
    """Equivalent well-adjusted slope, ``n -> lam(3sn) : 3s``.

    ``s`` is the certificate bound, at least 1 and bumped to the next odd
    number: with ``3s`` odd no quotient is ever a tie, so
    ``concentrate(-lam) == -concentrate(lam)`` exactly.  The result has
    defect at most 1 and differs from ``slope`` by at most the bound
    everywhere, provided the input certificate is correct.
    """
    s = max(slope.bound, 1) | 1
    t = 3 * s

    def positive(n):
        return opt_div(slope(t * n), t)

    return Slope.certified(positive, 1, slope.trust, f'concentrate({slope.label})')


def defect_sample(slope: Slope, pairs: Iterable[Tuple[int, int]]) -> int:
    """Largest ``|lam(n+m) - lam(n) - lam(m)|`` over ``pairs``.

    Raises :class:`CertificateViolation` if a proven bound is exceeded.
    """
    cert = slope.certificate
    proven = cert is not None and cert.trust is Trust.PROVEN
    worst = None
    for n, m in pairs:
        d = abs(slope(n + m) - slope(n) - slope(m))
        if proven and d > cert.bound:
            raise CertificateViolation(slope.label, cert.bound, d, (n, m))
        if worst is None or d > worst:
            worst = d
    if worst is None:
        raise ValueError('defect_sample needs at least one pair')
    return worst


def default_sample_pairs(seed: Optional[int] = None):
    """The documented grid: all ``|n|, |m| <= 256`` plus random far pairs."""
    w = limits.sample_grid
    for n in range(-w, w + 1):
        for m in range(-w, w + 1):
            yield n, m
    rng = random.Random(limits.sample_seed if seed is None else seed)
    r = limits.sample_random_range
    for _ in range(limits.sample_random_pairs):
        yield rng.randint(-r, r), rng.randint(-r, r)


def empirical_certificate(slope: Slope, floor: int = 0, seed=None) -> Slope:
    """Attach a sampled certificate (at least ``floor``) to ``slope``."""
    probe = Slope(slope._positive, None, slope.label)
    probe._cache = slope._cache
    observed = defect_sample(probe, default_sample_pairs(seed))
    return slope.with_certificate(max(observed, floor), Trust.EMPIRICAL)


def equivalence_evidence(a: Slope, b: Slope, indices: Iterable[int], bound: int) -> bool:
    """True iff ``|a(n) - b(n)| <= bound`` for every ``n`` in ``indices``.

    This is finite evidence only; equivalence itself is undecidable.
    """
    seen = False
    for n in indices:
        seen = True
        if abs(a(n) - b(n)) > bound:
            return False
    if not seen:
        raise ValueError('equivalence_evidence needs a nonempty index set')
    return True
