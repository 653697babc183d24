"""Process-wide evaluation limits.

The CLI writes to :data:`limits`; library code only reads it.
"""

import contextlib
import dataclasses
from typing import Optional


@dataclasses.dataclass
class Limits:
    #: largest |n| any slope may be evaluated at
    index_cap: int = 10**18
    #: per-slope memo size; ``None`` means unbounded
    cache_cap: Optional[int] = None
    #: largest index probed when looking for a non-vanishing witness
    inverse_search_cap: int = 10**6
    #: most lattice rows a single circle count may scan
    lattice_row_budget: int = 2 * 10**8
    #: most bits an exact Steiner comparison may allocate
    steiner_bit_budget: int = 2 * 10**6
    #: symmetric grid half-width for empirical certificates
    sample_grid: int = 256
    #: extra random pairs for empirical certificates
    sample_random_pairs: int = 1000
    sample_random_range: int = 10**6
    sample_seed: int = 0


limits = Limits()


@contextlib.contextmanager
def override(**changes):
    """Temporarily change fields of :data:`limits`."""
    saved = dataclasses.asdict(limits)
    for key, value in changes.items():
        if not hasattr(limits, key):
            raise AttributeError(key)
        setattr(limits, key, value)
    try:
        yield limits
    finally:
        for key, value in saved.items():
            setattr(limits, key, value)
