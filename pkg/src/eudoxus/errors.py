"""Exception hierarchy for slope arithmetic."""


class SlopeError(Exception):
    """Base class for every error raised by the library."""


class ResourceLimitError(SlopeError):
    """An evaluation would exceed a configured index or work budget."""


class CertificateViolation(SlopeError):
    """A sampled defect exceeded a bound that was recorded as proven.

    This always signals an implementation bug, never bad input.
    """

    def __init__(self, label, bound, observed, pair):
        self.label = label
        self.bound = bound
        self.observed = observed
        self.pair = pair
        super().__init__(
            f'{label}: defect {observed} at {pair} exceeds proven bound {bound}')


class ZeroDivisorError(SlopeError, ZeroDivisionError):
    """No witness of non-vanishing was found below the search cap."""


class NotPositiveError(SlopeError, ValueError):
    """A positivity precondition could not be established."""


class InvalidBracketError(SlopeError, ValueError):
    pass


class NonMonotoneError(SlopeError, ValueError):
    pass
