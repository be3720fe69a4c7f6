"""Exception types shared across the package."""


class ContlogError(Exception):
    """Base class for all errors raised by this package."""


class NonPositiveArgument(ContlogError):
    """Logarithm kernel received an interval touching (-inf, 0]."""


class PrecisionExhausted(ContlogError):
    """A certified answer could not be produced within the precision cap.

    For digit encoding this signals that the input is, or is numerically
    indistinguishable from, a cylinder endpoint (which genuinely has two
    expansions).
    """


class InvalidDigit(ContlogError):
    """Digit outside {1, ..., m-1} for its base."""


class InvalidInput(ContlogError):
    """Malformed or out-of-domain user input."""


class EmptyRatioList(ContlogError):
    """Moran equation needs at least one contraction ratio."""


class RatioOutOfRange(ContlogError):
    """Moran equation ratios must lie strictly inside (0, 1)."""


class BudgetExceeded(ContlogError):
    """Requested enumeration is larger than the configured budget."""


class InvalidProbabilityVector(ContlogError):
    """Frequency vector entries must be strictly interior and sum to one."""


class InvalidGrid(ContlogError):
    """Bound-curve grid request is unsupported."""
