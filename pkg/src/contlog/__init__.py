"""Certified continued-logarithm expansions, dimension brackets, and
digit-frequency bounds.

For a base m >= 3, every x in [0, 1] expands through the contracting branch
maps T_d(t) = log_m(d + t) with digits d in {1, ..., m-1}.  This package
encodes and decodes such expansions with interval certification, brackets
the Hausdorff dimension of restricted-digit sets, bounds the dimension of
digit-frequency sets, and ships statistical/structural test harnesses plus
a CLI (``contlog``).
"""

from .errors import (
    BudgetExceeded,
    ContlogError,
    EmptyRatioList,
    InvalidDigit,
    InvalidGrid,
    InvalidInput,
    InvalidProbabilityVector,
    NonPositiveArgument,
    PrecisionExhausted,
    RatioOutOfRange,
)
from .intervals import (
    DEFAULT_CONTEXT,
    PrecisionContext,
    RealInterval,
    enclose_fraction,
    log_base,
    pow_base,
)
from .codec import (
    EncodeResult,
    Word,
    branch_map,
    decode,
    encode_orbit,
    encode_subdivide,
    fixed_point,
    parse_exact,
    word_interval,
    word_value,
)
from .dimension import (
    MORAN_TOL,
    WORD_BUDGET,
    DigitSet,
    DimensionBracket,
    RefineResult,
    dimension_bracket,
    moran_solve,
    refine_bracket,
    word_derivative,
)
from .frequency import (
    FrequencyVector,
    MaxFreqResult,
    bound_curve,
    bound_curve_csv,
    digit_slope_logs,
    freq_dim_upper,
    harmonic_check,
    max_freq_dim,
)
from .experiments import (
    CensusReport,
    StructureReport,
    empirical_frequency,
    occurrence_census,
    sample_fraction,
    structure_check,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "ContlogError",
    "EmptyRatioList",
    "InvalidDigit",
    "InvalidGrid",
    "InvalidInput",
    "InvalidProbabilityVector",
    "NonPositiveArgument",
    "PrecisionExhausted",
    "RatioOutOfRange",
    "DEFAULT_CONTEXT",
    "PrecisionContext",
    "RealInterval",
    "enclose_fraction",
    "log_base",
    "pow_base",
    "EncodeResult",
    "Word",
    "branch_map",
    "decode",
    "encode_orbit",
    "encode_subdivide",
    "fixed_point",
    "parse_exact",
    "word_interval",
    "word_value",
    "MORAN_TOL",
    "WORD_BUDGET",
    "DigitSet",
    "DimensionBracket",
    "RefineResult",
    "dimension_bracket",
    "moran_solve",
    "refine_bracket",
    "word_derivative",
    "FrequencyVector",
    "MaxFreqResult",
    "bound_curve",
    "bound_curve_csv",
    "digit_slope_logs",
    "freq_dim_upper",
    "harmonic_check",
    "max_freq_dim",
    "CensusReport",
    "StructureReport",
    "empirical_frequency",
    "occurrence_census",
    "sample_fraction",
    "structure_check",
]
