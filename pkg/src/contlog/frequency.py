"""Dimension upper bounds for digit-frequency sets.

Fix a base m >= 3 and a probability vector p = (p_1, ..., p_{m-1}) with
strictly positive entries.  The set of numbers whose expansion realizes the
digit frequencies p has Hausdorff dimension at most

    U_m(p) = ( -sum_i p_i ln p_i ) / ( sum_i p_i ln(ln(m-1) + i ln m) ),

an entropy-to-Lyapunov-exponent ratio: the denominator is the p-average of
ln(1/slope) for the slope ln(m-1) + i ln m attached to digit i.  Both sums
use natural logs; since the bound is a ratio of two logarithmic averages it
is invariant under rescaling all the outer logs by a common base.

Maximizing U_m over p gives d < 1, the root of

    sum_i (ln(m-1) + i ln m)^(-d) = 1,

attained at p*_i = (ln(m-1) + i ln m)^(-d).  Hence no digit-frequency set
is of full dimension.  The related harmonic-style sum with exponent 1 stays
below 1 for every base, which is what forces d < 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .dimension import moran_solve
from .errors import ContlogError, InvalidGrid, InvalidInput, InvalidProbabilityVector

__all__ = [
    "FrequencyVector",
    "MaxFreqResult",
    "freq_dim_upper",
    "max_freq_dim",
    "harmonic_check",
    "bound_curve",
    "bound_curve_csv",
    "digit_slope_logs",
]

_SUM_TOL = 1e-12


def _check_base(m: int) -> None:
    if not isinstance(m, int) or m < 3:
        raise InvalidInput(f"base must be an integer >= 3, got {m!r}")


@dataclass(frozen=True)
class FrequencyVector:
    """Probability vector over the digits 1..m-1, strictly interior.

    Entries with value 0 are rejected rather than smoothed away: the bound's
    entropy term needs every p_i in (0, 1).
    """

    base: int
    p: Tuple[float, ...]

    def __init__(self, base: int, p: Sequence[Union[float, Fraction, int]]) -> None:
        _check_base(base)
        vals = tuple(float(v) for v in p)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "p", vals)
        if len(vals) != base - 1:
            raise InvalidProbabilityVector(
                f"need {base - 1} entries for base {base}, got {len(vals)}"
            )
        if any(not 0.0 < v < 1.0 for v in vals):
            raise InvalidProbabilityVector(
                "every entry must lie strictly inside (0, 1)"
            )
        if abs(math.fsum(vals) - 1.0) > _SUM_TOL:
            raise InvalidProbabilityVector(
                f"entries sum to {math.fsum(vals)!r}, not 1"
            )


@dataclass(frozen=True)
class MaxFreqResult:
    """Maximum of U_m over probability vectors, with its maximizer."""

    d: float
    p_star: FrequencyVector


def digit_slope_logs(m: int) -> List[float]:
    """ln(m-1) + i*ln(m) for i = 1..m-1 (all > 1 for m >= 3)."""
    _check_base(m)
    ln_m = math.log(m)
    ln_m1 = math.log(m - 1)
    return [ln_m1 + i * ln_m for i in range(1, m)]


def freq_dim_upper(
    p: Union[FrequencyVector, int],
    probs: Union[Sequence[Union[float, Fraction, int]], None] = None,
) -> float:
    """The upper bound U_m(p).

    Accepts either a ``FrequencyVector`` or the pair (base, entries) for
    convenience: ``freq_dim_upper(3, (0.5, 0.5))``.
    """
    if isinstance(p, FrequencyVector):
        if probs is not None:
            raise InvalidInput("pass either a FrequencyVector or (base, entries)")
        vec = p
    else:
        if probs is None:
            raise InvalidInput("entries are required when passing a bare base")
        vec = FrequencyVector(p, probs)
    slopes = digit_slope_logs(vec.base)
    entropy = -math.fsum(q * math.log(q) for q in vec.p)
    lyapunov = math.fsum(q * math.log(s) for q, s in zip(vec.p, slopes))
    return entropy / lyapunov


def max_freq_dim(m: int, tol: float = 1e-13) -> MaxFreqResult:
    """Solve for the maximum d of U_m and the vector attaining it.

    d is the Moran-equation root for the ratios 1/(ln(m-1) + i ln m), reusing
    the dimension module's solver; p*_i = ratio_i^d.  d >= 1 would contradict
    the harmonic-style sum being below 1, so it is treated as an internal
    error rather than a result.  The default tolerance sits below the
    probability vector's own 1e-12 sum gate, so p* always validates.
    """
    _check_base(m)
    ratios = [1.0 / s for s in digit_slope_logs(m)]
    d = moran_solve(ratios, tol)
    if d >= 1.0:
        raise ContlogError(
            f"solved maximal frequency dimension {d} >= 1 for base {m}; "
            "this contradicts the harmonic sum bound and indicates a bug"
        )
    p_star = FrequencyVector(m, [r ** d for r in ratios])
    return MaxFreqResult(d=d, p_star=p_star)


def harmonic_check(m: int) -> float:
    """sum_i 1/(ln(m-1) + i ln m); below 1 for every base m >= 3."""
    return math.fsum(1.0 / s for s in digit_slope_logs(m))


def bound_curve(grid_points: int, m: int = 3) -> List[Tuple[float, float]]:
    """Sampled graph of p -> U_3(p, 1-p) on an interior uniform grid.

    Returns (k/(grid_points+1), U) for k = 1..grid_points.  Only base 3 has
    a one-parameter family of frequency vectors, so other bases are refused.
    """
    if m != 3:
        raise InvalidInput("the bound curve is defined for base 3 only")
    if not isinstance(grid_points, int) or grid_points < 2:
        raise InvalidGrid(f"grid needs at least 2 interior points, got {grid_points!r}")
    rows: List[Tuple[float, float]] = []
    for k in range(1, grid_points + 1):
        pk = k / (grid_points + 1)
        rows.append((pk, freq_dim_upper(3, (pk, 1.0 - pk))))
    return rows


def bound_curve_csv(grid_points: int, m: int = 3) -> str:
    """CSV rendering of ``bound_curve`` with 12-significant-digit values."""
    lines = ["p,upper_bound"]
    for pk, u in bound_curve(grid_points, m):
        lines.append(f"{pk:.12g},{u:.12g}")
    return "\n".join(lines) + "\n"
