"""Hausdorff-dimension brackets for restricted-digit sets.

For a base m >= 3 and a digit set D with at least two digits from
{1, ..., m-1}, the numbers whose expansion uses only digits from D form the
attractor of the contracting branch system { T_d : d in D }.  Its dimension
is bracketed through the level-n words over D: each word w gives a composed
contraction value(w; ·) whose derivative is monotonically decreasing on
[0, 1], so

    min slope = value(w; ·)'(1),   max slope = value(w; ·)'(0).

Solving the Moran equation  sum_w r_w^s = 1  with the minimal slopes yields a
lower bound L_n, and with the maximal slopes an upper bound U_n, with

    L_n  <=  dimension  <=  U_n.

Slopes are accumulated as interval enclosures and rounded outward (minima
down, maxima up) before solving, so the bracket stays mathematically valid
despite finite precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from . import intervals as iv
from .errors import (
    BudgetExceeded,
    EmptyRatioList,
    InvalidDigit,
    InvalidInput,
    RatioOutOfRange,
)
from .intervals import DEFAULT_CONTEXT, PrecisionContext, RealInterval
from .codec import Word, branch_map

__all__ = [
    "DigitSet",
    "DimensionBracket",
    "RefineResult",
    "WORD_BUDGET",
    "MORAN_TOL",
    "word_derivative",
    "moran_solve",
    "dimension_bracket",
    "refine_bracket",
]

#: Cap on the number of words enumerated per bracket (|D|^n must stay below).
WORD_BUDGET = 2 ** 24

#: Default bisection tolerance (in the exponent s) for Moran roots.
MORAN_TOL = 1e-12


@dataclass(frozen=True)
class DigitSet:
    """A set of at least two admissible digits over one base."""

    base: int
    members: frozenset

    def __init__(self, base: int, members: Iterable[int]) -> None:
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "members", frozenset(members))
        if not isinstance(base, int) or base < 3:
            raise InvalidInput(f"base must be an integer >= 3, got {base!r}")
        for d in self.members:
            if not isinstance(d, int) or not 1 <= d <= base - 1:
                raise InvalidDigit(f"digit {d!r} outside 1..{base - 1} for base {base}")
        if len(self.members) < 2:
            raise InvalidInput("digit set needs at least two digits")

    @property
    def sorted_members(self) -> Tuple[int, ...]:
        return tuple(sorted(self.members))


@dataclass(frozen=True)
class DimensionBracket:
    """Certified two-sided dimension bound from level-n words."""

    n: int
    lower: float
    upper: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.lower <= self.upper <= 1.0:
            raise ValueError(
                f"invalid bracket at n={self.n}: "
                f"lower={self.lower}, upper={self.upper}"
            )

    @property
    def gap(self) -> float:
        return self.upper - self.lower


@dataclass(frozen=True)
class RefineResult:
    """Best bracket found by increasing word length.

    ``bracket`` combines the best lower and best upper bound seen across all
    evaluated lengths (successive brackets need not be nested); its ``n`` is
    the largest length evaluated.  ``tolerance_met`` reports in-band whether
    the requested gap was reached.  ``history`` keeps the per-length brackets
    for inspection.
    """

    bracket: DimensionBracket
    tolerance_met: bool
    history: Tuple[DimensionBracket, ...]


def word_derivative(
    w: Word, x: RealInterval, ctx: PrecisionContext = DEFAULT_CONTEXT
) -> RealInterval:
    """Enclosure of the derivative of value(w; ·) at x, for x inside [0, 1].

    Chain rule, innermost branch first: each applied branch T_d contributes a
    factor 1/((d + z) ln m) at the current pre-image z, which then advances
    to T_d(z).
    """
    if len(w.digits) == 0:
        raise InvalidInput("word_derivative needs a nonempty word")
    if x.lo < 0 or x.hi > 1:
        raise InvalidInput(f"evaluation point [{x.lo}, {x.hi}] outside [0, 1]")
    m = w.base
    lnm = iv.ln_interval(m, ctx.bits)
    z = x
    p = iv.point(1)
    for d in reversed(w.digits):
        shifted = iv.add_scalar(z, d, ctx)
        p = iv.div(p, iv.mul(shifted, lnm, ctx), ctx)
        z = iv.log_base(m, shifted, ctx)
    return p


def moran_solve(ratios: Sequence, tol: float = MORAN_TOL) -> float:
    """Root s >= 0 of sum(r_i ** s) = 1 for ratios in (0, 1).

    The map s -> sum r_i^s is strictly decreasing from len(ratios) at s = 0
    toward 0, so plain bisection applies; the upper end of the start bracket
    is grown geometrically first.  A single ratio gives s = 0 exactly.
    """
    if tol <= 0:
        raise InvalidInput(f"tol must be positive, got {tol!r}")
    arr = np.asarray([float(r) for r in ratios], dtype=np.float64)
    if arr.size == 0:
        raise EmptyRatioList("moran_solve needs at least one ratio")
    if np.any(arr <= 0.0) or np.any(arr >= 1.0) or not np.all(np.isfinite(arr)):
        raise RatioOutOfRange("every ratio must lie strictly inside (0, 1)")
    if arr.size == 1:
        return 0.0

    def total(s: float) -> float:
        with np.errstate(under="ignore"):
            return float(np.power(arr, s).sum())

    hi = 1.0
    while total(hi) >= 1.0:
        hi *= 2.0
        if hi > 2.0 ** 80:  # unreachable for ratios strictly below 1
            raise RatioOutOfRange("ratios too close to 1 to bracket the root")
    lo = 0.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if total(mid) >= 1.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _clamp_unit(v: float) -> float:
    return min(max(v, 0.0), 1.0)


def dimension_bracket(
    D: DigitSet,
    n: int,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
    budget: int = WORD_BUDGET,
    tol: float = MORAN_TOL,
) -> DimensionBracket:
    """Bracket from all |D|^n words of length n.

    Enumerates the words by a depth-first tree of digit prepends, so each
    step extends the composed map on the outside: with z = value(w; t) and
    p = value(w; ·)'(t), the word d·w has value T_d(z) and derivative
    T_d'(z) · p.  Leaves contribute their slope enclosure at t = 1 rounded
    down to the lower-bound ratio list and at t = 0 rounded up to the
    upper-bound list.  Cost grows like |D|^n.
    """
    if n < 1:
        raise InvalidInput(f"word length must be >= 1, got {n}")
    count = len(D.members) ** n
    if count > budget:
        raise BudgetExceeded(
            f"{len(D.members)}^{n} = {count} words exceeds the budget of {budget}"
        )
    m = D.base
    digits = D.sorted_members
    lnm = iv.ln_interval(m, ctx.bits)
    lowers: list[float] = []
    uppers: list[float] = []
    root = (0, iv.point(0), iv.point(1), iv.point(1), iv.point(1))
    stack = [root]
    while stack:
        depth, z0, p0, z1, p1 = stack.pop()
        if depth == n:
            lowers.append(iv.float_down(p1.lo))
            uppers.append(iv.float_up(p0.hi))
            continue
        for d in digits:
            s0 = iv.add_scalar(z0, d, ctx)
            s1 = iv.add_scalar(z1, d, ctx)
            stack.append(
                (
                    depth + 1,
                    iv.log_base(m, s0, ctx),
                    iv.div(p0, iv.mul(s0, lnm, ctx), ctx),
                    iv.log_base(m, s1, ctx),
                    iv.div(p1, iv.mul(s1, lnm, ctx), ctx),
                )
            )
    # Pad by the bisection tolerance so the reported floats stay on the safe
    # side of the true Moran roots, then clamp into [0, 1].
    lower = _clamp_unit(moran_solve(lowers, tol) - tol)
    upper = _clamp_unit(moran_solve(uppers, tol) + tol)
    return DimensionBracket(n=n, lower=lower, upper=upper)


def refine_bracket(
    D: DigitSet,
    tol: float = 0.02,
    n_max: int = 12,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
    budget: int = WORD_BUDGET,
) -> RefineResult:
    """Increase the word length until the bracket gap drops below tol.

    Runs ``dimension_bracket`` for n = 1, 2, ..., n_max, keeping the
    componentwise best bounds (brackets are not assumed nested in n).  Stops
    early on success; stops quietly if the word budget cuts enumeration off
    before n_max, reporting the best result so far with ``tolerance_met``
    False.
    """
    if tol <= 0:
        raise InvalidInput(f"tol must be positive, got {tol!r}")
    if n_max < 1:
        raise InvalidInput(f"n_max must be >= 1, got {n_max}")
    best_lower, best_upper = 0.0, 1.0
    history: list[DimensionBracket] = []
    for n in range(1, n_max + 1):
        try:
            b = dimension_bracket(D, n, ctx, budget)
        except BudgetExceeded:
            if not history:
                raise
            break
        history.append(b)
        best_lower = max(best_lower, b.lower)
        best_upper = min(best_upper, b.upper)
        if best_upper - best_lower <= tol:
            return RefineResult(
                bracket=DimensionBracket(n=n, lower=best_lower, upper=best_upper),
                tolerance_met=True,
                history=tuple(history),
            )
    return RefineResult(
        bracket=DimensionBracket(
            n=history[-1].n, lower=best_lower, upper=best_upper
        ),
        tolerance_met=False,
        history=tuple(history),
    )
