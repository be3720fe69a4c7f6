"""Adaptive-precision interval arithmetic with directed rounding.

Endpoints are arbitrary-precision binary floats (MPFR via gmpy2), i.e. dyadic
rationals, and every operation rounds the lower endpoint toward -inf and the
upper endpoint toward +inf.  The enclosure property is therefore preserved by
construction: if the true operands lie inside the operand intervals, the true
result lies inside the result interval.

Only two transcendental kernels are provided, ``log_base`` and ``pow_base``;
everything downstream (branch maps, cylinder intervals, derivatives) is built
from them plus the field operations below.  MPFR guarantees correct directed
rounding for all of these, so no extra safety widening is required.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import gmpy2
from gmpy2 import mpfr, mpq

from .errors import NonPositiveArgument, PrecisionExhausted

__all__ = [
    "PrecisionContext",
    "RealInterval",
    "DEFAULT_CONTEXT",
    "enclose_fraction",
    "point",
    "unit_interval",
    "add",
    "sub",
    "neg",
    "add_scalar",
    "sub_scalar",
    "mul",
    "div",
    "inv",
    "intersect",
    "hull",
    "log_base",
    "pow_base",
    "ln_interval",
    "float_down",
    "float_up",
]

MIN_BITS = 32


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision and escalation cap, in bits of mantissa.

    ``bits`` is the precision every endpoint operation rounds to; ``max_bits``
    caps the geometric escalation that certified algorithms perform when an
    answer is ambiguous at the current precision.
    """

    bits: int = 128
    max_bits: int = 16384

    def __post_init__(self) -> None:
        if self.bits < MIN_BITS:
            raise ValueError(f"bits must be >= {MIN_BITS}, got {self.bits}")
        if self.max_bits < self.bits:
            raise ValueError(
                f"max_bits ({self.max_bits}) must be >= bits ({self.bits})"
            )

    @property
    def can_escalate(self) -> bool:
        return self.bits < self.max_bits

    def escalated(self) -> "PrecisionContext":
        """Same cap, doubled working precision (clipped to the cap)."""
        return PrecisionContext(min(2 * self.bits, self.max_bits), self.max_bits)

    def with_bits(self, bits: int) -> "PrecisionContext":
        return PrecisionContext(bits, max(self.max_bits, bits))


DEFAULT_CONTEXT = PrecisionContext()


@lru_cache(maxsize=None)
def _down(bits: int) -> gmpy2.context:
    return gmpy2.context(precision=bits, round=gmpy2.RoundDown)


@lru_cache(maxsize=None)
def _up(bits: int) -> gmpy2.context:
    return gmpy2.context(precision=bits, round=gmpy2.RoundUp)


def _exact(v: int) -> mpfr:
    """Exact integer-to-mpfr conversion regardless of magnitude."""
    return mpfr(v, max(2, int(v).bit_length() + 1))


@dataclass(frozen=True)
class RealInterval:
    """Closed interval [lo, hi] with dyadic-rational endpoints."""

    lo: mpfr
    hi: mpfr

    def __post_init__(self) -> None:
        if not (gmpy2.is_finite(self.lo) and gmpy2.is_finite(self.hi)):
            raise PrecisionExhausted("interval endpoint left the representable range")
        if self.lo > self.hi:
            raise ValueError(f"inverted interval: lo={self.lo} > hi={self.hi}")

    # -- inspection ------------------------------------------------------

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def width_fraction(self) -> Fraction:
        """Exact width hi - lo as a rational."""
        return self.hi_fraction() - self.lo_fraction()

    def width(self) -> float:
        """Width rounded up to a float (an upper bound on the true width)."""
        w = _up(53).sub(self.hi, self.lo)
        return float(w)

    def lo_fraction(self) -> Fraction:
        n, d = self.lo.as_integer_ratio()
        return Fraction(int(n), int(d))

    def hi_fraction(self) -> Fraction:
        n, d = self.hi.as_integer_ratio()
        return Fraction(int(n), int(d))

    def midpoint_fraction(self) -> Fraction:
        return (self.lo_fraction() + self.hi_fraction()) / 2

    def contains(self, x) -> bool:
        """Exact containment test for an int, Fraction, mpq or mpfr."""
        q = mpq(x) if isinstance(x, Fraction) else x
        return self.lo <= q and q <= self.hi

    def contains_interval(self, other: "RealInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"RealInterval({self.lo!r}, {self.hi!r})"


# -- constructors --------------------------------------------------------


def point(v: int | mpfr) -> RealInterval:
    """Degenerate interval [v, v]; the conversion is exact."""
    x = _exact(v) if isinstance(v, int) else v
    return RealInterval(x, x)


def unit_interval() -> RealInterval:
    return RealInterval(_exact(0), _exact(1))


def enclose_fraction(x: Fraction | int, ctx: PrecisionContext) -> RealInterval:
    """Tightest ctx.bits-wide enclosure of an exact rational."""
    if isinstance(x, int):
        return point(x)
    num = _exact(x.numerator)
    den = _exact(x.denominator)
    return RealInterval(_down(ctx.bits).div(num, den), _up(ctx.bits).div(num, den))


# -- field operations ----------------------------------------------------


def add(x: RealInterval, y: RealInterval, ctx: PrecisionContext) -> RealInterval:
    b = ctx.bits
    return RealInterval(_down(b).add(x.lo, y.lo), _up(b).add(x.hi, y.hi))


def sub(x: RealInterval, y: RealInterval, ctx: PrecisionContext) -> RealInterval:
    b = ctx.bits
    return RealInterval(_down(b).sub(x.lo, y.hi), _up(b).sub(x.hi, y.lo))


def neg(x: RealInterval) -> RealInterval:
    # binary negation is exact at any precision
    return RealInterval(-x.hi, -x.lo)


def add_scalar(x: RealInterval, k: int, ctx: PrecisionContext) -> RealInterval:
    b = ctx.bits
    return RealInterval(_down(b).add(x.lo, k), _up(b).add(x.hi, k))


def sub_scalar(x: RealInterval, k: int, ctx: PrecisionContext) -> RealInterval:
    b = ctx.bits
    return RealInterval(_down(b).sub(x.lo, k), _up(b).sub(x.hi, k))


def mul(x: RealInterval, y: RealInterval, ctx: PrecisionContext) -> RealInterval:
    """Sign-correct product; endpoints from the four corner products."""
    d, u = _down(ctx.bits), _up(ctx.bits)
    pairs = ((x.lo, y.lo), (x.lo, y.hi), (x.hi, y.lo), (x.hi, y.hi))
    lo = min(d.mul(a, b) for a, b in pairs)
    hi = max(u.mul(a, b) for a, b in pairs)
    return RealInterval(lo, hi)


def div(x: RealInterval, y: RealInterval, ctx: PrecisionContext) -> RealInterval:
    """Quotient for a divisor interval bounded away from zero."""
    if y.lo <= 0 and y.hi >= 0:
        raise ZeroDivisionError("divisor interval contains zero")
    d, u = _down(ctx.bits), _up(ctx.bits)
    pairs = ((x.lo, y.lo), (x.lo, y.hi), (x.hi, y.lo), (x.hi, y.hi))
    lo = min(d.div(a, b) for a, b in pairs)
    hi = max(u.div(a, b) for a, b in pairs)
    return RealInterval(lo, hi)


def inv(x: RealInterval, ctx: PrecisionContext) -> RealInterval:
    if x.lo <= 0 and x.hi >= 0:
        raise ZeroDivisionError("interval contains zero")
    b = ctx.bits
    return RealInterval(_down(b).div(1, x.hi), _up(b).div(1, x.lo))


def intersect(x: RealInterval, y: RealInterval) -> RealInterval:
    lo = max(x.lo, y.lo)
    hi = min(x.hi, y.hi)
    if lo > hi:
        raise ValueError("empty intersection")
    return RealInterval(lo, hi)


def hull(x: RealInterval, y: RealInterval) -> RealInterval:
    return RealInterval(min(x.lo, y.lo), max(x.hi, y.hi))


# -- transcendental kernels ----------------------------------------------


@lru_cache(maxsize=None)
def ln_interval(m: int, bits: int) -> RealInterval:
    """Cached enclosure of ln(m).

    ln(m) appears in every branch map, derivative and bound formula, so it is
    computed once per (m, bits) pair.  ``lru_cache`` makes concurrent fills
    idempotent and reads safe.
    """
    if m <= 0:
        raise NonPositiveArgument(f"ln of non-positive integer {m}")
    return RealInterval(_down(bits).log(m), _up(bits).log(m))


_LOG_GUARD = 32


def _log_m_endpoint(v: mpfr, m: int, bits: int, upper: bool) -> mpfr:
    """One endpoint of log_m(v), directed outward.

    log_m(1) = 0 and log_m(m) = 1 are returned exactly; these anchor the ends
    of the branch-cell partition of [0, 1] so that cylinder tilings close up
    without slack at 0 and 1.

    ln(v) and ln(m) carry 32 guard bits so that, after the single directed
    division at target precision, each endpoint costs one target-precision
    rounding (plus a 2^-30-ulp propagation term), keeping the two-endpoint
    rounding slack within the documented 4*2^-bits budget.
    """
    if v == 1:
        return _exact(0)
    if v == m:
        return _exact(1)
    wide = bits + _LOG_GUARD
    cw = _up(wide) if upper else _down(wide)
    num = cw.log(v)
    lnm = ln_interval(m, wide)
    c = _up(bits) if upper else _down(bits)
    # ln(m) > 0, so the quotient rounds outward by pairing the numerator with
    # the opposite-direction denominator when the numerator is positive.
    if upper:
        return c.div(num, lnm.lo if num >= 0 else lnm.hi)
    return c.div(num, lnm.hi if num >= 0 else lnm.lo)


def log_base(m: int, x: RealInterval, ctx: PrecisionContext) -> RealInterval:
    """Enclosure of { log_m(t) : t in x } for x.lo > 0 and m >= 3."""
    if m < 3:
        raise ValueError(f"base must be >= 3, got {m}")
    if x.lo <= 0:
        raise NonPositiveArgument(f"log_base argument must be positive, got lo={x.lo}")
    b = ctx.bits
    return RealInterval(
        _log_m_endpoint(x.lo, m, b, upper=False),
        _log_m_endpoint(x.hi, m, b, upper=True),
    )


def _pow_m_endpoint(t: mpfr, m: int, bits: int, upper: bool) -> mpfr:
    if t == 0:
        return _exact(1)
    if t == 1:
        return _exact(m)
    c = _up(bits) if upper else _down(bits)
    lnm = ln_interval(m, bits)
    prod = c.mul(t, (lnm.hi if upper else lnm.lo) if t >= 0 else (lnm.lo if upper else lnm.hi))
    r = c.exp(prod)
    if not gmpy2.is_finite(r):
        raise PrecisionExhausted("m**t overflows the representable exponent range")
    return r


def pow_base(m: int, x: RealInterval, ctx: PrecisionContext) -> RealInterval:
    """Enclosure of { m**t : t in x } for m >= 3.

    m**0 = 1 and m**1 = m are exact, which keeps orbits that hit cell corners
    (such as the expansion of 0) exact forever.
    """
    if m < 3:
        raise ValueError(f"base must be >= 3, got {m}")
    b = ctx.bits
    return RealInterval(
        _pow_m_endpoint(x.lo, m, b, upper=False),
        _pow_m_endpoint(x.hi, m, b, upper=True),
    )


# -- directed float conversion -------------------------------------------


def float_down(v: mpfr) -> float:
    """Largest double <= v (values within double range)."""
    return float(_down(53).add(v, 0))


def float_up(v: mpfr) -> float:
    """Smallest double >= v."""
    return float(_up(53).add(v, 0))
