"""Continued-logarithm digit codec on [0, 1].

For an integer base ``m >= 3``, every ``x`` in [0, 1] has an expansion by
digits ``d_k`` in ``{1, ..., m-1}`` under the increasing branch maps

    T_d(t) = log_m(d + t),

with the first digit outermost:

    value(d_1 ... d_n; t) = T_{d_1}(T_{d_2}(... T_{d_n}(t) ...)).

The cylinder of a finite word is ``[value(w; 0), value(w; 1)]``; cylinders of
extensions nest, and the digits of ``x`` are recovered by iterating the
expanding map ``f(t) = m**t mod 1`` and reading off which cell
``[log_m(i), log_m(i+1))`` the orbit visits.

Everything here is certified: values are interval enclosures with outward
rounding, and a digit is emitted only once the enclosure proves membership in
a single half-open cell.  Points that sit exactly on a cell boundary (the
countable set of cylinder endpoints) have two expansions; rather than pick
one arbitrarily, encoding escalates precision and ultimately raises
``PrecisionExhausted`` for them.  The exceptions with exact dyadic
boundaries, x = 0 and x = 1, encode fine (0 via the closed left cell edge,
1 via the explicit all-(m-1) word).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple, Union

from gmpy2 import mpq

from . import intervals as iv
from .errors import InvalidDigit, InvalidInput, PrecisionExhausted
from .intervals import DEFAULT_CONTEXT, PrecisionContext, RealInterval

__all__ = [
    "Word",
    "EncodeResult",
    "parse_exact",
    "branch_map",
    "word_value",
    "word_interval",
    "decode",
    "fixed_point",
    "encode_orbit",
    "encode_subdivide",
]

ExactInput = Union[int, str, Fraction]


def _check_base(m: int) -> None:
    if not isinstance(m, int) or m < 3:
        raise InvalidInput(f"base must be an integer >= 3, got {m!r}")


def _check_digit(m: int, d: int) -> None:
    if not isinstance(d, int) or not 1 <= d <= m - 1:
        raise InvalidDigit(f"digit {d!r} outside 1..{m - 1} for base {m}")


@dataclass(frozen=True, order=True)
class Word:
    """A finite digit word over one base.

    Equal-length words compare lexicographically, which matches the numeric
    order of their cylinder intervals.
    """

    base: int
    digits: Tuple[int, ...]

    def __post_init__(self) -> None:
        _check_base(self.base)
        object.__setattr__(self, "digits", tuple(self.digits))
        for d in self.digits:
            _check_digit(self.base, d)

    def __len__(self) -> int:
        return len(self.digits)

    def child(self, d: int) -> "Word":
        return Word(self.base, self.digits + (d,))


@dataclass(frozen=True)
class EncodeResult:
    """Digits plus the certificate that produced them.

    ``certified`` records that every digit's half-open cell membership was
    proven by interval enclosures at ``bits_used`` bits of precision (left
    cell edges are closed, so landing exactly on an exact-dyadic left edge
    such as 0 still certifies).
    """

    word: Word
    certified: bool
    bits_used: int


def parse_exact(x: ExactInput) -> Fraction:
    """Convert input to an exact rational.

    Accepts ints, Fractions, and strings that are either rational literals
    like ``"3/7"`` or decimal literals like ``"0.125"``.  Floats are refused:
    a float is a dyadic that generally differs from the decimal the user
    meant, and a certified encoding of the wrong number is worse than none.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InvalidInput("boolean is not a number")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        raise InvalidInput(
            "float input is inexact; pass a Fraction or a string literal"
        )
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"cannot parse {x!r} as an exact rational") from exc
    raise InvalidInput(f"unsupported input type {type(x).__name__}")


# -- branch maps and cylinders -------------------------------------------


def branch_map(
    base: int, d: int, X: RealInterval, ctx: PrecisionContext = DEFAULT_CONTEXT
) -> RealInterval:
    """Enclosure of { log_base(d + t) : t in X }.

    The branch maps are the contracting inverse branches of the expanding
    map; on [0, 1] the slope is at most 1/ln(base) < 1.
    """
    _check_base(base)
    _check_digit(base, d)
    return iv.log_base(base, iv.add_scalar(X, d, ctx), ctx)


def word_value(
    w: Word, X: RealInterval, ctx: PrecisionContext = DEFAULT_CONTEXT
) -> RealInterval:
    """Enclosure of value(w; X), first digit outermost.

    The innermost branch is applied first, so the fold runs over the digits
    in reverse.
    """
    for d in reversed(w.digits):
        X = branch_map(w.base, d, X, ctx)
    return X


def word_interval(w: Word, ctx: PrecisionContext = DEFAULT_CONTEXT) -> RealInterval:
    """Cylinder interval [value(w; 0), value(w; 1)]; [0, 1] for the empty word."""
    return word_value(w, iv.unit_interval(), ctx)


def decode(w: Word, ctx: PrecisionContext = DEFAULT_CONTEXT) -> RealInterval:
    """Certified enclosure of every number whose expansion starts with ``w``.

    The cylinder width shrinks geometrically in len(w), so long prefixes of
    an infinite expansion approximate its value to any accuracy.
    """
    if len(w.digits) == 0:
        raise InvalidInput("cannot decode an empty word")
    return word_interval(w, ctx)


def fixed_point(
    base: int,
    d: int,
    tol: Union[float, Fraction] = 1e-12,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
) -> RealInterval:
    """Enclosure of the unique solution of x = log_base(d + x) in [0, 1].

    This is the value of the constant expansion (d, d, d, ...).  Iterating
    the branch map from [0, 1] converges geometrically; precision escalates
    if outward rounding stalls the width above ``tol``.
    """
    _check_base(base)
    _check_digit(base, d)
    tolq = tol if isinstance(tol, Fraction) else Fraction(tol)
    if tolq <= 0:
        raise InvalidInput(f"tol must be positive, got {tol!r}")
    cur = ctx
    X = iv.unit_interval()
    prev_width = None
    while True:
        X = iv.intersect(branch_map(base, d, X, cur), X)
        width = X.width_fraction()
        if width <= tolq:
            return X
        # The map contracts by at least 1/ln 3 ~ 0.91 per step, so a width
        # that stops shrinking is pinned at the rounding floor: escalate.
        if prev_width is not None and width * 100 > prev_width * 99:
            if not cur.can_escalate:
                raise PrecisionExhausted(
                    f"fixed_point cannot reach tol={tol} within "
                    f"{cur.max_bits} bits"
                )
            cur = cur.escalated()
        prev_width = width


# -- digit extraction ------------------------------------------------------


@lru_cache(maxsize=None)
def _cell_edges(base: int, bits: int) -> Tuple[RealInterval, ...]:
    """Enclosures of log_base(i) for i = 1..base (the digit-cell boundaries).

    Edges 0 and 1 (i = 1 and i = base) are exact points.
    """
    ctx = PrecisionContext(bits, bits)
    return tuple(
        iv.log_base(base, iv.point(i), ctx) for i in range(1, base + 1)
    )


def _certified_cell(Y: RealInterval, edges: Tuple[RealInterval, ...]) -> int | None:
    """Digit i with Y certified inside [log_m(i), log_m(i+1)), else None.

    Left edges are closed: Y.lo may equal the edge enclosure's upper bound
    (which proves Y >= log_m(i)); the right test is strict.
    """
    for i in range(1, len(edges)):
        if Y.lo >= edges[i - 1].hi and Y.hi < edges[i].lo:
            return i
    return None


def _prepare_encode(
    x: ExactInput, base: int, n: int, ctx: PrecisionContext
) -> Tuple[Fraction, EncodeResult | None]:
    _check_base(base)
    if n < 1:
        raise InvalidInput(f"digit count must be >= 1, got {n}")
    xq = parse_exact(x)
    if xq < 0 or xq > 1:
        raise InvalidInput(f"input {xq} outside [0, 1]")
    if xq == 1:
        word = Word(base, (base - 1,) * n)
        return xq, EncodeResult(word, True, ctx.bits)
    return xq, None


def _orbit_attempt(xq: Fraction, base: int, n: int, bits: int) -> list[int] | None:
    ctx = PrecisionContext(bits, bits)
    edges = _cell_edges(base, bits)
    Y = iv.enclose_fraction(xq, ctx)
    digits: list[int] = []
    for _ in range(n):
        d = _certified_cell(Y, edges)
        if d is None:
            return None
        digits.append(d)
        # one step of f(t) = base**t mod 1: inside cell d, the integer part
        # of base**t is exactly d
        Y = iv.sub_scalar(iv.pow_base(base, Y, ctx), d, ctx)
    return digits


def encode_orbit(
    x: ExactInput, base: int, n: int, ctx: PrecisionContext = DEFAULT_CONTEXT
) -> EncodeResult:
    """First n digits of x by following the expanding-map orbit.

    Each digit is read off from the cell the certified orbit enclosure lies
    in; any boundary straddle restarts the whole orbit at doubled precision.
    ``PrecisionExhausted`` at the cap means x is (or is indistinguishable
    from) a cylinder endpoint, which genuinely has two expansions.
    """
    xq, special = _prepare_encode(x, base, n, ctx)
    if special is not None:
        return special
    bits = ctx.bits
    while True:
        digits = _orbit_attempt(xq, base, n, bits)
        if digits is not None:
            return EncodeResult(Word(base, tuple(digits)), True, bits)
        if bits >= ctx.max_bits:
            raise PrecisionExhausted(
                f"cannot separate {xq} from a digit-cell boundary at "
                f"{ctx.max_bits} bits; the input is (or is indistinguishable "
                f"from) a cylinder endpoint"
            )
        bits = min(2 * bits, ctx.max_bits)


def _subdivide_attempt(xq: Fraction, base: int, n: int, bits: int) -> list[int] | None:
    ctx = PrecisionContext(bits, bits)
    edges = _cell_edges(base, bits)
    q = mpq(xq.numerator, xq.denominator)
    digits: list[int] = []
    for _ in range(n):
        # Children of the current prefix tile its cylinder; the boundary
        # between child j-1 and child j is value(prefix; log_m(j)).  Binary
        # search with exact comparisons of x against boundary enclosures.
        # Outer boundaries need no test: x is already certified to lie in
        # the prefix cylinder [value(prefix; 0), value(prefix; 1)) by the
        # previous step (or by 0 <= x < 1 at the start), and those ends are
        # the same points as the first and last child edges.
        lo_d, hi_d = 1, base - 1
        while lo_d < hi_d:
            jm = (lo_d + hi_d + 1) // 2
            B = edges[jm - 1]
            for d in reversed(digits):
                B = branch_map(base, d, B, ctx)
            if q >= B.hi:
                lo_d = jm
            elif q < B.lo:
                hi_d = jm - 1
            else:
                return None
        digits.append(lo_d)
    return digits


def encode_subdivide(
    x: ExactInput, base: int, n: int, ctx: PrecisionContext = DEFAULT_CONTEXT
) -> EncodeResult:
    """First n digits of x by subdividing cylinders.

    Dual of ``encode_orbit`` that never runs the expanding map: each digit
    is chosen by comparing x exactly against enclosures of the child-cylinder
    boundaries, so enclosure widths only shrink with depth.  Must agree with
    ``encode_orbit`` digit for digit whenever both certify, since both prove
    the same half-open cell memberships.
    """
    xq, special = _prepare_encode(x, base, n, ctx)
    if special is not None:
        return special
    bits = ctx.bits
    while True:
        digits = _subdivide_attempt(xq, base, n, bits)
        if digits is not None:
            return EncodeResult(Word(base, tuple(digits)), True, bits)
        if bits >= ctx.max_bits:
            raise PrecisionExhausted(
                f"cannot separate {xq} from a cylinder boundary at "
                f"{ctx.max_bits} bits; the input is (or is indistinguishable "
                f"from) a cylinder endpoint"
            )
        bits = min(2 * bits, ctx.max_bits)
