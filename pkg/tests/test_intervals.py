import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contlog import intervals as iv
from contlog.errors import NonPositiveArgument, PrecisionExhausted

CTX = iv.PrecisionContext()

mpmath.mp.dps = 80


def mp_from_fraction(q: Fraction):
    return mpmath.mpf(q.numerator) / mpmath.mpf(q.denominator)


def assert_contains_mp(interval: iv.RealInterval, value) -> None:
    lo = mp_from_fraction(interval.lo_fraction())
    hi = mp_from_fraction(interval.hi_fraction())
    assert lo <= value <= hi


positive_fractions = st.fractions(min_value=Fraction(1, 1000), max_value=8)


def test_context_rejects_tiny_precision():
    with pytest.raises(ValueError):
        iv.PrecisionContext(bits=16)
    with pytest.raises(ValueError):
        iv.PrecisionContext(bits=256, max_bits=128)


def test_context_escalation_doubles_and_clips():
    ctx = iv.PrecisionContext(bits=128, max_bits=300)
    assert ctx.escalated().bits == 256
    assert ctx.escalated().escalated().bits == 300
    assert not iv.PrecisionContext(64, 64).can_escalate


def test_interval_invariants():
    with pytest.raises(ValueError):
        iv.RealInterval(iv._exact(2), iv._exact(1))
    x = iv.point(3)
    assert x.is_point and x.width() == 0.0


@given(num=st.integers(1, 10 ** 12), den=st.integers(1, 10 ** 12))
@settings(max_examples=200, deadline=None)
def test_fraction_enclosure_contains_the_fraction(num, den):
    q = Fraction(num, den)
    x = iv.enclose_fraction(q, CTX)
    assert x.contains(q)
    assert x.width_fraction() <= Fraction(1, 2 ** 120) * max(1, q)


def test_log_exact_anchors():
    """log(1) = 0 and log(m) = 1 come out exact so cell edges 0 and 1 stay sharp."""
    zero = iv.log_base(3, iv.point(1), CTX)
    assert zero.lo == 0 and zero.hi == 0
    one = iv.log_base(3, iv.point(3), CTX)
    assert one.lo == 1 and one.hi == 1
    assert iv.pow_base(3, iv.point(0), CTX).lo == 1
    assert iv.pow_base(3, iv.point(0), CTX).hi == 1
    assert iv.pow_base(3, iv.point(1), CTX).hi == 3


def test_log_of_two_base_three():
    # ln 2 / ln 3 = 0.63092975357...
    x = iv.log_base(3, iv.point(2), iv.PrecisionContext(64, 64))
    assert_contains_mp(x, mpmath.log(2) / mpmath.log(3))
    assert x.width() <= 2 ** -60


def test_pow_half_is_square_root():
    x = iv.pow_base(3, iv.enclose_fraction(Fraction(1, 2), CTX), CTX)
    assert_contains_mp(x, mpmath.sqrt(3))


@given(q=positive_fractions, m=st.sampled_from([3, 4, 10]))
@settings(max_examples=150, deadline=None)
def test_log_enclosure_sound(q, m):
    X = iv.enclose_fraction(q, CTX)
    out = iv.log_base(m, X, CTX)
    assert_contains_mp(out, mpmath.log(mp_from_fraction(q)) / mpmath.log(m))


@given(q=st.fractions(min_value=Fraction(-2), max_value=2), m=st.sampled_from([3, 4, 10]))
@settings(max_examples=150, deadline=None)
def test_pow_enclosure_sound(q, m):
    X = iv.enclose_fraction(q, CTX)
    out = iv.pow_base(m, X, CTX)
    assert_contains_mp(out, mpmath.power(m, mp_from_fraction(q)))


@given(
    lo=st.fractions(min_value=Fraction(1, 2), max_value=3),
    w=st.fractions(min_value=0, max_value=Fraction(1, 2)),
    m=st.sampled_from([3, 5]),
)
@settings(max_examples=100, deadline=None)
def test_log_width_bound(lo, w, m):
    """Output width tracks input width divided by the least slope, plus slack."""
    ctx = iv.PrecisionContext(64, 64)
    X = iv.hull(iv.enclose_fraction(lo, ctx), iv.enclose_fraction(lo + w, ctx))
    out = iv.log_base(m, X, ctx)
    bound = X.width_fraction() / (X.lo_fraction() * Fraction(104, 100)) + 4 * Fraction(1, 2 ** 64)
    # ln 3 > 1.04 covers every base here; larger bases only shrink the width
    assert out.width_fraction() <= bound


@given(q=st.fractions(min_value=Fraction(1, 100), max_value=Fraction(99, 100)))
@settings(max_examples=100, deadline=None)
def test_pow_then_log_recovers_input(q):
    m = 3
    X = iv.enclose_fraction(q, CTX)
    back = iv.log_base(m, iv.pow_base(m, X, CTX), CTX)
    assert back.contains_interval(X)
    assert back.width_fraction() <= X.width_fraction() + Fraction(10, 2 ** 120)


def test_higher_precision_nests():
    X = iv.enclose_fraction(Fraction(7, 5), CTX)
    a = iv.log_base(3, X, iv.PrecisionContext(64, 64))
    b = iv.log_base(3, X, iv.PrecisionContext(256, 256))
    assert a.contains_interval(b)
    assert b.width_fraction() < a.width_fraction()


@given(
    a=st.fractions(min_value=-4, max_value=4),
    b=st.fractions(min_value=-4, max_value=4),
    c=st.fractions(min_value=-4, max_value=4),
    d=st.fractions(min_value=-4, max_value=4),
)
@settings(max_examples=200, deadline=None)
def test_mul_encloses_products(a, b, c, d):
    X = iv.hull(iv.enclose_fraction(min(a, b), CTX), iv.enclose_fraction(max(a, b), CTX))
    Y = iv.hull(iv.enclose_fraction(min(c, d), CTX), iv.enclose_fraction(max(c, d), CTX))
    P = iv.mul(X, Y, CTX)
    for u in (min(a, b), max(a, b)):
        for v in (min(c, d), max(c, d)):
            assert P.lo_fraction() <= u * v <= P.hi_fraction()


@given(
    num=st.fractions(min_value=-4, max_value=4),
    den=st.fractions(min_value=Fraction(1, 10), max_value=4),
)
@settings(max_examples=200, deadline=None)
def test_div_encloses_quotient(num, den):
    X = iv.enclose_fraction(num, CTX)
    Y = iv.enclose_fraction(den, CTX)
    Q = iv.div(X, Y, CTX)
    assert Q.lo_fraction() <= num / den <= Q.hi_fraction()


def test_div_by_interval_spanning_zero_rejected():
    Z = iv.hull(iv.point(-1), iv.point(1))
    with pytest.raises(ZeroDivisionError):
        iv.div(iv.point(1), Z, CTX)
    with pytest.raises(ZeroDivisionError):
        iv.inv(Z, CTX)


def test_log_rejects_nonpositive():
    with pytest.raises(NonPositiveArgument):
        iv.log_base(3, iv.hull(iv.point(0), iv.point(1)), CTX)
    with pytest.raises(NonPositiveArgument):
        iv.log_base(3, iv.point(-2), CTX)


def test_pow_overflow_reports_precision_exhausted():
    with pytest.raises(PrecisionExhausted):
        iv.pow_base(3, iv.point(2 ** 40), CTX)


def test_directed_float_conversions_bracket():
    q = Fraction(1, 3)
    x = iv.enclose_fraction(q, CTX)
    assert iv.float_down(x.lo) <= float(q) <= iv.float_up(x.hi)
    assert iv.float_down(x.lo) < iv.float_up(x.hi)
