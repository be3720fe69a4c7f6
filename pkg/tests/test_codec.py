from fractions import Fraction
from itertools import product

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contlog import intervals as iv
from contlog.codec import (
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
from contlog.errors import InvalidDigit, InvalidInput, PrecisionExhausted

CTX = iv.PrecisionContext()

mpmath.mp.dps = 60


# -- words and parsing -----------------------------------------------------


def test_word_validation():
    with pytest.raises(InvalidDigit):
        Word(3, (0,))
    with pytest.raises(InvalidDigit):
        Word(3, (3,))
    with pytest.raises(InvalidInput):
        Word(2, (1,))
    assert len(Word(4, (1, 2, 3))) == 3
    assert Word(4, (1, 2)).child(3) == Word(4, (1, 2, 3))


def test_equal_length_words_compare_lexicographically():
    assert Word(3, (1, 2)) < Word(3, (2, 1))
    assert Word(3, (1, 1, 2)) < Word(3, (1, 2, 1))


def test_parse_exact_accepts_rationals_and_decimals():
    assert parse_exact("3/7") == Fraction(3, 7)
    assert parse_exact("0.125") == Fraction(1, 8)
    assert parse_exact(Fraction(2, 5)) == Fraction(2, 5)
    assert parse_exact(1) == 1


def test_parse_exact_rejects_floats_and_garbage():
    with pytest.raises(InvalidInput):
        parse_exact(0.1)
    with pytest.raises(InvalidInput):
        parse_exact("one half")
    with pytest.raises(InvalidInput):
        parse_exact(True)


# -- branch maps -----------------------------------------------------------


def test_branch_top_digit_fixes_one():
    out = branch_map(3, 2, iv.point(1), CTX)
    assert out.contains(1)


def test_branch_middle_digit_base_four_halves():
    # log_4(2) = 1/2
    out = branch_map(4, 2, iv.point(0), CTX)
    assert out.contains(Fraction(1, 2))


def test_branch_unit_interval_image():
    out = branch_map(3, 1, iv.unit_interval(), CTX)
    assert out.lo == 0
    hi = mpmath.mpf(out.hi_fraction().numerator) / out.hi_fraction().denominator
    assert abs(hi - mpmath.log(2) / mpmath.log(3)) < mpmath.mpf(2) ** -100


def test_branch_contracts_widths():
    X = iv.unit_interval()
    out = branch_map(3, 1, X, CTX)
    assert out.width_fraction() < X.width_fraction()


def test_branch_rejects_bad_digit():
    with pytest.raises(InvalidDigit):
        branch_map(3, 3, iv.point(0), CTX)


# -- cylinders ---------------------------------------------------------------


def test_single_digit_cylinder_is_the_cell():
    for m, d in ((3, 1), (3, 2), (5, 3)):
        cell = word_interval(Word(m, (d,)), CTX)
        lo = mpmath.log(d) / mpmath.log(m)
        hi = mpmath.log(d + 1) / mpmath.log(m)
        assert mpmath.mpf(cell.lo_fraction().numerator) / cell.lo_fraction().denominator <= lo
        assert mpmath.mpf(cell.hi_fraction().numerator) / cell.hi_fraction().denominator >= hi
        wf = cell.width_fraction()
        excess = mpmath.mpf(wf.numerator) / wf.denominator - (hi - lo)
        assert 0 <= excess < mpmath.mpf(2) ** -100


def test_top_words_keep_right_endpoint_one():
    for k in (1, 2, 5, 9):
        assert word_interval(Word(4, (3,) * k), CTX).hi == 1


def test_bottom_words_keep_left_endpoint_zero():
    for k in (1, 4, 7):
        assert word_interval(Word(4, (1,) * k), CTX).lo == 0


def test_extension_nests_inside_prefix():
    outer = word_interval(Word(3, (1,)), CTX)
    inner = word_interval(Word(3, (1, 2)), CTX)
    assert outer.contains_interval(inner)


@given(
    m=st.sampled_from([3, 4, 5]),
    digits=st.lists(st.integers(1, 2), min_size=1, max_size=6),
    d=st.integers(1, 2),
)
@settings(max_examples=80, deadline=None)
def test_every_child_nests(m, digits, d):
    w = Word(m, tuple(digits))
    assert word_interval(w, CTX).contains_interval(word_interval(w.child(d), CTX))


def test_cylinders_in_lexicographic_order_are_in_numeric_order():
    for m, n in ((3, 4), (5, 3)):
        words = [Word(m, w) for w in product(range(1, m), repeat=n)]
        assert words == sorted(words)
        lefts = [word_interval(w, CTX).lo for w in words]
        assert all(a < b for a, b in zip(lefts, lefts[1:]))


def test_decode_is_the_cylinder_and_rejects_empty():
    w = Word(3, (1, 2))
    cyl = decode(w)
    # right endpoint is log_3(1 + log_3 3) = log_3 2
    hi = mpmath.mpf(cyl.hi_fraction().numerator) / cyl.hi_fraction().denominator
    assert abs(hi - mpmath.log(2) / mpmath.log(3)) < mpmath.mpf(2) ** -100
    with pytest.raises(InvalidInput):
        decode(Word(3, ()))


def test_empty_word_interval_is_unit():
    u = word_interval(Word(3, ()), CTX)
    assert u.lo == 0 and u.hi == 1


# -- fixed points ------------------------------------------------------------


def test_fixed_point_top_digit_is_one():
    assert fixed_point(4, 3).contains(1)


def test_fixed_point_bottom_digit_is_zero():
    assert fixed_point(4, 1).contains(0)


def test_fixed_point_middle_digit_matches_iteration_oracle():
    got = fixed_point(4, 2, tol=1e-12)
    x = mpmath.mpf("0.7")
    for _ in range(200):
        x = mpmath.log(2 + x) / mpmath.log(4)
    assert got.width() <= 1e-12
    lo = mpmath.mpf(got.lo_fraction().numerator) / got.lo_fraction().denominator
    assert abs(lo - x) < 1e-11


def test_fixed_point_escalates_for_tight_tolerances():
    out = fixed_point(3, 2, tol=Fraction(1, 2 ** 400))
    assert out.width_fraction() <= Fraction(1, 2 ** 400)


def test_fixed_point_rejects_bad_tolerance():
    with pytest.raises(InvalidInput):
        fixed_point(3, 1, tol=0)


# -- encoding ----------------------------------------------------------------


def test_encode_zero_is_all_ones():
    for enc in (encode_orbit, encode_subdivide):
        res = enc(0, 3, 5)
        assert res.word.digits == (1, 1, 1, 1, 1)
        assert res.certified


def test_encode_one_is_all_top_digits():
    for enc in (encode_orbit, encode_subdivide):
        for m, k in ((3, 4), (7, 6)):
            assert enc(1, m, k).word.digits == (m - 1,) * k


def test_encode_half_base_three():
    assert encode_orbit("1/2", 3, 5).word.digits == (1, 2, 1, 1, 1)
    assert encode_subdivide("0.5", 3, 5).word.digits == (1, 2, 1, 1, 1)


def test_encoders_agree_on_a_third_base_four():
    a = encode_orbit(Fraction(1, 3), 4, 8)
    b = encode_subdivide(Fraction(1, 3), 4, 8)
    assert a.word == b.word


def test_encode_rejects_out_of_range_and_bad_counts():
    for enc in (encode_orbit, encode_subdivide):
        with pytest.raises(InvalidInput):
            enc(Fraction(3, 2), 3, 4)
        with pytest.raises(InvalidInput):
            enc(Fraction(-1, 2), 3, 4)
        with pytest.raises(InvalidInput):
            enc(Fraction(1, 2), 3, 0)


def test_cell_boundary_input_exhausts_precision():
    """x = 1/2 in base 4 is exactly the edge log_4(2) between digit cells.

    Such numbers genuinely carry two expansions; the contract is to refuse
    rather than pick one.  Both encoders must refuse.
    """
    ctx = iv.PrecisionContext(64, 1024)
    for enc in (encode_orbit, encode_subdivide):
        with pytest.raises(PrecisionExhausted):
            enc(Fraction(1, 2), 4, 3, ctx)
        with pytest.raises(PrecisionExhausted):
            enc(Fraction(1, 2), 9, 3, ctx)


@given(
    num=st.integers(0, 10 ** 6),
    den=st.integers(1, 10 ** 6),
    m=st.sampled_from([3, 4, 5]),
)
@settings(max_examples=60, deadline=None)
def test_encoders_agree_or_both_refuse(num, den, m):
    """The two encoders certify the same digits, or both hit the cap."""
    if num > den:
        num, den = den, num
    x = Fraction(num, den)
    ctx = iv.PrecisionContext(128, 2048)
    try:
        a = encode_orbit(x, m, 20, ctx)
    except PrecisionExhausted:
        with pytest.raises(PrecisionExhausted):
            encode_subdivide(x, m, 20, ctx)
        return
    b = encode_subdivide(x, m, 20, ctx)
    assert a.word == b.word
    assert a.certified and b.certified


@given(num=st.integers(0, 10 ** 9), den=st.integers(1, 10 ** 9))
@settings(max_examples=40, deadline=None)
def test_roundtrip_contains_input_with_geometric_width(num, den):
    if num > den:
        num, den = den, num
    x = Fraction(num, den)
    res = encode_orbit(x, 3, 60)
    cyl = decode(res.word)
    assert cyl.contains(x)
    assert cyl.width_fraction() <= 2 * Fraction(10, 11) ** 60  # 1/ln 3 < 10/11


def test_encode_result_reports_escalation():
    # the expanding map sheds precision every step, so a long enough encode
    # cannot certify at 128 bits; the result records what finally worked
    res = encode_orbit(Fraction(13, 77), 3, 250)
    assert isinstance(res, EncodeResult)
    assert res.bits_used >= 256
    assert res.certified


def test_word_value_composes_first_digit_outermost():
    w = Word(3, (1, 2))
    inner = branch_map(3, 2, iv.point(0), CTX)
    outer = branch_map(3, 1, inner, CTX)
    got = word_value(w, iv.point(0), CTX)
    assert got.lo == outer.lo and got.hi == outer.hi
