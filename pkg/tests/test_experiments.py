import json
from fractions import Fraction

import pytest

from contlog import intervals as iv
from contlog.codec import Word
from contlog.errors import BudgetExceeded, InvalidInput
from contlog.experiments import (
    CensusReport,
    _census_core,
    empirical_frequency,
    occurrence_census,
    sample_fraction,
    structure_check,
)


def test_empirical_frequency_examples():
    assert empirical_frequency(Word(3, (1, 1, 1, 1))) == (1.0, 0.0)
    assert empirical_frequency(Word(3, (1, 2, 1, 2))) == (0.5, 0.5)
    assert empirical_frequency(Word(3, (1, 2, 1, 1, 1))) == (0.8, 0.2)
    with pytest.raises(InvalidInput):
        empirical_frequency(Word(3, ()))


def test_frequencies_sum_to_one():
    freqs = empirical_frequency(Word(5, (1, 4, 2, 2, 3, 1)))
    assert all(f >= 0 for f in freqs)
    assert sum(freqs) == pytest.approx(1.0)


def test_sample_stream_is_splittable_and_exact():
    a = sample_fraction(42, 0)
    assert a == sample_fraction(42, 0)
    assert a != sample_fraction(42, 1)
    assert a != sample_fraction(43, 0)
    assert 0 <= a < 1
    # dyadic at 128-bit resolution, hence exactly encodable
    assert (a * 2 ** 128).denominator == 1


def test_zero_sample_counts_digit_one_only():
    occurred, freq_sums, kept, skipped = _census_core(
        3, [Fraction(0)], 5, iv.DEFAULT_CONTEXT
    )
    assert occurred == [1, 0]
    assert kept == 1 and skipped == 0
    assert freq_sums == [1.0, 0.0]


def test_boundary_sample_is_skipped_not_dropped_silently():
    # 1/2 in base 4 sits on a digit-cell edge and cannot be certified
    occurred, freq_sums, kept, skipped = _census_core(
        4, [Fraction(1, 2), Fraction(1, 3)], 4, iv.PrecisionContext(64, 256)
    )
    assert skipped == 1
    assert kept == 1


def test_census_is_deterministic():
    r1 = occurrence_census(3, 50, 40, 7)
    r2 = occurrence_census(3, 50, 40, 7)
    assert r1 == r2
    assert r1.to_json() == r2.to_json()


def test_census_report_fields_and_ranges():
    r = occurrence_census(3, 60, 50, 123)
    assert r.base == 3 and r.samples == 60 and r.digits_per_sample == 50
    assert r.seed == 123
    assert r.skipped == 0
    assert all(0 <= v <= 1 for v in r.per_digit_occurrence)
    assert sum(r.mean_frequency) == pytest.approx(1.0, abs=1e-9)
    data = json.loads(r.to_json())
    assert list(data.keys()) == [
        "base",
        "samples",
        "digits_per_sample",
        "seed",
        "skipped",
        "per_digit_occurrence",
        "mean_frequency",
        "generator",
    ]


def test_census_validation():
    with pytest.raises(InvalidInput):
        occurrence_census(2, 10, 10, 0)
    with pytest.raises(InvalidInput):
        occurrence_census(3, 0, 10, 0)
    with pytest.raises(InvalidInput):
        occurrence_census(3, 10, 0, 0)
    with pytest.raises(InvalidInput):
        occurrence_census(3, 10, 10, -1)
    with pytest.raises(InvalidInput):
        occurrence_census(3, 10, 10, 2 ** 64)


def test_census_report_rejects_bad_fractions():
    with pytest.raises(ValueError):
        CensusReport(
            base=3,
            samples=1,
            digits_per_sample=1,
            seed=0,
            skipped=0,
            per_digit_occurrence=(1.5, 0.0),
            mean_frequency=(1.0, 0.0),
        )


def test_two_level_one_cells_tile_the_interval():
    rep = structure_check(3, 1)
    assert rep.cells == 2
    assert rep.passed
    assert rep.max_gap == 0.0
    assert rep.max_overlap <= 2 ** -40


def test_structure_check_midsize():
    rep = structure_check(4, 3)
    assert rep.cells == 27
    assert rep.covers_unit and rep.lex_order_ok and rep.nesting_ok
    assert rep.passed


def test_structure_report_json_shape():
    rep = structure_check(3, 2)
    data = json.loads(rep.to_json())
    assert list(data.keys()) == [
        "base",
        "level",
        "cells",
        "max_gap",
        "max_overlap",
        "covers_unit",
        "lex_order_ok",
        "nesting_ok",
        "passed",
    ]
    assert data["passed"] is True


def test_structure_check_budget_and_validation():
    with pytest.raises(BudgetExceeded):
        structure_check(5, 3, budget=10)
    with pytest.raises(InvalidInput):
        structure_check(2, 1)
    with pytest.raises(InvalidInput):
        structure_check(3, 0)
