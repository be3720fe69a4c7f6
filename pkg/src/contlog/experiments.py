"""Statistical and structural harnesses over the codec.

Two finite surrogates for infinite-expansion statements, plus a structural
audit of the cylinder partition:

* ``occurrence_census`` samples exact dyadic rationals, encodes each to a
  fixed digit count, and reports per-digit occurrence rates and mean
  empirical frequencies.  Every digit occurring in essentially every sample
  is the finite shadow of "every digit occurs infinitely often in almost
  every expansion".
* ``empirical_frequency`` is the finite digit-frequency vector of one word.
* ``structure_check`` verifies that the level-n cylinders tile [0, 1] in
  lexicographic order with no material gaps or overlaps and nest under
  their parents.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Tuple

import numpy as np

from .codec import Word, encode_orbit, word_interval
from .errors import BudgetExceeded, InvalidInput, PrecisionExhausted
from .intervals import DEFAULT_CONTEXT, PrecisionContext

__all__ = [
    "CensusReport",
    "StructureReport",
    "GENERATOR_NAME",
    "empirical_frequency",
    "sample_fraction",
    "occurrence_census",
    "structure_check",
]

#: How census samples are drawn: one independent 128-bit stream per sample
#: index, so sample i is a function of (seed, i) alone and any execution
#: order or partitioning yields the same report.
GENERATOR_NAME = "numpy.random.SeedSequence(entropy=seed, spawn_key=(index,)), 128-bit dyadic"

_SAMPLE_BITS = 128

#: Tiling tolerance: enclosure gaps/overlaps beyond this fail the check.
STRUCTURE_TOL = Fraction(1, 2 ** 40)

#: Cap on (m-1)^n cells enumerated by structure_check.
STRUCTURE_BUDGET = 2 ** 20


def empirical_frequency(w: Word) -> Tuple[float, ...]:
    """Fraction of positions holding each digit 1..m-1, in digit order."""
    if len(w.digits) == 0:
        raise InvalidInput("empirical_frequency needs a nonempty word")
    counts = Counter(w.digits)
    n = len(w.digits)
    return tuple(counts.get(i, 0) / n for i in range(1, w.base))


# -- occurrence census -----------------------------------------------------


@dataclass(frozen=True)
class CensusReport:
    """Aggregate of encoding `samples` uniform dyadic rationals.

    ``per_digit_occurrence[i-1]`` is the fraction of kept samples whose word
    contains digit i at least once; ``mean_frequency[i-1]`` the mean of the
    per-sample empirical frequencies.  ``skipped`` counts samples whose
    encoding hit the precision cap (inputs indistinguishable from cylinder
    endpoints); they are excluded from both statistics but never hidden.
    """

    base: int
    samples: int
    digits_per_sample: int
    seed: int
    skipped: int
    per_digit_occurrence: Tuple[float, ...]
    mean_frequency: Tuple[float, ...]
    generator: str = GENERATOR_NAME

    def __post_init__(self) -> None:
        for v in self.per_digit_occurrence + self.mean_frequency:
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"census fraction {v} outside [0, 1]")
        total = math.fsum(self.mean_frequency)
        if self.skipped < self.samples and abs(total - 1.0) > 1e-9:
            raise ValueError(f"mean frequencies sum to {total}, not 1")

    def to_json_dict(self) -> Dict:
        return {
            "base": self.base,
            "samples": self.samples,
            "digits_per_sample": self.digits_per_sample,
            "seed": self.seed,
            "skipped": self.skipped,
            "per_digit_occurrence": list(self.per_digit_occurrence),
            "mean_frequency": list(self.mean_frequency),
            "generator": self.generator,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def sample_fraction(seed: int, index: int) -> Fraction:
    """Uniform dyadic rational in [0, 1) at 128-bit resolution.

    Exact by construction, so it can be encoded with certification.  Stream
    ``index`` is split off the seed, making the value independent of how
    samples are batched.
    """
    words = np.random.SeedSequence(entropy=seed, spawn_key=(index,)).generate_state(
        _SAMPLE_BITS // 32, dtype=np.uint32
    )
    v = 0
    for j, wj in enumerate(words):
        v |= int(wj) << (32 * j)
    return Fraction(v, 2 ** _SAMPLE_BITS)


def _suggested_bits(base: int, n: int, ctx: PrecisionContext) -> int:
    """Starting precision big enough that n orbit steps rarely escalate.

    Each expanding-map step multiplies enclosure width by about m·ln m and
    the samples are exact dyadics, so certifying n digits needs roughly
    n·log2(m·ln m) bits plus margin.  Starting near that value skips the
    doomed low-precision attempts; the digits produced are identical either
    way.
    """
    needed = 64 + math.ceil(n * math.log2(base * math.log(base)))
    bits = ctx.bits
    while bits < needed and bits < ctx.max_bits:
        bits = min(2 * bits, ctx.max_bits)
    return bits


def _census_core(
    base: int,
    xs: Iterable[Fraction],
    n: int,
    ctx: PrecisionContext,
) -> Tuple[List[int], List[float], int, int]:
    occurred = [0] * (base - 1)
    freq_sums = [0.0] * (base - 1)
    kept = 0
    skipped = 0
    for xq in xs:
        try:
            word = encode_orbit(xq, base, n, ctx).word
        except PrecisionExhausted:
            skipped += 1
            continue
        kept += 1
        present = set(word.digits)
        freqs = empirical_frequency(word)
        for i in range(base - 1):
            if (i + 1) in present:
                occurred[i] += 1
            freq_sums[i] += freqs[i]
    return occurred, freq_sums, kept, skipped


def occurrence_census(
    base: int,
    samples: int,
    digits_per_sample: int,
    seed: int,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
) -> CensusReport:
    """Encode seeded uniform samples and aggregate digit statistics.

    Deterministic in (base, samples, digits_per_sample, seed): the sample
    stream is splittable per index and the aggregation is a plain sum, so
    no execution order can change the report.
    """
    if not isinstance(base, int) or base < 3:
        raise InvalidInput(f"base must be an integer >= 3, got {base!r}")
    if samples < 1 or digits_per_sample < 1:
        raise InvalidInput("samples and digits_per_sample must be >= 1")
    if not isinstance(seed, int) or not 0 <= seed < 2 ** 64:
        raise InvalidInput(f"seed must be a 64-bit non-negative integer, got {seed!r}")
    start_bits = _suggested_bits(base, digits_per_sample, ctx)
    run_ctx = PrecisionContext(start_bits, max(ctx.max_bits, start_bits))
    xs = (sample_fraction(seed, i) for i in range(samples))
    occurred, freq_sums, kept, skipped = _census_core(
        base, xs, digits_per_sample, run_ctx
    )
    if kept:
        occurrence = tuple(c / kept for c in occurred)
        mean_freq = tuple(s / kept for s in freq_sums)
    else:
        occurrence = tuple(0.0 for _ in occurred)
        mean_freq = tuple(0.0 for _ in freq_sums)
    return CensusReport(
        base=base,
        samples=samples,
        digits_per_sample=digits_per_sample,
        seed=seed,
        skipped=skipped,
        per_digit_occurrence=occurrence,
        mean_frequency=mean_freq,
    )


# -- structural audit ------------------------------------------------------


@dataclass(frozen=True)
class StructureReport:
    """Machine-readable outcome of the cylinder tiling audit at one level."""

    base: int
    level: int
    cells: int
    max_gap: float
    max_overlap: float
    covers_unit: bool
    lex_order_ok: bool
    nesting_ok: bool
    passed: bool

    def to_json_dict(self) -> Dict:
        return {
            "base": self.base,
            "level": self.level,
            "cells": self.cells,
            "max_gap": self.max_gap,
            "max_overlap": self.max_overlap,
            "covers_unit": self.covers_unit,
            "lex_order_ok": self.lex_order_ok,
            "nesting_ok": self.nesting_ok,
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def structure_check(
    base: int,
    level: int,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
    budget: int = STRUCTURE_BUDGET,
) -> StructureReport:
    """Audit the level-n cylinder partition of [0, 1].

    Walks all (base-1)^level words in lexicographic order and verifies that
    their cylinder enclosures (a) start at 0 and end at 1, (b) abut with
    gaps/overlaps below 2^-40, (c) have strictly increasing left endpoints,
    and (d) sit inside their parent cylinders.  True cells share endpoints
    exactly; the measured slack is pure outward rounding, many orders of
    magnitude below the threshold at the default precision.
    """
    if not isinstance(base, int) or base < 3:
        raise InvalidInput(f"base must be an integer >= 3, got {base!r}")
    if level < 1:
        raise InvalidInput(f"level must be >= 1, got {level}")
    cells = (base - 1) ** level
    if cells > budget:
        raise BudgetExceeded(
            f"(base-1)^level = {cells} cells exceeds the budget of {budget}"
        )

    parents = {
        digits: word_interval(Word(base, digits), ctx)
        for digits in product(range(1, base), repeat=level - 1)
    }
    max_gap = Fraction(0)
    max_overlap = Fraction(0)
    lex_order_ok = True
    nesting_ok = True
    prev = None
    first = last = None
    for digits in product(range(1, base), repeat=level):
        cur = word_interval(Word(base, digits), ctx)
        parent = parents[digits[:-1]]
        if not (parent.lo <= cur.lo and cur.hi <= parent.hi):
            nesting_ok = False
        if prev is not None:
            diff = cur.lo_fraction() - prev.hi_fraction()
            if diff > 0:
                max_gap = max(max_gap, diff)
            else:
                max_overlap = max(max_overlap, -diff)
            if not cur.lo > prev.lo:
                lex_order_ok = False
        else:
            first = cur
        prev = cur
    last = prev
    covers_unit = (
        abs(first.lo_fraction()) <= STRUCTURE_TOL
        and abs(1 - last.hi_fraction()) <= STRUCTURE_TOL
    )
    passed = (
        covers_unit
        and lex_order_ok
        and nesting_ok
        and max_gap <= STRUCTURE_TOL
        and max_overlap <= STRUCTURE_TOL
    )
    return StructureReport(
        base=base,
        level=level,
        cells=cells,
        max_gap=float(max_gap),
        max_overlap=float(max_overlap),
        covers_unit=covers_unit,
        lex_order_ok=lex_order_ok,
        nesting_ok=nesting_ok,
        passed=passed,
    )
