"""
A digit census over random numbers
==================================

Encoding many uniform random samples and tallying their digits shows the
"typical" digit statistics directly: every digit keeps appearing, and small
digits dominate (in base 3, digit 1 carries roughly 81% of the mass).  The
sample stream is splittable and seeded, so a census is reproducible down to
the byte.  A structural audit of the cylinder partition runs at the end.
"""

from contlog import (
    Word,
    empirical_frequency,
    occurrence_census,
    sample_fraction,
    structure_check,
)

# ---------------------------------------------------------------------------
# Samples are exact dyadic rationals drawn per (seed, index); the same pair
# always yields the same number, independent of execution order.
print("sample_fraction(seed=11, index=0) =", sample_fraction(11, 0))
print("sample_fraction(seed=11, index=0) =", sample_fraction(11, 0), "(again)")
print("sample_fraction(seed=11, index=1) =", float(sample_fraction(11, 1)), "...")

# Per-word digit statistics: the fraction of each digit 1..m-1 in one word.
w = Word(3, (1, 2, 1, 1, 2, 1, 1, 1))
print(f"\nempirical_frequency({w.digits}) = {empirical_frequency(w)}")

# ---------------------------------------------------------------------------
# The census proper: encode `samples` random numbers to `digits_per_sample`
# digits each, then aggregate.  occurrence = fraction of samples in which a
# digit appears at least once; mean_frequency = average per-sample share.
report = occurrence_census(base=3, samples=400, digits_per_sample=100, seed=7)
print("\ncensus, base 3, 400 samples x 100 digits, seed 7:")
for i, (occ, mf) in enumerate(
    zip(report.per_digit_occurrence, report.mean_frequency), start=1
):
    print(f"  digit {i}: occurrence={occ:.4f}  mean_frequency={mf:.6f}")
print(f"  skipped samples: {report.skipped}")
print("\nfull JSON report:")
print(report.to_json())

# ---------------------------------------------------------------------------
# Structural audit: at each level the cylinder cells must tile [0, 1] with
# sub-2^-40 slack, in lexicographic = numeric order, nested in their parents.
rep = structure_check(base=3, level=5)
print(f"\nstructure_check(3, 5): cells={rep.cells}  passed={rep.passed}")
print(f"  max_gap={rep.max_gap:.3e}  max_overlap={rep.max_overlap:.3e}")
print(f"  covers_unit={rep.covers_unit}  lex_order_ok={rep.lex_order_ok}"
      f"  nesting_ok={rep.nesting_ok}")
