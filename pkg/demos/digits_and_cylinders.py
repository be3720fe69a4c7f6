"""
Digits, cylinders, and certified encoding
=========================================

A number x in [0, 1] has a base-m digit string d_1 d_2 d_3 ... built by
repeatedly applying x -> m**x - d, where d is the integer part of m**x.
Reading the digits back applies the inverse branches T_d(y) = log_m(d + y),
outermost digit first, so every finite digit string pins x into a small
interval (its "cylinder").  Everything below runs in certified interval
arithmetic: printed enclosures are guaranteed, not approximate.
"""

from fractions import Fraction

from contlog import (
    PrecisionContext,
    PrecisionExhausted,
    Word,
    decode,
    encode_orbit,
    encode_subdivide,
    fixed_point,
    parse_exact,
    word_interval,
)
from contlog.intervals import float_down, float_up


def show(X, label):
    print(f"  {label}: [{float_down(X.lo)!r}, {float_up(X.hi)!r}]")


ctx = PrecisionContext(bits=128, max_bits=16384)

# ---------------------------------------------------------------------------
# Encode an exact rational.  Two independent algorithms are available: one
# follows the expanding orbit m**x - d, the other binary-searches the digit
# tree by comparing x against exact cylinder boundaries.  They must agree.
x = parse_exact("2/7")
orb = encode_orbit(x, base=3, n=12, ctx=ctx)
sub = encode_subdivide(x, base=3, n=12, ctx=ctx)
print(f"x = {x},  base 3,  first 12 digits")
print(f"  orbit encoder:     {orb.word.digits}  (certified={orb.certified},"
      f" bits={orb.bits_used})")
print(f"  subdivide encoder: {sub.word.digits}")
assert orb.word == sub.word

# Decoding the word gives an interval that provably contains x.
cyl = decode(orb.word, ctx)
show(cyl, "decode enclosure")
print(f"  contains 2/7: {cyl.contains(x)},  width ~ {cyl.width():.3e}")

# ---------------------------------------------------------------------------
# Cylinders at small depth.  Level-1 cells split [0, 1] at log_3(2); each
# extra digit subdivides further, and longer words nest inside shorter ones.
print("\nlevel-1 and level-2 cylinders, base 3:")
for digits in [(1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2)]:
    show(word_interval(Word(3, digits), ctx), f"cells {digits}")

# ---------------------------------------------------------------------------
# A repeating digit corresponds to a fixed point of one branch map.  In base
# 4 the digit 2 repeats at the solution of x = log_4(2 + x):
fp = fixed_point(base=4, d=2, tol=1e-15, ctx=ctx)
show(fp, "x = log_4(2 + x)")

# ---------------------------------------------------------------------------
# Some inputs sit exactly on a cylinder boundary and genuinely have two
# expansions; no finite precision can decide between them.  The encoders
# escalate precision and then refuse, rather than guess: 1/2 = log_4(2) is
# the edge between the base-4 digit-1 and digit-2 cells.
try:
    encode_orbit(Fraction(1, 2), base=4, n=8, ctx=PrecisionContext(64, 1024))
except PrecisionExhausted as exc:
    print(f"\nencode_orbit(1/2, base=4) refuses: {exc}")
