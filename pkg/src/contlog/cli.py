"""Command-line interface.

Subcommands map one-to-one onto the library surface:

* ``encode``      digits of an exact rational, with certification metadata
* ``decode``      cylinder interval of a digit word
* ``interval``    alias of decode
* ``dim``         dimension bracket for a restricted digit set
* ``freq-bound``  upper bound U_m(p) for one frequency vector
* ``freq-max``    maximal U_m with its maximizer and the harmonic-style sum
* ``curve``       CSV of the base-3 bound curve
* ``census``      seeded digit-occurrence census
* ``check``       structural audit of the cylinder partition

Exit codes: 0 success; 2 usage or input error; 3 precision cap hit
(cylinder-endpoint inputs); 4 budget or tolerance not met (the result is
still printed, with the failure flagged in-band).

Output goes to stdout, or to ``--out FILE`` verbatim; given equal inputs the
bytes are identical run to run.  ``CONTLOG_THREADS`` caps the worker count
(0 = auto).  Computations currently run on one worker, which satisfies any
cap; the variable is validated and reserved so scripts can set it today.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence, Tuple

from .codec import Word, decode, encode_orbit
from .dimension import DigitSet, refine_bracket
from .errors import (
    BudgetExceeded,
    ContlogError,
    EmptyRatioList,
    InvalidDigit,
    InvalidGrid,
    InvalidInput,
    InvalidProbabilityVector,
    PrecisionExhausted,
    RatioOutOfRange,
)
from .experiments import occurrence_census, structure_check
from .frequency import FrequencyVector, bound_curve, bound_curve_csv, freq_dim_upper, harmonic_check, max_freq_dim
from .intervals import PrecisionContext, float_down, float_up

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECISION = 3
EXIT_LIMIT = 4

_USAGE_ERRORS = (
    InvalidInput,
    InvalidDigit,
    InvalidGrid,
    InvalidProbabilityVector,
    EmptyRatioList,
    RatioOutOfRange,
    ValueError,
)


def _parse_int_list(raw: str, what: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in raw.split(","))
    except ValueError as exc:
        raise InvalidInput(f"{what} must be comma-separated integers, got {raw!r}") from exc


def _parse_prob_list(raw: str) -> Tuple[float, ...]:
    from fractions import Fraction

    out = []
    for part in raw.split(","):
        try:
            out.append(float(Fraction(part.strip())))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(
                f"probabilities must be rationals or decimals, got {part!r}"
            ) from exc
    return tuple(out)


def _fmt12(v: float) -> str:
    return f"{v:.12g}"


def _emit(text: str, out: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2)


def _plain(pairs: Sequence[Tuple[str, str]]) -> str:
    return "\n".join(f"{k} = {v}" for k, v in pairs)


def worker_count(env=os.environ) -> int:
    """Resolve CONTLOG_THREADS: unset -> 1, 0 -> auto, n -> n."""
    raw = env.get("CONTLOG_THREADS")
    if raw is None:
        return 1
    try:
        v = int(raw)
    except ValueError as exc:
        raise InvalidInput(f"CONTLOG_THREADS must be an integer, got {raw!r}") from exc
    if v < 0:
        raise InvalidInput(f"CONTLOG_THREADS must be >= 0, got {v}")
    if v == 0:
        return os.cpu_count() or 1
    return v


# -- subcommand handlers ---------------------------------------------------


def _cmd_encode(args) -> int:
    ctx = PrecisionContext(args.bits, args.max_bits)
    res = encode_orbit(args.x, args.base, args.digits, ctx)
    word = res.word
    if args.format == "plain":
        text = _plain(
            [
                ("digits", ",".join(str(d) for d in word.digits)),
                ("certified", str(res.certified).lower()),
                ("bits_used", str(res.bits_used)),
            ]
        )
    else:
        text = _dump_json(
            {
                "word": {"base": word.base, "digits": list(word.digits)},
                "certified": res.certified,
                "bits_used": res.bits_used,
            }
        )
    _emit(text, args.out)
    return EXIT_OK


def _cmd_decode(args) -> int:
    word = Word(args.base, _parse_int_list(args.word, "--word"))
    cyl = decode(word)
    lo, hi = float_down(cyl.lo), float_up(cyl.hi)
    if args.format == "plain":
        text = _plain(
            [
                ("digits", ",".join(str(d) for d in word.digits)),
                ("lo", _fmt12(lo)),
                ("hi", _fmt12(hi)),
                ("width", _fmt12(cyl.width())),
            ]
        )
    else:
        text = _dump_json(
            {
                "word": {"base": word.base, "digits": list(word.digits)},
                "lo": lo,
                "hi": hi,
                "width": cyl.width(),
            }
        )
    _emit(text, args.out)
    return EXIT_OK


def _cmd_dim(args) -> int:
    D = DigitSet(args.base, _parse_int_list(args.set, "--set"))
    res = refine_bracket(D, tol=args.tol, n_max=args.n_max)
    b = res.bracket
    if args.format == "plain":
        text = _plain(
            [
                ("set", ",".join(str(d) for d in D.sorted_members)),
                ("n", str(b.n)),
                ("lower", _fmt12(b.lower)),
                ("upper", _fmt12(b.upper)),
                ("gap", _fmt12(b.gap)),
                ("tolerance_met", str(res.tolerance_met).lower()),
            ]
        )
    else:
        text = _dump_json(
            {
                "base": D.base,
                "set": list(D.sorted_members),
                "tol": args.tol,
                "n_max": args.n_max,
                "n": b.n,
                "lower": b.lower,
                "upper": b.upper,
                "gap": b.gap,
                "tolerance_met": res.tolerance_met,
                "history": [
                    {"n": h.n, "lower": h.lower, "upper": h.upper}
                    for h in res.history
                ],
            }
        )
    _emit(text, args.out)
    return EXIT_OK if res.tolerance_met else EXIT_LIMIT


def _cmd_freq_bound(args) -> int:
    vec = FrequencyVector(args.base, _parse_prob_list(args.p))
    u = freq_dim_upper(vec)
    if args.format == "plain":
        text = _plain([("upper_bound", _fmt12(u))])
    else:
        text = _dump_json(
            {"base": args.base, "p": list(vec.p), "upper_bound": u}
        )
    _emit(text, args.out)
    return EXIT_OK


def _cmd_freq_max(args) -> int:
    res = max_freq_dim(args.base)
    h = harmonic_check(args.base)
    if args.format == "plain":
        text = _plain(
            [
                ("d", _fmt12(res.d)),
                ("p_star", ",".join(_fmt12(v) for v in res.p_star.p)),
                ("harmonic_sum", _fmt12(h)),
            ]
        )
    else:
        text = _dump_json(
            {
                "base": args.base,
                "d": res.d,
                "p_star": list(res.p_star.p),
                "harmonic_sum": h,
            }
        )
    _emit(text, args.out)
    return EXIT_OK


def _cmd_curve(args) -> int:
    if args.format == "json":
        rows = bound_curve(args.grid)
        text = _dump_json(
            {
                "base": 3,
                "grid": args.grid,
                "points": [{"p": p, "upper_bound": u} for p, u in rows],
            }
        )
    else:
        text = bound_curve_csv(args.grid)
    _emit(text, args.out)
    return EXIT_OK


def _cmd_census(args) -> int:
    report = occurrence_census(args.base, args.samples, args.digits, args.seed)
    if args.format == "csv":
        lines = ["digit,occurrence,mean_frequency"]
        for i in range(args.base - 1):
            lines.append(
                f"{i + 1},{_fmt12(report.per_digit_occurrence[i])},"
                f"{_fmt12(report.mean_frequency[i])}"
            )
        text = "\n".join(lines)
    else:
        text = report.to_json()
    _emit(text, args.out)
    return EXIT_OK


def _plain_value(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return _fmt12(v)
    return str(v)


def _cmd_check(args) -> int:
    report = structure_check(args.base, args.level)
    if args.format == "plain":
        text = _plain(
            [(k, _plain_value(v)) for k, v in report.to_json_dict().items()]
        )
    else:
        text = report.to_json()
    _emit(text, args.out)
    return EXIT_OK if report.passed else EXIT_LIMIT


# -- parser ----------------------------------------------------------------


def _add_common(sp, formats: Tuple[str, ...], default_format: str) -> None:
    sp.add_argument("--format", choices=formats, default=default_format)
    sp.add_argument("--out", metavar="FILE", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contlog",
        description="Certified continued-logarithm digit expansions and dimension bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("encode", help="digit expansion of an exact rational in [0,1]")
    sp.add_argument("--base", type=int, required=True)
    sp.add_argument("--x", required=True, help="rational like 1/2 or decimal like 0.125")
    sp.add_argument("--digits", type=int, required=True)
    sp.add_argument("--bits", type=int, default=128)
    sp.add_argument("--max-bits", type=int, default=16384)
    _add_common(sp, ("json", "plain"), "json")
    sp.set_defaults(handler=_cmd_encode)

    for name, help_text in (
        ("decode", "cylinder interval of a digit word"),
        ("interval", "cylinder interval of a digit word (alias of decode)"),
    ):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--base", type=int, required=True)
        sp.add_argument("--word", required=True, help="comma-separated digits, e.g. 1,2,1")
        _add_common(sp, ("json", "plain"), "json")
        sp.set_defaults(handler=_cmd_decode)

    sp = sub.add_parser("dim", help="dimension bracket for a restricted digit set")
    sp.add_argument("--base", type=int, required=True)
    sp.add_argument("--set", required=True, help="comma-separated digits, e.g. 1,2")
    sp.add_argument("--tol", type=float, default=0.02)
    sp.add_argument("--n-max", type=int, default=12)
    _add_common(sp, ("json", "plain"), "json")
    sp.set_defaults(handler=_cmd_dim)

    sp = sub.add_parser("freq-bound", help="dimension upper bound for one frequency vector")
    sp.add_argument("--base", type=int, required=True)
    sp.add_argument("--p", required=True, help="comma-separated probabilities, e.g. 1/2,1/2")
    _add_common(sp, ("json", "plain"), "json")
    sp.set_defaults(handler=_cmd_freq_bound)

    sp = sub.add_parser("freq-max", help="maximal frequency-set dimension bound")
    sp.add_argument("--base", type=int, required=True)
    _add_common(sp, ("json", "plain"), "json")
    sp.set_defaults(handler=_cmd_freq_max)

    sp = sub.add_parser("curve", help="base-3 bound curve over an interior grid")
    sp.add_argument("--grid", type=int, required=True)
    _add_common(sp, ("csv", "json"), "csv")
    sp.set_defaults(handler=_cmd_curve)

    sp = sub.add_parser("census", help="seeded digit-occurrence census")
    sp.add_argument("--base", type=int, required=True)
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--digits", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    _add_common(sp, ("json", "csv"), "json")
    sp.set_defaults(handler=_cmd_census)

    sp = sub.add_parser("check", help="cylinder partition audit at one level")
    sp.add_argument("--base", type=int, required=True)
    sp.add_argument("--level", type=int, required=True)
    _add_common(sp, ("json", "plain"), "json")
    sp.set_defaults(handler=_cmd_check)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        worker_count()
        return args.handler(args)
    except PrecisionExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except _USAGE_ERRORS as exc:
        print(parser.format_usage(), file=sys.stderr, end="")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ContlogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
