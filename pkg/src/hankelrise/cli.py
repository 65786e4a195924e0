"""Command-line front end.

Subcommands:

  seq     print terms (or rising powers) of a recurrence, one per line
          as "k<TAB>value"
  det     build one Hankel-type matrix and print its determinant; --stats
          adds a JSON operation report
  closed  evaluate one closed-form identity side at a point
  verify  sweep a grid and print the JSON report; exit 0 iff it passes
  bench   time the determinant algorithms over a grid and emit CSV with
          columns algorithm,domain,n,r,d,mul_count,div_count,fallback,wall_ns

Spec selection is shared: --preset or explicit --a/--b/--c1/--c2 (integers
or p/q rationals), with --domain choosing int, rat, or poly arithmetic.
The poly domain is the fully symbolic spec and ignores preset/constants.
Ranges are inclusive "lo..hi" (a bare integer means a single value).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import ring
from .closedform import (
    carlitz_rhs,
    generalized_vajda_rhs,
    hankel_rank_bound_value,
    prodinger_rhs,
    theorem1_rhs,
    theorem2_rhs,
    vajda_rhs,
)
from .determinant import det_bareiss, det_cofactor, det_condensation
from .matgen import MODES, RISING, MatrixQuery, build
from .sequence import PRESETS, RecurrenceSpec, SequenceCache, preset, symbolic_spec
from .verify import IDENTITIES, ORACLES, GridSpec, report_json, run_grid

_ALGORITHMS = {
    "cofactor": det_cofactor,
    "bareiss": det_bareiss,
    "condensation": det_condensation,
}
_BENCH_ALGORITHMS = ("bareiss", "closed", "cofactor", "condensation")
_RANGE_FLAGS = {"--n", "--r", "--d", "--i", "--j"}


def _parse_range(text: str) -> Tuple[int, int]:
    if ".." in text.lstrip("-"):
        head, _, tail = text.partition("..")
        if head == "" or tail == "":
            raise argparse.ArgumentTypeError(f"bad range {text!r}; use lo..hi")
        lo, hi = int(head), int(tail)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _parse_literal(text: str, domain: str) -> ring.ExactScalar:
    if domain == ring.INTEGER:
        if "/" in text:
            raise ValueError(f"{text!r} is rational; pass --domain rat")
        return ring.integer(int(text))
    return ring.rational(Fraction(text))


def _spec_from_args(args: argparse.Namespace) -> RecurrenceSpec:
    constants = [args.a, args.b, args.c1, args.c2]
    given = [value for value in constants if value is not None]
    if args.domain == ring.POLYNOMIAL:
        return symbolic_spec()
    if args.preset and given:
        raise ValueError("--preset conflicts with explicit --a/--b/--c1/--c2")
    if given and len(given) != 4:
        raise ValueError("provide all four of --a --b --c1 --c2")
    if given:
        a, b, c1, c2 = (_parse_literal(text, args.domain) for text in constants)
        return RecurrenceSpec(a, b, c1, c2)
    return preset(args.preset or "fibonacci", args.domain)


def _add_spec_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--preset", choices=sorted(PRESETS), help="named spec")
    parser.add_argument("--a", help="seed W_0 (integer or p/q)")
    parser.add_argument("--b", help="seed W_1 (integer or p/q)")
    parser.add_argument("--c1", help="coefficient of W_{k-1} (integer or p/q)")
    parser.add_argument("--c2", help="coefficient of W_{k-2} (integer or p/q)")
    parser.add_argument(
        "--domain",
        choices=ring.DOMAINS,
        default=ring.INTEGER,
        help="scalar domain; poly is the symbolic spec and ignores preset/constants",
    )


def _merge_range_values(argv: Sequence[str]) -> List[str]:
    """Join ``--n -5..5`` into ``--n=-5..5`` so argparse accepts it."""
    merged: List[str] = []
    skip = False
    for position, token in enumerate(argv):
        if skip:
            skip = False
            continue
        nxt = argv[position + 1] if position + 1 < len(argv) else None
        if token in _RANGE_FLAGS and nxt is not None and nxt.startswith("-") and not nxt.startswith("--"):
            merged.append(f"{token}={nxt}")
            skip = True
        else:
            merged.append(token)
    return merged


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hankelrise",
        description="exact Hankel determinants of rising powers of recurrence terms",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    seq = commands.add_parser("seq", help="print recurrence terms or rising powers")
    _add_spec_flags(seq)
    seq.add_argument("--from", dest="start", type=int, required=True, help="first index")
    seq.add_argument("--to", dest="stop", type=int, required=True, help="last index (inclusive)")
    seq.add_argument("--rising", type=int, help="print rising powers of this length instead")
    seq.set_defaults(handler=_cmd_seq)

    det = commands.add_parser("det", help="determinant of one built matrix")
    _add_spec_flags(det)
    det.add_argument("--n", type=int, required=True, help="base index")
    det.add_argument("--r", type=int, required=True, help="power length")
    det.add_argument("--d", type=int, required=True, help="matrix dimension")
    det.add_argument("--mode", choices=MODES, default=RISING)
    det.add_argument("--algorithm", choices=sorted(_ALGORITHMS), default="bareiss")
    det.add_argument("--stats", action="store_true", help="also print the JSON operation report")
    det.set_defaults(handler=_cmd_det)

    closed = commands.add_parser("closed", help="evaluate one closed form at a point")
    _add_spec_flags(closed)
    closed.add_argument("--identity", choices=[i for i in IDENTITIES if i != "desnanot-jacobi-random"], required=True)
    closed.add_argument("--n", type=int, required=True)
    closed.add_argument("--r", type=int)
    closed.add_argument("--d", type=int)
    closed.add_argument("--i", type=int)
    closed.add_argument("--j", type=int)
    closed.set_defaults(handler=_cmd_closed)

    verify = commands.add_parser("verify", help="sweep a grid, print the JSON report")
    _add_spec_flags(verify)
    verify.add_argument("--identity", choices=IDENTITIES, required=True)
    verify.add_argument("--n", type=_parse_range, help="inclusive range lo..hi")
    verify.add_argument("--r", type=_parse_range, help="inclusive range lo..hi")
    verify.add_argument("--d", type=_parse_range, help="inclusive range lo..hi")
    verify.add_argument("--i", type=_parse_range, help="inclusive range lo..hi")
    verify.add_argument("--j", type=_parse_range, help="inclusive range lo..hi")
    verify.add_argument("--oracle", choices=ORACLES, default="bareiss")
    verify.add_argument("--seed", type=int, default=1, help="random grids only")
    verify.add_argument("--count", type=int, default=100, help="random grids only")
    verify.add_argument("--dim", type=int, default=4, help="random grids only")
    verify.add_argument("--bound", type=int, default=9, help="random grids only")
    verify.set_defaults(handler=_cmd_verify)

    bench = commands.add_parser("bench", help="operation-count/time CSV over a grid")
    _add_spec_flags(bench)
    bench.add_argument("--n", type=_parse_range, default=(1, 1), help="inclusive range lo..hi")
    bench.add_argument("--r", type=_parse_range, required=True, help="inclusive range lo..hi")
    bench.add_argument("--d", type=_parse_range, required=True, help="inclusive range lo..hi")
    bench.add_argument(
        "--algorithms",
        default="bareiss,condensation,closed",
        help="comma-separated subset of " + ",".join(_BENCH_ALGORITHMS),
    )
    bench.add_argument("--out", default="-", help="CSV path, - for stdout")
    bench.set_defaults(handler=_cmd_bench)

    return parser


def _cmd_seq(args: argparse.Namespace) -> int:
    if args.start > args.stop:
        raise ValueError("--from must not exceed --to")
    cache = SequenceCache(_spec_from_args(args))
    for k in range(args.start, args.stop + 1):
        value = cache.rising_power(k, args.rising) if args.rising is not None else cache.term(k)
        print(f"{k}\t{value}")
    return 0


def _cmd_det(args: argparse.Namespace) -> int:
    matrix = build(_spec_from_args(args), MatrixQuery(args.n, args.r, args.d, args.mode))
    report = _ALGORITHMS[args.algorithm](matrix)
    print(report.value)
    if args.stats:
        print(
            json.dumps(
                {
                    "value": str(report.value),
                    "algorithm": report.algorithm,
                    "mul_count": report.mul_count,
                    "div_count": report.div_count,
                    "fallback": report.fallback_used,
                }
            )
        )
    return 0


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        flags = ", ".join(f"--{name}" for name in missing)
        raise ValueError(f"identity {args.identity} needs {flags}")


def _cmd_closed(args: argparse.Namespace) -> int:
    identity = args.identity
    if identity == "theorem1":
        _require(args, "r", "d")
        value = theorem1_rhs(args.n, args.r, args.d)
    elif identity == "theorem2":
        _require(args, "r", "d")
        value = theorem2_rhs(_spec_from_args(args), args.n, args.r, args.d)
    elif identity == "prodinger":
        _require(args, "r")
        value = prodinger_rhs(args.n, args.r)
    elif identity == "carlitz":
        _require(args, "r")
        value = carlitz_rhs(args.n, args.r)
    elif identity == "vajda":
        _require(args, "i", "j")
        value = vajda_rhs(args.n, args.i, args.j)
    elif identity == "eq4":
        _require(args, "i", "j")
        value = generalized_vajda_rhs(_spec_from_args(args), args.n, args.i, args.j)
    else:
        _require(args, "r", "d")
        value = hankel_rank_bound_value(_spec_from_args(args), args.n, args.r, args.d)
    print(value)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    grid = GridSpec(
        identity=args.identity,
        n=args.n,
        r=args.r,
        d=args.d,
        i=args.i,
        j=args.j,
        spec=None if args.identity in ("theorem1", "prodinger", "carlitz", "vajda") else _maybe_spec(args),
        domain=args.domain,
        oracle=args.oracle,
        seed=args.seed,
        count=args.count,
        dim=args.dim,
        bound=args.bound,
    )
    report = run_grid(grid)
    print(report_json(report))
    return 0 if report.passed else 1


def _maybe_spec(args: argparse.Namespace) -> Optional[RecurrenceSpec]:
    if args.domain == ring.POLYNOMIAL:
        return None
    return _spec_from_args(args)


def _closed_dispatch(spec: RecurrenceSpec, n: int, r: int, d: int) -> ring.ExactScalar:
    if d > r + 1:
        return hankel_rank_bound_value(spec, n, r, d)
    if spec == preset("fibonacci", spec.domain):
        return theorem1_rhs(n, r, d)
    return theorem2_rhs(spec, n, r, d)


def bench_rows(
    spec: RecurrenceSpec,
    n_range: Tuple[int, int],
    r_range: Tuple[int, int],
    d_range: Tuple[int, int],
    algorithms: Sequence[str],
) -> List[dict]:
    """One row per (algorithm, n, r, d), rising-power mode, sorted."""
    for name in algorithms:
        if name not in _BENCH_ALGORITHMS:
            raise ValueError(f"unknown bench algorithm {name!r}")
    rows = []
    for algorithm in sorted(set(algorithms)):
        for n in range(n_range[0], n_range[1] + 1):
            for r in range(r_range[0], r_range[1] + 1):
                for d in range(d_range[0], d_range[1] + 1):
                    if algorithm == "closed":
                        with ring.count_ops() as counter:
                            started = time.perf_counter_ns()
                            _closed_dispatch(spec, n, r, d)
                            wall = time.perf_counter_ns() - started
                        muls, divs, fallback = counter.muls, counter.divs, False
                    else:
                        matrix = build(spec, MatrixQuery(n, r, d, RISING))
                        started = time.perf_counter_ns()
                        report = _ALGORITHMS[algorithm](matrix)
                        wall = time.perf_counter_ns() - started
                        muls, divs, fallback = report.mul_count, report.div_count, report.fallback_used
                    rows.append(
                        {
                            "algorithm": algorithm,
                            "domain": spec.domain,
                            "n": n,
                            "r": r,
                            "d": d,
                            "mul_count": muls,
                            "div_count": divs,
                            "fallback": "true" if fallback else "false",
                            "wall_ns": wall,
                        }
                    )
    return rows


_BENCH_COLUMNS = ("algorithm", "domain", "n", "r", "d", "mul_count", "div_count", "fallback", "wall_ns")


def write_bench_csv(rows: Sequence[dict], stream: io.TextIOBase) -> None:
    writer = csv.DictWriter(stream, fieldnames=_BENCH_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def _cmd_bench(args: argparse.Namespace) -> int:
    algorithms = [name.strip() for name in args.algorithms.split(",") if name.strip()]
    rows = bench_rows(_spec_from_args(args), args.n, args.r, args.d, algorithms)
    if args.out == "-":
        write_bench_csv(rows, sys.stdout)
    else:
        with open(args.out, "w", newline="") as stream:
            write_bench_csv(rows, stream)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    args = parser.parse_args(_merge_range_values(argv))
    try:
        return args.handler(args)
    except (
        ValueError,
        ZeroDivisionError,
        ring.DomainMismatchError,
        ring.InexactDivisionError,
        ring.NotInvertibleError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
