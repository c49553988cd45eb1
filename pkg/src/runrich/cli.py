"""Command line interface.

Exit status: 0 success, 1 a checked equality failed, 2 usage or input error.
Reports are ``key=value`` lines on stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
from fractions import Fraction
from importlib import resources
from pathlib import Path
import sys

from runrich import codec
from runrich.powers import epsilon_threshold, power_profile, verify_power_formula
from runrich.runs import as_text, count_runs, enumerate_runs
from runrich.search import DEFAULT_THRESHOLD, SearchConfig, beam_search, format_leaderboard, verify_leaderboard

FIXTURES = ("tau1558",)
DECIMALS = 6


class UsageError(Exception):
    pass


def fixture_path(name: str, suffix: str) -> Path:
    return Path(str(resources.files("runrich") / "data" / f"{name}.{suffix}"))


def decimal(x: Fraction, places: int = DECIMALS) -> str:
    """Exact rational rounded half-to-even to a fixed number of places."""
    scaled = round(Fraction(x) * 10**places)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _add_input(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("input (default: stdin)")
    src = g.add_mutually_exclusive_group()
    src.add_argument("--text", help="literal string")
    src.add_argument("--file", type=Path, help="string file")
    src.add_argument("--fixture", choices=FIXTURES, help="bundled string")
    g.add_argument("--format", choices=("raw", "hex"), default="raw", help="file format (default raw)")


def read_input(args, alphabet: bytes | None = None) -> bytes:
    if args.text is not None:
        return codec.parse_raw(args.text, alphabet)
    if args.fixture is not None:
        return codec.load_text(fixture_path(args.fixture, "txt"), "raw", alphabet)
    if args.file is not None:
        w = codec.load_text(args.file, args.format, alphabet)
    elif args.format == "hex":
        w = codec.parse_hex_file(sys.stdin.read())
    else:
        w = codec.parse_raw(sys.stdin.buffer.read(), alphabet)
    return w


def cmd_runs(args) -> int:
    w = read_input(args)
    if args.list:
        for r in enumerate_runs(w):
            print(f"{r.start} {r.length} {r.period}")
    else:
        print(f"runs={count_runs(w)}")
    return 0


def cmd_profile(args) -> int:
    w = read_input(args)
    prof = power_profile(w)
    print(
        f"n={prof.length} r1={prof.r1} r2={prof.r2} r3={prof.r3} "
        f"A={prof.growth} B={prof.offset} alpha={fraction(prof.alpha)} alpha_decimal={decimal(prof.alpha)}"
    )
    if args.eps is not None:
        eps = Fraction(args.eps)
        print(f"eps={fraction(eps)} N={epsilon_threshold(prof, eps)}")
    return 0


def cmd_verify(args) -> int:
    if (args.manifest is None) == (args.bundled is None):
        raise UsageError("give exactly one of MANIFEST or --bundled")
    path = args.manifest or fixture_path(args.bundled, "manifest")
    manifest = codec.load_manifest(path)
    source = str(args.file) if args.file is not None else None
    w = manifest.load(source, args.format if source is not None else None)

    claims = [("length", manifest.length, lambda: len(w))]
    counts: dict[int, int] = {}

    def runs_of(k):
        if k not in counts:
            counts[k] = count_runs(as_text(w) * k)
        return counts[k]

    claims += [
        ("r1", manifest.r1, lambda: runs_of(1)),
        ("r2", manifest.r2, lambda: runs_of(2)),
        ("r3", manifest.r3, lambda: runs_of(3)),
        ("A", manifest.growth, lambda: runs_of(3) - runs_of(2)),
        ("B", manifest.offset, lambda: 2 * runs_of(3) - 3 * runs_of(2)),
        ("alpha", manifest.alpha, lambda: Fraction(runs_of(3) - runs_of(2), len(w))),
    ]
    failed = 0
    for name, expected, compute in claims:
        if expected is None:
            continue
        actual = compute()
        ok = expected == actual
        failed += not ok
        if isinstance(expected, Fraction):
            shown = f"expected={fraction(expected)} actual={fraction(actual)} actual_decimal={decimal(actual)}"
        else:
            shown = f"expected={expected} actual={actual}"
        print(f"{'PASS' if ok else 'FAIL'} {name} {shown}")
    print(f"result={'FAIL' if failed else 'PASS'} failed={failed}")
    return 1 if failed else 0


def cmd_formula(args) -> int:
    w = read_input(args)
    report = verify_power_formula(w, args.kmax)
    p = report.profile
    print(f"n={p.length} A={p.growth} B={p.offset}")
    for row in report.rows:
        print(f"k={row.k} predicted={row.predicted} actual={row.actual} match={'yes' if row.match else 'no'}")
    print(f"result={'PASS' if report.ok else 'FAIL'}")
    if args.plot:
        from runrich.plotting import plot_formula

        plot_formula(report, args.plot)
    return 0 if report.ok else 1


def cmd_search(args) -> int:
    config = SearchConfig(
        buffer_size=args.buffer,
        max_length=args.maxlen,
        record_threshold=Fraction(args.threshold),
        canonicalize_complement=not args.no_canonical,
        keep=args.keep,
        workers=args.workers,
    )
    board = beam_search(config, progress=None if args.quiet else sys.stderr)
    text = format_leaderboard(board.entries)
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text)
        best = board.best
        print(f"entries={len(board.entries)} best_alpha={'-' if best is None else fraction(best.alpha)}")
    if args.plot:
        from runrich.plotting import plot_search_history

        plot_search_history(board.history, args.plot, config.record_threshold)
    if args.verify:
        problems = verify_leaderboard(board.entries)
        for m in problems:
            print(f"FAIL entry={m.index} {m.reason}", file=sys.stderr)
        if problems:
            return 1
    return 0


def cmd_hex(args) -> int:
    if args.decode:
        if args.text is not None:
            if args.length is None:
                raise UsageError("--decode --text needs --length")
            w = codec.decode_hex(args.text, args.length)
        elif args.file is not None:
            w = codec.load_text(args.file, "hex")
        elif args.fixture is not None:
            w = codec.load_text(fixture_path(args.fixture, "hex"), "hex")
        else:
            w = codec.parse_hex_file(sys.stdin.read())
        print(w.decode())
    else:
        w = read_input(args, codec.BINARY)
        sys.stdout.write(codec.format_hex_file(codec.encode_hex(w)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="runrich", description="Runs (maximal repetitions) in strings and their powers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("runs", help="count or list the runs of a string")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print runs=<k> (default)")
    mode.add_argument("--list", action="store_true", help="print one '<start> <length> <period>' line per run")
    _add_input(p)
    p.set_defaults(func=cmd_runs)

    p = sub.add_parser("profile", help="run counts of w, w^2, w^3 and the ratio they give")
    p.add_argument("--eps", help="also print the length threshold N for this epsilon (e.g. 1/100)")
    _add_input(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("verify", help="check a claim manifest")
    p.add_argument("manifest", nargs="?", type=Path)
    p.add_argument("--bundled", choices=FIXTURES, help="use a bundled manifest")
    p.add_argument("--file", type=Path, help="string file overriding the manifest source")
    p.add_argument("--format", choices=("raw", "hex"), default="raw")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("formula", help="compare run(w^k) with A k - B")
    p.add_argument("--kmax", type=int, default=5)
    p.add_argument("--plot", type=Path, help="write a figure to this path")
    _add_input(p)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("search", help="beam search for run-rich binary strings")
    p.add_argument("--buffer", type=int, default=100)
    p.add_argument("--maxlen", type=int, default=60)
    p.add_argument("--threshold", default=str(DEFAULT_THRESHOLD), help="record strings whose ratio exceeds this")
    p.add_argument("--keep", type=int, default=100, help="leaderboard capacity")
    p.add_argument("--workers", type=int, default=1, help="scoring processes")
    p.add_argument("--no-canonical", action="store_true", help="do not merge complementary strings")
    p.add_argument("--out", type=Path, help="leaderboard file (default stdout)")
    p.add_argument("--plot", type=Path, help="write a progress figure to this path")
    p.add_argument("--verify", action="store_true", help="recompute every leaderboard entry before exiting")
    p.add_argument("--quiet", action="store_true", help="no per-round progress on stderr")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("hex", help="convert between binary strings and hex files")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--encode", action="store_true")
    mode.add_argument("--decode", action="store_true")
    p.add_argument("--length", type=int, help="symbol count for --decode --text")
    _add_input(p)
    p.set_defaults(func=cmd_hex)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
