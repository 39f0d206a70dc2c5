"""Command-line front-end.

Subcommands: ``check`` (decide one file), ``random`` (emit random automata),
``diff`` (compare both deciders over generated automata), ``semigroup``
(export the transition semigroup as a Cayley matrix).

Exit statuses for ``check``: 0 = locally threshold testable, 1 = not,
2 = error (parse failure, capacity), 3 = the two deciders disagree.
``diff`` exits 0 iff no disagreement was seen.  ``LTTCHECK_CAP`` overrides
the default semigroup element cap; ``LTTCHECK_BACKEND`` picks the condition
kernel implementation (``python``, ``compiled``, or ``auto``).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import _kernels
from .automaton import (
    AutomatonParseError,
    complete_with_sink,
    parse_automaton,
    serialize_automaton,
)
from .checker import check_ltt_detailed
from .difftest import exhaustive_stream, random_stream, run_diff
from .generate import XorShift64Star, random_complete_automaton
from .report import DeciderReport, RunReport
from .semigroup import (
    DEFAULT_CAP,
    CayleyParseError,
    SemigroupCapacityError,
    abstract_semigroup_verdict,
    build_semigroup,
    parse_cayley,
    semigroup_check_detailed,
    serialize_cayley,
)

__all__ = ["main"]

EXIT_LTT = 0
EXIT_NOT_LTT = 1
EXIT_ERROR = 2
EXIT_DISAGREE = 3


class CliError(Exception):
    pass


def _default_cap() -> int:
    raw = os.environ.get("LTTCHECK_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
        if cap < 1:
            raise ValueError
    except ValueError:
        raise CliError(f"LTTCHECK_CAP must be a positive integer, got {raw!r}") from None
    return cap


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as err:
        raise CliError(str(err)) from None


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as err:
        raise CliError(str(err)) from None


def _cmd_check(args) -> int:
    if args.cayley:
        return _check_cayley(args)
    text = _read_text(args.file)
    ca = complete_with_sink(parse_automaton(text))
    deciders = []
    if args.mode in ("graph", "both"):
        run = check_ltt_detailed(ca, args.backend)
        stats = dict(run.peaks)
        if run.table is not None:
            stats["table_defined"] = run.table.defined_count()
        deciders.append(
            DeciderReport.from_verdict("graph", run.verdict, run.timings, stats)
        )
    if args.mode in ("semigroup", "both"):
        verdict, times, stats = semigroup_check_detailed(ca, args.cap)
        deciders.append(DeciderReport.from_verdict("semigroup", verdict, times, stats))
    report = RunReport(
        args.file, ca.n_states, ca.n_labels, ca.sink_added, tuple(deciders)
    )
    sys.stdout.write(report.to_text())
    return report.exit_status


def _check_cayley(args) -> int:
    if args.mode == "graph":
        raise CliError("--cayley input has no transition graph; use --mode semigroup")
    sg = parse_cayley(_read_text(args.file))
    verdict = abstract_semigroup_verdict(sg)
    lines = [
        f"# semigroup: {verdict.describe()}",
        f"source={args.file}",
        f"elements={sg.size}",
        f"generators={len(sg.gen_elements)}",
        f"is_ltt={int(verdict.is_ltt)}",
        f"failed_condition={verdict.failed_condition or '-'}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_LTT if verdict.is_ltt else EXIT_NOT_LTT


def _cmd_random(args) -> int:
    if args.n < 1 or args.g < 1 or args.count < 0:
        raise CliError("need --n >= 1, --g >= 1, --count >= 0")
    rng = XorShift64Star(args.seed)
    for i in range(args.count):
        a = random_complete_automaton(args.n, args.g, rng)
        text = serialize_automaton(a)
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            name = f"random_n{args.n}_g{args.g}_s{args.seed}_{i:04d}.txt"
            path = os.path.join(args.out, name)
            _write_text(path, text)
            print(path)
        else:
            print(f"# automaton {i}")
            sys.stdout.write(text)
    return 0


def _cmd_diff(args) -> int:
    if args.exhaustive:
        stream = exhaustive_stream(args.n_max, args.g_max)
    else:
        stream = random_stream(args.n_max, args.g_max, args.trials, args.seed)
    summary = run_diff(stream, args.cap, args.backend, args.dump_dir)
    mode = "exhaustive" if args.exhaustive else f"random seed={args.seed}"
    print(f"# diff {mode} n_max={args.n_max} g_max={args.g_max}")
    for line in summary.to_lines():
        print(line)
    for d in summary.disagreements:
        print(f"# disagreement at trial {d.index}:")
        print(f"#   graph: {d.graph_verdict.describe()}")
        print(f"#   semigroup: {d.semigroup_verdict.describe()}")
        for row in serialize_automaton(d.automaton).splitlines():
            print(f"#   {row}")
    return 0 if summary.ok else 1


def _cmd_semigroup(args) -> int:
    text = _read_text(args.file)
    ca = complete_with_sink(parse_automaton(text))
    sg = build_semigroup(ca, args.cap)
    _write_text(args.out, serialize_cayley(sg))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lttcheck",
        description="Decide local threshold testability of finite automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide one automaton file")
    p.add_argument("file", help="automaton file, or - for stdin")
    p.add_argument("--mode", choices=("graph", "semigroup", "both"), default="graph")
    p.add_argument("--cap", type=int, default=None, help="semigroup element cap")
    p.add_argument("--backend", choices=_kernels.available_backends(), default=None)
    p.add_argument(
        "--cayley", action="store_true",
        help="input is a Cayley matrix; run the semigroup checks on it",
    )
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("random", help="generate random complete automata")
    p.add_argument("--n", type=int, required=True, help="number of states")
    p.add_argument("--g", type=int, required=True, help="number of labels")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write one file per automaton into this directory")
    p.set_defaults(func=_cmd_random)

    p = sub.add_parser("diff", help="compare the two deciders over many automata")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--g-max", type=int, default=2)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--exhaustive", action="store_true",
        help="all automata with n <= n-max and g <= g-max instead of random trials",
    )
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--backend", choices=_kernels.available_backends(), default=None)
    p.add_argument("--dump-dir", help="write each disagreeing automaton here")
    p.set_defaults(func=_cmd_diff)

    p = sub.add_parser("semigroup", help="export the transition semigroup")
    p.add_argument("file", help="automaton file, or - for stdin")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=_cmd_semigroup)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "cap", None) is None and hasattr(args, "cap"):
            args.cap = _default_cap()
        return args.func(args)
    except (AutomatonParseError, CayleyParseError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR
    except SemigroupCapacityError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
