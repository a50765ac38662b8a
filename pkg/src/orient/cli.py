"""Command-line front end: ``orient <command> ...``.

Exit codes: 0 success, 1 usage or parse error, 2 budget exceeded,
3 internal cross-check mismatch, 4 the sweep found violations.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from orient import __version__
from orient.census import CrossCheckError, run_enumerate
from orient.mappings import (
    ParseError,
    Transformation,
    is_orientation_preserving,
    is_orientation_reversing,
    mapping_orientation,
    parse_naturals,
    rank_of,
)
from orient.report import render_csv, render_json, render_plain
from orient.sequences import (
    cyclic_ascent_count,
    cyclic_descent_count,
    is_anticyclic_by_count,
    is_cyclic_by_count,
    orientation,
    rank,
)
from orient.triples import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    find_rank2_counterexamples,
    is_determined_by_triples,
    predicted_orientation_from_triples,
    subsequence_closure_check,
    verify_theorem3,
)

log = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_CROSSCHECK, EXIT_VIOLATIONS = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    bounds: dict = field(default_factory=dict)
    output_format: str = "json"
    budget: int = DEFAULT_BUDGET
    parallelism: int = 1
    samples: int = 3

    def to_dict(self) -> dict:
        # parallelism is left out so reports are identical across --jobs
        d = {"bounds": self.bounds, "format": self.output_format, "budget": self.budget}
        if self.command == "enumerate":
            d["samples"] = self.samples
        return d


# -- command bodies ----------------------------------------------------------


def run_classify(seq_text: str) -> dict:
    s = parse_naturals(seq_text)
    sort = orientation(s)
    if (sort.admits_cyclic, sort.admits_anticyclic) != (
        is_cyclic_by_count(s),
        is_anticyclic_by_count(s),
    ):
        raise CrossCheckError(f"recursive and counting classifiers disagree on {s}")
    record = {
        "sequence": list(s),
        "orientation": sort.value,
        "rank": rank(s),
        "cyclic_descents": cyclic_descent_count(s),
        "cyclic_ascents": cyclic_ascent_count(s),
    }
    if len(s) >= 3:
        record["predicted_from_triples"] = predicted_orientation_from_triples(s).value
        record["determined_by_triples"] = is_determined_by_triples(s)
    return record


def run_classify_map(tuple_text: str) -> dict:
    images = parse_naturals(tuple_text)
    try:
        f = Transformation(images)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return {
        "mapping": list(f.images),
        "n": f.n,
        "orientation": mapping_orientation(f).value,
        "orientation_preserving": is_orientation_preserving(f),
        "orientation_reversing": is_orientation_reversing(f),
        "rank": rank_of(f),
    }


def run_verify(max_length: int, alphabet_size: int, budget: int, jobs: int = 1) -> dict:
    if max_length < 3:
        raise UsageError("max_length must be at least 3")
    if alphabet_size < 1:
        raise UsageError("alphabet_size must be at least 1")
    return verify_theorem3(max_length, alphabet_size, budget=budget, jobs=jobs).to_dict()


def run_closure_check(max_length: int, alphabet_size: int, budget: int, jobs: int = 1) -> dict:
    if max_length < 1 or alphabet_size < 1:
        raise UsageError("max_length and alphabet_size must be at least 1")
    return subsequence_closure_check(
        max_length, alphabet_size, budget=budget, jobs=jobs
    ).to_dict()


def run_counterexamples(length: int, alphabet_size: int, budget: int) -> dict:
    if length < 3:
        raise UsageError("length must be at least 3")
    if alphabet_size < 1:
        raise UsageError("alphabet_size must be at least 1")
    found = find_rank2_counterexamples(length, alphabet_size, budget=budget)
    return {
        "length": length,
        "alphabet_size": alphabet_size,
        "count": len(found),
        "items": [
            {
                "sequence": list(s),
                "predicted": predicted_orientation_from_triples(s).value,
                "actual": orientation(s).value,
            }
            for s in found
        ],
    }


# -- argument handling -------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    common.add_argument("--budget", type=_positive, default=None,
                        help="max objects per sweep (default: $ORIENT_BUDGET or 10^7)")
    common.add_argument("--jobs", type=_positive, default=1,
                        help="worker processes for sweeps")
    common.add_argument("--samples", type=_natural, default=3,
                        help="example mappings kept per sort by enumerate")

    parser = _Parser(prog="orient", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="classify a sequence")
    p.add_argument("seq", help='comma-separated naturals, e.g. "0,1,0,1"')
    p = sub.add_parser("classify-map", parents=[common], help="classify a mapping of [n]")
    p.add_argument("tuple", help='image tuple, e.g. "1,2,3,0"')
    p = sub.add_parser("enumerate", parents=[common], help="census of all n^n mappings")
    p.add_argument("n", type=_positive)
    for name, helptext in (
        ("verify", "exhaustive check of the all-triples rule"),
        ("closure-check", "exhaustive check of subsequence closure"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("max_length", type=_natural)
        p.add_argument("alphabet", type=_natural)
    p = sub.add_parser("counterexamples", parents=[common],
                       help="mine rank-2 sequences not determined by their triples")
    p.add_argument("length", type=_natural)
    p.add_argument("alphabet", type=_natural)
    return parser


def _resolve_budget(flag: Optional[int]) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("ORIENT_BUDGET")
    if env is None:
        return DEFAULT_BUDGET
    try:
        value = int(env)
    except ValueError:
        raise UsageError(f"ORIENT_BUDGET is not an integer: {env!r}")
    if value < 1:
        raise UsageError(f"ORIENT_BUDGET must be positive: {env!r}")
    return value


def _config(args: argparse.Namespace, budget: int) -> RunConfig:
    cmd = args.command
    if cmd == "classify":
        bounds = {"seq": args.seq}
    elif cmd == "classify-map":
        bounds = {"tuple": args.tuple}
    elif cmd == "enumerate":
        bounds = {"n": args.n}
    elif cmd == "counterexamples":
        bounds = {"length": args.length, "alphabet_size": args.alphabet}
    else:
        bounds = {"max_length": args.max_length, "alphabet_size": args.alphabet}
    return RunConfig(cmd, bounds, args.format, budget, args.jobs, args.samples)


def execute(cfg: RunConfig) -> tuple[object, int]:
    """Run one command; returns the JSON-ready result and the exit code."""
    b = cfg.bounds
    if cfg.command == "classify":
        return run_classify(b["seq"]), EXIT_OK
    if cfg.command == "classify-map":
        return run_classify_map(b["tuple"]), EXIT_OK
    if cfg.command == "enumerate":
        census = run_enumerate(b["n"], budget=cfg.budget, samples=cfg.samples)
        return census.to_dict(), EXIT_OK
    if cfg.command == "counterexamples":
        return run_counterexamples(b["length"], b["alphabet_size"], cfg.budget), EXIT_OK
    runner = run_verify if cfg.command == "verify" else run_closure_check
    result = runner(b["max_length"], b["alphabet_size"], cfg.budget, cfg.parallelism)
    return result, EXIT_OK if not result["violations"] else EXIT_VIOLATIONS


def render(cfg: RunConfig, result) -> str:
    if cfg.output_format == "json":
        return render_json(cfg.command, cfg.to_dict(), result)
    if cfg.output_format == "csv":
        return render_csv(cfg.command, result)
    return render_plain(cfg.command, result)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        cfg = _config(args, _resolve_budget(args.budget))
        result, code = execute(cfg)
    except ParseError as exc:
        print(f"orient: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"orient: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"orient: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CrossCheckError as exc:
        log.error("cross-check failed: %s", exc)
        print(f"orient: internal cross-check mismatch: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    sys.stdout.write(render(cfg, result))
    return code


if __name__ == "__main__":
    sys.exit(main())
