"""Command-line interface: ``dodgson-young <subcommand> ...``.

Exit status is 0 on success, 3 when the requested score is UNSCORABLE, 1 on
errors (a JSON object with ``error`` and ``type`` goes to stderr) and 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .ballots import format_native, parse_profile, write_native
from .bench import BenchConfig, run_benchmark
from .edits import format_witness
from .exact import OracleInfeasible
from .generate import generate_impartial_culture
from .greedy import UNSCORABLE, greedy_score
from .profile import pairwise_tally, total_deficit
from .rules import compare_results, exact_report, score_all, single_winner
from .validation import check_candidate

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNSCORABLE = 3


class UsageError(Exception):
    pass


def _profile_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", help="ballot file")
    p.add_argument("--input-format", choices=("native", "soc"), default=None,
                   help="default: soc for .soc files, else native")


def _scoring_args(p: argparse.ArgumentParser, mode: bool = True) -> None:
    p.add_argument("--rule", choices=("dodgson", "young"), default="dodgson")
    if mode:
        p.add_argument("--mode", choices=("greedy", "exact"), default="greedy")
    p.add_argument("--convention", choices=("strict", "weak"), default="strict")
    p.add_argument("--engine", choices=("queue", "naive"), default=None,
                   help="greedy engine (default: queue)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--witness", action="store_true", help="also print the edit sequence")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dodgson-young",
        description="Greedy and exact Dodgson/Young scores for ranked ballots.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", help="score one candidate")
    _profile_args(p)
    p.add_argument("--candidate", type=int, required=True)
    _scoring_args(p)

    p = sub.add_parser("rank", help="score and rank all candidates")
    _profile_args(p)
    _scoring_args(p)

    p = sub.add_parser("winner", help="print the winning candidate(s)")
    _profile_args(p)
    _scoring_args(p)
    p.add_argument("--tiebreak", choices=("none", "lexicographic"), default="none",
                   help="'lexicographic' prints a single winner (smallest id)")

    p = sub.add_parser("tideman", help="total deficit of one candidate")
    _profile_args(p)
    p.add_argument("--candidate", type=int, required=True)
    p.add_argument("--convention", choices=("strict", "weak"), default="strict")

    p = sub.add_parser("compare", help="greedy versus exact on one profile")
    _profile_args(p)
    _scoring_args(p, mode=False)

    p = sub.add_parser("gen", help="generate an impartial-culture profile")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("bench", help="run a benchmark from a YAML/JSON config")
    p.add_argument("--config", required=True)
    return parser


def _engine(args) -> str:
    if getattr(args, "mode", "greedy") == "exact" and args.engine is not None:
        raise UsageError("--engine only applies to --mode greedy")
    return args.engine or "queue"


def _fmt(score) -> str:
    return "UNSCORABLE" if score == UNSCORABLE else str(score)


def _cmd_score(args, out) -> int:
    profile = parse_profile(args.file, args.input_format)
    c = check_candidate(args.candidate, profile.m)
    engine = _engine(args)
    if args.mode == "greedy":
        report = greedy_score(profile, c, args.rule, args.convention, engine)
    else:
        report = exact_report(profile, c, args.rule, args.convention)
    if args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        out.write(_fmt(report.score) + "\n")
        if args.witness:
            out.write(format_witness(report.witness))
    return EXIT_OK if report.scorable else EXIT_UNSCORABLE


def _cmd_rank(args, out, winner_only: bool = False) -> int:
    profile = parse_profile(args.file, args.input_format)
    result = score_all(profile, args.rule, args.mode, args.convention, _engine(args))
    all_unscorable = all(not r.scorable for r in result.reports)
    if winner_only:
        if args.tiebreak == "lexicographic":
            winners = [single_winner(result)]
        else:
            winners = list(result.winner_set)
        if args.format == "json":
            out.write(json.dumps({"winner_set": winners,
                                  "score": _fmt(result.report(winners[0]).score)}) + "\n")
        else:
            out.write(" ".join(map(str, winners)) + "\n")
    elif args.format == "json":
        out.write(json.dumps(result.to_dict(), sort_keys=True) + "\n")
    else:
        for group in result.ranking:
            score = _fmt(result.report(group[0]).score)
            out.write(f"{score}\t{' '.join(map(str, group))}\n")
        if args.witness:
            for r in result.reports:
                out.write(f"# witness for candidate {r.candidate}\n")
                out.write(format_witness(r.witness))
    return EXIT_UNSCORABLE if all_unscorable else EXIT_OK


def _cmd_tideman(args, out) -> int:
    profile = parse_profile(args.file, args.input_format)
    c = check_candidate(args.candidate, profile.m)
    out.write(f"{total_deficit(pairwise_tally(profile), c, args.convention)}\n")
    return EXIT_OK


def _cmd_compare(args, out) -> int:
    profile = parse_profile(args.file, args.input_format)
    engine = args.engine or "queue"
    greedy = score_all(profile, args.rule, "greedy", args.convention, engine)
    exact = score_all(profile, args.rule, "exact", args.convention)
    record = compare_results(greedy, exact)
    if args.format == "json":
        payload = record.to_dict()
        payload["ratios"] = {c: ("inf" if r == UNSCORABLE else r)
                             for c, r in payload["ratios"].items()}
        if payload["max_ratio"] == UNSCORABLE:
            payload["max_ratio"] = "inf"
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write("candidate\tgreedy\texact\tratio\n")
        for g, e in zip(greedy.reports, exact.reports):
            out.write(f"{g.candidate}\t{_fmt(g.score)}\t{_fmt(e.score)}\t"
                      f"{record.ratios[g.candidate]:.4f}\n")
        out.write(f"winner_agreement\t{record.winner_agreement}\n")
        out.write(f"ranking_agreement\t{record.ranking_agreement}\n")
    return EXIT_OK


def _cmd_gen(args, out) -> int:
    profile = generate_impartial_culture(args.m, args.n, args.seed)
    if args.out:
        write_native(profile, args.out)
    else:
        out.write(format_native(profile))
    return EXIT_OK


def _cmd_bench(args, out) -> int:
    report = run_benchmark(BenchConfig.from_file(args.config))
    out.write(json.dumps(report.summary, indent=2) + "\n")
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    handlers = {
        "score": _cmd_score,
        "rank": _cmd_rank,
        "winner": lambda a, o: _cmd_rank(a, o, winner_only=True),
        "tideman": _cmd_tideman,
        "compare": _cmd_compare,
        "gen": _cmd_gen,
        "bench": _cmd_bench,
    }
    try:
        return handlers[args.command](args, out)
    except UsageError as exc:
        err.write(json.dumps({"error": str(exc), "type": "usage"}) + "\n")
        return 2
    except (OSError, ValueError, OracleInfeasible) as exc:
        err.write(json.dumps({"error": str(exc), "type": type(exc).__name__}) + "\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
