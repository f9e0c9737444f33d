"""Benchmark harness: greedy versus exact scores on seeded random profiles.

Each trial draws an impartial-culture profile, scores every candidate with
both the greedy rule and the exact oracle, and writes one CSV row per
candidate.  Trials whose exact oracle would exceed its budget are counted in
``skipped_cells`` and produce no rows.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import yaml

from .ballots import parse_profile
from .exact import DEFAULT_NODE_BUDGET, DEFAULT_YOUNG_CAP, OracleInfeasible, exact_dodgson, exact_young
from .generate import derive_seed, generate_impartial_culture
from .greedy import UNSCORABLE, ScoreReport, greedy_score
from .profile import Profile, TieConvention
from .rules import rank_by_score, score_ratio
from .validation import ENGINES, RULES, check_choice

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("m", "n", "seed", "candidate", "exact_score", "greedy_score", "ratio",
               "greedy_runtime", "oracle_runtime", "winner_agreement")
RUNTIME_COLUMNS = ("greedy_runtime", "oracle_runtime")


@dataclass
class BenchConfig:
    rule: str = "dodgson"
    convention: str = "strict"
    m_range: tuple[int, int] = (2, 6)
    n_range: tuple[int, int] = (1, 7)
    trials: int = 10
    seed: int = 0
    engines: tuple[str, ...] = ("queue",)
    csv_path: Optional[str] = None
    summary_path: Optional[str] = None
    profiles: tuple[str, ...] = ()
    node_budget: int = DEFAULT_NODE_BUDGET
    young_cap: int = DEFAULT_YOUNG_CAP

    def __post_init__(self):
        self.rule = check_choice(self.rule, RULES, "rule")
        self.convention = TieConvention.coerce(self.convention).value
        self.m_range = tuple(self.m_range)
        self.n_range = tuple(self.n_range)
        self.engines = tuple(check_choice(e, ENGINES, "engine") for e in self.engines)
        self.profiles = tuple(self.profiles)
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")
        for name, (lo, hi) in (("m_range", self.m_range), ("n_range", self.n_range)):
            if lo < 1 or hi < lo:
                raise ValueError(f"{name} must satisfy 1 <= lo <= hi, got {(lo, hi)}")
        if not self.engines:
            raise ValueError("need at least one engine")

    @classmethod
    def from_file(cls, path) -> "BenchConfig":
        """Load a YAML or JSON mapping of the dataclass fields."""
        data = yaml.safe_load(Path(path).read_text()) or {}
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
        return cls(**data)


@dataclass
class BenchReport:
    rows: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def csv_text(self, include_runtime: bool = True) -> str:
        cols = [c for c in CSV_COLUMNS if include_runtime or c not in RUNTIME_COLUMNS]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.rows)
        return buf.getvalue()


def _fmt_score(s) -> str:
    return "UNSCORABLE" if s == UNSCORABLE else str(s)


def _fmt_ratio(r: float) -> str:
    return "inf" if r == math.inf else f"{r:.6f}"


def _instances(config: BenchConfig):
    for path in config.profiles:
        yield "", parse_profile(path)
    for m in range(config.m_range[0], config.m_range[1] + 1):
        for n in range(config.n_range[0], config.n_range[1] + 1):
            for t in range(config.trials):
                seed = derive_seed(config.seed, m, n, t)
                yield seed, generate_impartial_culture(m, n, seed)


def _exact(profile: Profile, c: int, config: BenchConfig):
    if config.rule == "dodgson":
        return exact_dodgson(profile, c, config.convention, node_budget=config.node_budget)[0]
    return exact_young(profile, c, config.convention, max_voters=config.young_cap)[0]


def bound(m: int) -> float:
    return 1.0 + math.log(m)


def run_trial(profile: Profile, config: BenchConfig):
    """Rows for one profile, or ``None`` when the exact oracle is infeasible."""
    rows, greedy_reports, exact_scores = [], [], {}
    for c in profile.candidates:
        t0 = time.perf_counter()
        try:
            exact = _exact(profile, c, config)
        except OracleInfeasible as exc:
            logger.info("skipping profile: %s", exc)
            return None
        t1 = time.perf_counter()
        report = greedy_score(profile, c, config.rule, config.convention, config.engines[0])
        t2 = time.perf_counter()
        for other in config.engines[1:]:
            twin = greedy_score(profile, c, config.rule, config.convention, other)
            if twin != report:
                raise AssertionError(f"engines {config.engines[0]} and {other} disagree "
                                     f"on candidate {c}")
        exact_scores[c] = exact
        greedy_reports.append(report)
        rows.append({"candidate": c, "exact": exact, "greedy": report.score,
                     "greedy_runtime": t2 - t1, "oracle_runtime": t1 - t0})
    greedy_rank = rank_by_score(greedy_reports)
    exact_rank = rank_by_score(
        ScoreReport(c, s, (), (), config.rule, TieConvention(config.convention))
        for c, s in exact_scores.items())
    return rows, greedy_rank[0] == exact_rank[0], greedy_rank == exact_rank


def run_benchmark(config: BenchConfig) -> BenchReport:
    report = BenchReport()
    ratios, violations, skipped, trials = [], 0, 0, 0
    winner_hits = ranking_hits = 0
    for seed, profile in _instances(config):
        outcome = run_trial(profile, config)
        if outcome is None:
            skipped += 1
            continue
        rows, winners_agree, ranking_agree = outcome
        trials += 1
        winner_hits += winners_agree
        ranking_hits += ranking_agree
        for r in rows:
            ratio = score_ratio(r["greedy"], r["exact"])
            ratios.append(ratio)
            if r["exact"] != UNSCORABLE and r["greedy"] > bound(profile.m) * r["exact"] + 1e-9:
                violations += 1
            report.rows.append({
                "m": profile.m, "n": profile.n_live, "seed": seed,
                "candidate": r["candidate"],
                "exact_score": _fmt_score(r["exact"]),
                "greedy_score": _fmt_score(r["greedy"]),
                "ratio": _fmt_ratio(ratio),
                "greedy_runtime": f"{r['greedy_runtime']:.6e}",
                "oracle_runtime": f"{r['oracle_runtime']:.6e}",
                "winner_agreement": int(winners_agree),
            })
    finite = [r for r in ratios if r != math.inf]
    report.summary = {
        "rule": config.rule,
        "convention": config.convention,
        "trials": trials,
        "rows": len(report.rows),
        "mean_ratio": sum(finite) / len(finite) if finite else None,
        "max_ratio": (_fmt_ratio(max(ratios)) if math.inf in ratios
                      else (max(ratios) if ratios else None)),
        "bound_violations": violations,
        "winner_agreement": winner_hits / trials if trials else None,
        "ranking_agreement": ranking_hits / trials if trials else None,
        "skipped_cells": skipped,
    }
    if config.csv_path:
        Path(config.csv_path).write_text(report.csv_text())
    if config.summary_path:
        Path(config.summary_path).write_text(json.dumps(report.summary, indent=2) + "\n")
    return report
