"""Score every candidate, rank them, and compare two election outcomes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from .exact import OracleInfeasible, exact_dodgson, exact_young
from .greedy import UNSCORABLE, ScoreReport, greedy_score
from .profile import Profile, TieConvention
from .validation import MODES, RULES, check_choice


@dataclass(frozen=True)
class ElectionResult:
    reports: tuple[ScoreReport, ...]
    ranking: tuple[tuple[int, ...], ...]
    winner_set: tuple[int, ...]

    @property
    def scores(self) -> dict[int, Union[int, float]]:
        return {r.candidate: r.score for r in self.reports}

    def report(self, c: int) -> ScoreReport:
        return self.reports[c - 1]

    def to_dict(self) -> dict:
        return {
            "scores": {str(c): (s if s != UNSCORABLE else "UNSCORABLE")
                       for c, s in self.scores.items()},
            "ranking": [list(g) for g in self.ranking],
            "winner_set": list(self.winner_set),
            "reports": [r.to_dict() for r in self.reports],
        }


def exact_report(profile: Profile, c: int, rule: str,
                 tc: TieConvention | str = TieConvention.STRICT) -> ScoreReport:
    """Wrap an exact oracle result as a :class:`ScoreReport` (empty move log)."""
    tc = TieConvention.coerce(tc)
    try:
        if rule == "dodgson":
            score, witness = exact_dodgson(profile, c, tc)
        else:
            score, witness = exact_young(profile, c, tc)
    except OracleInfeasible as exc:
        raise OracleInfeasible(f"candidate {c}: {exc}") from exc
    return ScoreReport(c, score, witness, (), rule, tc, "exact")


def rank_by_score(reports) -> tuple[tuple[int, ...], ...]:
    """Group candidates by equal score, ascending; UNSCORABLE sorts last."""
    groups: dict = {}
    for r in reports:
        groups.setdefault(r.score, []).append(r.candidate)
    return tuple(tuple(sorted(groups[s])) for s in sorted(groups))


def score_all(profile: Profile, rule: str = "dodgson", mode: str = "greedy",
              tc: TieConvention | str = TieConvention.STRICT,
              engine: str = "queue") -> ElectionResult:
    rule = check_choice(rule, RULES, "rule")
    mode = check_choice(mode, MODES, "mode")
    tc = TieConvention.coerce(tc)
    if mode == "greedy":
        reports = tuple(greedy_score(profile, c, rule, tc, engine) for c in profile.candidates)
    else:
        reports = tuple(exact_report(profile, c, rule, tc) for c in profile.candidates)
    ranking = rank_by_score(reports)
    return ElectionResult(reports, ranking, ranking[0])


def single_winner(result: ElectionResult, tiebreak: str = "lexicographic") -> Optional[int]:
    """One winner; ties go to the smallest candidate id unless ``tiebreak='none'``."""
    if tiebreak == "none":
        return result.winner_set[0] if len(result.winner_set) == 1 else None
    if tiebreak != "lexicographic":
        raise ValueError(f"unknown tiebreak {tiebreak!r}")
    return min(result.winner_set)


def score_ratio(approx: Union[int, float], exact: Union[int, float]) -> float:
    """approx / exact, with 0/0 and UNSCORABLE/UNSCORABLE counted as equal."""
    if approx == exact:
        return 1.0
    if exact == 0 or exact == UNSCORABLE:
        return math.inf
    return approx / exact


@dataclass(frozen=True)
class ComparisonRecord:
    winner_agreement: bool
    ranking_agreement: bool
    ratios: dict
    max_ratio: float

    def to_dict(self) -> dict:
        return {
            "winner_agreement": self.winner_agreement,
            "ranking_agreement": self.ranking_agreement,
            "ratios": {str(c): r for c, r in self.ratios.items()},
            "max_ratio": self.max_ratio,
        }


def compare_results(a: ElectionResult, b: ElectionResult) -> ComparisonRecord:
    """Compare ``a`` (typically greedy) against ``b`` (typically exact)."""
    if len(a.reports) != len(b.reports):
        raise ValueError(f"candidate counts differ: {len(a.reports)} vs {len(b.reports)}")
    ratios = {ra.candidate: score_ratio(ra.score, rb.score)
              for ra, rb in zip(a.reports, b.reports)}
    return ComparisonRecord(
        winner_agreement=set(a.winner_set) == set(b.winner_set),
        ranking_agreement=a.ranking == b.ranking,
        ratios=ratios,
        max_ratio=max(ratios.values()) if ratios else 1.0,
    )
