"""Marginal-cost greedy approximations of Dodgson and Young scores.

Each round picks, among all single-voter moves, one with the fewest edits
per deficit reduction and applies it, until the scored candidate has no
deficit left.  For Dodgson a move raises the candidate past the ``k``
candidates directly above it in one ballot; for Young a move deletes one
ballot.

Ties between equal marginal costs are broken by smaller cost, then smaller
voter id, then smaller ``k``.  Two engines implement the same selection:
``naive`` rescans every move each round, ``queue`` keeps each voter's best
move in a heap and only rebuilds it when the set of rivals with a positive
deficit changes.
"""

from __future__ import annotations

import functools
import heapq
import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .edits import Edit, EditSequence, format_witness, raise_swaps
from .profile import Profile, TieConvention
from .validation import ENGINES, RULES, check_candidate, check_choice

UNSCORABLE = math.inf

RAISE = "raise"
DELETE = "delete"


@dataclass(frozen=True)
class Move:
    """A c-normal raise (``k`` places) or a deletion of one ballot."""

    voter: int
    kind: str
    cost: int
    reductions: int
    target_count: Optional[int] = None

    @property
    def tiebreak(self) -> tuple[int, int, int]:
        return (self.cost, self.voter, self.target_count or 0)


@functools.total_ordering
class MarginalCost:
    """Exact ratio of edits to deficit reductions; infinite with no reductions."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: int, denominator: int):
        if numerator < 0 or denominator < 0:
            raise ValueError("marginal cost terms must be nonnegative")
        self.numerator = numerator
        self.denominator = denominator

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    @property
    def value(self) -> Union[Fraction, float]:
        if self.is_infinite:
            return math.inf
        return Fraction(self.numerator, self.denominator)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MarginalCost):
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            return self.is_infinite and other.is_infinite
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __lt__(self, other: "MarginalCost") -> bool:
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return f"MarginalCost({self.numerator}, {self.denominator})"

    def __str__(self) -> str:
        return "inf" if self.is_infinite else f"{self.numerator}/{self.denominator}"


def marginal_cost(move: Move) -> MarginalCost:
    return MarginalCost(move.cost, move.reductions)


@dataclass(frozen=True)
class LoggedMove:
    move: Move
    marginal_cost: MarginalCost
    deficit_after: int


@dataclass(frozen=True)
class ScoreReport:
    """Outcome of scoring one candidate.

    ``score`` is an int, or ``UNSCORABLE`` (``math.inf``) when no sequence of
    the allowed edits makes the candidate a Condorcet winner.  ``engine`` is
    metadata and does not take part in equality.
    """

    candidate: int
    score: Union[int, float]
    witness: EditSequence
    move_log: tuple[LoggedMove, ...]
    rule: str
    convention: TieConvention
    engine: str = field(default="queue", compare=False)

    @property
    def scorable(self) -> bool:
        return self.score != UNSCORABLE

    def to_dict(self, include_engine: bool = True) -> dict:
        out = {
            "candidate": self.candidate,
            "score": self.score if self.scorable else "UNSCORABLE",
            "rule": self.rule,
            "convention": self.convention.value,
            "witness": [str(e) for e in self.witness],
            "moves": [
                {**asdict(entry.move), "marginal_cost": str(entry.marginal_cost),
                 "deficit_after": entry.deficit_after}
                for entry in self.move_log
            ],
        }
        if include_engine:
            out["engine"] = self.engine
        return out

    def to_json(self, include_engine: bool = True) -> str:
        return json.dumps(self.to_dict(include_engine), sort_keys=True)

    def to_text(self) -> str:
        score = self.score if self.scorable else "UNSCORABLE"
        lines = [
            f"candidate: {self.candidate}",
            f"rule: {self.rule}",
            f"convention: {self.convention.value}",
            f"engine: {self.engine}",
            f"score: {score}",
            "witness:",
        ]
        lines += ["  " + line for line in format_witness(self.witness).splitlines()]
        lines.append("moves:")
        for entry in self.move_log:
            mv = entry.move
            k = "-" if mv.target_count is None else mv.target_count
            lines.append(f"  voter={mv.voter} kind={mv.kind} k={k} cost={mv.cost} "
                         f"reductions={mv.reductions} marginal_cost={entry.marginal_cost} "
                         f"deficit={entry.deficit_after}")
        return "\n".join(lines) + "\n"


@functools.lru_cache(maxsize=64)
def _cost_ranks(m: int) -> tuple[np.ndarray, int]:
    """Dense ranks of every ratio cost/reductions with 0 <= both <= m.

    Equal ratios share a rank; reductions == 0 maps to the infinity rank.
    """
    top = max(m, 1)
    pairs = [(k, r) for k in range(top + 1) for r in range(1, top + 1)]
    pairs.sort(key=lambda p: MarginalCost(*p))
    table = np.zeros((top + 1, top + 1), dtype=np.int64)
    rank, prev = -1, None
    for k, r in pairs:
        mc = MarginalCost(k, r)
        if prev is None or mc != prev:
            rank += 1
            prev = mc
        table[k, r] = rank
    inf_rank = rank + 1
    table[:, 0] = inf_rank
    table.setflags(write=False)
    return table, inf_rank


class _State:
    """Private working copy owned by one scoring run."""

    def __init__(self, profile: Profile, c: int, tc: TieConvention):
        self.m = profile.m
        self.c = c - 1
        self.tc = tc
        self.voter_ids = np.array(profile.voters, dtype=np.int64)
        self.row_of = {v: i for i, v in enumerate(profile.voters)}
        self.R = np.array([[x - 1 for x in r] for _, r in profile.items()],
                          dtype=np.int64).reshape(len(self.voter_ids), self.m)
        self.alive = np.ones(len(self.voter_ids), dtype=bool)
        self.pos_c = np.argmax(self.R == self.c, axis=1) if len(self.R) else np.zeros(0, np.int64)
        tally = profile.tally_array()
        # margin[d] = #(d above c) - #(c above d)
        self.margin = (tally[:, self.c] - tally[self.c, :]).astype(np.int64)
        self.positive = self._positive()

    def _positive(self) -> np.ndarray:
        shift = 1 if self.tc is TieConvention.STRICT else 0
        pos = self.margin + shift > 0
        pos[self.c] = False
        return pos

    def deficits(self) -> np.ndarray:
        shift = 1 if self.tc is TieConvention.STRICT else 0
        d = np.maximum(self.margin + shift, 0)
        d[self.c] = 0
        return d

    def total_deficit(self) -> int:
        return int(self.deficits().sum())

    def live_rows(self) -> np.ndarray:
        return np.nonzero(self.alive)[0]

    # move enumeration, one voter at a time
    def raise_moves(self, row: int) -> list[Move]:
        voter = int(self.voter_ids[row])
        p = int(self.pos_c[row])
        ballot = self.R[row]
        moves, red = [], 0
        for k in range(1, p + 1):
            if self.positive[ballot[p - k]]:
                red += 1
            moves.append(Move(voter, RAISE, k, red, k))
        return moves

    def delete_move(self, row: int) -> Move:
        p = int(self.pos_c[row])
        red = int(self.positive[self.R[row, :p]].sum())
        return Move(int(self.voter_ids[row]), DELETE, 1, red)

    # applying moves
    def apply(self, move: Move) -> tuple[list[Edit], bool]:
        """Apply ``move``; return its edits and whether the positive set changed."""
        row = self.row_of[move.voter]
        before = self.positive
        if move.kind == RAISE:
            k = move.target_count
            p = int(self.pos_c[row])
            passed = self.R[row, p - k:p].copy()
            self.R[row, p - k] = self.c
            self.R[row, p - k + 1:p + 1] = passed
            self.margin[passed] -= 2
            self.pos_c[row] = p - k
            edits = raise_swaps(move.voter, self.m - 1 - p, k)
        else:
            p = int(self.pos_c[row])
            sign = np.full(self.m, -1, dtype=np.int64)
            sign[self.R[row, :p]] = 1
            sign[self.c] = 0
            self.margin -= sign
            self.alive[row] = False
            edits = [Edit.delete(move.voter)]
        self.positive = self._positive()
        return edits, not np.array_equal(before, self.positive)


def enumerate_dodgson_moves(profile: Profile, c: int,
                            tc: TieConvention | str = TieConvention.STRICT) -> list[Move]:
    """Every c-normal single-voter raise, voters in id order, k ascending."""
    c = check_candidate(c, profile.m)
    st = _State(profile, c, TieConvention.coerce(tc))
    return [mv for row in st.live_rows() for mv in st.raise_moves(row)]


def enumerate_young_moves(profile: Profile, c: int,
                          tc: TieConvention | str = TieConvention.STRICT) -> list[Move]:
    """One deletion move per live voter, in id order."""
    c = check_candidate(c, profile.m)
    st = _State(profile, c, TieConvention.coerce(tc))
    return [st.delete_move(row) for row in st.live_rows()]


def _selection_key(move: Move):
    return (marginal_cost(move),) + move.tiebreak


def _naive_next(st: _State, rule: str) -> Optional[Move]:
    if rule == "dodgson":
        moves = [mv for row in st.live_rows() for mv in st.raise_moves(row)]
    else:
        moves = [st.delete_move(row) for row in st.live_rows()]
    if not moves:
        return None
    return min(moves, key=_selection_key)


class _QueueEngine:
    """Heap holding each live voter's best move, keyed by exact cost rank."""

    def __init__(self, st: _State, rule: str):
        self.st = st
        self.rule = rule
        self.table, self.inf_rank = _cost_ranks(st.m)
        self.version = np.zeros(len(st.voter_ids), dtype=np.int64)
        self.heap: list = []
        self.rebuild()

    def rebuild(self) -> None:
        st = self.st
        rows = st.live_rows()
        self.heap = []
        if len(rows) == 0:
            return
        pc = st.pos_c[rows]
        if self.rule == "dodgson":
            ks = np.arange(1, st.m)
            if len(ks) == 0:
                return
            at = pc[:, None] - ks[None, :]
            valid = at >= 0
            cand = st.R[rows[:, None], np.where(valid, at, 0)]
            cnt = np.cumsum(st.positive[cand] & valid, axis=1)
            rank = np.where(valid, self.table[ks[None, :], cnt], self.inf_rank + 1)
            best = np.argmin(rank, axis=1)
            best_rank = rank[np.arange(len(rows)), best]
            best_red = cnt[np.arange(len(rows)), best]
            for row, r, k, red in zip(rows.tolist(), best_rank.tolist(),
                                      (best + 1).tolist(), best_red.tolist()):
                if st.pos_c[row] > 0:
                    self.heap.append((r, k, int(st.voter_ids[row]), k, red, int(self.version[row])))
        else:
            above = np.arange(st.m)[None, :] < pc[:, None]
            red = (st.positive[st.R[rows]] & above).sum(axis=1)
            rank = self.table[1, red]
            for row, r, rd in zip(rows.tolist(), rank.tolist(), red.tolist()):
                self.heap.append((r, 1, int(st.voter_ids[row]), 0, rd, int(self.version[row])))
        heapq.heapify(self.heap)

    def refresh(self, row: int) -> None:
        """Re-enter voter ``row`` after a raise that left the positive set unchanged."""
        self.version[row] += 1
        moves = self.st.raise_moves(row)
        if not moves:
            return
        best = min(moves, key=lambda mv: (self.table[mv.cost, mv.reductions], mv.cost))
        heapq.heappush(self.heap, (int(self.table[best.cost, best.reductions]), best.cost,
                                   best.voter, best.target_count, best.reductions,
                                   int(self.version[row])))

    def next_move(self) -> Optional[Move]:
        st = self.st
        while self.heap:
            rank, cost, voter, k, red, ver = self.heap[0]
            row = st.row_of[voter]
            if not st.alive[row] or ver != self.version[row]:
                heapq.heappop(self.heap)
                continue
            if self.rule == "dodgson":
                return Move(voter, RAISE, cost, red, k)
            return Move(voter, DELETE, 1, red)
        return None

    def applied(self, move: Move, changed: bool) -> None:
        row = self.st.row_of[move.voter]
        self.version[row] += 1
        if changed:
            self.rebuild()
        elif self.rule == "dodgson":
            self.refresh(row)


def greedy_score(profile: Profile, c: int, rule: str = "dodgson",
                 tc: TieConvention | str = TieConvention.STRICT,
                 engine: str = "queue") -> ScoreReport:
    """Score candidate ``c`` with the marginal-cost greedy rule.

    >>> p = Profile({1: (1, 2), 2: (2, 1), 3: (2, 1)}, 2)
    >>> greedy_score(p, 1, "dodgson").score
    1
    """
    c = check_candidate(c, profile.m)
    rule = check_choice(rule, RULES, "rule")
    engine = check_choice(engine, ENGINES, "engine")
    tc = TieConvention.coerce(tc)
    st = _State(profile, c, tc)
    queue = _QueueEngine(st, rule) if engine == "queue" else None

    witness: list[Edit] = []
    log: list[LoggedMove] = []
    deficit = st.total_deficit()
    score: Union[int, float] = 0
    while deficit > 0:
        move = queue.next_move() if queue else _naive_next(st, rule)
        if move is None or move.reductions == 0:
            score = UNSCORABLE
            break
        edits, changed = st.apply(move)
        if queue:
            queue.applied(move, changed)
        witness.extend(edits)
        deficit = st.total_deficit()
        log.append(LoggedMove(move, marginal_cost(move), deficit))
    else:
        score = len(witness)
    return ScoreReport(c, score, tuple(witness), tuple(log), rule, tc, engine)
