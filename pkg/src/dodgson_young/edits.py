"""Swap and deletion edits, replay, and deficit-reduction traces.

A swap ``(voter, j)`` exchanges the two adjacent candidates whose
below-counts in that voter's ranking are ``j`` and ``j - 1``: the one above
(below-count ``j``) moves down and the one below moves up.  With ``m``
candidates, ``0 < j < m``.  The below-count of the candidate at 0-based
position ``p`` is ``m - 1 - p``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .profile import Profile, TieConvention, deficit_from_margin
from .validation import check_candidate

SWAP = "swap"
DELETE = "delete"


@dataclass(frozen=True, order=True)
class Edit:
    kind: str
    voter: int
    boundary: Optional[int] = None

    def __post_init__(self):
        if self.kind == SWAP:
            if self.boundary is None:
                raise ValueError("a swap needs a boundary")
        elif self.kind == DELETE:
            if self.boundary is not None:
                raise ValueError("a deletion takes no boundary")
        else:
            raise ValueError(f"unknown edit kind {self.kind!r}")

    @classmethod
    def swap(cls, voter: int, boundary: int) -> "Edit":
        return cls(SWAP, voter, boundary)

    @classmethod
    def delete(cls, voter: int) -> "Edit":
        return cls(DELETE, voter)

    def __str__(self) -> str:
        if self.kind == SWAP:
            return f"swap {self.voter} {self.boundary}"
        return f"delete {self.voter}"

    @classmethod
    def parse(cls, line: str) -> "Edit":
        parts = line.split()
        try:
            if parts[0] == SWAP and len(parts) == 3:
                return cls.swap(int(parts[1]), int(parts[2]))
            if parts[0] == DELETE and len(parts) == 2:
                return cls.delete(int(parts[1]))
        except (IndexError, ValueError):
            pass
        raise ValueError(f"malformed edit line {line!r}")


EditSequence = tuple[Edit, ...]


def format_witness(edits: Iterable[Edit]) -> str:
    """One ``swap v j`` / ``delete v`` line per edit."""
    return "".join(f"{e}\n" for e in edits)


def parse_witness(text: str) -> EditSequence:
    return tuple(Edit.parse(line) for line in text.splitlines() if line.strip())


class InapplicableEditError(ValueError):
    """An edit in a sequence cannot be applied to the current profile."""

    def __init__(self, index: int, edit: Edit, reason: str):
        self.index = index
        self.edit = edit
        super().__init__(f"edit {index} ({edit}) is not applicable: {reason}")


@dataclass(frozen=True)
class DeficitReduction:
    """Applying edit ``step_index`` lowered c's deficit against ``d``."""

    step_index: int
    c: int
    d: int
    deficit_before: int
    deficit_after: int


class _Working:
    """Private mutable copy of a profile with an incrementally kept tally."""

    def __init__(self, profile: Profile):
        self.m = profile.m
        self.rankings = {v: list(r) for v, r in profile.items()}
        self.tally = profile.tally_array().copy()

    def apply(self, e: Edit, index: int = 0) -> None:
        row = self.rankings.get(e.voter)
        if row is None:
            raise InapplicableEditError(index, e, f"voter {e.voter} is not live")
        if e.kind == DELETE:
            pos = np.empty(self.m, dtype=np.int64)
            pos[np.asarray(row) - 1] = np.arange(self.m)
            self.tally -= pos[:, None] < pos[None, :]
            del self.rankings[e.voter]
            return
        j = e.boundary
        if not 0 < j < self.m:
            raise InapplicableEditError(index, e, f"boundary {j} outside 1..{self.m - 1}")
        p = self.m - 1 - j  # position of the candidate with below-count j
        upper, lower = row[p], row[p + 1]
        row[p], row[p + 1] = lower, upper
        self.tally[upper - 1, lower - 1] -= 1
        self.tally[lower - 1, upper - 1] += 1

    def margin(self, c: int, d: int) -> int:
        return int(self.tally[d - 1, c - 1] - self.tally[c - 1, d - 1])

    def freeze(self) -> Profile:
        tally = self.tally.copy()
        tally.setflags(write=False)
        return Profile({v: tuple(r) for v, r in self.rankings.items()}, self.m, tally)


def apply_edit(profile: Profile, e: Edit) -> Profile:
    """Return ``profile`` with ``e`` applied; the tally is updated incrementally."""
    w = _Working(profile)
    w.apply(e)
    return w.freeze()


def apply_sequence(profile: Profile, s: Sequence[Edit]) -> Profile:
    w = _Working(profile)
    for i, e in enumerate(s):
        w.apply(e, i)
    return w.freeze()


def deficit_reduction_trace(profile: Profile, c: int, s: Sequence[Edit],
                            tc: TieConvention | str = TieConvention.STRICT
                            ) -> list[DeficitReduction]:
    """Every (edit, rival) pair at which c's deficit strictly drops, in order."""
    tc = TieConvention.coerce(tc)
    check_candidate(c, profile.m)
    rivals = [d for d in profile.candidates if d != c]
    w = _Working(profile)
    before = {d: deficit_from_margin(w.margin(c, d), tc) for d in rivals}
    trace = []
    for i, e in enumerate(s):
        w.apply(e, i)
        for d in rivals:
            after = deficit_from_margin(w.margin(c, d), tc)
            if after < before[d]:
                trace.append(DeficitReduction(i, c, d, before[d], after))
            before[d] = after
    return trace


def is_condorcet_sequence(profile: Profile, c: int, s: Sequence[Edit],
                          tc: TieConvention | str = TieConvention.STRICT) -> bool:
    """True when applying ``s`` leaves ``c`` with zero total deficit."""
    tc = TieConvention.coerce(tc)
    check_candidate(c, profile.m)
    w = _Working(profile)
    for i, e in enumerate(s):
        w.apply(e, i)
    return all(deficit_from_margin(w.margin(c, d), tc) == 0
               for d in profile.candidates if d != c)


def raise_swaps(voter: int, below_count: int, k: int) -> list[Edit]:
    """Swaps moving a candidate with the given below-count up ``k`` places."""
    return [Edit.swap(voter, below_count + t) for t in range(1, k + 1)]
