"""Preference profiles, pairwise tallies and vote deficits.

Candidates and voters are numbered from 1.  A voter keeps its original
number for the lifetime of a profile, even after other voters are deleted,
so edit sequences and witnesses stay replayable.
"""

from __future__ import annotations

import enum
import logging
from collections.abc import Iterable, Mapping, Sequence
from typing import Optional

import numpy as np

from .validation import check_candidate, check_ranking

logger = logging.getLogger(__name__)


class TieConvention(str, enum.Enum):
    """How a pairwise tie is counted against the scored candidate.

    ``STRICT`` treats a tie as trailing (deficit = margin + 1), so a Condorcet
    winner must beat every rival by a strict majority.  ``WEAK`` uses the raw
    margin, so ties are already "closed".
    """

    STRICT = "strict"
    WEAK = "weak"

    @classmethod
    def coerce(cls, value: "TieConvention | str") -> "TieConvention":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(
                f"unknown tie convention {value!r}; expected 'strict' or 'weak'"
            ) from None


class Profile:
    """An immutable collection of strict rankings over candidates ``1..m``.

    Parameters
    ----------
    rankings : mapping of voter id to ranking, most-preferred first
    m : number of candidates

    Use :func:`build_profile` to construct one from plain rows; this
    constructor trusts its input.
    """

    __slots__ = ("_m", "_rankings", "_tally")

    def __init__(self, rankings: Mapping[int, tuple[int, ...]], m: int,
                 _tally: Optional[np.ndarray] = None):
        self._m = m
        self._rankings = dict(sorted(rankings.items()))
        self._tally = _tally

    @property
    def m(self) -> int:
        return self._m

    @property
    def n_live(self) -> int:
        return len(self._rankings)

    @property
    def voters(self) -> tuple[int, ...]:
        return tuple(self._rankings)

    @property
    def candidates(self) -> range:
        return range(1, self._m + 1)

    def ranking(self, voter: int) -> tuple[int, ...]:
        try:
            return self._rankings[voter]
        except KeyError:
            raise KeyError(f"voter {voter} is not live in this profile") from None

    def items(self):
        return self._rankings.items()

    def rows(self) -> list[list[int]]:
        """Rankings of the live voters as lists, in voter order."""
        return [list(r) for r in self._rankings.values()]

    def __contains__(self, voter: int) -> bool:
        return voter in self._rankings

    def __len__(self) -> int:
        return len(self._rankings)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Profile):
            return NotImplemented
        return self._m == other._m and self._rankings == other._rankings

    def __hash__(self) -> int:
        return hash((self._m, tuple(self._rankings.items())))

    def __repr__(self) -> str:
        return f"Profile(m={self._m}, n_live={self.n_live})"

    def tally_array(self) -> np.ndarray:
        """0-based ``counts[d-1, c-1]``; computed once and cached (read-only)."""
        if self._tally is None:
            self._tally = _count_pairs(self._rankings.values(), self._m)
        return self._tally


def _count_pairs(rankings: Iterable[Sequence[int]], m: int) -> np.ndarray:
    counts = np.zeros((m, m), dtype=np.int64)
    rows = [list(r) for r in rankings]
    if rows:
        arr = np.asarray(rows, dtype=np.int64) - 1
        pos = np.empty_like(arr)
        np.put_along_axis(pos, arr, np.arange(m)[None, :], axis=1)
        # counts[d, c] = #voters with pos[d] < pos[c]
        counts = (pos[:, :, None] < pos[:, None, :]).sum(axis=0).astype(np.int64)
    counts.setflags(write=False)
    return counts


def build_profile(rankings: Sequence[Sequence[int]], m: int) -> Profile:
    """Validate ``rankings`` and number the voters ``1..n`` in input order.

    >>> build_profile([[2, 1], [1, 2]], 2).n_live
    2
    """
    if not isinstance(m, (int, np.integer)) or isinstance(m, bool) or m < 1:
        raise ValueError(f"need at least one candidate, got m={m!r}")
    if len(rankings) < 1:
        raise ValueError("need at least one voter")
    checked = {}
    for voter, row in enumerate(rankings, start=1):
        checked[voter] = check_ranking(row, int(m), where=f"voter {voter}")
    return Profile(checked, int(m))


class TallyMatrix:
    """Pairwise preference counts: ``tally[d, c]`` voters rank d above c.

    Indexing uses candidate ids (1-based); ``array`` is the 0-based view.
    """

    __slots__ = ("array", "n_live")

    def __init__(self, array: np.ndarray, n_live: int):
        self.array = array
        self.n_live = n_live

    @property
    def m(self) -> int:
        return self.array.shape[0]

    def __getitem__(self, pair: tuple[int, int]) -> int:
        d, c = pair
        check_candidate(d, self.m)
        check_candidate(c, self.m)
        return int(self.array[d - 1, c - 1])

    def margin(self, c: int, d: int) -> int:
        """How many more voters prefer ``d`` to ``c`` than the reverse."""
        return self[d, c] - self[c, d]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TallyMatrix):
            return NotImplemented
        return self.n_live == other.n_live and np.array_equal(self.array, other.array)

    def __repr__(self) -> str:
        return f"TallyMatrix(m={self.m}, n_live={self.n_live})"


def pairwise_tally(profile: Profile) -> TallyMatrix:
    return TallyMatrix(profile.tally_array(), profile.n_live)


def deficit_from_margin(margin: int, tc: TieConvention | str = TieConvention.STRICT) -> int:
    """Clamp a pairwise margin (rival votes minus own votes) into a deficit."""
    if TieConvention.coerce(tc) is TieConvention.STRICT:
        margin += 1
    return margin if margin > 0 else 0


def deficit(tally: TallyMatrix, c: int, d: int,
            tc: TieConvention | str = TieConvention.STRICT) -> int:
    """Vote deficit of ``c`` against ``d``."""
    if c == d:
        raise ValueError(f"deficit needs two distinct candidates, got {c} twice")
    return deficit_from_margin(tally.margin(c, d), tc)


def deficit_vector(tally: TallyMatrix, c: int,
                   tc: TieConvention | str = TieConvention.STRICT) -> dict[int, int]:
    """Deficits of ``c`` against every rival, keyed by rival id."""
    check_candidate(c, tally.m)
    return {d: deficit(tally, c, d, tc) for d in range(1, tally.m + 1) if d != c}


def total_deficit(tally: TallyMatrix, c: int,
                  tc: TieConvention | str = TieConvention.STRICT) -> int:
    """Sum of c's deficits over all rivals (the Tideman score)."""
    return sum(deficit_vector(tally, c, tc).values())


def zero_deficit_candidates(profile: Profile,
                            tc: TieConvention | str = TieConvention.STRICT) -> list[int]:
    tally = pairwise_tally(profile)
    return [c for c in profile.candidates if total_deficit(tally, c, tc) == 0]


def condorcet_winner(profile: Profile,
                     tc: TieConvention | str = TieConvention.STRICT) -> Optional[int]:
    """The candidate with zero total deficit, or ``None``.

    Under the weak convention several candidates can tie at zero; that case
    also returns ``None`` (logged as "tied").
    """
    found = zero_deficit_candidates(profile, tc)
    if len(found) == 1:
        return found[0]
    if len(found) > 1:
        logger.info("tied: candidates %s all have zero weak deficit", found)
    return None
