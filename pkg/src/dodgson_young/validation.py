"""Input validation helpers shared by the library, estimators and CLI."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

RULES = ("dodgson", "young")
MODES = ("greedy", "exact")
ENGINES = ("queue", "naive")


def _is_int(x) -> bool:
    return isinstance(x, (int, np.integer)) and not isinstance(x, (bool, np.bool_))


def check_candidate(c, m: int) -> int:
    if not _is_int(c) or not 1 <= c <= m:
        raise ValueError(f"candidate {c!r} out of range 1..{m}")
    return int(c)


def check_ranking(row: Sequence[int], m: int, where: str = "ranking") -> tuple[int, ...]:
    """Return ``row`` as a tuple after checking it is a permutation of 1..m."""
    row = list(row)
    if len(row) != m:
        raise ValueError(f"{where}: expected {m} candidates, got {len(row)}")
    seen = set()
    for c in row:
        if not _is_int(c):
            raise ValueError(f"{where}: candidate {c!r} is not an integer")
        if not 1 <= c <= m:
            raise ValueError(f"{where}: candidate {c} out of range 1..{m}")
        if c in seen:
            raise ValueError(f"{where}: candidate {c} listed twice")
        seen.add(c)
    return tuple(int(c) for c in row)


def check_choice(value: str, choices: Sequence[str], name: str) -> str:
    value = str(value).lower()
    if value not in choices:
        raise ValueError(f"unknown {name} {value!r}; expected one of {', '.join(choices)}")
    return value


def check_profile_array(X) -> np.ndarray:
    """Coerce an array-like of rankings to a 2-D integer array (n_voters, m)."""
    arr = np.asarray(X)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D array of rankings, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError("need at least one voter and one candidate")
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.equal(np.mod(arr, 1), 0)):
            raise ValueError("rankings must contain integer candidate ids")
        arr = arr.astype(np.int64)
    return arr
