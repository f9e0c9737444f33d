"""Exhaustive Dodgson and Young scores for small profiles.

Dodgson is searched over per-voter raise amounts only: some optimal swap
sequence raises the scored candidate ``k_i`` consecutive places in each
ballot ``i``.  :func:`bfs_dodgson` searches arbitrary swap sequences and
exists to cross-check that restriction.

Searches that would exceed their budget raise :class:`OracleInfeasible`
instead of returning an approximation.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from typing import Union

import numpy as np

from .edits import Edit, EditSequence, raise_swaps
from .greedy import UNSCORABLE
from .profile import Profile, TieConvention, deficit_from_margin, pairwise_tally
from .validation import check_candidate

DEFAULT_NODE_BUDGET = 10**7
DEFAULT_YOUNG_CAP = 20


class OracleInfeasible(RuntimeError):
    """The exact search would exceed its configured budget."""


def _margins(profile: Profile, c: int) -> dict[int, int]:
    tally = pairwise_tally(profile)
    return {d: tally.margin(c, d) for d in profile.candidates if d != c}


def _passes_needed(margin: int, tc: TieConvention) -> int:
    # each pass of c over d lowers the margin by 2
    return -(-deficit_from_margin(margin, tc) // 2)


def exact_dodgson(profile: Profile, c: int,
                  tc: TieConvention | str = TieConvention.STRICT,
                  node_budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, EditSequence]:
    """Minimum number of adjacent swaps making ``c`` the Condorcet winner.

    Dynamic programming over voters in id order; the state is the vector of
    passes still needed against each trailing rival.  Among optimal raise
    vectors the witness uses the lexicographically smallest one.

    Returns ``(score, witness)``.
    """
    tc = TieConvention.coerce(tc)
    c = check_candidate(c, profile.m)
    margins = _margins(profile, c)
    rivals = [d for d, mg in margins.items() if _passes_needed(mg, tc) > 0]
    if not rivals:
        return 0, ()
    index = {d: t for t, d in enumerate(rivals)}
    need0 = tuple(_passes_needed(margins[d], tc) for d in rivals)

    voters = list(profile.voters)
    # for voter i: the rivals passed when raising k places, as index tuples
    options = []
    for v in voters:
        r = profile.ranking(v)
        p = r.index(c)
        opts, passed = [(0, ())], []
        for k in range(1, p + 1):
            d = r[p - k]
            if d in index:
                passed.append(index[d])
                opts.append((k, tuple(passed)))
        options.append(opts)
    # how many later voters could still pass each rival
    reach = [[0] * len(rivals) for _ in range(len(voters) + 1)]
    for i in range(len(voters) - 1, -1, -1):
        reach[i] = list(reach[i + 1])
        for t in (options[i][-1][1] if options[i] else ()):
            reach[i][t] += 1

    memo: dict[tuple[int, tuple[int, ...]], float] = {}
    nodes = 0

    def best(i: int, need: tuple[int, ...]) -> float:
        nonlocal nodes
        if not any(need):
            return 0
        if i == len(voters) or any(x > y for x, y in zip(need, reach[i])):
            return math.inf
        key = (i, need)
        if key in memo:
            return memo[key]
        nodes += 1
        if nodes > node_budget:
            raise OracleInfeasible(f"exact Dodgson search exceeded {node_budget} nodes")
        value = math.inf
        for k, passed in options[i]:
            nxt = list(need)
            for t in passed:
                if nxt[t]:
                    nxt[t] -= 1
            value = min(value, k + best(i + 1, tuple(nxt)))
        memo[key] = value
        return value

    score = best(0, need0)
    if score == math.inf:  # cannot happen with at least one live voter
        raise OracleInfeasible("no raise vector closes every deficit")

    witness: list[Edit] = []
    need = need0
    for i, v in enumerate(voters):
        if not any(need):
            break
        target = best(i, need)
        for k, passed in options[i]:
            nxt = list(need)
            for t in passed:
                if nxt[t]:
                    nxt[t] -= 1
            if k + best(i + 1, tuple(nxt)) == target:
                if k:
                    r = profile.ranking(v)
                    witness += raise_swaps(v, profile.m - 1 - r.index(c), k)
                need = tuple(nxt)
                break
    return int(score), tuple(witness)


def exact_young(profile: Profile, c: int,
                tc: TieConvention | str = TieConvention.STRICT,
                max_voters: int = DEFAULT_YOUNG_CAP
                ) -> tuple[Union[int, float], EditSequence]:
    """Fewest ballot deletions making ``c`` the Condorcet winner.

    Subsets are tried by increasing size in lexicographic order, so the
    first hit is optimal and lexicographically smallest.  Returns
    ``(UNSCORABLE, ())`` when no subset works.
    """
    tc = TieConvention.coerce(tc)
    c = check_candidate(c, profile.m)
    voters = list(profile.voters)
    if len(voters) > max_voters:
        raise OracleInfeasible(
            f"exact Young enumerates subsets of {len(voters)} voters; cap is {max_voters}")
    rivals = [d for d in profile.candidates if d != c]
    base = np.array([m for m in _margins(profile, c).values()], dtype=np.int64)
    # deleting voter i changes margin[d] by -1 if i ranks d above c, else +1
    delta = np.array([[-1 if r.index(d) < r.index(c) else 1 for d in rivals]
                      for r in (profile.ranking(v) for v in voters)],
                     dtype=np.int64).reshape(len(voters), len(rivals))
    limit = -1 if tc is TieConvention.STRICT else 0
    for size in range(len(voters) + 1):
        for subset in itertools.combinations(range(len(voters)), size):
            mg = base + delta[list(subset)].sum(axis=0) if subset else base
            if np.all(mg <= limit):
                return size, tuple(Edit.delete(voters[i]) for i in subset)
    return UNSCORABLE, ()


def bfs_dodgson(profile: Profile, c: int,
                tc: TieConvention | str = TieConvention.STRICT,
                max_states: int = 2_000_000) -> int:
    """Dodgson score by breadth-first search over all swap sequences.

    States are multisets of ballots (voter order does not affect the
    Condorcet condition).  Only practical for tiny profiles.
    """
    tc = TieConvention.coerce(tc)
    c = check_candidate(c, profile.m)
    m = profile.m

    def done(state) -> bool:
        for d in range(1, m + 1):
            if d == c:
                continue
            mg = sum(1 if r.index(d) < r.index(c) else -1 for r in state)
            if deficit_from_margin(mg, tc):
                return False
        return True

    start = tuple(sorted(profile.ranking(v) for v in profile.voters))
    if done(start):
        return 0
    seen = {start}
    frontier = deque([(start, 0)])
    while frontier:
        state, dist = frontier.popleft()
        for i, r in enumerate(state):
            if i and state[i - 1] == r:
                continue  # identical ballot already expanded
            for p in range(m - 1):
                swapped = r[:p] + (r[p + 1], r[p]) + r[p + 2:]
                nxt = tuple(sorted(state[:i] + (swapped,) + state[i + 1:]))
                if nxt in seen:
                    continue
                if done(nxt):
                    return dist + 1
                seen.add(nxt)
                if len(seen) > max_states:
                    raise OracleInfeasible(f"BFS exceeded {max_states} states")
                frontier.append((nxt, dist + 1))
    raise OracleInfeasible("BFS exhausted the state space without a Condorcet profile")
