import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import A, B, C, D
from dodgson_young import (
    UNSCORABLE,
    Edit,
    OracleInfeasible,
    bfs_dodgson,
    build_profile,
    exact_dodgson,
    exact_young,
    is_condorcet_sequence,
)
from strategies import profiles


def test_exact_dodgson_ex5(ex5):
    score, witness = exact_dodgson(ex5, C, "strict")
    assert score == 4 and len(witness) == 4
    assert is_condorcet_sequence(ex5, C, witness, "strict")
    assert bfs_dodgson(ex5, C, "strict") == 4


def test_exact_dodgson_single_ballot():
    p = build_profile([[B, A, C]], 3)
    score, witness = exact_dodgson(p, C, "strict")
    assert score == 2
    assert witness == (Edit.swap(1, 1), Edit.swap(1, 2))


def test_exact_young_ex5(ex5):
    score, witness = exact_young(ex5, D, "strict")
    assert score == 2
    assert witness == (Edit.delete(1), Edit.delete(2))


def test_condorcet_winner_is_zero():
    p = build_profile([[2, 1, 3], [2, 3, 1], [1, 2, 3]], 3)
    assert exact_dodgson(p, 2) == (0, ())
    assert exact_young(p, 2) == (0, ())


def test_young_unscorable():
    p = build_profile([[2, 1]] * 3, 2)
    assert exact_young(p, 1, "strict") == (UNSCORABLE, ())
    assert exact_young(p, 1, "weak")[0] == 3


def test_budgets_raise():
    p = build_profile([list(range(1, 5))] * 21, 4)
    with pytest.raises(OracleInfeasible):
        exact_young(p, 4)
    with pytest.raises(OracleInfeasible):
        exact_dodgson(p, 4, node_budget=2)


def brute_young(p, c, tc):
    """Independent check: try every subset and keep the smallest that works."""
    best = UNSCORABLE
    for size in range(p.n_live + 1):
        for subset in itertools.combinations(p.voters, size):
            if is_condorcet_sequence(p, c, [Edit.delete(v) for v in subset], tc):
                return size
    return best


@settings(max_examples=60, deadline=None)
@given(profiles(min_m=2, max_m=4, max_n=5), st.sampled_from(["strict", "weak"]))
def test_dodgson_matches_unrestricted_bfs(p, tc):
    for c in p.candidates:
        score, witness = exact_dodgson(p, c, tc)
        assert score == bfs_dodgson(p, c, tc)
        assert len(witness) == score and is_condorcet_sequence(p, c, witness, tc)


@settings(max_examples=60, deadline=None)
@given(profiles(min_m=2, max_m=4, max_n=6), st.sampled_from(["strict", "weak"]))
def test_young_matches_brute_force(p, tc):
    for c in p.candidates:
        score, witness = exact_young(p, c, tc)
        assert score == brute_young(p, c, tc)
        if score != UNSCORABLE:
            assert len(witness) == score and is_condorcet_sequence(p, c, witness, tc)
        if tc == "weak":
            assert score <= p.n_live


@settings(max_examples=60, deadline=None)
@given(profiles(min_m=2, max_m=5, max_n=6), st.randoms(use_true_random=False))
def test_anonymity(p, rnd):
    rows = p.rows()
    rnd.shuffle(rows)
    q = build_profile(rows, p.m)
    for c in p.candidates:
        assert exact_dodgson(p, c)[0] == exact_dodgson(q, c)[0]
        assert exact_young(p, c)[0] == exact_young(q, c)[0]
