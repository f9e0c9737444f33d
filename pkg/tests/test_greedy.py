import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import C, D
from dodgson_young import (
    UNSCORABLE,
    Edit,
    MarginalCost,
    Move,
    build_profile,
    enumerate_dodgson_moves,
    enumerate_young_moves,
    exact_dodgson,
    exact_young,
    greedy_score,
    is_condorcet_sequence,
    marginal_cost,
    pairwise_tally,
    total_deficit,
)
from dodgson_young.greedy import _cost_ranks
from strategies import profiles


def moves_of(moves, voter):
    return [(mv.cost, mv.reductions) for mv in moves if mv.voter == voter]


def test_dodgson_moves_ex5(ex5):
    moves = enumerate_dodgson_moves(ex5, C, "strict")
    assert moves_of(moves, 1) == [(1, 0), (2, 1)]
    assert moves_of(moves, 3) == [(1, 0), (2, 1), (3, 1)]
    assert moves_of(moves, 5) == []
    assert [mv.target_count for mv in moves if mv.voter == 3] == [1, 2, 3]


def test_young_moves_ex5(ex5):
    moves = {mv.voter: mv for mv in enumerate_young_moves(ex5, D, "strict")}
    assert moves[1].reductions == 2
    assert moves[3].reductions == 0
    assert all(mv.cost == 1 for mv in moves.values())


def test_no_reductions_when_everyone_ranks_c_first():
    p = build_profile([[2, 1, 3], [2, 3, 1]], 3)
    assert enumerate_dodgson_moves(p, 2) == []
    assert all(mv.reductions == 0 for mv in enumerate_young_moves(p, 2))


def test_marginal_cost_values():
    assert marginal_cost(Move(1, "raise", 2, 1, 2)).value == Fraction(2)
    assert marginal_cost(Move(1, "delete", 1, 2)).value == Fraction(1, 2)
    assert marginal_cost(Move(1, "raise", 3, 0, 3)).value == math.inf
    assert MarginalCost(2, 4) == MarginalCost(1, 2)
    assert MarginalCost(1, 3) < MarginalCost(1, 2) < MarginalCost(5, 1) < MarginalCost(1, 0)
    assert not MarginalCost(1, 0) < MarginalCost(7, 0)


@given(st.integers(0, 9), st.integers(0, 9), st.integers(0, 9), st.integers(0, 9))
def test_marginal_cost_order_matches_fractions(a, b, c, d):
    x, y = MarginalCost(a, b), MarginalCost(c, d)
    fx = math.inf if b == 0 else Fraction(a, b)
    fy = math.inf if d == 0 else Fraction(c, d)
    assert (x < y) == (fx < fy)
    assert (x == y) == (fx == fy)


@pytest.mark.parametrize("m", [1, 2, 5, 12])
def test_rank_table_is_exact(m):
    table, inf_rank = _cost_ranks(m)
    cells = [(k, r) for k in range(m + 1) for r in range(m + 1)]
    for k1, r1 in cells:
        for k2, r2 in cells:
            f1 = math.inf if r1 == 0 else Fraction(k1, r1)
            f2 = math.inf if r2 == 0 else Fraction(k2, r2)
            assert (table[k1, r1] < table[k2, r2]) == (f1 < f2)
    assert table[1, 0] == inf_rank


@pytest.mark.parametrize("engine", ["queue", "naive"])
def test_greedy_dodgson_ex5(ex5, engine):
    r = greedy_score(ex5, C, "dodgson", "strict", engine)
    assert r.score == 4
    assert r.witness == (Edit.swap(1, 3), Edit.swap(1, 4), Edit.swap(2, 3), Edit.swap(2, 4))
    assert [(e.move.voter, e.move.cost, str(e.marginal_cost)) for e in r.move_log] == \
        [(1, 2, "2/1"), (2, 2, "2/1")]
    assert [e.deficit_after for e in r.move_log] == [2, 0]


@pytest.mark.parametrize("engine", ["queue", "naive"])
def test_greedy_young_ex5(ex5, engine):
    r = greedy_score(ex5, D, "young", "strict", engine)
    assert r.score == 2
    assert r.witness == (Edit.delete(1), Edit.delete(2))
    assert [str(e.marginal_cost) for e in r.move_log] == ["1/2", "1/2"]


@pytest.mark.parametrize("rule", ["dodgson", "young"])
def test_condorcet_winner_scores_zero(rule):
    p = build_profile([[2, 1, 3], [2, 3, 1], [1, 2, 3]], 3)
    r = greedy_score(p, 2, rule)
    assert r.score == 0 and r.witness == () and r.move_log == ()


def test_young_unscorable_strict_finite_weak():
    p = build_profile([[2, 1]] * 3, 2)
    assert greedy_score(p, 1, "young", "strict").score is UNSCORABLE
    assert not greedy_score(p, 1, "young", "strict").scorable
    assert greedy_score(p, 1, "young", "weak").score == 3


def test_invalid_inputs(ex5):
    with pytest.raises(ValueError):
        greedy_score(ex5, 6)
    with pytest.raises(ValueError):
        greedy_score(ex5, 1, rule="kemeny")
    with pytest.raises(ValueError):
        greedy_score(ex5, 1, engine="fast")


def test_report_serialisation(ex5):
    r = greedy_score(ex5, C)
    text = r.to_text()
    assert "score: 4" in text and "  swap 1 3" in text and "reductions=1" in text
    d = r.to_dict()
    assert d["witness"][0] == "swap 1 3" and d["moves"][0]["marginal_cost"] == "2/1"
    assert "engine" not in r.to_dict(include_engine=False)


SMALL = profiles(min_m=2, max_m=5, max_n=6)
conventions = st.sampled_from(["strict", "weak"])
rules = st.sampled_from(["dodgson", "young"])


@settings(max_examples=150, deadline=None)
@given(SMALL, conventions, rules)
def test_soundness_and_engine_equivalence(p, tc, rule):
    for c in p.candidates:
        q = greedy_score(p, c, rule, tc, "queue")
        n = greedy_score(p, c, rule, tc, "naive")
        assert q == n and q.to_json(False) == n.to_json(False)
        if q.scorable:
            assert q.score == len(q.witness)
            assert is_condorcet_sequence(p, c, q.witness, tc)


@settings(max_examples=100, deadline=None)
@given(SMALL, conventions)
def test_never_below_exact(p, tc):
    for c in p.candidates:
        assert greedy_score(p, c, "dodgson", tc).score >= exact_dodgson(p, c, tc)[0]
        assert greedy_score(p, c, "young", tc).score >= exact_young(p, c, tc)[0]


@settings(max_examples=100, deadline=None)
@given(SMALL, conventions)
def test_dodgson_progress_and_raise_budget(p, tc):
    for c in p.candidates:
        r = greedy_score(p, c, "dodgson", tc)
        prev = total_deficit(pairwise_tally(p), c, tc)
        for entry in r.move_log:
            assert entry.deficit_after < prev
            prev = entry.deficit_after
        for v in p.voters:
            raised = sum(e.move.cost for e in r.move_log if e.move.voter == v)
            assert raised <= p.ranking(v).index(c)
        for entry in r.move_log:
            assert entry.move.reductions <= entry.move.cost


@settings(max_examples=100, deadline=None)
@given(SMALL, conventions)
def test_young_never_revisits_voter(p, tc):
    for c in p.candidates:
        r = greedy_score(p, c, "young", tc)
        voters = [e.voter for e in r.witness]
        assert len(voters) == len(set(voters))
        assert all(e.move.reductions <= p.m - 1 for e in r.move_log)
