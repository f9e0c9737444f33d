import pytest
from hypothesis import given, strategies as st

from conftest import A, B, C, D, E
from dodgson_young import (
    Edit,
    InapplicableEditError,
    apply_edit,
    apply_sequence,
    build_profile,
    deficit_reduction_trace,
    format_witness,
    is_condorcet_sequence,
    pairwise_tally,
    parse_witness,
)
from dodgson_young.edits import DeficitReduction
from strategies import profiles

# c over b then over a, in voters 1 and 2 (c starts with below-count 2)
RAISE_C = (Edit.swap(1, 3), Edit.swap(1, 4), Edit.swap(2, 3), Edit.swap(2, 4))


def test_swap_boundary_semantics(ex5):
    # below-counts in a>b>c>d>e: a=4 b=3 c=2 d=1 e=0
    assert apply_edit(ex5, Edit.swap(1, 3)).ranking(1) == (A, C, B, D, E)
    assert apply_edit(ex5, Edit.swap(1, 2)).ranking(1) == (A, B, D, C, E)
    assert apply_edit(ex5, Edit.swap(1, 4)).ranking(1) == (B, A, C, D, E)
    assert apply_edit(ex5, Edit.swap(1, 1)).ranking(1) == (A, B, C, E, D)


def test_swap_updates_tally_incrementally(ex5):
    p = apply_edit(ex5, Edit.swap(1, 3))
    t = pairwise_tally(p)
    assert (t[C, B], t[B, C]) == (4, 1)
    assert p.tally_array() is not ex5.tally_array()


def test_deletion(ex5):
    p = apply_edit(ex5, Edit.delete(1))
    assert p.n_live == 4 and 1 not in p
    assert pairwise_tally(p)[A, C] == 3
    assert p.voters == (2, 3, 4, 5)


def test_swap_is_involution(ex5):
    e = Edit.swap(3, 2)
    assert apply_sequence(ex5, [e, e]) == ex5


@pytest.mark.parametrize("edit", [Edit.swap(1, 0), Edit.swap(1, 5), Edit.swap(9, 1), Edit.delete(6)])
def test_inapplicable(ex5, edit):
    with pytest.raises(InapplicableEditError):
        apply_edit(ex5, edit)


def test_sequence_reports_failing_index(ex5):
    with pytest.raises(InapplicableEditError) as info:
        apply_sequence(ex5, [Edit.delete(1), Edit.swap(2, 1), Edit.delete(1)])
    assert info.value.index == 2


def test_empty_sequence_is_identity(ex5):
    assert apply_sequence(ex5, []) == ex5


def test_raise_c_makes_condorcet(ex5):
    p = apply_sequence(ex5, RAISE_C)
    t = pairwise_tally(p)
    assert all(t[C, d] > t[d, C] for d in (A, B, D, E))
    assert is_condorcet_sequence(ex5, C, RAISE_C, "strict")
    assert not is_condorcet_sequence(ex5, C, (), "strict")


def test_trace_raise_c(ex5):
    trace = deficit_reduction_trace(ex5, C, RAISE_C, "strict")
    assert trace == [DeficitReduction(1, C, A, 4, 2), DeficitReduction(3, C, A, 2, 0)]


def test_trace_delete_for_d(ex5):
    s = [Edit.delete(1), Edit.delete(2)]
    trace = deficit_reduction_trace(ex5, D, s, "strict")
    assert [(r.step_index, r.d) for r in trace] == [(0, B), (0, C), (1, B), (1, C)]
    assert is_condorcet_sequence(ex5, D, s, "strict")


def test_trace_empty_for_condorcet_winner():
    p = build_profile([[2, 1, 3], [2, 3, 1], [1, 2, 3]], 3)
    s = [Edit.swap(1, 1), Edit.delete(3), Edit.swap(2, 2)]
    assert deficit_reduction_trace(p, 2, s) == []


def test_witness_text_roundtrip():
    s = (Edit.swap(3, 2), Edit.delete(4))
    text = format_witness(s)
    assert text == "swap 3 2\ndelete 4\n"
    assert parse_witness(text) == s
    with pytest.raises(ValueError):
        parse_witness("swap 1\n")


@st.composite
def profile_and_edits(draw):
    p = draw(profiles(min_m=2, max_m=5, max_n=5))
    edits, live = [], list(p.voters)
    for _ in range(draw(st.integers(0, 8))):
        if live and draw(st.booleans()) and draw(st.booleans()):
            v = draw(st.sampled_from(live))
            live.remove(v)
            edits.append(Edit.delete(v))
        elif live:
            edits.append(Edit.swap(draw(st.sampled_from(live)), draw(st.integers(1, p.m - 1))))
    return p, edits


@given(profile_and_edits())
def test_incremental_tally_matches_recount(case):
    p, edits = case
    q = apply_sequence(p, edits)
    fresh = build_profile(q.rows(), q.m) if q.n_live else None
    if fresh is not None:
        assert (q.tally_array() == fresh.tally_array()).all()
    else:
        assert not q.tally_array().any()
    deletions = sum(e.kind == "delete" for e in edits)
    assert q.n_live == p.n_live - deletions
    assert apply_sequence(p, edits) == q


@given(profile_and_edits())
def test_trace_events_really_reduce(case):
    p, edits = case
    for c in p.candidates:
        for r in deficit_reduction_trace(p, c, edits):
            assert r.deficit_before > r.deficit_after
            assert 0 <= r.step_index < len(edits)
