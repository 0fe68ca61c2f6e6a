import pytest
from hypothesis import given, settings

from conftest import diagrams
from vbridge.catalog import K4103_FLIP_CHORD, doubled_diagram, k4103_diagram, kn_diagram
from vbridge.gauss import bridge_count, canonical_key, flip_sign, mirror, parse_gauss_code
from vbridge.rmoves import R2_DELETE, TAIL_SWAP, VIRTUAL, WELDED
from vbridge.search import SearchBudget, explore, explore_escalating, replay, witness_is_valid


def test_budget_defaults_and_validation():
    b = SearchBudget()
    assert (b.max_depth, b.max_states) == (8, 10**6)
    assert b.chords_for(parse_gauss_code("O1+U1+")) == 3
    with pytest.raises(ValueError):
        SearchBudget(max_depth=0)


def test_single_r1():
    r = explore(parse_gauss_code("O1+U1+"), VIRTUAL)
    assert r.trivialized and r.min_bridge_found == 1 and len(r.witness) == 1


def test_4103_flip_trivializes_by_two_r2():
    d = flip_sign(k4103_diagram(), K4103_FLIP_CHORD)
    r = explore(d, VIRTUAL, SearchBudget(max_chords=d.n, max_depth=2))
    assert r.trivialized
    assert [m.kind for m in r.witness] == [R2_DELETE, R2_DELETE]
    assert replay(d, r.witness).n == 0


def test_doubled_mirror_welded_but_not_virtual():
    d = mirror(doubled_diagram())
    welded = explore_escalating(d, WELDED, SearchBudget())
    assert welded.trivialized and witness_is_valid(d, welded)
    assert any(m.kind == TAIL_SWAP for m in welded.witness)
    same = SearchBudget(max_chords=d.n, max_depth=12)
    virtual = explore(d, VIRTUAL, same)
    assert not virtual.trivialized and virtual.exhausted


def test_kn_mirror_welded_trivial():
    d = mirror(kn_diagram(3))
    r = explore_escalating(d, WELDED, SearchBudget(max_depth=12))
    assert r.trivialized and witness_is_valid(d, r)


def test_target_stops_early():
    d = k4103_diagram()
    r = explore(d, VIRTUAL, SearchBudget(), target_bridges=2)
    assert r.min_bridge_found == 2 < bridge_count(d)
    assert bridge_count(replay(d, r.witness)) == 2
    assert not r.exhausted


def test_exhausted_means_closed_class():
    d = parse_gauss_code("O1+O2+U1+U2+")
    r = explore(d, VIRTUAL, SearchBudget(max_chords=2))
    assert r.exhausted and not r.trivialized


def test_state_cap_truncates():
    d = parse_gauss_code("O1+U2+O3+U1+O2+U3+")
    r = explore(d, VIRTUAL, SearchBudget(max_chords=5, max_depth=3, max_states=50))
    assert r.states_visited <= 50 and not r.exhausted


@settings(max_examples=25, deadline=None)
@given(diagrams(4))
def test_witness_replays(d):
    for move_set in (VIRTUAL, WELDED):
        r = explore(d, move_set, SearchBudget(max_chords=d.n + 1, max_depth=3))
        assert r.min_bridge_found <= bridge_count(d)
        assert witness_is_valid(d, r)


@settings(max_examples=20, deadline=None)
@given(diagrams(4))
def test_budget_monotonicity(d):
    small = explore(d, VIRTUAL, SearchBudget(max_chords=d.n, max_depth=2))
    large = explore(d, VIRTUAL, SearchBudget(max_chords=d.n + 1, max_depth=3))
    assert large.min_bridge_found <= small.min_bridge_found
    deeper = explore(d, VIRTUAL, SearchBudget(max_chords=d.n, max_depth=4))
    assert deeper.min_bridge_found <= small.min_bridge_found


@settings(max_examples=20, deadline=None)
@given(diagrams(4))
def test_welded_reaches_at_least_as_far(d):
    budget = SearchBudget(max_chords=d.n, max_depth=3)
    v = explore(d, VIRTUAL, budget)
    w = explore(d, WELDED, budget)
    assert w.min_bridge_found <= v.min_bridge_found
    assert w.trivialized or not v.trivialized


def test_deterministic():
    d = mirror(doubled_diagram())
    a = explore_escalating(d, WELDED, SearchBudget())
    b = explore_escalating(d, WELDED, SearchBudget())
    assert a == b
    assert canonical_key(replay(d, a.witness)) == canonical_key(replay(d, b.witness))
