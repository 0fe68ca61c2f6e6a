from hypothesis import given, settings

from conftest import diagrams
from vbridge.gauss import GaussDiagram, bridge_count, canonical_key, parse_gauss_code, random_diagram, rotate, to_code
from vbridge.parity import check_axioms, gaussian_parity, project, project_star
from vbridge.rmoves import R1_DELETE, R1_INSERT, R2_DELETE, R3, VIRTUAL, apply_move, enumerate_moves


def interleaving_oracle(d):
    """Parity as the number of chords whose endpoints separate the chord's endpoints."""
    pos = d.positions
    out = {}
    for c, (a, b) in pos.items():
        lo, hi = sorted((a, b))
        linked = 0
        for other, (x, y) in pos.items():
            if other != c and (lo < x < hi) != (lo < y < hi):
                linked += 1
        out[c] = linked % 2
    return out


def test_examples():
    assert gaussian_parity(parse_gauss_code("O1+U1+")) == {1: 0}
    assert gaussian_parity(parse_gauss_code("O1+O2+U1+U2+")) == {1: 1, 2: 1}
    nested = parse_gauss_code("O1+U2+O2+U1+")
    assert gaussian_parity(nested) == {1: 0, 2: 0}
    assert project(parse_gauss_code("O1+O2+U1+U2+")) == GaussDiagram()
    assert project(nested) == nested


@given(diagrams(10))
def test_parity_matches_interleaving(d):
    assert gaussian_parity(d) == interleaving_oracle(d)


@given(diagrams(8))
def test_parity_rotation_invariant(d):
    f = gaussian_parity(d)
    for k in range(len(d.endpoints)):
        assert gaussian_parity(rotate(d, k)) == f


@given(diagrams(10))
def test_projection_never_increases_bridges(d):
    assert bridge_count(project(d)) <= bridge_count(d)
    star = project_star(d)
    assert not any(gaussian_parity(star).values())
    assert bridge_count(star) <= bridge_count(d)


def test_projection_is_single_pass():
    d = parse_gauss_code("U1-O2+O3+O4-O5+U4-U2+O1-U3+U5+")
    once = project(d)
    assert to_code(once) == "U1-O2+O3+U2+O1-U3+"
    assert sorted(c for c, f in gaussian_parity(once).items() if f) == [1, 2]
    assert project(once) != once
    assert project_star(d) == project_star(once)
    assert not any(gaussian_parity(project_star(d)).values())


@settings(max_examples=60, deadline=None)
@given(diagrams(6))
def test_axioms_on_enumerated_moves(d):
    for m in enumerate_moves(d, VIRTUAL, d.n + 2):
        assert check_axioms(d, m)


def test_axiom_examples():
    d = parse_gauss_code("O1+U1+O2+O3-U2+U3-")
    for m in enumerate_moves(d, VIRTUAL, d.n + 1):
        if m.kind in (R1_DELETE, R1_INSERT):
            e = apply_move(d, m)
            chord = m.site[0] if m.kind == R1_DELETE else max(e.chords)
            assert gaussian_parity(e if m.kind == R1_INSERT else d)[chord] == 0
        if m.kind in (R2_DELETE, R3):
            assert check_axioms(d, m)


def test_check_axioms_with_bad_parity():
    d = parse_gauss_code("O1+O2-U1+U2-")
    m = next(m for m in enumerate_moves(d, VIRTUAL, 2) if m.kind == R2_DELETE)
    assert check_axioms(d, m)
    assert not check_axioms(d, m, {1: 1, 2: 0})


def one_move_apart(a, b):
    if canonical_key(a) == canonical_key(b):
        return True
    goal = canonical_key(b)
    return any(canonical_key(apply_move(a, m)) == goal for m in enumerate_moves(a, VIRTUAL, max(a.n, b.n) + 1))


def test_projection_spot_confirmation():
    # each move between diagrams becomes at most one move between their projections
    for i in range(60):
        d = random_diagram(i % 5, seed=300 + i)
        for m in enumerate_moves(d, VIRTUAL, d.n + 1):
            assert one_move_apart(project(d), project(apply_move(d, m))), (to_code(d), m)
