"""Gaussian parity and the parity projection that erases odd chords."""

from __future__ import annotations

from .gauss import GaussDiagram, delete_chords
from .rmoves import R3, apply_move, chords_touched


def chord_parity(d: GaussDiagram, chord: int) -> int:
    """Endpoints strictly between the chord's tail and head, mod 2 (= linked chords mod 2)."""
    t, h = d._chord_positions(chord)
    return ((h - t) % len(d.endpoints) - 1) % 2


def gaussian_parity(d: GaussDiagram) -> dict:
    return {c: chord_parity(d, c) for c in d.chords}


def odd_chords(d: GaussDiagram, parity: dict | None = None) -> set:
    parity = gaussian_parity(d) if parity is None else parity
    return {c for c, f in parity.items() if f}


def project(d: GaussDiagram, parity: dict | None = None) -> GaussDiagram:
    """Delete the odd chords once.  The result may have odd chords again."""
    return delete_chords(d, odd_chords(d, parity))


def project_star(d: GaussDiagram) -> GaussDiagram:
    """Project repeatedly until every chord is even."""
    while True:
        odd = odd_chords(d)
        if not odd:
            return d
        d = delete_chords(d, odd)


def check_axioms(d: GaussDiagram, m, parity: dict | None = None) -> bool:
    """Parity axioms on one move: touched chords sum to 0 mod 2; R3 keeps each parity.

    ``parity`` is the assignment on ``d`` (Gaussian parity when omitted).  For
    insertions the new chords are read on the enlarged diagram.
    """
    after = apply_move(d, m)
    touched = chords_touched(d, m, after)
    if parity is None:
        before = {c: chord_parity(d, c) for c in touched if c in d.positions}
    else:
        before = {c: parity[c] for c in touched if c in parity}
    if m.kind.endswith("_insert"):
        values = [chord_parity(after, c) for c in touched]
    else:
        values = [before[c] for c in touched]
    if m.kind == R3:
        if any(chord_parity(after, c) != before[c] for c in touched):
            return False
    elif m.kind.startswith("Forbidden"):
        return True
    return sum(values) % 2 == 0
