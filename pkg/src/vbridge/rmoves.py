"""Oriented Reidemeister moves and the forbidden overpass on Gauss diagrams.

Every move is a :class:`MoveInstance` with a ``kind``, a ``variant`` string and
a ``site``.  Sites are chord labels for deletions and R3, gap indices for
insertions (gap k sits before endpoint k) and endpoint positions for the tail
swap.  ``apply_move`` is deterministic, so a list of instances replays exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InapplicableMove
from .gauss import HEAD, TAIL, Endpoint, GaussDiagram

R1_INSERT = "R1_insert"
R1_DELETE = "R1_delete"
R2_INSERT = "R2_insert"
R2_DELETE = "R2_delete"
R3 = "R3"
TAIL_SWAP = "ForbiddenTailSwap"

VIRTUAL = "virtual"
WELDED = "welded"
MOVE_SETS = (VIRTUAL, WELDED)

# Admissible R3 configurations.  Name the three strands top, middle and bottom
# by height and the crossings tm, tb, mb after the strands they join.  The top
# strand carries the tails of tm and tb, the middle strand the head of tm and
# the tail of mb, the bottom strand the heads of tb and mb.  An entry records,
# for each strand, which crossing is met first along the orientation, followed
# by the signs of tm, tb and mb.  The move reverses all three orders.
R3_PATTERNS = frozenset({
    ("tb", "mb", "mb", -1, -1, -1), ("tb", "mb", "mb", 1, 1, 1),
    ("tb", "mb", "tb", -1, 1, 1), ("tb", "mb", "tb", 1, -1, -1),
    ("tb", "tm", "mb", -1, 1, -1), ("tb", "tm", "mb", 1, -1, 1),
    ("tb", "tm", "tb", -1, -1, 1), ("tb", "tm", "tb", 1, 1, -1),
    ("tm", "mb", "mb", -1, -1, 1), ("tm", "mb", "mb", 1, 1, -1),
    ("tm", "mb", "tb", -1, 1, -1), ("tm", "mb", "tb", 1, -1, 1),
    ("tm", "tm", "mb", -1, 1, 1), ("tm", "tm", "mb", 1, -1, -1),
    ("tm", "tm", "tb", -1, -1, -1), ("tm", "tm", "tb", 1, 1, 1),
})


@dataclass(frozen=True, order=True)
class MoveInstance:
    kind: str
    variant: str
    site: tuple

    def to_json(self) -> dict:
        return {"kind": self.kind, "variant": self.variant, "site": list(self.site)}

    @classmethod
    def from_json(cls, obj: dict) -> "MoveInstance":
        return cls(obj["kind"], obj["variant"], tuple(obj["site"]))

    def __str__(self):
        return f"{self.kind}[{self.variant}]@{','.join(map(str, self.site))}"


def _sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


def _next_labels(d: GaussDiagram, k: int) -> list:
    top = max(d.chords, default=0)
    return [top + i + 1 for i in range(k)]


# -- enumeration -----------------------------------------------------------

def _r1_deletions(d):
    size = len(d.endpoints)
    for c in d.chords:
        t, h = d.positions[c]
        if (t - h) % size in (1, size - 1):
            yield MoveInstance(R1_DELETE, _sign_char(d.sign(c)), (c,))


def _r2_deletions(d):
    ends, size = d.endpoints, len(d.endpoints)
    for p in range(size):
        q = (p + 1) % size
        a, b = ends[p], ends[q]
        if p == q or a.role != TAIL or b.role != TAIL or a.sign == b.sign:
            continue
        ha, hb = d.positions[a.chord][1], d.positions[b.chord][1]
        if (hb - ha) % size == 1:
            variant = "parallel"
        elif (ha - hb) % size == 1:
            variant = "antiparallel"
        else:
            continue
        yield MoveInstance(R2_DELETE, variant, (a.chord, b.chord))


def _r3_sites(d):
    """Yield (c_tm, c_tb, c_mb, pattern) for every admissible R3 configuration."""
    ends, size = d.endpoints, len(d.endpoints)
    if size < 6:
        return
    pos = d.positions
    for p in range(size):
        q = (p + 1) % size
        if ends[p].role != TAIL or ends[q].role != TAIL:
            continue
        first, second = ends[p].chord, ends[q].chord
        for tm, tb in ((first, second), (second, first)):
            h = pos[tm][1]
            for nb in ((h - 1) % size, (h + 1) % size):
                e = ends[nb]
                if e.role != TAIL or e.chord in (tm, tb):
                    continue
                mb = e.chord
                htb, hmb = pos[tb][1], pos[mb][1]
                if (hmb - htb) % size == 1:
                    bot = "tb"
                elif (htb - hmb) % size == 1:
                    bot = "mb"
                else:
                    continue
                top = "tm" if tm == first else "tb"
                mid = "tm" if (nb - h) % size == 1 else "mb"
                key = (top, mid, bot, d.sign(tm), d.sign(tb), d.sign(mb))
                if key in R3_PATTERNS:
                    yield tm, tb, mb, key


def _r3_moves(d):
    for tm, tb, mb, key in _r3_sites(d):
        yield MoveInstance(R3, "".join(key[:3]) + "".join(_sign_char(s) for s in key[3:]), (tm, tb, mb))


def _tail_swaps(d):
    ends, size = d.endpoints, len(d.endpoints)
    if size < 4:
        return
    for p in range(size):
        q = (p + 1) % size
        if ends[p].role == TAIL and ends[q].role == TAIL:
            yield MoveInstance(TAIL_SWAP, "", (p, q))


def _gaps(d):
    return range(max(len(d.endpoints), 1))


def _r1_insertions(d):
    for g in _gaps(d):
        for s in (1, -1):
            for order in ("TH", "HT"):
                yield MoveInstance(R1_INSERT, _sign_char(s) + order, (g,))


def _r2_insertions(d):
    gaps = _gaps(d)
    for g1 in gaps:
        for g2 in gaps:
            for s in (1, -1):
                for orient in ("parallel", "antiparallel"):
                    variant = f"{_sign_char(s)}{orient}"
                    if g1 == g2:
                        yield MoveInstance(R2_INSERT, variant + ":tails-first", (g1, g2))
                        yield MoveInstance(R2_INSERT, variant + ":heads-first", (g1, g2))
                    else:
                        yield MoveInstance(R2_INSERT, variant, (g1, g2))


def enumerate_moves(d: GaussDiagram, move_set: str = VIRTUAL, max_chords: int | None = None) -> list:
    """Every applicable move instance, in a fixed order (deletions first).

    Insertions are offered only while the result keeps at most ``max_chords``
    chords; ``None`` means ``d.n + 2``.
    """
    if move_set not in MOVE_SETS:
        raise ValueError(f"unknown move set {move_set!r}")
    if max_chords is None:
        max_chords = d.n + 2
    moves = list(_r1_deletions(d))
    moves.extend(_r2_deletions(d))
    moves.extend(_r3_moves(d))
    if move_set == WELDED:
        moves.extend(_tail_swaps(d))
    if d.n + 1 <= max_chords:
        moves.extend(_r1_insertions(d))
    if d.n + 2 <= max_chords:
        moves.extend(_r2_insertions(d))
    return moves


# -- application -----------------------------------------------------------

def _insert_blocks(ends: tuple, blocks) -> tuple:
    """Insert ``(gap, rank, block)`` triples; equal gaps go in rank order."""
    out = list(ends)
    for gap, _, block in sorted(blocks, key=lambda b: (-b[0], -b[1])):
        out[gap:gap] = block
    return tuple(out)


def _check(cond: bool, m: MoveInstance):
    if not cond:
        raise InapplicableMove(str(m))


def apply_move(d: GaussDiagram, m: MoveInstance) -> GaussDiagram:
    kind = m.kind
    ends, size = d.endpoints, len(d.endpoints)
    if kind == R1_DELETE:
        (c,) = m.site
        _check(c in d.positions, m)
        t, h = d.positions[c]
        _check((t - h) % size in (1, size - 1), m)
        return GaussDiagram.trusted(tuple(e for e in ends if e.chord != c))
    if kind == R2_DELETE:
        _check(m in set(_r2_deletions(d)), m)
        x, y = m.site
        return GaussDiagram.trusted(tuple(e for e in ends if e.chord not in (x, y)))
    if kind == R3:
        _check(len(m.site) == 3 and all(c in d.positions for c in m.site), m)
        tm, tb, mb = m.site
        _check(any((a, b, c) == (tm, tb, mb) for a, b, c, _ in _r3_sites(d)), m)
        out = list(ends)
        pos = d.positions
        for p1, p2 in ((pos[tm][0], pos[tb][0]), (pos[tm][1], pos[mb][0]), (pos[tb][1], pos[mb][1])):
            out[p1], out[p2] = out[p2], out[p1]
        return GaussDiagram.trusted(tuple(out))
    if kind == TAIL_SWAP:
        _check(len(m.site) == 2, m)
        p, q = m.site
        _check(size >= 4 and 0 <= p < size and q == (p + 1) % size, m)
        _check(ends[p].role == TAIL and ends[q].role == TAIL, m)
        out = list(ends)
        out[p], out[q] = out[q], out[p]
        return GaussDiagram.trusted(tuple(out))
    if kind == R1_INSERT:
        (g,) = m.site
        _check(0 <= g < max(size, 1) and len(m.variant) == 3, m)
        s = 1 if m.variant[0] == "+" else -1
        (c,) = _next_labels(d, 1)
        tail, head = Endpoint(c, TAIL, s), Endpoint(c, HEAD, s)
        block = (tail, head) if m.variant[1:] == "TH" else (head, tail)
        return GaussDiagram.trusted(_insert_blocks(ends, [(g, 0, block)]))
    if kind == R2_INSERT:
        g1, g2 = m.site
        _check(0 <= g1 < max(size, 1) and 0 <= g2 < max(size, 1), m)
        variant, _, order = m.variant.partition(":")
        _check((g1 == g2) == bool(order), m)
        s = 1 if variant[0] == "+" else -1
        a, b = _next_labels(d, 2)
        tails = (Endpoint(a, TAIL, s), Endpoint(b, TAIL, -s))
        if variant[1:] == "parallel":
            heads = (Endpoint(a, HEAD, s), Endpoint(b, HEAD, -s))
        else:
            heads = (Endpoint(b, HEAD, -s), Endpoint(a, HEAD, s))
        tail_rank = 0 if order != "heads-first" else 1
        return GaussDiagram.trusted(_insert_blocks(ends, [(g1, tail_rank, tails), (g2, 1 - tail_rank, heads)]))
    raise InapplicableMove(f"unknown move kind {kind!r}")


def chords_touched(d: GaussDiagram, m: MoveInstance, after: GaussDiagram | None = None) -> tuple:
    """Chord labels the move creates, removes or slides."""
    if m.kind in (R1_DELETE, R2_DELETE, R3):
        return tuple(m.site)
    if m.kind == TAIL_SWAP:
        return tuple(d.endpoints[p].chord for p in m.site)
    if after is None:
        after = apply_move(d, m)
    return tuple(sorted(set(after.chords) - set(d.chords)))
