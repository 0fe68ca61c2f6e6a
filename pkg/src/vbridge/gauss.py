"""Gauss diagrams: data model, Gauss-code text format and diagram-level operations.

A diagram is a cyclic sequence of chord endpoints.  Each chord has a tail
(arrowtail, the overcrossing) and a head (arrowhead, the undercrossing), and
a sign shared by both endpoints.  The text format writes a tail as ``O`` and a
head as ``U``, followed by the chord label and its sign, e.g. ``O1+U2+O3+U1+O2+U3+``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import (
    CutOutOfRange,
    DanglingChord,
    DuplicateRole,
    MalformedToken,
    SignMismatch,
    UnknownChord,
)

HEAD = "H"
TAIL = "T"


class Endpoint(NamedTuple):
    chord: int
    role: str  # HEAD or TAIL
    sign: int


@dataclass(frozen=True)
class GaussDiagram:
    endpoints: tuple[Endpoint, ...] = ()

    def __post_init__(self):
        seen: dict[int, dict[str, int]] = {}
        for e in self.endpoints:
            if e.role not in (HEAD, TAIL) or e.sign not in (1, -1):
                raise MalformedToken(f"bad endpoint {e!r}")
            roles = seen.setdefault(e.chord, {})
            if e.role in roles:
                raise DuplicateRole(f"chord {e.chord} has two {'heads' if e.role == HEAD else 'tails'}")
            for s in roles.values():
                if s != e.sign:
                    raise SignMismatch(f"chord {e.chord} has endpoints of opposite sign")
            roles[e.role] = e.sign
        for c, roles in seen.items():
            if len(roles) != 2:
                raise DanglingChord(f"chord {c} appears only once")

    @classmethod
    def trusted(cls, endpoints: tuple) -> "GaussDiagram":
        """Build without validation; for callers that preserve the invariants by construction."""
        d = object.__new__(cls)
        object.__setattr__(d, "endpoints", endpoints)
        return d

    @property
    def n(self) -> int:
        return len(self.endpoints) // 2

    def __len__(self):
        return len(self.endpoints)

    @cached_property
    def chords(self) -> tuple[int, ...]:
        return tuple(sorted({e.chord for e in self.endpoints}))

    @cached_property
    def positions(self) -> dict[int, tuple[int, int]]:
        """Map chord -> (tail position, head position)."""
        tails, heads = {}, {}
        for i, e in enumerate(self.endpoints):
            (tails if e.role == TAIL else heads)[e.chord] = i
        return {c: (tails[c], heads[c]) for c in tails}

    def sign(self, chord: int) -> int:
        tail, _ = self._chord_positions(chord)
        return self.endpoints[tail].sign

    def _chord_positions(self, chord: int) -> tuple[int, int]:
        try:
            return self.positions[chord]
        except KeyError:
            raise UnknownChord(chord) from None

    def __str__(self):
        return to_code(self)


# -- text and JSON formats -------------------------------------------------

_TOKEN = re.compile(r"\s*([OU])(\d+)([+-])")


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse a Gauss code such as ``"O1+O2+U1+U2+"`` (whitespace allowed between tokens)."""
    endpoints = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise MalformedToken(f"cannot read a token at offset {pos}: {text[pos:pos + 8]!r}")
        letter, label, sign = m.groups()
        if int(label) < 1:
            raise MalformedToken(f"chord labels must be positive, got {label}")
        endpoints.append(Endpoint(int(label), TAIL if letter == "O" else HEAD, 1 if sign == "+" else -1))
        pos = m.end()
    return GaussDiagram(tuple(endpoints))


def to_code(d: GaussDiagram) -> str:
    d = relabel(d)
    return "".join(
        f"{'O' if e.role == TAIL else 'U'}{e.chord}{'+' if e.sign > 0 else '-'}" for e in d.endpoints
    )


def relabel(d: GaussDiagram) -> GaussDiagram:
    """Renumber chords 1..n in order of first appearance."""
    mapping: dict[int, int] = {}
    for e in d.endpoints:
        if e.chord not in mapping:
            mapping[e.chord] = len(mapping) + 1
    if all(k == v for k, v in mapping.items()):
        return d
    return GaussDiagram(tuple(Endpoint(mapping[e.chord], e.role, e.sign) for e in d.endpoints))


def to_json(d: GaussDiagram) -> dict:
    return {
        "n": d.n,
        "endpoints": [{"chord": e.chord, "role": e.role, "sign": e.sign} for e in d.endpoints],
    }


def from_json(obj: dict) -> GaussDiagram:
    d = GaussDiagram(tuple(Endpoint(int(e["chord"]), e["role"], int(e["sign"])) for e in obj["endpoints"]))
    if d.n != obj.get("n", d.n):
        raise MalformedToken("chord count does not match endpoint list")
    return d


# -- canonical form --------------------------------------------------------

def canonical_key(d: GaussDiagram) -> tuple:
    """Rotation-minimal sequence of (role, sign, partner offset) triples.

    Invariant under rotation of the basepoint and relabeling of chords; reflections
    and mirrors are deliberately not quotiented out.
    """
    size = len(d.endpoints)
    if size == 0:
        return ()
    partner = [0] * size
    for tail, head in d.positions.values():
        partner[tail] = head
        partner[head] = tail
    local = [(e.role, e.sign, (partner[i] - i) % size) for i, e in enumerate(d.endpoints)]
    doubled = local + local
    return min(tuple(doubled[k:k + size]) for k in range(size))


def rotate(d: GaussDiagram, k: int) -> GaussDiagram:
    if not d.endpoints:
        return d
    k %= len(d.endpoints)
    return GaussDiagram(d.endpoints[k:] + d.endpoints[:k])


# -- diagram-level operations ----------------------------------------------

def bridge_count(d: GaussDiagram) -> int:
    """Number of overbridges: maximal cyclic runs of tails.  The empty diagram counts as 1."""
    ends = d.endpoints
    if not ends:
        return 1
    return sum(1 for i, e in enumerate(ends) if e.role == TAIL and ends[i - 1].role == HEAD)


def mirror(d: GaussDiagram) -> GaussDiagram:
    """Vertical mirror image: reverse every arrow and negate every sign."""
    return GaussDiagram(
        tuple(Endpoint(e.chord, HEAD if e.role == TAIL else TAIL, -e.sign) for e in d.endpoints)
    )


def flip_sign(d: GaussDiagram, chord: int) -> GaussDiagram:
    d._chord_positions(chord)
    return GaussDiagram(
        tuple(Endpoint(e.chord, e.role, -e.sign) if e.chord == chord else e for e in d.endpoints)
    )


def delete_chords(d: GaussDiagram, ids: Iterable[int]) -> GaussDiagram:
    ids = set(ids)
    for c in ids:
        d._chord_positions(c)
    if not ids:
        return d
    return GaussDiagram(tuple(e for e in d.endpoints if e.chord not in ids))


def connected_sum(d1: GaussDiagram, p1: int, d2: GaussDiagram, p2: int) -> GaussDiagram:
    """Join d1 cut at gap p1 with d2 cut at gap p2.

    Gap k sits just before endpoint k; gap 2n is the same place as gap 0.  The
    chords of d2 are renumbered after those of d1.
    """
    for d, p in ((d1, p1), (d2, p2)):
        if not 0 <= p <= len(d.endpoints):
            raise CutOutOfRange(f"cut {p} outside 0..{len(d.endpoints)}")
    shift = max(d1.chords, default=0)
    first = rotate(d1, p1).endpoints
    second = tuple(Endpoint(e.chord + shift, e.role, e.sign) for e in rotate(d2, p2).endpoints)
    return GaussDiagram(first + second)


def all_connected_sums(d1: GaussDiagram, d2: GaussDiagram):
    """Yield ((p1, p2), sum) over every pair of cut positions (one representative per gap)."""
    for p1 in range(max(len(d1.endpoints), 1)):
        for p2 in range(max(len(d2.endpoints), 1)):
            yield (p1, p2), connected_sum(d1, p1, d2, p2)


def random_diagram(n: int, seed=None) -> GaussDiagram:
    """Uniform random pairing of 2n points with independent random signs and arrow directions."""
    if n < 0:
        raise ValueError("chord count must be non-negative")
    rng = random.Random(seed)
    slots = list(range(2 * n))
    rng.shuffle(slots)
    ends: list = [None] * (2 * n)
    for c in range(n):
        a, b = slots[2 * c], slots[2 * c + 1]
        sign = rng.choice((1, -1))
        if rng.random() < 0.5:
            a, b = b, a
        ends[a] = Endpoint(c + 1, TAIL, sign)
        ends[b] = Endpoint(c + 1, HEAD, sign)
    return relabel(GaussDiagram(tuple(ends)))


def tail_runs_and_head_runs(d: GaussDiagram) -> tuple[int, int]:
    ends = d.endpoints
    tails = sum(1 for i, e in enumerate(ends) if e.role == TAIL and ends[i - 1].role == HEAD)
    heads = sum(1 for i, e in enumerate(ends) if e.role == HEAD and ends[i - 1].role == TAIL)
    return tails, heads
