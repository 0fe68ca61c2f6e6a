"""Bounded breadth-first search over move-equivalent Gauss diagrams.

The search yields upper bounds only.  A state is identified by its rotation
canonical key, and the neighbour order is fixed, so a result depends only on
the start diagram and the budget.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .gauss import GaussDiagram, bridge_count, canonical_key
from .rmoves import VIRTUAL, MoveInstance, apply_move, enumerate_moves


@dataclass(frozen=True)
class SearchBudget:
    max_chords: int | None = None  # None: chord count of the start diagram + 2
    max_depth: int = 8
    max_states: int = 10**6

    def __post_init__(self):
        for name in ("max_depth", "max_states"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.max_chords is not None and self.max_chords < 0:
            raise ValueError("max_chords must be non-negative")

    def chords_for(self, d: GaussDiagram) -> int:
        return d.n + 2 if self.max_chords is None else self.max_chords

    def to_json(self) -> dict:
        return {"max_chords": self.max_chords, "max_depth": self.max_depth, "max_states": self.max_states}


@dataclass(frozen=True)
class SearchResult:
    min_bridge_found: int
    trivialized: bool
    witness: tuple  # moves from the start to a diagram realizing min_bridge_found
    exhausted: bool
    states_visited: int
    move_set: str = VIRTUAL
    budget: SearchBudget = field(default_factory=SearchBudget)

    def to_json(self) -> dict:
        return {
            "move_set": self.move_set,
            "budget": self.budget.to_json(),
            "min_bridge_found": self.min_bridge_found,
            "trivialized": self.trivialized,
            "exhausted": self.exhausted,
            "states_visited": self.states_visited,
            "witness": [m.to_json() for m in self.witness],
        }


def replay(d: GaussDiagram, moves) -> GaussDiagram:
    for m in moves:
        d = apply_move(d, m)
    return d


def explore(
    d: GaussDiagram,
    move_set: str = VIRTUAL,
    budget: SearchBudget | None = None,
    target_bridges: int | None = None,
) -> SearchResult:
    """Breadth-first search from ``d``.

    Stops early once the empty diagram is reached, or once a diagram with at
    most ``target_bridges`` overbridges is seen.  ``exhausted`` is true only
    when every state within the chord and depth limits was expanded.
    """
    budget = budget or SearchBudget()
    max_chords = budget.chords_for(d)
    start_key = canonical_key(d)
    parent: dict = {start_key: None}
    best_key, best = start_key, bridge_count(d)
    frontier = deque([(d, start_key, 0)])
    truncated = False
    trivial_key = None
    if d.n == 0:
        trivial_key = start_key
    done = trivial_key is not None or (target_bridges is not None and best <= target_bridges)

    while frontier and not done:
        state, key, depth = frontier.popleft()
        if depth >= budget.max_depth:
            truncated = truncated or bool(enumerate_moves(state, move_set, max_chords))
            continue
        for m in enumerate_moves(state, move_set, max_chords):
            nxt = apply_move(state, m)
            k = canonical_key(nxt)
            if k in parent:
                continue
            if len(parent) >= budget.max_states:
                truncated = True
                frontier.clear()
                break
            parent[k] = (key, m)
            b = bridge_count(nxt)
            if nxt.n == 0:
                trivial_key = k
            if b < best:
                best, best_key = b, k
            if trivial_key is not None or (target_bridges is not None and best <= target_bridges):
                done = True
                break
            frontier.append((nxt, k, depth + 1))

    goal = trivial_key if trivial_key is not None else best_key
    return SearchResult(
        min_bridge_found=best,
        trivialized=trivial_key is not None,
        witness=_path(parent, goal),
        exhausted=not truncated and not done and not frontier,
        states_visited=len(parent),
        move_set=move_set,
        budget=budget,
    )


def _path(parent: dict, key) -> tuple:
    moves = []
    while parent[key] is not None:
        key, m = parent[key]
        moves.append(m)
    return tuple(reversed(moves))


def explore_escalating(
    d: GaussDiagram,
    move_set: str = VIRTUAL,
    budget: SearchBudget | None = None,
    target_bridges: int | None = None,
) -> SearchResult:
    """Run :func:`explore` with chord limits n, n+1, ... up to the budget's limit.

    Small chord limits keep the state space tiny, so cheap witnesses are found
    first.  The last run (or the first that reaches the goal) is returned.
    """
    budget = budget or SearchBudget()
    top = budget.chords_for(d)
    result = None
    for chords in range(min(d.n, top), top + 1):
        step = SearchBudget(chords, budget.max_depth, budget.max_states)
        result = explore(d, move_set, step, target_bridges)
        if result.trivialized or (target_bridges is not None and result.min_bridge_found <= target_bridges):
            break
    return SearchResult(
        result.min_bridge_found,
        result.trivialized,
        result.witness,
        result.exhausted,
        result.states_visited,
        move_set,
        budget,
    )


def witness_is_valid(d: GaussDiagram, result: SearchResult) -> bool:
    """Replay the witness and check it realizes the reported bridge count (or triviality)."""
    end = replay(d, result.witness)
    if result.trivialized:
        return end.n == 0
    return bridge_count(end) == result.min_bridge_found


def as_moves(obj) -> tuple:
    return tuple(m if isinstance(m, MoveInstance) else MoveInstance.from_json(m) for m in obj)
