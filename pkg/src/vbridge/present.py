"""Group presentations read off Gauss diagrams.

Words in a free group are tuples of ``(symbol, exponent)`` letters with
exponent ``+1`` or ``-1``.  A :class:`GroupPresentation` keeps its meridional
generators apart from the optional auxiliary generator ``v`` used by the
reduced virtual knot group.
"""

from __future__ import annotations

import itertools
import re
from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass

from .errors import NoAuxiliaryGenerator, PresentationSyntaxError, UnknownGenerator
from .gauss import HEAD, TAIL, GaussDiagram, mirror

Letter = tuple  # (symbol, +1 | -1)
FreeWord = tuple  # tuple of letters


# -- word algebra ----------------------------------------------------------

def reduce_word(word) -> FreeWord:
    out: list = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def inverse(word) -> FreeWord:
    return tuple((s, -e) for s, e in reversed(word))


def power(symbol: str, k: int) -> FreeWord:
    return ((symbol, 1 if k > 0 else -1),) * abs(k)


def cyclic_reduce(word) -> FreeWord:
    w = list(reduce_word(word))
    while len(w) > 1 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return tuple(w)


def cyclic_normal_form(word) -> FreeWord:
    """Smallest rotation of the cyclically reduced word or of its inverse."""
    w = cyclic_reduce(word)
    if not w:
        return ()
    candidates = []
    for u in (w, inverse(w)):
        candidates.extend(u[k:] + u[:k] for k in range(len(u)))
    return min(candidates)


def substitute(word, symbol: str, replacement) -> FreeWord:
    out: list = []
    inv = inverse(replacement)
    for s, e in word:
        if s == symbol:
            out.extend(replacement if e > 0 else inv)
        else:
            out.append((s, e))
    return reduce_word(out)


def delete_symbol(word, symbol: str) -> FreeWord:
    return tuple(letter for letter in word if letter[0] != symbol)


def word_to_str(word) -> str:
    """Render in compact notation ``a^-1 c^-1 a^-1 c a c`` (powers collapsed)."""
    if not word:
        return "1"
    parts = []
    for symbol, group in itertools.groupby(word):
        k = sum(1 for _ in group) * symbol[1]
        parts.append(symbol[0] if k == 1 else f"{symbol[0]}^{k}")
    return " ".join(parts)


_LETTER = re.compile(r"\s*([A-Za-z](?:_?\d+)?)\s*(?:\^\s*\{?\s*(-?\d+)\s*\}?)?")


def parse_word(text: str) -> FreeWord:
    """Parse ``"a^2 b^{-1} a b a^-2 b^-1"`` (spaces optional, ``1`` is the empty word)."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    out: list = []
    pos = 0
    while pos < len(text):
        m = _LETTER.match(text, pos)
        if m is None or m.end() == pos:
            raise PresentationSyntaxError(f"cannot parse word at {text[pos:]!r}")
        symbol, exp = m.group(1), int(m.group(2)) if m.group(2) else 1
        out.extend(power(symbol.replace("_", ""), exp))
        pos = m.end()
        while pos < len(text) and text[pos] in " ,·*":
            pos += 1
    return reduce_word(out)


def parse_relation(text: str) -> FreeWord:
    """A relation ``lhs = rhs`` becomes the relator ``lhs rhs^-1``; a bare word is a relator."""
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        return reduce_word(parse_word(lhs) + inverse(parse_word(rhs)))
    return parse_word(text)


# -- presentations ---------------------------------------------------------

@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple  # meridional generators, in order
    relators: tuple = ()
    aux: str | None = None

    def __post_init__(self):
        known = set(self.generators)
        if self.aux is not None:
            known.add(self.aux)
        for r in self.relators:
            for s, e in r:
                if s not in known:
                    raise UnknownGenerator(f"relator letter {s!r} is not a generator")
                if e not in (1, -1):
                    raise PresentationSyntaxError(f"bad exponent {e}")

    @property
    def all_generators(self) -> tuple:
        return self.generators + ((self.aux,) if self.aux else ())

    def is_meridional(self, symbol: str) -> bool:
        return symbol in self.generators

    def __str__(self):
        gens = ", ".join(self.generators)
        if self.aux:
            gens += f"; {self.aux}"
        rels = ", ".join(word_to_str(r) for r in self.relators)
        return f"< {gens} | {rels} >"

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "auxiliary": self.aux,
            "relators": [word_to_str(r) for r in self.relators],
        }


def presentation_from_strings(generators, relations, aux=None) -> GroupPresentation:
    """Build a presentation from printed relators or relations (``"b=cac^{-1}"``)."""
    if isinstance(generators, str):
        generators = [g.strip() for g in generators.replace(",", " ").split()]
    return GroupPresentation(tuple(generators), tuple(parse_relation(r) for r in relations), aux)


def knot_group(d: GaussDiagram) -> GroupPresentation:
    """Wirtinger presentation: one generator per arc between consecutive heads, one relator per chord.

    Arc ``a_i`` ends at the i-th head; the chord with that head contributes
    ``a_{i+1} = a_j^e a_i a_j^-e`` where ``a_j`` carries its tail and ``e`` is its sign.
    """
    if d.n == 0:
        return GroupPresentation(("a1",))
    heads = [i for i, e in enumerate(d.endpoints) if e.role == HEAD]
    n = len(heads)
    names = tuple(f"a{i + 1}" for i in range(n))
    relators = []
    for i, h in enumerate(heads):
        e = d.endpoints[h]
        tail, _ = d.positions[e.chord]
        over = names[bisect_left(heads, tail) % n]
        inc, out = names[i], names[(i + 1) % n]
        eps = e.sign
        relators.append(reduce_word(((out, 1), (over, eps), (inc, -1), (over, -eps))))
    return GroupPresentation(names, tuple(relators))


def reduced_group(d: GaussDiagram, aux: str = "v") -> GroupPresentation:
    """Reduced virtual knot group: 2n arc generators, auxiliary ``v``, two relators per chord.

    Arc ``a_k`` ends at endpoint k-1 (1-based names), so endpoint p separates
    arc ``a_{p}`` from ``a_{p+1}`` in 0-based terms.
    """
    if d.n == 0:
        return GroupPresentation(("a1",), (), aux)
    size = len(d.endpoints)
    names = tuple(f"a{k + 1}" for k in range(size))
    relators = []
    for chord in d.chords:
        j, i = d.positions[chord]
        eps = d.sign(chord)
        aj, aj1 = names[j], names[(j + 1) % size]
        ai, ai1 = names[i], names[(i + 1) % size]
        relators.append(reduce_word(((aj1, 1), (aux, eps), (aj, -1), (aux, -eps))))
        relators.append(reduce_word(((ai1, 1), (aj, eps), (aux, -eps), (ai, -1), (aux, eps), (aj, -eps))))
    return GroupPresentation(names, tuple(relators), aux)


def upper_lower(d: GaussDiagram) -> tuple:
    return knot_group(d), knot_group(mirror(d))


def set_v_to_one(p: GroupPresentation) -> GroupPresentation:
    """Quotient by the normal closure of ``v``.

    Relators that collapse to ``x y^-1`` merge the two symbols; the remaining
    relators are rewritten in terms of the surviving representatives.
    """
    if p.aux is None:
        raise NoAuxiliaryGenerator("presentation has no auxiliary generator")
    parent = {g: g for g in p.generators}

    def find(g):
        while parent[g] != g:
            parent[g] = parent[parent[g]]
            g = parent[g]
        return g

    order = {g: i for i, g in enumerate(p.generators)}
    stripped = [delete_symbol(r, p.aux) for r in p.relators]
    rest = []
    for r in stripped:
        if len(r) == 2 and r[0][1] == 1 and r[1][1] == -1:
            a, b = find(r[0][0]), find(r[1][0])
            if a != b:
                lo, hi = sorted((a, b), key=order.__getitem__)
                parent[hi] = lo
        else:
            rest.append(r)
    gens = tuple(g for g in p.generators if find(g) == g)
    relators = []
    for r in rest:
        w = reduce_word(tuple((find(s), e) for s, e in r))
        relators.append(w)
    return GroupPresentation(gens, tuple(relators))


# -- Tietze elimination ----------------------------------------------------

def _conjugate_shape(word, x):
    """Return True if the reduced ``word`` is ``w y w^-1`` with y meridional letter != x and x not in w."""
    if len(word) % 2 == 0:
        return False
    k = len(word) // 2
    y, e = word[k]
    if e != 1 or y == x:
        return False
    w = word[:k]
    if any(s == x for s, _ in w):
        return False
    return word[k + 1:] == inverse(w)


def _solve_for(relator, x):
    """Solve ``relator = 1`` for the single occurrence of ``x``; returns the word equal to x."""
    idx = next(i for i, (s, _) in enumerate(relator) if s == x)
    rotated = relator[idx:] + relator[:idx]
    rest = rotated[1:]
    return reduce_word(inverse(rest) if rotated[0][1] == 1 else rest)


def tidy_relators(relators) -> tuple:
    """Cyclically reduce, drop trivial relators and duplicates up to rotation and inversion."""
    seen = set()
    out = []
    for r in relators:
        w = cyclic_reduce(r)
        if not w:
            continue
        key = cyclic_normal_form(w)
        if key in seen:
            continue
        seen.add(key)
        out.append(w)
    return tuple(out)


def eliminate_conjugation_generators(p: GroupPresentation) -> GroupPresentation:
    """Remove meridional generators defined by conjugation relators ``x = w y w^-1``.

    Preference goes to the generator with the fewest letter occurrences (arcs that
    carry no overcrossing), then to later generators, then to earlier relators.
    """
    gens = list(p.generators)
    relators = [reduce_word(r) for r in p.relators]
    meridional = set(gens)
    while True:
        counts = Counter(s for r in relators for s, _ in r)
        best = None
        for ri, r in enumerate(relators):
            once = Counter(s for s, _ in r)
            for x, c in once.items():
                if c != 1 or x not in meridional:
                    continue
                w = _solve_for(r, x)
                if not _conjugate_shape(w, x):
                    continue
                key = (counts[x], -gens.index(x), ri)
                if best is None or key < best[0]:
                    best = (key, ri, x, w)
        if best is None:
            break
        _, ri, x, w = best
        relators = [substitute(r, x, w) for k, r in enumerate(relators) if k != ri]
        gens.remove(x)
        meridional.discard(x)
    return GroupPresentation(tuple(gens), tidy_relators(relators), p.aux)


# -- comparison ------------------------------------------------------------

def same_up_to_relabeling(p: GroupPresentation, q: GroupPresentation, cyclic: bool = False) -> bool:
    """Is there a bijection of meridional generators carrying p's relators onto q's?

    Relators are compared as a multiset of reduced words, or of cyclic normal
    forms when ``cyclic`` is set.  The auxiliary generator must map to itself.
    """
    if len(p.generators) != len(q.generators) or (p.aux is None) != (q.aux is None):
        return False
    if len(p.relators) != len(q.relators):
        return False
    norm = cyclic_normal_form if cyclic else reduce_word

    def signature(pres):
        return Counter(norm(r) for r in pres.relators)

    target = signature(q)
    # prune by per-generator letter counts
    def profile(pres, g):
        return sorted(sum(1 for s, _ in r if s == g) for r in pres.relators)

    q_profiles = {g: profile(q, g) for g in q.generators}
    options = {g: [h for h in q.generators if q_profiles[h] == profile(p, g)] for g in p.generators}
    gens = list(p.generators)

    def search(i, used, mapping):
        if i == len(gens):
            if p.aux:
                mapping[p.aux] = q.aux
            rel = Counter(norm(tuple((mapping[s], e) for s, e in r)) for r in p.relators)
            return rel == target
        for h in options[gens[i]]:
            if h not in used:
                mapping[gens[i]] = h
                if search(i + 1, used | {h}, mapping):
                    return True
        return False

    return search(0, frozenset(), {})
