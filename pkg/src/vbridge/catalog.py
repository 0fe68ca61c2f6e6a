"""Named diagrams and printed presentations used by the examples and the acceptance suite.

The diagrams were transcribed from printed relations: each one's knot group
reproduces the listed relations up to relabeling of the arcs.
"""

from __future__ import annotations

from .gauss import Endpoint, GaussDiagram, HEAD, TAIL, parse_gauss_code
from .present import GroupPresentation, presentation_from_strings

# Two copies of the two-chord diagram O1+O2-U1+U2- joined end to end.
DOUBLED_CODE = "O3+O2-U1+U2-O1+O4-U3+U4-"
DOUBLED_HALF_CODE = "O1+O2-U1+U2-"

# Virtual knot 4.103; flipping chord 2 gives a diagram undone by two R2 moves.
K4103_CODE = "O2-O3-U1-O4+U2-U3-O1-U4+"
K4103_FLIP_CHORD = 2

VIRTUAL_TREFOIL_CODE = "O1+O2+U1+U2+"
TREFOIL_CODE = "O1+U2+O3+U1+O2+U3+"


def doubled_diagram() -> GaussDiagram:
    return parse_gauss_code(DOUBLED_CODE)


def doubled_half() -> GaussDiagram:
    return parse_gauss_code(DOUBLED_HALF_CODE)


def k4103_diagram() -> GaussDiagram:
    return parse_gauss_code(K4103_CODE)


def kn_diagram(n: int) -> GaussDiagram:
    """n blocks ``T(y_i) T(s_i) H(y_{i+1}) H(s_i)`` with positive y-chords and negative s-chords.

    Its knot group is the printed K_n presentation after inverting every generator.
    """
    if n < 1:
        raise ValueError("n must be positive")
    ends = []
    for i in range(n):
        y, y_next, s = i + 1, (i + 1) % n + 1, n + i + 1
        ends += [Endpoint(y, TAIL, 1), Endpoint(s, TAIL, -1), Endpoint(y_next, HEAD, 1), Endpoint(s, HEAD, -1)]
    return GaussDiagram(tuple(ends))


# -- printed presentations -------------------------------------------------

def p687262() -> GroupPresentation:
    return presentation_from_strings(
        "a b c", ["a^{-1}c^{-1}a^{-1}cac", "b^{-1}a^{-1}b^{-1}aba", "c^{-1}b^{-1}c^{-1}bcb"]
    )


def doubled_relations() -> GroupPresentation:
    return presentation_from_strings("a b c d", ["b=cac^{-1}", "c=a^{-1}ba", "d=aca^{-1}", "a=c^{-1}dc"])


def doubled_one_relator() -> GroupPresentation:
    return presentation_from_strings("a b", ["a^{-1}bab^{-1}ab^{-1}"])


def k4103_relations() -> GroupPresentation:
    # the printed last relation reads "a=bdb^{=1}"; taken as b^{-1}
    return presentation_from_strings("a b c d", ["b=d^{-1}ad", "c=a^{-1}ba", "d=a^{-1}ca", "a=bdb^{-1}"])


def k4103_one_relator() -> GroupPresentation:
    return presentation_from_strings("a b", ["a^2b^{-1}aba^{-2}b^{-1}"])


def kn_presentation(n: int) -> GroupPresentation:
    """Generators a1..an, relators a_i a_{i+1}^-1 a_i a_{i+1} a_i^-1 a_{i+1}^-1 (indices mod n)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    gens = [f"a{i + 1}" for i in range(n)]
    rels = []
    for i in range(n):
        x, y = gens[i], gens[(i + 1) % n]
        rels.append(f"{x} {y}^-1 {x} {y} {x}^-1 {y}^-1")
    return presentation_from_strings(gens, rels)
