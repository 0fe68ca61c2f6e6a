"""Fox free differential calculus and Alexander matrices."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownGenerator
from .laurent import T_RING, TV_RING, LaurentPoly
from .present import GroupPresentation


def _abelianization(generators, aux):
    """Exponent vector of each generator: meridional -> t, auxiliary -> v."""
    if aux is None:
        return {g: (1,) for g in generators}, T_RING
    image = {g: (1, 0) for g in generators}
    image[aux] = (0, 1)
    return image, TV_RING


def fox_derivative(word, g: str, generators=None, aux: str | None = None) -> LaurentPoly:
    """Fox derivative of ``word`` with respect to ``g``, abelianized.

    Every meridional generator maps to ``t`` and ``aux`` (if given) maps to ``v``.
    When ``generators`` is omitted, every symbol other than ``aux`` is meridional.
    """
    if generators is None:
        generators = sorted({s for s, _ in word if s != aux} | ({g} if g != aux else set()))
    image, ring = _abelianization(generators, aux)
    if g not in image:
        raise UnknownGenerator(g)
    nvars = len(ring)
    prefix = (0,) * nvars
    out: dict = {}
    for s, e in word:
        try:
            step = image[s]
        except KeyError:
            raise UnknownGenerator(s) from None
        if e > 0:
            if s == g:
                out[prefix] = out.get(prefix, 0) + 1
            prefix = tuple(a + b for a, b in zip(prefix, step))
        else:
            prefix = tuple(a - b for a, b in zip(prefix, step))
            if s == g:
                # d(g^-1)/dg = -g^-1, evaluated after the prefix
                out[prefix] = out.get(prefix, 0) - 1
    return LaurentPoly(out, ring)


def abelianize(word, generators, aux=None) -> LaurentPoly:
    image, ring = _abelianization(generators, aux)
    exp = [0] * len(ring)
    for s, e in word:
        for i, x in enumerate(image[s]):
            exp[i] += e * x
    return LaurentPoly.monomial(exp, 1, ring)


@dataclass(frozen=True)
class LaurentMatrix:
    rows: tuple  # tuple of tuples of LaurentPoly
    columns: tuple  # column labels
    meridional: tuple  # bool per column
    vars: tuple = T_RING

    @property
    def shape(self) -> tuple:
        return len(self.rows), len(self.columns)

    @property
    def meridional_count(self) -> int:
        return sum(self.meridional)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, label) -> tuple:
        j = self.columns.index(label)
        return tuple(r[j] for r in self.rows)

    def __str__(self):
        cells = [[str(x) for x in r] for r in self.rows]
        width = max((len(c) for r in cells for c in r), default=1)
        head = " ".join(c.rjust(width) for c in self.columns)
        body = "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)
        return head + ("\n" + body if body else "")


def alexander_matrix(p: GroupPresentation) -> LaurentMatrix:
    """Rows are relators, columns the meridional generators followed by ``v`` when present."""
    cols = p.all_generators
    ring = TV_RING if p.aux else T_RING
    rows = tuple(tuple(fox_derivative(r, g, p.generators, p.aux) for g in cols) for r in p.relators)
    return LaurentMatrix(rows, cols, tuple(g != p.aux for g in cols), ring)
