"""Elementary (Fitting) ideals of Alexander matrices and the bridge-number bounds they give.

Ideals live in Z[t^±1] or Z[t^±1, v^±1].  Membership is decided exactly: a
Laurent ideal is moved into an ordinary polynomial ring by adjoining one
variable ``w`` inverse to the product of the Laurent variables (``t*w - 1`` or
``t*v*w - 1``) and a strong Gröbner basis over Z is computed there.  The
computation has a work limit; past it :class:`GroebnerLimitExceeded` is
raised and the question is reported as undecided rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import groebner
from .errors import GroebnerLimitExceeded, RingMismatch
from .fox import LaurentMatrix
from .laurent import T_RING, LaurentPoly

EXACT = "exact"
UP_TO_UNITS = "up_to_units"
UP_TO_UNITS_AND_T_INVERSION = "up_to_units_and_t_inversion"

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)
GROEBNER_LIMITS = {"max_steps": 20000, "max_bits": 4096}


def _sort_key(p: LaurentPoly):
    return (len(p.terms), max(p.terms) if p.terms else (), sorted(p.terms.items()))


@dataclass(frozen=True)
class IdealGens:
    vars: tuple
    generators: tuple  # unit-normalized, distinct, no zeros
    k: int | None = None

    @classmethod
    def from_polys(cls, polys, vars=T_RING, k=None) -> "IdealGens":
        gens = {p.in_ring(vars).normalize() for p in polys if not p.is_zero()}
        return cls(tuple(vars), tuple(sorted(gens, key=_sort_key)), k)

    @classmethod
    def unit(cls, vars=T_RING, k=None) -> "IdealGens":
        return cls(tuple(vars), (LaurentPoly.const(1, vars),), k)

    @classmethod
    def zero(cls, vars=T_RING, k=None) -> "IdealGens":
        return cls(tuple(vars), (), k)

    def is_zero(self) -> bool:
        return not self.generators

    def is_principal(self) -> bool:
        return len(self.generators) <= 1

    def invert_t(self) -> "IdealGens":
        return IdealGens.from_polys([g.substitute_inverse_t() for g in self.generators], self.vars, self.k)

    def __str__(self):
        name = f"E{self.k} = " if self.k is not None else ""
        return name + "(" + ", ".join(str(g) for g in self.generators) + ")" if self.generators else name + "(0)"

    def to_json(self) -> dict:
        return {"k": self.k, "ring": list(self.vars), "generators": [str(g) for g in self.generators]}


# -- minors ----------------------------------------------------------------

def minors(mat: LaurentMatrix, size: int) -> list:
    """All nonzero size x size minors, by cofactor expansion memoized on (rows, columns)."""
    nrows, ncols = mat.shape
    if size == 0:
        return [LaurentPoly.const(1, mat.vars)]
    if size > nrows or size > ncols:
        return []
    rows = mat.rows
    zero = LaurentPoly({}, mat.vars)
    memo: dict = {}

    def det(rs, cs):
        key = (rs, cs)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if len(rs) == 1:
            val = rows[rs[0]][cs[0]]
        else:
            r0, rest = rs[0], rs[1:]
            val = zero
            for idx, c in enumerate(cs):
                entry = rows[r0][c]
                if entry.is_zero():
                    continue
                sub = det(rest, cs[:idx] + cs[idx + 1:])
                if sub.is_zero():
                    continue
                term = entry * sub
                val = val + term if idx % 2 == 0 else val - term
        memo[key] = val
        return val

    out = []
    for rs in combinations(range(nrows), size):
        for cs in combinations(range(ncols), size):
            d = det(rs, cs)
            if not d.is_zero():
                out.append(d)
    return out


def elementary_ideal(mat: LaurentMatrix, k: int, m: int | None = None) -> IdealGens:
    """k-th elementary ideal: generated by the (m-k)-minors, m = meridional column count."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if m is None:
        m = mat.meridional_count
    size = m - k
    if size <= 0:
        return IdealGens.unit(mat.vars, k)
    nrows, ncols = mat.shape
    if size > nrows or size > ncols:
        return IdealGens.zero(mat.vars, k)
    return IdealGens.from_polys(minors(mat, size), mat.vars, k)


# -- membership ------------------------------------------------------------

def _to_poly(p: LaurentPoly) -> dict:
    # one extra variable w stands for the inverse of the product of all variables
    lo = p.min_exponent()
    return {tuple(a - b for a, b in zip(e, lo)) + (0,): c for e, c in p.terms.items()}


def _inverse_relation(nvars: int) -> dict:
    return {(1,) * (nvars + 1): 1, (0,) * (nvars + 1): -1}


@lru_cache(maxsize=512)
def _basis(vars: tuple, generators: tuple) -> tuple:
    polys = [_to_poly(g) for g in generators]
    return tuple(groebner.strong_groebner([_inverse_relation(len(vars))] + polys, **GROEBNER_LIMITS))


def groebner_basis(ideal: IdealGens) -> tuple:
    return _basis(ideal.vars, ideal.generators)


def is_member(p: LaurentPoly, ideal: IdealGens) -> bool:
    if p.vars != ideal.vars:
        raise RingMismatch(f"{p.vars} vs {ideal.vars}")
    if p.is_zero():
        return True
    if not ideal.generators:
        return False
    if any(g.is_unit() for g in ideal.generators):
        return True
    if len(ideal.generators) == 1 and p.normalize() == ideal.generators[0]:
        return True
    basis = groebner_basis(ideal)
    return groebner.is_member(_to_poly(p), basis)


def is_trivial(ideal: IdealGens) -> bool:
    """Is the ideal the whole ring (1)?"""
    if not ideal.generators:
        return False
    if any(g.is_unit() for g in ideal.generators):
        return True
    if len(ideal.generators) == 1:
        return False
    if properness_witness(ideal) is not None:
        return False
    return is_member(LaurentPoly.const(1, ideal.vars), ideal)


def properness_witness(ideal: IdealGens, primes=SMALL_PRIMES):
    """A common zero (p, values) of all generators in (Z/p)^*; proves the ideal is proper."""
    nv = len(ideal.vars)
    gens = ideal.generators
    if not gens:
        return (2, (1,) * nv)
    for p in primes:
        for point in _points(p, nv):
            if all(g.evaluate_mod(point, p) == 0 for g in gens):
                return (p, point)
    return None


def _points(p: int, nv: int):
    if nv == 1:
        for x in range(1, p):
            yield (x,)
    else:
        for x in range(1, p):
            for y in range(1, p):
                yield (x, y)


def contains(big: IdealGens, small: IdealGens) -> bool:
    return all(is_member(g, big) for g in small.generators)


def ideal_equal(a: IdealGens, b: IdealGens, mode: str = UP_TO_UNITS) -> bool:
    if a.vars != b.vars:
        raise RingMismatch(f"{a.vars} vs {b.vars}")
    if mode == EXACT:
        return set(a.generators) == set(b.generators)
    if mode == UP_TO_UNITS:
        if a.is_principal() and b.is_principal():
            return a.generators == b.generators
        return contains(a, b) and contains(b, a)
    if mode == UP_TO_UNITS_AND_T_INVERSION:
        return ideal_equal(a, b, UP_TO_UNITS) or ideal_equal(a, b.invert_t(), UP_TO_UNITS)
    raise ValueError(f"unknown comparison mode {mode!r}")


# -- bounds ----------------------------------------------------------------

@dataclass(frozen=True)
class RankBound:
    value: int
    k: int | None  # largest index with a proper elementary ideal
    ideal: IdealGens | None
    witness: tuple | None = None
    undecided: tuple = ()  # larger indices whose triviality hit the Gröbner work limit

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "k": self.k,
            "ideal": self.ideal.to_json() if self.ideal is not None else None,
            "witness": list(self.witness) if self.witness else None,
            "undecided": list(self.undecided),
        }


def rank_bound(mat: LaurentMatrix, m: int | None = None) -> RankBound:
    """Largest k with a proper k-th elementary ideal, scanning down from k = m-1.

    An index whose triviality cannot be decided within the Gröbner work limit
    is skipped, which can only weaken the bound.
    """
    if m is None:
        m = mat.meridional_count
    undecided = []
    for k in range(m - 1, -1, -1):
        ideal = elementary_ideal(mat, k, m)
        try:
            trivial = is_trivial(ideal)
        except GroebnerLimitExceeded:
            undecided.append(k)
            continue
        if not trivial:
            return RankBound(k + 1, k, ideal, properness_witness(ideal), tuple(undecided))
    return RankBound(1, None, None, None, tuple(undecided))


def rank_lower_bound(mat: LaurentMatrix, m: int | None = None) -> int:
    return rank_bound(mat, m).value


def laplace_chain_holds(mat: LaurentMatrix, k: int, m: int | None = None) -> bool:
    """Check E_k is contained in E_{k+1} by expanding each (m-k)-minor along its first row."""
    if m is None:
        m = mat.meridional_count
    size = m - k
    nrows, ncols = mat.shape
    if size <= 1 or size > nrows or size > ncols:
        return True
    smaller = {p.normalize() for p in minors(mat, size - 1)}
    for rs in combinations(range(nrows), size):
        for cs in combinations(range(ncols), size):
            total = LaurentPoly({}, mat.vars)
            for idx, c in enumerate(cs):
                entry = mat.rows[rs[0]][c]
                sub = _det([[mat.rows[r][cc] for cc in cs[:idx] + cs[idx + 1:]] for r in rs[1:]], mat.vars)
                if not sub.is_zero() and sub.normalize() not in smaller:
                    return False
                total = total + (entry * sub if idx % 2 == 0 else -(entry * sub))
            full = _det([[mat.rows[r][c] for c in cs] for r in rs], mat.vars)
            if total != full:
                return False
    return True


def _det(square, vars) -> LaurentPoly:
    """Determinant by the Leibniz formula; independent of the memoized expansion."""
    from itertools import permutations

    n = len(square)
    total = LaurentPoly({}, vars)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = LaurentPoly.const(-1 if inversions % 2 else 1, vars)
        for i, j in enumerate(perm):
            term = term * square[i][j]
            if term.is_zero():
                break
        total = total + term
    return total
