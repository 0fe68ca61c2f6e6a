"""Sparse Laurent polynomials with integer coefficients in ``t`` or ``t, v``."""

from __future__ import annotations

import re
from math import gcd
from typing import Mapping

from .errors import RingMismatch

T_RING = ("t",)
TV_RING = ("t", "v")


class LaurentPoly:
    """Immutable element of Z[t^±1] (``vars=("t",)``) or Z[t^±1, v^±1].

    ``terms`` maps integer exponent tuples to nonzero integer coefficients.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | None = None, vars: tuple = T_RING):
        self.vars = tuple(vars)
        clean = {}
        for exp, c in (terms or {}).items():
            if c:
                if len(exp) != len(self.vars):
                    raise ValueError(f"exponent {exp} does not fit ring {self.vars}")
                clean[tuple(exp)] = int(c)
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, c: int, vars=T_RING) -> "LaurentPoly":
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def monomial(cls, exp, c: int = 1, vars=T_RING) -> "LaurentPoly":
        return cls({tuple(exp): c}, vars)

    @classmethod
    def t(cls, k: int = 1, vars=T_RING) -> "LaurentPoly":
        return cls.monomial((k,) + (0,) * (len(vars) - 1), 1, vars)

    @classmethod
    def from_coeffs(cls, coeffs, low: int = 0) -> "LaurentPoly":
        """Univariate polynomial from ascending coefficients starting at t^low."""
        return cls({(low + i,): c for i, c in enumerate(coeffs)})

    # -- basic predicates --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        """Units of the Laurent ring are exactly the monomials ±t^a (v^b)."""
        if len(self.terms) != 1:
            return False
        (c,) = self.terms.values()
        return abs(c) == 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def in_ring(self, vars) -> "LaurentPoly":
        """Embed Z[t^±1] into Z[t^±1, v^±1]; identity if already there."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        if self.vars == T_RING and vars == TV_RING:
            return LaurentPoly({(e[0], 0): c for e, c in self.terms.items()}, vars)
        if self.vars == TV_RING and vars == T_RING and all(e[1] == 0 for e in self.terms):
            return LaurentPoly({(e[0],): c for e, c in self.terms.items()}, vars)
        raise RingMismatch(f"cannot move {self} from {self.vars} to {vars}")

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                raise RingMismatch(f"{self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise ValueError("only units can be raised to negative powers")
            ((e, c),) = self.terms.items()
            return LaurentPoly({tuple(k * x for x in e): c ** -k}, self.vars)
        result = LaurentPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exp) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``exp``."""
        return LaurentPoly({tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()}, self.vars)

    def scale(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e: k * c for e, c in self.terms.items()}, self.vars)

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.vars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # -- structure ---------------------------------------------------------

    def min_exponent(self) -> tuple:
        return tuple(min(e[i] for e in self.terms) for i in range(len(self.vars)))

    def max_exponent(self) -> tuple:
        return tuple(max(e[i] for e in self.terms) for i in range(len(self.vars)))

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def normalize(self) -> "LaurentPoly":
        """Canonical associate: minimal exponent vector zero, lowest (lex) coefficient positive."""
        if not self.terms:
            return self
        lo = self.min_exponent()
        shifted = self.shift(tuple(-x for x in lo))
        trailing = min(shifted.terms)
        if shifted.terms[trailing] < 0:
            shifted = -shifted
        return shifted

    def substitute_inverse_t(self) -> "LaurentPoly":
        """Apply the ring automorphism t -> t^-1."""
        return LaurentPoly({(-e[0],) + tuple(e[1:]): c for e, c in self.terms.items()}, self.vars)

    def at_v_one(self) -> "LaurentPoly":
        if self.vars == T_RING:
            return self
        out: dict = {}
        for e, c in self.terms.items():
            out[(e[0],)] = out.get((e[0],), 0) + c
        return LaurentPoly(out, T_RING)

    def evaluate_mod(self, values, p: int) -> int:
        """Evaluate at units ``values`` of Z/p (one per variable)."""
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(values, e):
                term = term * pow(x, k, p)
            total += term
        return total % p

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(_power(v, k) for v, k in zip(self.vars, e) if k)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("-" if c < 0 else "+") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"LaurentPoly({self})"


def _power(v: str, k: int) -> str:
    if k == 1:
        return v
    return f"{v}^{k}"


def parse_laurent(text: str, vars=T_RING) -> LaurentPoly:
    """Parse strings produced by ``str(LaurentPoly)``, e.g. ``"t^2-t+1"`` or ``"2-t^-1"``."""
    vars = tuple(vars)
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty polynomial")
    if text[0] not in "+-":
        text = "+" + text
    out = LaurentPoly({}, vars)
    for term in re.findall(r"[+-][^+-]+", _protect(text)):
        sign, body = term[0], term[1:].replace("~", "-")
        coeff = 1
        exp = [0] * len(vars)
        for factor in body.split("*"):
            if factor.lstrip("-").isdigit():
                coeff *= int(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in vars:
                raise ValueError(f"unknown variable {name!r}")
            exp[vars.index(name)] += int(power) if power else 1
        out = out + LaurentPoly({tuple(exp): coeff if sign == "+" else -coeff}, vars)
    return out


def _protect(text: str) -> str:
    # hide the minus sign of negative exponents so the term split ignores it
    return re.sub(r"\^-(\d+)", r"^~\1", text)
