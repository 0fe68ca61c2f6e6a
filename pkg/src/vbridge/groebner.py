"""Strong Gröbner bases over the integers (Buchberger with S- and G-polynomials).

Polynomials are dicts mapping exponent tuples (non-negative) to nonzero ints.
The monomial order is graded: total degree first, ties broken
lexicographically with variable 0 largest.  A strong basis has the property
that every nonzero member of the ideal has its leading *term* (coefficient
included) divisible by the leading term of some basis element, which is what
makes membership decidable by reduction.
"""

from __future__ import annotations

import heapq
from math import gcd

from .errors import GroebnerLimitExceeded


def _degree_lex(e):
    return (sum(e), e)


def leading(f: dict):
    m = max(f, key=_degree_lex)
    return m, f[m]


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm_mono(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_scaled(f: dict, q: int, shift, g: dict) -> dict:
    """f - q * x^shift * g."""
    out = dict(f)
    for e, c in g.items():
        k = tuple(x + y for x, y in zip(e, shift))
        v = out.get(k, 0) - q * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _scaled(f: dict, q: int, shift) -> dict:
    return {tuple(x + y for x, y in zip(e, shift)): q * c for e, c in f.items()}


def _add(f: dict, g: dict) -> dict:
    out = dict(f)
    for e, c in g.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _quotient(a: int, b: int) -> int:
    # balanced division: |a - q b| <= |b| / 2; zero when that would not shrink |a|
    q = (2 * a + abs(b)) // (2 * abs(b))
    q = q if b > 0 else -q
    return q if abs(a - q * b) < abs(a) else 0


def _xgcd(a: int, b: int):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def reduce(f: dict, basis, full: bool = True) -> dict:
    """Euclidean reduction of f by the basis; returns the remainder.

    With ``full`` the lower terms are reduced as well, otherwise reduction
    stops as soon as the leading term cannot be reduced.
    """
    leads = [(leading(g), g) for g in basis]
    f = dict(f)
    rem: dict = {}
    while f:
        m, c = leading(f)
        for (gm, gc), g in leads:
            if _divides(gm, m):
                q = _quotient(c, gc)
                if q:
                    f = _sub_scaled(f, q, tuple(x - y for x, y in zip(m, gm)), g)
                    break
        else:
            if not full:
                rem.update(f)
                return rem
            rem[m] = c
            del f[m]
    return rem


def _normalize_sign(f: dict) -> dict:
    _, c = leading(f)
    return f if c > 0 else {e: -v for e, v in f.items()}


def _coprime(a, b) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def strong_groebner(polys, max_basis: int | None = None, max_steps: int | None = None, max_bits: int | None = None) -> list:
    """Strong Gröbner basis of the ideal generated by ``polys`` in Z[x_0, ..., x_{k-1}].

    An element whose leading term a newer one can reduce is retired and
    queued for re-reduction, so the active set stays small and, once an
    integer enters the ideal, coefficients stay below it.  S-pairs with
    coprime leading terms (monomials and coefficients) are skipped.
    """
    basis: list = []
    active: set = set()
    pairs: list = []
    queue: list = [p for p in polys if p]
    counter = 0

    def push_pairs(new):
        nonlocal counter
        gm, _ = leading(basis[new])
        for i in sorted(active):
            if i == new:
                continue
            hm, _ = leading(basis[i])
            lcm = _lcm_mono(gm, hm)
            heapq.heappush(pairs, (sum(lcm), lcm, counter, i, new))
            counter += 1

    steps = 0

    def add(h):
        nonlocal steps
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise GroebnerLimitExceeded(f"more than {max_steps} reductions")
        h = reduce(h, [basis[i] for i in sorted(active)])
        if not h:
            return
        h = _normalize_sign(h)
        hm, hc = leading(h)
        if max_bits is not None and hc.bit_length() > max_bits:
            raise GroebnerLimitExceeded(f"a leading coefficient exceeded {max_bits} bits")
        constant = not any(hm)
        for i in list(active):
            gm, gc = leading(basis[i])
            # an integer in the ideal bounds every coefficient
            if constant:
                stale = any(_quotient(c, hc) for c in basis[i].values())
            else:
                stale = _divides(hm, gm) and _quotient(gc, hc)
            if stale:
                active.discard(i)
                queue.append(basis[i])
        basis.append(h)
        active.add(len(basis) - 1)
        if max_basis is not None and len(active) > max_basis:
            raise GroebnerLimitExceeded(f"more than {max_basis} basis elements")
        push_pairs(len(basis) - 1)

    def drain():
        while queue:
            add(queue.pop())

    drain()
    while pairs:
        _, lcm, _, i, j = heapq.heappop(pairs)
        if i not in active or j not in active:
            continue
        f, g = basis[i], basis[j]
        fm, fc = leading(f)
        gm, gc = leading(g)
        sf = tuple(x - y for x, y in zip(lcm, fm))
        sg = tuple(x - y for x, y in zip(lcm, gm))
        if not (_coprime(fm, gm) and gcd(fc, gc) == 1):
            l = fc * gc // gcd(fc, gc)
            s = _sub_scaled(_scaled(f, l // fc, sf), l // gc, sg, g)
            if s:
                add(s)
        if fc % gc and gc % fc:
            _, x, y = _xgcd(fc, gc)
            gp = _add(_scaled(f, x, sf), _scaled(g, y, sg))
            if gp:
                add(gp)
        drain()
    return _minimize([basis[i] for i in sorted(active)])


def _minimize(basis: list) -> list:
    """Drop elements whose leading term is divisible (coefficient included) by another's."""
    out = []
    leads = [leading(g) for g in basis]
    for i, (m, c) in enumerate(leads):
        redundant = False
        for j, (m2, c2) in enumerate(leads):
            if i == j or not _divides(m2, m) or c % c2:
                continue
            # keep the earlier of two identical leading terms
            if (m2, c2) != (m, c) or j < i:
                redundant = True
                break
        if not redundant:
            out.append(basis[i])
    return out


def is_member(f: dict, basis) -> bool:
    return not reduce(f, basis, full=False)
