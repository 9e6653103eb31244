"""Minimal strong Groebner bases over the integers.

Completion uses both S-polynomials (cancelling leading monomials through the
lcm of the leading terms and of the leading coefficients) and GCD-polynomials
(combining two elements to realize the gcd of their leading coefficients).
Only the set of leading monomials and the lcm of the leading coefficients are
canonical; the full basis is normalized deterministically but not unique.
"""

import heapq
import math

from .arith import _ext_gcd
from .arith import lcm as int_lcm
from .poly import Polynomial, ZZ, leading, pp_div, pp_divides, pp_lcm, pp_mul


class StrongGB:
    """A minimal strong Groebner basis over ZZ, sorted by increasing leading term."""

    __slots__ = ("ordering", "elements")

    def __init__(self, ordering, elements):
        self.ordering = ordering
        self.elements = list(elements)

    def leading_monomials(self):
        return [leading(g, self.ordering) for g in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __repr__(self):
        return "StrongGB(%d elements)" % len(self.elements)


def _lm_divides(lt1, lc1, lt2, lc2):
    """Leading-monomial divisibility over ZZ: term divides and coefficient divides."""
    return pp_divides(lt1, lt2) and lc2 % lc1 == 0


def _strong_head_reduce(f, basis, sigma):
    """Reduce the head of f while some basis leading monomial divides it."""
    key = sigma.key
    while not f.is_zero():
        t = max(f.terms, key=key)
        c = f.terms[t]
        hit = None
        for g, lt, lc in basis:
            if pp_divides(lt, t) and c % lc == 0:
                hit = (g, lt, lc)
                break
        if hit is None:
            return f
        g, lt, lc = hit
        f = f - g.mul_term(pp_div(t, lt), c // lc)
    return f


def _tail_reduce(f, others, sigma):
    """Reduce the non-leading terms of f as far as exact ZZ-division allows."""
    key = sigma.key
    head = max(f.terms, key=key)
    changed = True
    while changed:
        changed = False
        for t in sorted(f.terms, key=key, reverse=True):
            if t == head or t not in f.terms:
                continue
            c = f.terms[t]
            for g, lt, lc in others:
                if pp_divides(lt, t) and c % lc == 0:
                    f = f - g.mul_term(pp_div(t, lt), c // lc)
                    changed = True
                    break
            if changed:
                break
    return f


def _s_poly(f, ltf, lcf, g, ltg, lcg):
    l = pp_lcm(ltf, ltg)
    c = int_lcm(lcf, lcg)
    return f.mul_term(pp_div(l, ltf), c // lcf) - g.mul_term(pp_div(l, ltg), c // lcg)


def _g_poly(f, ltf, lcf, g, ltg, lcg):
    """Combination with leading monomial gcd(lcf, lcg) * lcm(ltf, ltg)."""
    l = pp_lcm(ltf, ltg)
    _, a, b = _ext_gcd(lcf, lcg)
    return f.mul_term(pp_div(l, ltf), a) + g.mul_term(pp_div(l, ltg), b)


def strong_gb(gens, sigma):
    """A minimal strong sigma-Groebner basis of the ideal generated in ZZ[x]."""
    if any(g.ring.domain is not ZZ for g in gens):
        raise ValueError("strong_gb needs integer coefficients")
    basis = []  # entries (poly, lt, lc) with lc > 0
    heap = []  # (key of pp-lcm, kind, i, j); kind 0 = S-poly, 1 = GCD-poly
    key = sigma.key

    def normalize(f):
        lt, lc = leading(f, sigma)
        if lc < 0:
            f, lc = -f, -lc
        return f, lt, lc

    def append(f):
        f = _tail_reduce(f, basis, sigma)
        entry = normalize(f)
        j = len(basis)
        _, ltg, lcg = entry
        for i in range(j):
            _, ltf, lcf = basis[i]
            l = key(pp_lcm(ltf, ltg))
            heapq.heappush(heap, (l, 0, i, j))
            d = math.gcd(lcf, lcg)
            if d != lcf and d != lcg:
                heapq.heappush(heap, (l, 1, i, j))
        basis.append(entry)

    todo = [g for g in gens if not g.is_zero()]
    if not todo:
        return StrongGB(sigma, [])
    for g in todo:
        append(g)
    while heap:
        _, kind, i, j = heapq.heappop(heap)
        f, ltf, lcf = basis[i]
        g, ltg, lcg = basis[j]
        make = _s_poly if kind == 0 else _g_poly
        h = _strong_head_reduce(make(f, ltf, lcf, g, ltg, lcg), basis, sigma)
        if not h.is_zero():
            append(h)
    return StrongGB(sigma, _normalize_output(basis, sigma))


def _normalize_output(basis, sigma):
    """Minimalize by leading-monomial divisibility, then tail-reduce."""
    key = sigma.key
    order = sorted(range(len(basis)), key=lambda i: (key(basis[i][1]), basis[i][2]))
    kept = []
    for i in order:
        g, lt, lc = basis[i]
        if any(_lm_divides(klt, klc, lt, lc) for _, klt, klc in kept):
            continue
        kept.append((g, lt, lc))
    out = []
    for i, (g, lt, lc) in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        g = _tail_reduce(g, others, sigma)
        out.append(g)
    out.sort(key=lambda g: key(leading(g, sigma)[0]))
    return out


def lcm_sigma(polys, sigma=None):
    """Positive lcm of the leading coefficients of a set of nonzero ZZ-polynomials."""
    if isinstance(polys, StrongGB):
        sigma = polys.ordering
        polys = polys.elements
    if sigma is None:
        raise ValueError("an ordering is required for a plain set of polynomials")
    if any(f.is_zero() for f in polys):
        raise ValueError("lcm_sigma needs nonzero polynomials")
    return int_lcm(*[leading(f, sigma)[1] for f in polys]) if polys else 1


def leading_monomial_set(B):
    """The canonical invariant {(LT, |LC|)} of a minimal strong basis."""
    return {(lt, abs(lc)) for lt, lc in B.leading_monomials()}
