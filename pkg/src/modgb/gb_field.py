"""Buchberger engine over field coefficients: normal forms and reduced bases."""

import heapq

from .poly import Polynomial, leading, pp_div, pp_divides, pp_lcm, pp_mul


class BudgetExceeded(RuntimeError):
    """Raised when a computation exceeds its reduction-step budget."""


class ReducedGB:
    """A reduced Groebner basis: monic elements sorted by increasing leading term."""

    __slots__ = ("ordering", "elements")

    def __init__(self, ordering, elements):
        self.ordering = ordering
        self.elements = list(elements)

    def leading_terms(self):
        return [leading(g, self.ordering)[0] for g in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other):
        return (
            isinstance(other, ReducedGB)
            and self.ordering == other.ordering
            and self.elements == other.elements
        )

    def __repr__(self):
        return "ReducedGB(%d elements)" % len(self.elements)


class _Counter:
    __slots__ = ("left",)

    def __init__(self, budget):
        self.left = budget

    def spend(self, k=1):
        if self.left is None:
            return
        self.left -= k
        if self.left < 0:
            raise BudgetExceeded("reduction budget exhausted")


def _subtract_scaled(work, g, skip, shift, factor, dom):
    """work -= factor * x^shift * g, skipping the term `skip` of g (its head)."""
    p = dom.characteristic
    if p:
        for s, a in g.items():
            if s == skip:
                continue
            pp = pp_mul(s, shift)
            v = (work.get(pp, 0) - factor * a) % p
            if v:
                work[pp] = v
            else:
                work.pop(pp, None)
    else:
        zero = dom.zero
        for s, a in g.items():
            if s == skip:
                continue
            pp = pp_mul(s, shift)
            v = work.get(pp, zero) - factor * a
            if v == zero:
                work.pop(pp, None)
            else:
                work[pp] = v


class _Reducers:
    """Reducer table with the deterministic choice rule: sigma-smallest
    leading term among the applicable ones, ties broken by list position."""

    def __init__(self, polys, sigma):
        self.sigma = sigma
        entries = []
        for pos, g in enumerate(polys):
            lt, lc = leading(g, sigma)
            entries.append((sigma.key(lt), pos, lt, lc, g.terms))
        entries.sort(key=lambda e: (e[0], e[1]))
        self.entries = entries

    def find(self, t):
        for _, _, lt, lc, terms in self.entries:
            if pp_divides(lt, t):
                return lt, lc, terms
        return None


def normal_form(f, G, sigma, counter=None):
    """Full normal form of f against the basis G (deterministic reducer choice)."""
    basis = G.elements if isinstance(G, ReducedGB) else list(G)
    if not basis:
        return f
    dom = f.ring.domain
    reducers = _Reducers(basis, sigma)
    key = sigma.key
    work = dict(f.terms)
    out = {}
    while work:
        t = max(work, key=key)
        c = work.pop(t)
        hit = reducers.find(t)
        if hit is None:
            out[t] = c
            continue
        lt, lc, terms = hit
        if counter is not None:
            counter.spend()
        shift = pp_div(t, lt)
        factor = c * dom.invert(lc)
        if dom.characteristic:
            factor %= dom.characteristic
        _subtract_scaled(work, terms, lt, shift, factor, dom)
    return Polynomial(f.ring, out)


def _head_reduce(terms, basis_lts, basis_lcs, basis_terms, sigma, dom, counter):
    """Reduce the head of a term dict until it is irreducible or zero."""
    key = sigma.key
    while terms:
        t = max(terms, key=key)
        hit = None
        for i, lt in enumerate(basis_lts):
            if pp_divides(lt, t):
                hit = i
                break
        if hit is None:
            return terms, t
        if counter is not None:
            counter.spend()
        lt = basis_lts[hit]
        c = terms.pop(t)
        factor = c * dom.invert(basis_lcs[hit])
        if dom.characteristic:
            factor %= dom.characteristic
        _subtract_scaled(terms, basis_terms[hit], lt, pp_div(t, lt), factor, dom)
    return terms, None


def _gm_update(lts, pairs, j, sigma):
    """Gebauer-Moeller pair update when basis element j is appended.

    Implements the product (coprime) and chain criteria.
    """
    ltj = lts[j]
    lcm = pp_lcm
    key = sigma.key
    kept = set()
    for a, b in pairs:
        l = lcm(lts[a], lts[b])
        if (
            not pp_divides(ltj, l)
            or l == lcm(lts[a], ltj)
            or l == lcm(lts[b], ltj)
        ):
            kept.add((a, b))
    by_lcm = {}
    for i in range(j):
        by_lcm.setdefault(lcm(lts[i], ltj), []).append(i)
    minimal = []
    for l in sorted(by_lcm, key=key):
        if all(not pp_divides(m, l) for m in minimal):
            minimal.append(l)
    for l in minimal:
        if any(lcm(lts[i], ltj) == pp_mul(lts[i], ltj) for i in by_lcm[l]):
            continue
        kept.add((min(by_lcm[l]), j))
    return kept


def buchberger(gens, sigma, counter=None):
    """A monic (not reduced) Groebner basis of the ideal generated by gens."""
    dom = None
    basis = []
    lts, lcs, bterms = [], [], []
    pairs = set()

    def append(f):
        nonlocal pairs
        lt, lc = leading(f, sigma)
        inv = f.ring.domain.invert(lc)
        f = f.scale(inv)
        basis.append(f)
        lts.append(lt)
        lcs.append(f.ring.domain.one)
        bterms.append(f.terms)
        pairs = _gm_update(lts, pairs, len(basis) - 1, sigma)

    for f in gens:
        if f.is_zero():
            continue
        dom = f.ring.domain
        append(f)
    if not basis:
        return []

    key = sigma.key
    heap = []
    seen = set()

    def push_new():
        for pr in pairs - seen:
            seen.add(pr)
            l = pp_lcm(lts[pr[0]], lts[pr[1]])
            heapq.heappush(heap, (key(l), pr))

    push_new()
    while heap:
        _, (a, b) = heapq.heappop(heap)
        if (a, b) not in pairs:
            continue
        pairs.discard((a, b))
        l = pp_lcm(lts[a], lts[b])
        s = dict(bterms[a])
        sh = pp_div(l, lts[a])
        if sh != (0,) * len(l):
            s = {pp_mul(t, sh): c for t, c in s.items()}
        _subtract_scaled(s, bterms[b], None, pp_div(l, lts[b]), dom.one, dom)
        s.pop(l, None)
        s, _head = _head_reduce(s, lts, lcs, bterms, sigma, dom, counter)
        if s:
            append(Polynomial(basis[0].ring, s))
            push_new()
    return basis


def _minimalize(basis, sigma):
    """Drop elements whose leading term is divisible by another's."""
    order = sorted(range(len(basis)), key=lambda i: sigma.key(leading(basis[i], sigma)[0]))
    kept = []
    kept_lts = []
    for i in order:
        lt = leading(basis[i], sigma)[0]
        if any(pp_divides(m, lt) for m in kept_lts):
            continue
        kept.append(basis[i])
        kept_lts.append(lt)
    return kept


def buchberger_reduced(gens, sigma, budget=None, counter=None):
    """The unique reduced sigma-Groebner basis of the ideal generated by gens.

    Returns the empty basis for the zero ideal and [1] for the unit ideal.
    A shared counter may be passed to budget several computations jointly.
    """
    if counter is None and budget is not None:
        counter = _Counter(budget)
    basis = buchberger(gens, sigma, counter)
    basis = _minimalize(basis, sigma)
    # tail interreduction; each element fully reduced against the others
    reduced = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1 :]
        r = normal_form(g, others, sigma, counter)
        reduced.append(r)
    from .poly import monic

    reduced = [monic(g, sigma) for g in reduced]
    reduced.sort(key=lambda g: sigma.key(leading(g, sigma)[0]))
    return ReducedGB(sigma, reduced)


def min_lt(G):
    """MinLT: the set of leading terms of the reduced basis."""
    return set(G.leading_terms())


def s_polynomial(f, g, sigma):
    """S-polynomial of f and g (field coefficients)."""
    ltf, lcf = leading(f, sigma)
    ltg, lcg = leading(g, sigma)
    l = pp_lcm(ltf, ltg)
    dom = f.ring.domain
    a = f.mul_term(pp_div(l, ltf), dom.invert(lcf))
    b = g.mul_term(pp_div(l, ltg), dom.invert(lcg))
    return a - b


def is_groebner(basis, sigma):
    """Check Buchberger's criterion directly: all S-polynomials reduce to zero."""
    polys = [g for g in basis if not g.is_zero()]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            s = s_polynomial(polys[i], polys[j], sigma)
            if not normal_form(s, polys, sigma).is_zero():
                return False
    return True


# ---------------------------------------------------------------------------
# representation of a basis in terms of the original generators


def _tracked_buchberger(F, sigma):
    """Groebner basis of <F> where each element carries its expression in F."""
    ring = F[0].ring
    dom = ring.domain
    zero = ring.zero()

    items = []  # (poly, rep) with poly == sum rep[i] * F[i]
    lts = []
    pairs = set()

    def append(f, rep):
        nonlocal pairs
        lt, lc = leading(f, sigma)
        inv = dom.invert(lc)
        f = f.scale(inv)
        rep = [r.scale(inv) for r in rep]
        items.append((f, rep))
        lts.append(lt)
        pairs = _gm_update(lts, pairs, len(items) - 1, sigma)

    for i, f in enumerate(F):
        if f.is_zero():
            continue
        rep = [ring.one() if j == i else zero for j in range(len(F))]
        append(f, rep)

    key = sigma.key
    heap = []
    seen = set()

    def push_new():
        for pr in pairs - seen:
            seen.add(pr)
            l = pp_lcm(lts[pr[0]], lts[pr[1]])
            heapq.heappush(heap, (key(l), pr))

    push_new()
    while heap:
        _, (a, b) = heapq.heappop(heap)
        if (a, b) not in pairs:
            continue
        pairs.discard((a, b))
        fa, ra = items[a]
        fb, rb = items[b]
        l = pp_lcm(lts[a], lts[b])
        ta, tb = pp_div(l, lts[a]), pp_div(l, lts[b])
        s = fa.mul_term(ta, dom.one) - fb.mul_term(tb, dom.one)
        rs = [
            x.mul_term(ta, dom.one) - y.mul_term(tb, dom.one)
            for x, y in zip(ra, rb)
        ]
        s, rs = _divide_tracked(s, rs, items, sigma)
        if not s.is_zero():
            append(s, rs)
            push_new()
    return items


def _divide_tracked(f, rep, items, sigma):
    """Fully reduce f by the tracked basis, updating its representation."""
    ring = f.ring
    dom = ring.domain
    entries = []
    for k, (g, _) in enumerate(items):
        lt, lc = leading(g, sigma)
        entries.append((sigma.key(lt), k, lt, lc, g.terms))
    entries.sort(key=lambda e: (e[0], e[1]))
    key = sigma.key
    work = dict(f.terms)
    out = {}
    rep = list(rep)
    while work:
        t = max(work, key=key)
        c = work.pop(t)
        hit = None
        for _, k, lt, lc, terms in entries:
            if pp_divides(lt, t):
                hit = (k, lt, lc, terms)
                break
        if hit is None:
            out[t] = c
            continue
        k, lt, lc, terms = hit
        shift = pp_div(t, lt)
        factor = c * dom.invert(lc)
        _subtract_scaled(work, terms, lt, shift, factor, dom)
        q = Polynomial(ring, {shift: factor})
        grep = items[k][1]
        rep = [r - q * s for r, s in zip(rep, grep)]
    return Polynomial(ring, out), rep


def represent(G, F, sigma):
    """Matrix M (as a list of columns over F) with G = F * M.

    Each column is a list of polynomials, one per element of F.  Raises
    ValueError when some element of G is not in the ideal generated by F.
    """
    basis = G.elements if isinstance(G, ReducedGB) else list(G)
    items = _tracked_buchberger(list(F), sigma)
    ring = F[0].ring
    zero = ring.zero()
    columns = []
    for g in basis:
        r, rep = _divide_tracked(g, [zero] * len(F), items, sigma)
        if not r.is_zero():
            raise ValueError("element is not in the ideal generated by F")
        # g - r == sum (-rep_i) F_i, so the column is -rep
        columns.append([-x for x in rep])
    return columns
