"""Groebner fan enumeration, the universal denominator, and the
ordering-free reduction modulo a prime.

A cone is represented by its marked reduced basis.  Traversal starts from
the degrevlex cone and flips facets: for a facet with primitive normal v we
pick a rational weight w in its relative interior by Fourier-Motzkin
back-substitution and recompute the reduced basis under the matrix
ordering [w; -v; degrevlex rows].
"""

import math
from collections import deque
from fractions import Fraction

from .arith import lcm as int_lcm
from .gb_field import BudgetExceeded, _Counter, buchberger_reduced, normal_form
from .orderings import _degrevlex_rows, degrevlex, matrix_order
from .poly import Ideal, PolyRing, GF, den_of_set, leading, reduce_mod_p

DEFAULT_MAX_CONES = 2000
DEFAULT_BUDGET = 10**6


class FanBudgetExceeded(RuntimeError):
    """Raised when fan traversal exceeds its budget; carries the partial fan."""

    def __init__(self, message, fan):
        super().__init__(message)
        self.fan = fan


class MarkedGB:
    """A reduced basis with its marked leading terms; one cone of the fan."""

    __slots__ = ("elements", "marks", "ordering")

    def __init__(self, elements, marks, ordering):
        self.elements = list(elements)
        self.marks = list(marks)
        self.ordering = ordering

    def cone_vectors(self):
        """Primitive exponent-difference vectors exp(mark) - exp(t)."""
        vs = set()
        for g, lt in zip(self.elements, self.marks):
            for t in g.terms:
                if t == lt:
                    continue
                v = tuple(a - b for a, b in zip(lt, t))
                d = math.gcd(*(abs(x) for x in v))
                vs.add(tuple(x // d for x in v))
        return vs

    def key(self):
        """Canonical hashable serialization of the marked basis."""
        items = [
            (mark, tuple(sorted(g.terms.items())))
            for g, mark in zip(self.elements, self.marks)
        ]
        return tuple(sorted(items))

    def den(self):
        return den_of_set(self.elements)

    def __repr__(self):
        return "MarkedGB(%d elements)" % len(self.elements)


class Fan:
    """The set of cones of an ideal with their facet-flip adjacency."""

    __slots__ = ("ideal", "cones", "adjacency")

    def __init__(self, ideal, cones, adjacency):
        self.ideal = ideal
        self.cones = list(cones)
        self.adjacency = {i: set(nb) for i, nb in adjacency.items()}

    def __len__(self):
        return len(self.cones)

    def denominator(self):
        """lcm of den over all cones' bases."""
        return int_lcm(*[c.den() for c in self.cones]) if self.cones else 1

    def __repr__(self):
        return "Fan(%d cones)" % len(self.cones)


# ---------------------------------------------------------------------------
# exact linear feasibility (Fourier-Motzkin with back-substitution)


def _nullspace(rows, n):
    """Basis of {w : row . w = 0 for every row}, as lists of Fractions."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    for fc in (c for c in range(n) if c not in pivots):
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def _normalize_ineq(a):
    """Scale a rational coefficient vector to coprime integers, keeping sign."""
    den = 1
    for x in a:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in a]
    g = math.gcd(*(abs(x) for x in ints)) if any(ints) else 1
    return tuple(Fraction(x, g) for x in ints)


def _solve_strict(ineqs, d):
    """A point y with a . y > 0 for all a (each a of length d), or None."""
    systems = [None] * (d + 1)
    cur = list({_normalize_ineq(a) for a in ineqs})
    for k in range(d, 0, -1):
        if any(not any(a) for a in cur):
            return None
        systems[k] = cur
        if k == 1:
            break
        low = [a for a in cur if a[k - 1] > 0]
        up = [a for a in cur if a[k - 1] < 0]
        nxt = [a[: k - 1] for a in cur if a[k - 1] == 0]
        for a in low:
            for b in up:
                nxt.append(
                    tuple(a[k - 1] * b[i] - b[k - 1] * a[i] for i in range(k - 1))
                )
        cur = list({_normalize_ineq(a) for a in nxt})
    if d == 0:
        return [] if not ineqs else None
    scalars = [a[0] for a in systems[1]]
    if any(s == 0 for s in scalars):
        return None
    if all(s > 0 for s in scalars):
        y = [Fraction(1)]
    elif all(s < 0 for s in scalars):
        y = [Fraction(-1)]
    else:
        return None
    for k in range(2, d + 1):
        lower, upper = None, None
        for a in systems[k]:
            if a[k - 1] == 0:
                continue
            bound = -sum(a[i] * y[i] for i in range(k - 1)) / a[k - 1]
            if a[k - 1] > 0:
                lower = bound if lower is None else max(lower, bound)
            else:
                upper = bound if upper is None else min(upper, bound)
        if lower is None and upper is None:
            y.append(Fraction(0))
        elif lower is None:
            y.append(upper - 1)
        elif upper is None:
            y.append(lower + 1)
        else:
            y.append((lower + upper) / 2)
    return y


def _facet_point(vectors, v, n):
    """Strictly positive integer weight w with w.v = 0 and w.u > 0 for the
    other cone vectors, or None when the facet system is infeasible."""
    basis = _nullspace([v], n)
    d = len(basis)
    stricts = [u for u in vectors if u != v]
    stricts += [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    ineqs = []
    for u in stricts:
        a = tuple(
            Fraction(sum(bv[j] * u[j] for j in range(n))) for bv in basis
        )
        if not any(a):
            return None
        ineqs.append(a)
    y = _solve_strict(ineqs, d)
    if y is None:
        return None
    w = [sum(y[i] * basis[i][j] for i in range(d)) for j in range(n)]
    den = 1
    for x in w:
        den = den * x.denominator // math.gcd(den, x.denominator)
    w = [int(x * den) for x in w]
    g = math.gcd(*(abs(x) for x in w))
    return [x // g for x in w]


# ---------------------------------------------------------------------------
# traversal


def _flip_ordering(w, v, n):
    rows = [list(w), [-x for x in v]] + _degrevlex_rows(list(range(n)), n)
    return matrix_order(rows, n)


def _marked(basis):
    return MarkedGB(basis.elements, basis.leading_terms(), basis.ordering)


def enumerate_fan(I, max_cones=DEFAULT_MAX_CONES, budget=DEFAULT_BUDGET):
    """All marked reduced bases of I, found by facet flips from degrevlex."""
    n = I.ring.n
    counter = _Counter(budget)
    sigma0 = degrevlex(n)
    cones = []
    adjacency = {}
    index = {}

    def partial(msg):
        return FanBudgetExceeded(msg, Fan(I, cones, adjacency))

    try:
        seed = _marked(buchberger_reduced(I.gens, sigma0, counter=counter))
    except BudgetExceeded:
        raise partial("reduction budget exhausted on the seed basis") from None
    cones.append(seed)
    adjacency[0] = set()
    index[seed.key()] = 0
    queue = deque([0])
    while queue:
        i = queue.popleft()
        cone = cones[i]
        for v in sorted(cone.cone_vectors()):
            w = _facet_point(cone.cone_vectors(), v, n)
            if w is None:
                continue
            tau = _flip_ordering(w, v, n)
            try:
                nb = _marked(buchberger_reduced(cone.elements, tau, counter=counter))
            except BudgetExceeded:
                raise partial("reduction budget exhausted during traversal") from None
            k = index.get(nb.key())
            if k is None:
                if len(cones) >= max_cones:
                    raise partial("cone budget of %d exhausted" % max_cones)
                k = len(cones)
                cones.append(nb)
                adjacency[k] = set()
                index[nb.key()] = k
                queue.append(k)
            if k != i:
                adjacency[i].add(k)
                adjacency[k].add(i)
    return Fan(I, cones, adjacency)


_FAN_CACHE = {}


def _cached_fan(I, max_cones, budget):
    key = (I.ring, tuple(I.gens))
    fan = _FAN_CACHE.get(key)
    if fan is None:
        fan = _FAN_CACHE[key] = enumerate_fan(I, max_cones, budget)
    return fan


def universal_denominator(I, max_cones=DEFAULT_MAX_CONES, budget=DEFAULT_BUDGET):
    """Delta(I): the lcm of den over the reduced bases of all term orderings."""
    if not I.gens:
        raise ValueError("the zero ideal has no universal denominator")
    return _cached_fan(I, max_cones, budget).denominator()


def reduction_universal(
    I, p, verify=False, max_cones=DEFAULT_MAX_CONES, budget=DEFAULT_BUDGET
):
    """The ordering-free reduction I_p, defined when p does not divide Delta(I).

    With verify=True every cone's basis is reduced modulo p and the images
    are checked to generate one and the same ideal over F_p.
    """
    fan = _cached_fan(I, max_cones, budget)
    delta = fan.denominator()
    if delta % p == 0:
        raise ValueError("prime %d divides the universal denominator %d" % (p, delta))
    ring_p = PolyRing(GF(p), I.ring.names)
    sigma0 = degrevlex(I.ring.n)
    seed_gens = [reduce_mod_p(g, p) for g in fan.cones[0].elements]
    result = Ideal(ring_p, seed_gens)
    if verify:
        G0 = result.reduced_gb(sigma0)
        for cone in fan.cones[1:]:
            gens_p = [reduce_mod_p(g, p) for g in cone.elements]
            Gc = Ideal(ring_p, gens_p).reduced_gb(sigma0)
            ok = all(normal_form(f, G0, sigma0).is_zero() for f in gens_p) and all(
                normal_form(g, Gc, sigma0).is_zero() for g in seed_gens
            )
            if not ok:
                raise ValueError(
                    "cone bases disagree modulo %d; %d divides Delta" % (p, p)
                )
    return result
