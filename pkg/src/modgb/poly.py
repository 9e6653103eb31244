"""Multivariate polynomials with exact coefficients in QQ, ZZ or F_p."""

import math
from fractions import Fraction

from .arith import lcm as int_lcm
from .arith import is_prime


class BadPrimeForInput(ValueError):
    """Raised when reducing modulo p a polynomial whose denominator p divides."""


# ---------------------------------------------------------------------------
# coefficient domains


class _Rationals:
    name = "QQ"
    is_field = True
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, c):
        return Fraction(c)

    def invert(self, c):
        return 1 / c

    def __repr__(self):
        return "QQ"


class _Integers:
    name = "ZZ"
    is_field = False
    characteristic = 0
    zero = 0
    one = 1

    def coerce(self, c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError("%s is not an integer" % c)
            return c.numerator
        return int(c)

    def invert(self, c):
        if c in (1, -1):
            return c
        raise ZeroDivisionError("%s is not a unit in ZZ" % c)

    def __repr__(self):
        return "ZZ"


class PrimeField:
    """F_p with residues stored as plain ints in [0, p)."""

    is_field = True

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError("%s is not prime" % p)
        self.p = p
        self.name = "ZZ/(%d)" % p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, c):
        if isinstance(c, Fraction):
            if c.denominator % self.p == 0:
                raise BadPrimeForInput("prime %d divides a denominator" % self.p)
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        return int(c) % self.p

    def invert(self, c):
        return pow(c, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = _Rationals()
ZZ = _Integers()

_FP_CACHE = {}


def GF(p):
    dom = _FP_CACHE.get(p)
    if dom is None:
        dom = _FP_CACHE[p] = PrimeField(p)
    return dom


# ---------------------------------------------------------------------------
# rings and polynomials


class PolyRing:
    """A polynomial ring descriptor: coefficient domain plus named variables."""

    def __init__(self, domain, names):
        names = tuple(names)
        if len(set(names)) != len(names) or not names or any(not s for s in names):
            raise ValueError("indeterminate names must be distinct and non-empty")
        self.domain = domain
        self.names = names
        self.n = len(names)
        self._zero_pp = (0,) * self.n

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {self._zero_pp: self.domain.one})

    def const(self, c):
        c = self.domain.coerce(c)
        return Polynomial(self, {self._zero_pp: c} if c != self.domain.zero else {})

    def var(self, i):
        pp = tuple(1 if j == i else 0 for j in range(self.n))
        return Polynomial(self, {pp: self.domain.one})

    def gens(self):
        return [self.var(i) for i in range(self.n)]

    def from_terms(self, terms):
        """Build a polynomial from an iterable of (exponent tuple, coefficient)."""
        d = {}
        zero = self.domain.zero
        for pp, c in terms:
            pp = tuple(pp)
            if len(pp) != self.n or any(e < 0 for e in pp):
                raise ValueError("bad exponent tuple %r" % (pp,))
            c = d.get(pp, zero) + self.domain.coerce(c)
            if c == zero:
                d.pop(pp, None)
            else:
                d[pp] = c
        return Polynomial(self, d)

    def change_domain(self, domain):
        return PolyRing(domain, self.names)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.domain == other.domain
            and self.names == other.names
        )

    def __hash__(self):
        return hash((self.domain.name, self.names))

    def __repr__(self):
        return "%s[%s]" % (self.domain.name, ",".join(self.names))


def pp_mul(t, s):
    return tuple(a + b for a, b in zip(t, s))


def pp_div(t, s):
    """t / s, or None when s does not divide t."""
    q = []
    for a, b in zip(t, s):
        if a < b:
            return None
        q.append(a - b)
    return tuple(q)


def pp_divides(s, t):
    return all(a <= b for a, b in zip(s, t))


def pp_lcm(t, s):
    return tuple(max(a, b) for a, b in zip(t, s))


class Polynomial:
    """Immutable sparse polynomial: a map from exponent tuples to coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other):
        zero = self.ring.domain.zero
        d = dict(self.terms)
        for pp, c in other.terms.items():
            c2 = d.get(pp, zero) + c
            if c2 == zero:
                d.pop(pp, None)
            else:
                d[pp] = c2
        return Polynomial(self.ring, d)

    def __neg__(self):
        return Polynomial(self.ring, {pp: -c for pp, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        zero = self.ring.domain.zero
        d = {}
        for pp1, c1 in self.terms.items():
            for pp2, c2 in other.terms.items():
                pp = pp_mul(pp1, pp2)
                c = d.get(pp, zero) + c1 * c2
                if c == zero:
                    d.pop(pp, None)
                else:
                    d[pp] = c
        return Polynomial(self.ring, d)

    def scale(self, c):
        """Multiply by a scalar from the coefficient domain."""
        c = self.ring.domain.coerce(c)
        if c == self.ring.domain.zero:
            return self.ring.zero()
        if self.ring.domain.characteristic:
            p = self.ring.domain.p
            return Polynomial(self.ring, {pp: a * c % p for pp, a in self.terms.items()})
        return Polynomial(self.ring, {pp: a * c for pp, a in self.terms.items()})

    def mul_term(self, pp, c):
        """Multiply by the monomial c * x^pp."""
        c = self.ring.domain.coerce(c)
        if c == self.ring.domain.zero:
            return self.ring.zero()
        if self.ring.domain.characteristic:
            p = self.ring.domain.p
            return Polynomial(
                self.ring, {pp_mul(t, pp): a * c % p for t, a in self.terms.items()}
            )
        return Polynomial(
            self.ring, {pp_mul(t, pp): a * c for t, a in self.terms.items()}
        )

    def total_degree(self):
        return max((sum(pp) for pp in self.terms), default=-1)

    def sorted_terms(self, sigma, reverse=True):
        return sorted(self.terms.items(), key=lambda kv: sigma.key(kv[0]), reverse=reverse)

    def __repr__(self):
        return "Polynomial(%r, %r)" % (self.ring, self.terms)


def leading(f, sigma):
    """(leading power product, leading coefficient) of f under sigma."""
    if not f.terms:
        raise ValueError("the zero polynomial has no leading term")
    pp = max(f.terms, key=sigma.key)
    return pp, f.terms[pp]


def leading_term(f, sigma):
    return max(f.terms, key=sigma.key)


def monic(f, sigma):
    """Divide f by its leading coefficient (field coefficients only)."""
    pp, c = leading(f, sigma)
    if c == f.ring.domain.one:
        return f
    return f.scale(f.ring.domain.invert(c))


def den(f):
    """Positive lcm of the coefficient denominators; den(0) = 1."""
    if f.ring.domain is not QQ:
        raise ValueError("den is defined for rational coefficients only")
    d = 1
    for c in f.terms.values():
        d = d * c.denominator // math.gcd(d, c.denominator)
    return d


def den_of_set(polys):
    """den of a set of polynomials: lcm of the individual denominators."""
    return int_lcm(*[den(f) for f in polys]) if polys else 1


def content(f):
    """Positive integer content of a polynomial over ZZ."""
    if f.ring.domain is not ZZ:
        raise ValueError("content is defined over ZZ")
    g = 0
    for c in f.terms.values():
        g = math.gcd(g, c)
    return g


def prim(f, sigma):
    """Primitive integral part: f scaled to ZZ with content 1 and positive LC.

    The sign convention (positive leading coefficient under sigma) makes
    the result deterministic; scaling f by any nonzero rational does not
    change it.
    """
    if f.is_zero():
        raise ValueError("prim of the zero polynomial is undefined")
    if f.ring.domain is QQ:
        d = den(f)
        int_terms = {pp: c.numerator * (d // c.denominator) for pp, c in f.terms.items()}
    elif f.ring.domain is ZZ:
        int_terms = dict(f.terms)
    else:
        raise ValueError("prim needs coefficients in QQ or ZZ")
    g = 0
    for c in int_terms.values():
        g = math.gcd(g, c)
    zring = PolyRing(ZZ, f.ring.names)
    out = Polynomial(zring, {pp: c // g for pp, c in int_terms.items()})
    if leading(out, sigma)[1] < 0:
        out = -out
    return out


def reduce_mod_p(f, p):
    """Coefficientwise image of f in F_p; raises BadPrimeForInput if p | den(f)."""
    dom = GF(p)
    ring = PolyRing(dom, f.ring.names)
    d = {}
    for pp, c in f.terms.items():
        c2 = dom.coerce(c)
        if c2:
            d[pp] = c2
    return Polynomial(ring, d)


class Ideal:
    """An ideal given by generators; caches reduced Groebner bases per ordering."""

    def __init__(self, ring, gens):
        gens = [g for g in gens if not g.is_zero()]
        if any(g.ring != ring for g in gens):
            raise ValueError("all generators must live in the ambient ring")
        self.ring = ring
        self.gens = gens
        self._gb_cache = {}

    def reduced_gb(self, sigma):
        """Reduced sigma-Groebner basis (memoized; the expensive step)."""
        key = sigma.canonical()
        basis = self._gb_cache.get(key)
        if basis is None:
            from .gb_field import buchberger_reduced

            basis = buchberger_reduced(self.gens, sigma)
            self._gb_cache[key] = basis
        return basis

    def __repr__(self):
        return "Ideal(%r, %d gens)" % (self.ring, len(self.gens))


def poly_str(f, sigma=None):
    """Canonical text form: sigma-descending terms, explicit '*' and '^'."""
    if f.is_zero():
        return "0"
    if sigma is None:
        from .orderings import degrevlex

        sigma = degrevlex(f.ring.n)
    names = f.ring.names
    parts = []
    for pp, c in f.sorted_terms(sigma):
        factors = []
        for name, e in zip(names, pp):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append("%s^%d" % (name, e))
        cs = _coeff_str(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        if factors:
            body = "*".join(factors) if cs == "1" else cs + "*" + "*".join(factors)
        else:
            body = cs
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def _coeff_str(c):
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)
    return str(c)


def pp_str(pp, names):
    """Power product as text, e.g. x^2*y; the empty product prints as 1."""
    factors = []
    for name, e in zip(names, pp):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append("%s^%d" % (name, e))
    return "*".join(factors) if factors else "1"
