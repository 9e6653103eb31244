"""Prime taxonomy for an ideal: good/bad per ordering, Pauer-lucky, and the
purely modular detector for relatively bad primes."""

from .arith import rad
from .gb_integer import lcm_sigma, strong_gb
from .poly import Ideal, PolyRing, GF, den, den_of_set, leading, prim, reduce_mod_p

SIGMA_GOOD = "SIGMA_GOOD"
SIGMA_BAD = "SIGMA_BAD"
PAUER_LUCKY = "PAUER_LUCKY"
NOT_PAUER_LUCKY = "NOT_PAUER_LUCKY"
TAU_BAD_CERTIFIED = "TAU_BAD_CERTIFIED"
UNDECIDED = "UNDECIDED"


class PrimeVerdict:
    """A classification of one prime together with its justifying evidence."""

    __slots__ = ("prime", "status", "evidence")

    def __init__(self, prime, status, evidence=None):
        self.prime = prime
        self.status = status
        self.evidence = evidence or {}

    def to_dict(self, names=None):
        out = {"prime": self.prime, "status": self.status}
        for k, v in self.evidence.items():
            out[k] = v.render(names) if names and hasattr(v, "render") else v
        return out

    def __repr__(self):
        return "PrimeVerdict(%d, %s)" % (self.prime, self.status)


class ReductionIdeal:
    """The image of an ideal modulo a sigma-good prime, generated by the
    reductions of the reduced sigma-basis (which stay a reduced basis)."""

    __slots__ = ("prime", "ordering", "ideal")

    def __init__(self, prime, ordering, ideal):
        self.prime = prime
        self.ordering = ordering
        self.ideal = ideal

    @property
    def generators(self):
        return self.ideal.gens

    def __repr__(self):
        return "ReductionIdeal(p=%d)" % self.prime


def den_sigma(I, sigma):
    """Denominator of the reduced sigma-Groebner basis of I."""
    return den_of_set(list(I.reduced_gb(sigma)))


def classify_prime(I, sigma, p):
    """SIGMA_BAD when p divides the sigma-denominator, SIGMA_GOOD otherwise."""
    G = I.reduced_gb(sigma)
    for g in G:
        if den(g) % p == 0:
            return PrimeVerdict(p, SIGMA_BAD, {"witness_denominator": den(g)})
    return PrimeVerdict(p, SIGMA_GOOD)


def reduction(I, sigma, p):
    """The (p, sigma)-reduction of I; rejects sigma-bad primes."""
    verdict = classify_prime(I, sigma, p)
    if verdict.status == SIGMA_BAD:
        raise ValueError(
            "prime %d divides the sigma-denominator %d"
            % (p, verdict.evidence["witness_denominator"])
        )
    ring_p = PolyRing(GF(p), I.ring.names)
    gens = [reduce_mod_p(g, p) for g in I.reduced_gb(sigma)]
    return ReductionIdeal(p, sigma, Ideal(ring_p, gens))


def pauer_lucky(F, sigma, p):
    """Pauer-luckiness of p for a set of integer polynomials."""
    B = strong_gb(list(F), sigma)
    for g in B:
        lc = leading(g, sigma)[1]
        if lc % p == 0:
            return PrimeVerdict(p, NOT_PAUER_LUCKY, {"offending_lc": lc})
    return PrimeVerdict(p, PAUER_LUCKY, {"lcm_of_leading_coeffs": lcm_sigma(B)})


def reduction_tuple(I, sigma, tau, p, _cache={}):
    """O_tau of the (p, sigma)-reduction of I, computed purely modulo p."""
    from .tuples import os_of_ideal

    key = (I.ring, tuple(I.gens), p, sigma.canonical(), tau.canonical())
    if key in _cache:
        return _cache[key]
    red = reduction(I, sigma, p)
    t = os_of_ideal(red.ideal, tau)
    _cache[key] = t
    return t


def detect_tau_bad(I, sigma, tau, primes):
    """Certify relatively tau-bad primes from modular data only.

    Each prime whose tuple strictly tau-precedes some other prime's tuple is
    certified bad; holders of the best (tau-maximal) tuple stay undecided.
    """
    from .tuples import PRECEDES, precedes, tuple_max

    tuples = {}
    for p in primes:
        v = classify_prime(I, sigma, p)
        if v.status == SIGMA_BAD:
            raise ValueError("prime %d is sigma-bad for the ideal" % p)
        tuples[p] = reduction_tuple(I, sigma, tau, p)
    best = tuple_max(tuples.values())
    verdicts = []
    for p in primes:
        t = tuples[p]
        if precedes(t, best) == PRECEDES:
            verdicts.append(
                PrimeVerdict(p, TAU_BAD_CERTIFIED, {"tuple": t, "beaten_by": best})
            )
        else:
            verdicts.append(PrimeVerdict(p, UNDECIDED, {"tuple": t}))
    return verdicts


def check_rad_identity(I, sigma):
    """Self-test oracle: the radicals of den(G) and of the strong-basis lcm agree."""
    G = list(I.reduced_gb(sigma))
    if not G:
        raise ValueError("the zero ideal has no denominator identity")
    a = rad(den_of_set(G))
    J_gens = [prim(g, sigma) for g in G]
    b = rad(lcm_sigma(strong_gb(J_gens, sigma)))
    return a, b, a == b
