"""Modular Groebner basis pipeline: per-prime runs, tuple filtering, CRT
lifting, rational reconstruction, and verification.

The tuple test supplies the prime filter: a run whose leading-term tuple
strictly precedes another run's tuple belongs to a relatively bad prime,
so only holders of the best tuple seen so far contribute to the lift.
"""

import random
import time

from .arith import crt_pair, random_prime, rational_reconstruct
from .gb_field import ReducedGB, is_groebner, normal_form
from .orderings import degrevlex
from .poly import BadPrimeForInput, PolyRing, QQ, leading, pp_divides
from .primes import reduction
from .tuples import LtTuple, PRECEDES, precedes, tuple_max

DEFAULT_PRIME_BITS = 31
DEFAULT_MAX_PRIMES = 64


class ModularRun:
    """One prime's artifact: its reduced tau-basis over F_p and the tuple."""

    __slots__ = ("prime", "ordering", "basis", "lt_tuple", "certificate")

    def __init__(self, prime, ordering, basis, lt_tuple):
        self.prime = prime
        self.ordering = ordering
        self.basis = basis
        self.lt_tuple = lt_tuple
        self.certificate = None

    def __repr__(self):
        return "ModularRun(p=%d, %d elements)" % (self.prime, len(self.basis))


class LiftState:
    """CRT accumulator for runs sharing one committed tuple."""

    __slots__ = ("lt_tuple", "modulus", "table", "primes")

    def __init__(self, lt_tuple):
        self.lt_tuple = lt_tuple
        self.modulus = 1
        self.table = {}  # (element index, pp) -> residue mod modulus
        self.primes = []

    def absorb(self, run):
        if run.lt_tuple != self.lt_tuple:
            raise ValueError("run tuple does not match the committed tuple")
        p = run.prime
        keys = set(self.table)
        for i, g in enumerate(run.basis):
            keys.update((i, pp) for pp in g.terms)
        new = {}
        for key in keys:
            i, pp = key
            r_old = self.table.get(key, 0)
            r_new = run.basis[i].terms.get(pp, 0) if i < len(run.basis) else 0
            if self.modulus == 1:
                new[key] = r_new % p
            else:
                new[key], _ = crt_pair(r_old, self.modulus, r_new, p)
        self.table = new
        self.modulus *= p
        self.primes.append(p)


def run_prime(I, sigma, tau, p):
    """Reduced tau-basis of the (p, sigma)-reduction of I, with its tuple."""
    red = reduction(I, sigma, p)
    basis = red.ideal.reduced_gb(tau)
    return ModularRun(p, tau, basis, LtTuple(tau, basis.leading_terms()))


def filter_runs(runs):
    """Split runs into holders of the best tuple and certified-bad rejects.

    Every rejected run gets a certificate pair (its tuple, the better one)
    proving its prime relatively bad.
    """
    runs = list(runs)
    if not runs:
        return [], []
    best = tuple_max(r.lt_tuple for r in runs)
    kept, rejected = [], []
    for r in runs:
        if r.lt_tuple == best:
            kept.append(r)
        else:
            r.certificate = (r.lt_tuple, best)
            rejected.append(r)
    return kept, rejected


def lift_and_reconstruct(kept, I, tau):
    """Candidate rational basis from the kept runs, or None for more primes."""
    if not kept:
        raise ValueError("no runs to lift")
    state = LiftState(kept[0].lt_tuple)
    for r in kept:
        state.absorb(r)
    ring = PolyRing(QQ, I.ring.names)
    m = state.modulus
    coeffs = {}
    for key, residue in state.table.items():
        c = rational_reconstruct(residue, m)
        if c is None:
            return None
        coeffs[key] = c
    polys = []
    for i in range(len(state.lt_tuple)):
        terms = [(pp, c) for (j, pp), c in coeffs.items() if j == i and c]
        polys.append(ring.from_terms(terms))
    return polys


def verify_candidate(candidate, I, tau, full=False):
    """Check that the candidate is the reduced tau-basis of the ideal of I.

    Cheap checks: the candidate is monic and self-reduced, every input
    generator reduces to zero against it, and no S-polynomial survives
    reduction.  With full=True the candidate is also compared against a
    directly computed rational basis.
    """
    if not candidate:
        return not I.gens
    lts = []
    for g in candidate:
        if g.is_zero():
            return False
        lt, lc = leading(g, tau)
        if lc != 1:
            return False
        lts.append(lt)
    for i, g in enumerate(candidate):
        for j, lt in enumerate(lts):
            if i != j and any(pp_divides(lt, t) for t in g.terms):
                return False
    ring = candidate[0].ring
    for f in I.gens:
        if f.ring != ring:
            f = ring.from_terms(f.terms.items())
        if not normal_form(f, candidate, tau).is_zero():
            return False
    if not is_groebner(candidate, tau):
        return False
    if full:
        direct = I.reduced_gb(tau)
        if sorted(candidate, key=lambda g: tau.key(leading(g, tau)[0])) != list(direct):
            return False
    return True


class ModularGBResult:
    """Final basis plus the prime ledger and timing of the pipeline."""

    __slots__ = ("basis", "used_primes", "rejected", "attempts", "seconds")

    def __init__(self, basis, used_primes, rejected, attempts, seconds):
        self.basis = basis
        self.used_primes = used_primes
        self.rejected = rejected
        self.attempts = attempts
        self.seconds = seconds

    def __repr__(self):
        return "ModularGBResult(%d elements, %d primes)" % (
            len(self.basis),
            len(self.used_primes),
        )


def modular_gb(
    I,
    tau,
    sigma=None,
    prime_bits=DEFAULT_PRIME_BITS,
    max_primes=DEFAULT_MAX_PRIMES,
    full_verify=False,
    rng=None,
):
    """Compute the reduced tau-basis of I by the modular pipeline.

    Primes are drawn at random; sigma defaults to degrevlex for the
    per-prime reduction step.  Reconstruction is attempted once the
    committed tuple has three supporters and after every second prime
    thereafter; success requires verify_candidate.
    """
    start = time.monotonic()
    if sigma is None:
        sigma = degrevlex(I.ring.n)
    if rng is None:
        rng = random.Random()
    if not I.gens:
        basis = ReducedGB(tau, [])
        return ModularGBResult(basis, [], [], 0, time.monotonic() - start)
    kept = []
    rejected = []
    tried = set()
    attempts = 0
    while attempts < max_primes:
        p = random_prime(prime_bits, rng)
        if p in tried:
            continue
        tried.add(p)
        attempts += 1
        try:
            run = run_prime(I, sigma, tau, p)
        except (ValueError, BadPrimeForInput) as e:
            dummy = ModularRun(p, tau, None, None)
            dummy.certificate = ("sigma-bad", str(e))
            rejected.append(dummy)
            continue
        if not kept:
            kept = [run]
        else:
            cmp = precedes(run.lt_tuple, kept[0].lt_tuple)
            if cmp == PRECEDES:
                run.certificate = (run.lt_tuple, kept[0].lt_tuple)
                rejected.append(run)
                continue
            if cmp == 0:
                kept.append(run)
            else:
                # the committed tuple is now certified bad; rebuild the lift
                for r in kept:
                    r.certificate = (r.lt_tuple, run.lt_tuple)
                rejected.extend(kept)
                kept = [run]
        if len(kept) >= 3 and (len(kept) - 3) % 2 == 0:
            candidate = lift_and_reconstruct(kept, I, tau)
            if candidate is not None and verify_candidate(candidate, I, tau, full_verify):
                candidate.sort(key=lambda g: tau.key(leading(g, tau)[0]))
                basis = ReducedGB(tau, candidate)
                return ModularGBResult(
                    basis,
                    [r.prime for r in kept],
                    rejected,
                    attempts,
                    time.monotonic() - start,
                )
    raise RuntimeError(
        "no verified basis after %d primes; undecided primes may still be bad"
        % attempts
    )
