"""Exact integer helpers: radicals, factoring, CRT, rational reconstruction."""

import math
import random
from fractions import Fraction

# Trial division cutoff before switching to Pollard rho.
_TRIAL_LIMIT = 1 << 20

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Miller-Rabin primality test (deterministic below 3.3e24)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 3317044064679887385961981:
        bases = _MR_BASES
    else:
        bases = _MR_BASES + tuple(random.Random(n).randrange(2, n - 1) for _ in range(13))
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n, rng):
    """Find a non-trivial factor of composite n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    while True:
        c = rng.randrange(1, n)
        x = rng.randrange(0, n)
        y = x
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factor(n):
    """Return the prime factorization of n >= 1 as a dict {prime: exponent}."""
    if n < 1:
        raise ValueError("can only factor positive integers, got %s" % n)
    out = {}
    d = 2
    while d * d <= n and d < _TRIAL_LIMIT:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n == 1:
        return out
    rng = random.Random(n)
    stack = [n]
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        f = _pollard_rho(m, rng)
        stack.append(f)
        stack.append(m // f)
    return out


def rad(n):
    """Squarefree kernel of n: the product of the distinct primes dividing n."""
    if n < 1:
        raise ValueError("rad is only defined for positive integers, got %s" % n)
    r = 1
    for p in factor(n):
        r *= p
    return r


def mod_inverse(a, p):
    """Inverse of a modulo the prime p; raises ZeroDivisionError when p | a."""
    if a % p == 0:
        raise ZeroDivisionError("%s is not invertible modulo %s" % (a, p))
    return pow(a % p, -1, p)


def crt_pair(r1, m1, r2, m2):
    """Combine r mod m1 and r mod m2 into r mod m1*m2 for coprime moduli."""
    if m1 < 2 or m2 < 2:
        raise ValueError("moduli must be >= 2")
    g, u, _ = _ext_gcd(m1, m2)
    if g != 1:
        raise ValueError("moduli %s and %s are not coprime" % (m1, m2))
    m = m1 * m2
    # r = r1 + m1 * u * (r2 - r1) mod m  satisfies both congruences.
    r = (r1 + m1 * (u * (r2 - r1) % m2)) % m
    return r, m


def _ext_gcd(a, b):
    """Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def rational_reconstruct(r, m):
    """Recover a/b from r mod m with |a|, b <= floor(sqrt(m/2)), or None.

    The returned Fraction satisfies a == r*b (mod m), b > 0 and
    gcd(b, m) == 1.  None is returned when no such fraction exists.
    """
    if not 0 <= r < m:
        raise ValueError("residue out of range")
    bound = math.isqrt(m // 2)
    if r == 0:
        return Fraction(0)
    v0, v1 = m, r
    t0, t1 = 0, 1
    while v1 > bound:
        q = v0 // v1
        v0, v1 = v1, v0 - q * v1
        t0, t1 = t1, t0 - q * t1
    a = v1 if t1 > 0 else -v1
    b = abs(t1)
    if b > bound or b == 0 or math.gcd(a, b) != 1 or math.gcd(b, m) != 1:
        return None
    return Fraction(a, b)


def random_prime(bits=31, rng=None):
    """Uniformly sample a prime with the given bit length."""
    rng = rng or random
    while True:
        n = rng.getrandbits(bits - 1) | (1 << (bits - 1)) | 1
        if is_prime(n):
            return n


def lcm(*values):
    """Positive lcm of the given nonzero integers; lcm() == 1."""
    out = 1
    for v in values:
        if v == 0:
            raise ValueError("lcm of zero is undefined")
        out = out * abs(v) // math.gcd(out, abs(v))
    return out
