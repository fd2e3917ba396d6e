"""Rational-integer number theory kernel.

Sieving, deterministic 64-bit primality, prime counting in residue classes,
the logarithmic integral li(x) = ∫₂ˣ dt/log t, Jordan totients
J_s(n) = n^s ∏_{p|n} (1 - p^{-s}), Möbius/Mertens, the Jacobi symbol,
Fermat two-square decompositions, Euler's composite-detection identity, and
divisor-class counts d_k(n; m) = #{d | n : d ≡ k mod m}.

Everything here is exact integer arithmetic except li().
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate


class CapacityError(Exception):
    """A requested computation exceeds the configured resource budget."""


_SIEVE_BYTE_BUDGET = 2_200_000_000  # ~2 GB of bool flags


class PrimeSieve:
    """Primality flags for 0..limit with O(1) queries.

    Immutable after construction; safe to share read-only across workers.
    """

    def __init__(self, limit):
        if limit < 2:
            raise ValueError("sieve limit must be >= 2")
        if limit + 1 > _SIEVE_BYTE_BUDGET:
            raise CapacityError(f"sieve limit {limit} exceeds memory budget")
        flags = np.ones(limit + 1, dtype=bool)
        flags[:2] = False
        for p in range(2, math.isqrt(limit) + 1):
            if flags[p]:
                flags[p * p :: p] = False
        self.limit = limit
        self.flags = flags
        self.flags.setflags(write=False)

    def is_prime(self, n):
        if n < 0 or n > self.limit:
            raise ValueError(f"{n} outside sieve range 0..{self.limit}")
        return bool(self.flags[n])

    def primes(self):
        """All primes <= limit as an int64 array."""
        return np.nonzero(self.flags)[0].astype(np.int64)

    def pi(self, x):
        """#{p <= x}."""
        if x < 0:
            return 0
        if x > self.limit:
            raise ValueError(f"{x} outside sieve range")
        return int(np.count_nonzero(self.flags[: int(x) + 1]))


@lru_cache(maxsize=8)
def sieve(limit):
    return PrimeSieve(limit)


_SMALL_PRIMES = tuple(int(p) for p in PrimeSieve(1000).primes())

# Deterministic Miller-Rabin witness set for n < 3.3·10^24 (covers 64-bit).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Exact primality for any nonnegative integer (deterministic < 3.3e24)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 1_000_000:
        # trial division already covered sqrt(1e6) = 1000
        return True
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pi_mod(x, r, m):
    """#{p <= x prime : p ≡ r mod m}."""
    if not 0 <= r < m:
        raise ValueError("need 0 <= r < m")
    s = sieve(max(int(x), 2))
    ps = s.primes()
    ps = ps[ps <= x]
    return int(np.count_nonzero(ps % m == r))


def li(x):
    """∫₂ˣ dt/log t by adaptive quadrature, relative tolerance 1e-10."""
    if x < 2:
        raise ValueError("li defined for x >= 2")
    if x == 2:
        return 0.0
    val, _err = integrate.quad(lambda t: 1.0 / math.log(t), 2.0, x,
                               epsrel=1e-12, limit=200)
    return val


def factorize(n):
    """Factorization as a list of (prime, exponent), primes increasing.

    Trial division plus Miller-Rabin certification of the final cofactor;
    intended for the moderate n this laboratory sweeps, not cryptographic sizes.
    """
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out = []
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        if is_prime(n):
            out.append((n, 1))
        else:
            p = 1009
            while n > 1:
                if is_prime(n):
                    out.append((n, 1))
                    break
                while n % p:
                    p += 2
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out.append((p, e))
    return out


def jordan_totient(n, s=1):
    """J_s(n) = n^s ∏_{p|n}(1 - p^{-s}).

    Exact integer for integer s >= 1, complex float otherwise.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    if isinstance(s, int) and s >= 1:
        out = 1
        for p, e in factorize(n):
            out *= p ** ((e - 1) * s) * (p**s - 1)
        return out
    out = complex(n) ** s
    for p, _e in factorize(n):
        out *= 1 - complex(p) ** (-s)
    return out


def totient(n):
    return jordan_totient(n, 1)


def moebius(n):
    if n < 1:
        raise ValueError("n >= 1 required")
    mu = 1
    for _p, e in factorize(n):
        if e > 1:
            return 0
        mu = -mu
    return mu


def moebius_table(n):
    """μ(1..n) as an int8 array (index 0 unused)."""
    mu = np.ones(n + 1, dtype=np.int8)
    spf = np.zeros(n + 1, dtype=np.int64)
    for p in range(2, n + 1):
        if spf[p] == 0:
            spf[p::p] = np.where(spf[p::p] == 0, p, spf[p::p])
    for k in range(2, n + 1):
        p = int(spf[k])
        m = k // p
        mu[k] = 0 if m % p == 0 else -mu[m]
    return mu


def mertens(n):
    """M(n) = Σ_{k<=n} μ(k)."""
    if n < 1:
        raise ValueError("n >= 1 required")
    return int(moebius_table(n)[1:].sum())


def jacobi(a, n):
    """Jacobi symbol (a|n) for odd n >= 1."""
    if n < 1 or n % 2 == 0:
        raise ValueError("Jacobi symbol needs odd n >= 1")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def two_square(p):
    """(a, b) with a² + b² = p, a >= b >= 0, by bounded search.

    Unique with a > b > 0 for p ≡ 1 mod 4; p=2 gives (1,1).
    """
    if p == 2:
        return (1, 1)
    if not is_prime(p) or p % 4 != 1:
        raise ValueError(f"{p} has no two-square representation")
    b = 1
    while True:
        a2 = p - b * b
        a = math.isqrt(a2)
        if a < b:
            raise ValueError(f"no representation found for {p}")
        if a * a == a2:
            return (a, b)
        b += 1


def _gauss_gcd(z, w):
    """gcd in Z[i] on (re, im) pairs, via nearest-integer division."""
    while w != (0, 0):
        a, b = z
        c, d = w
        n = c * c + d * d
        # z / w = (z * conj(w)) / N(w), rounded to the nearest lattice point
        xr = a * c + b * d
        xi = b * c - a * d
        qr = (2 * xr + n) // (2 * n)
        qi = (2 * xi + n) // (2 * n)
        z, w = w, (a - (qr * c - qi * d), b - (qr * d + qi * c))
    return z


def euler_composite_factor(n, rep1, rep2):
    """A nontrivial factor of n from two distinct two-square representations.

    Two essentially different a²+b² = c²+d² = n force n composite; the factor
    comes out of a Z[i] gcd of the two representations.
    """
    a, b = rep1
    c, d = rep2
    if a * a + b * b != n or c * c + d * d != n:
        raise ValueError("representations do not equal n")
    set1 = {(abs(a), abs(b)), (abs(b), abs(a))}
    if (abs(c), abs(d)) in set1:
        raise ValueError("representations equivalent under sign/swap")
    for w in ((c, d), (c, -d)):
        g = _gauss_gcd((a, b), w)
        f = g[0] * g[0] + g[1] * g[1]
        if 1 < f < n:
            return min(f, n // f)
    raise ValueError("gcd derivation failed to produce a proper factor")


def divisors_mod_count(n, k, m):
    """#{d | n : d ≡ k mod m}."""
    if n < 1:
        raise ValueError("n >= 1 required")
    count = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            if d % m == k:
                count += 1
            e = n // d
            if e != d and e % m == k:
                count += 1
        d += 1
    return count


def totient_summatory(n):
    """Φ(n) = Σ_{k<=n} φ(k); grows like (3/π²) n²."""
    if n < 1:
        raise ValueError("n >= 1 required")
    phi = np.arange(n + 1, dtype=np.int64)
    for p in range(2, n + 1):
        if phi[p] == p:  # p prime, untouched so far
            phi[p::p] -= phi[p::p] // p
    return int(phi[1:].sum())


def totient_table(n):
    """φ(1..n) as int64 array (index 0 unused)."""
    phi = np.arange(n + 1, dtype=np.int64)
    for p in range(2, n + 1):
        if phi[p] == p:
            phi[p::p] -= phi[p::p] // p
    return phi


@dataclass(frozen=True)
class Factorization:
    pairs: tuple

    @classmethod
    def of(cls, n):
        return cls(tuple(factorize(n)))

    def value(self):
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out


def sqrt_minus_one_mod(p):
    """r with r² ≡ -1 mod p, for p = 2 or p ≡ 1 mod 4."""
    if p == 2:
        return 1
    if p % 4 != 1:
        raise ValueError("-1 is not a square mod " + str(p))
    a = 2
    while jacobi(a, p) != -1:
        a += 1
    return pow(a, (p - 1) // 4, p)
