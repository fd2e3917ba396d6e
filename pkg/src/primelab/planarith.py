"""Gaussian and Eisenstein integer rings.

Z[i] elements are a + b·i with norm N = a² + b²; Eisenstein elements are
a + b·ω with ω = (1+√−3)/2 (positive imaginary part), norm N = a² + ab + b².

Primality criteria:
  Gaussian    — N(z) is a rational prime, or z is a unit multiple of a
                rational prime q ≡ 3 mod 4.
  Eisenstein  — N(z) is a rational prime, or z is a unit multiple of a
                rational prime q ≡ 2 mod 3.

Canonical representatives: the unit×conjugation symmetry group of Z[i] is
dihedral of order 8, with fundamental octant 0 ≤ arg ≤ π/4, i.e. a ≥ b ≥ 0;
for the Eisenstein hexant (order-12 symmetry, 30°) the sector is likewise
a ≥ b ≥ 0 in ω-coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import ratkernel as rk

PI8 = math.pi / 8


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int

    def __add__(self, other):
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianInt(a * c - b * d, a * d + b * c)

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def conj(self):
        return GaussianInt(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __repr__(self):
        return f"({self.re}{self.im:+d}i)"


@dataclass(frozen=True)
class EisensteinInt:
    a: int
    b: int

    def __add__(self, other):
        return EisensteinInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __mul__(self, other):
        # ω² = ω − 1, so (a+bω)(c+dω) = (ac − bd) + (ad + bc + bd)ω
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInt(a * c - b * d, a * d + b * c + b * d)

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def conj(self):
        # conj(ω) = 1 − ω
        return EisensteinInt(self.a + self.b, -self.b)

    def norm(self):
        return self.a * self.a + self.a * self.b + self.b * self.b

    def complex_value(self):
        return complex(self.a + self.b / 2, self.b * math.sqrt(3) / 2)

    def __repr__(self):
        return f"({self.a}{self.b:+d}w)"


GAUSSIAN_UNITS = (GaussianInt(1, 0), GaussianInt(0, 1),
                  GaussianInt(-1, 0), GaussianInt(0, -1))

EISENSTEIN_UNITS = tuple(EisensteinInt(a, b) for a, b in
                         ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)))


def is_gaussian_prime(z):
    a, b = z.re, z.im
    n = a * a + b * b
    if rk.is_prime(n):
        return True
    # unit multiples of an inert rational prime q ≡ 3 mod 4
    if a == 0:
        a, b = b, a
    if b == 0 and abs(a) % 4 == 3 and rk.is_prime(abs(a)):
        return True
    return False


def is_eisenstein_prime(z):
    n = z.norm()
    if rk.is_prime(n):
        return True
    # unit multiples of an inert rational prime q ≡ 2 mod 3:
    # coordinate patterns (±q, 0), (0, ±q), (±q, ∓q)
    a, b = z.a, z.b
    q = max(abs(a), abs(b))
    if q == 0 or not (rk.is_prime(q) and q % 3 == 2):
        return False
    return (a, b) in {(q, 0), (-q, 0), (0, q), (0, -q), (q, -q), (-q, q)}


def octant_rep(z):
    """Canonical orbit representative with 0 <= arg <= π/4 (a >= b >= 0)."""
    if z.re == 0 and z.im == 0:
        raise ValueError("octant_rep undefined at 0")
    a, b = abs(z.re), abs(z.im)
    return GaussianInt(max(a, b), min(a, b))


def hexant_rep(z):
    """Canonical representative in the 30° Eisenstein sector (a >= b >= 0)."""
    if z.a == 0 and z.b == 0:
        raise ValueError("hexant_rep undefined at 0")
    orbit = []
    for u in EISENSTEIN_UNITS:
        for w in (z * u, z.conj() * u):
            if w.a >= w.b >= 0:
                orbit.append((w.a, w.b))
    return EisensteinInt(*min(orbit))


def prime_above(p, ring="gaussian"):
    """Canonical prime representative above a rational prime p."""
    if not rk.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if ring == "gaussian":
        if p == 2:
            return GaussianInt(1, 1)
        if p % 4 == 3:
            return GaussianInt(p, 0)
        a, b = rk.two_square(p)
        return GaussianInt(a, b)
    if ring == "eisenstein":
        if p == 3:
            return EisensteinInt(1, 1)
        if p % 3 == 2:
            return EisensteinInt(p, 0)
        # split case: a² + ab + b² = p with a >= b >= 1
        for b in range(1, math.isqrt(p) + 1):
            disc = 4 * p - 3 * b * b
            if disc < 0:
                break
            r = math.isqrt(disc)
            if r * r == disc and (r - b) % 2 == 0:
                a = (r - b) // 2
                if a >= b >= 1:
                    return hexant_rep(EisensteinInt(a, b))
        raise ValueError(f"no split representation found for {p}")
    raise ValueError(f"unknown ring {ring!r}")


@dataclass(frozen=True)
class PrimeAngle:
    p: int
    theta: float


def theta_sequence(count):
    """Angles θ = arg(a+ib) − π/8 for the first `count` primes ≡ 1 mod 4.

    (a, b) = two_square(p) with a > b > 0 pins each prime into the octant,
    so θ ∈ (−π/8, π/8).
    """
    if count < 1:
        raise ValueError("count >= 1 required")
    out = []
    p = 5
    while len(out) < count:
        if p % 4 == 1 and rk.is_prime(p):
            a, b = rk.two_square(p)
            out.append(PrimeAngle(p, math.atan2(b, a) - PI8))
        p += 4
    return out


def _gaussian_prime_counts_by_norm(xmax):
    """counts[n] = #Gaussian primes of norm exactly n, for n <= xmax."""
    s = rk.sieve(max(int(xmax), 4))
    flags = s.flags[: xmax + 1]
    counts = np.zeros(xmax + 1, dtype=np.int64)
    m = math.isqrt(xmax)
    a = np.arange(1, m + 1, dtype=np.int64)
    norms = (a[:, None] ** 2 + a[None, :] ** 2).ravel()
    norms = norms[norms <= xmax]
    prime_norms = norms[flags[norms]]
    # interior quadrant points, ×4 for the four unit rotations
    np.add.at(counts, prime_norms, 4)
    # axis points: unit multiples of inert primes q ≡ 3 mod 4, norm q²
    qs = s.primes()
    qs = qs[(qs % 4 == 3) & (qs * qs <= xmax)]
    np.add.at(counts, qs * qs, 4)
    return counts


def pi_G(x):
    """Count of Gaussian primes with N(z) <= x (all associates/conjugates).

    Returns (count, identity_residual) against 4 + 8·π₁(x) + 4·π₃(√x).
    """
    x = int(x)
    if x < 2:
        raise ValueError("x >= 2 required")
    counts = _gaussian_prime_counts_by_norm(x)
    count = int(counts.sum())
    formula = 4 + 8 * rk.pi_mod(x, 1, 4) + 4 * rk.pi_mod(math.isqrt(x), 3, 4)
    return count, count - formula


def pi_G_identity_check(xmax):
    """Max |enumeration − formula| of the counting functions over 2 <= x <= xmax."""
    xmax = int(xmax)
    counts = _gaussian_prime_counts_by_norm(xmax)
    s = rk.sieve(xmax)
    formula = np.zeros(xmax + 1, dtype=np.int64)
    ps = s.primes()
    formula[2] += 4  # the four primes ±1±i
    split = ps[ps % 4 == 1]
    np.add.at(formula, split, 8)
    inert = ps[(ps % 4 == 3) & (ps * ps <= xmax)]
    np.add.at(formula, inert * inert, 4)
    diff = np.cumsum(counts) - np.cumsum(formula)
    return int(np.abs(diff[2:]).max())


def _gaussian_primes_in_disk(r):
    """All Gaussian primes with |z| <= r as (re, im) integer arrays."""
    x = int(r * r)
    s = rk.sieve(max(x, 4))
    m = int(r)
    a = np.arange(-m, m + 1, dtype=np.int64)
    A, B = np.meshgrid(a, a, indexing="ij")
    N = A * A + B * B
    inside = (N <= x) & (N >= 2)
    norm_prime = np.zeros_like(inside)
    norm_prime[inside] = s.flags[N[inside]]
    axis = ((A == 0) | (B == 0)) & inside
    inert = np.zeros_like(inside)
    q = np.maximum(np.abs(A), np.abs(B))
    qi = axis & (q % 4 == 3)
    inert[qi] = s.flags[q[qi]]
    mask = norm_prime | inert
    return A[mask], B[mask]


def sector_count(r, alpha, beta):
    """Exact count of Gaussian primes with arg ∈ [α, β], |z| <= r.

    The interval is closed so that reflection symmetries (conjugation,
    multiplication by i) map sectors to sectors of equal count; arg is
    normalized to [0, 2π), so β = 2π closes the full circle without
    double-counting the positive real axis.
    """
    if not 0 <= alpha < beta <= 2 * math.pi:
        raise ValueError("need 0 <= alpha < beta <= 2π")
    A, B = _gaussian_primes_in_disk(r)
    args = np.arctan2(B, A) % (2 * math.pi)
    return int(np.count_nonzero((args >= alpha) & (args <= beta)))


def kubilius_expected(r, alpha, beta):
    """4 · (β−α)/(2π) · ∫₂^{r²} dx/log x.

    The factor 4 accounts for the unit orbit: π_G(x) ~ 4 Li(x) when every
    associate is counted, and sector_count counts all associates.
    """
    if r * r < 2:
        return 0.0
    return 4 * (beta - alpha) / (2 * math.pi) * rk.li(r * r)


def _exact_divide(z, w):
    """z / w in Z[i], or None when w does not divide z."""
    n = w.norm()
    t = z * w.conj()
    if t.re % n or t.im % n:
        return None
    return GaussianInt(t.re // n, t.im // n)


def gaussian_moebius(z):
    """μ_G: 0 on non-squarefree, else (−1)^(#distinct Gaussian prime factors).

    Units get μ_G = 1 (empty factorization).
    """
    n = z.norm()
    if n == 0:
        raise ValueError("μ_G undefined at 0")
    if n == 1:
        return 1
    omega = 0
    for p, e in rk.factorize(n):
        if p == 2 or p % 4 == 3:
            # ramified / inert: multiplicity e (ramified) or e/2 (inert)
            mult = e if p == 2 else e // 2
            if p % 4 == 3 and e % 2:
                raise AssertionError("odd inert exponent in a norm")
            if mult >= 2:
                return 0
            omega += mult
        else:
            pi = prime_above(p)
            a = 0
            w = z
            while True:
                w2 = _exact_divide(w, pi)
                if w2 is None:
                    break
                w, a = w2, a + 1
            b = e - a
            if a >= 2 or b >= 2:
                return 0
            omega += (a > 0) + (b > 0)
    return -1 if omega % 2 else 1


def _h_table(n):
    """h(1..n): multiplicative, Σ_{N(z)=m} μ_G(z) = 4·h(m).

    Local factors of Π_classes (1 − N(π)^{−s}):
      p = 2       → h(2) = −1, higher powers 0
      p ≡ 1 mod 4 → h(p) = −2, h(p²) = 1, higher powers 0
      p ≡ 3 mod 4 → h(p²) = −1, all other powers 0
    """
    spf = np.zeros(n + 1, dtype=np.int64)
    for p in range(2, n + 1):
        if spf[p] == 0:
            spf[p::p] = np.where(spf[p::p] == 0, p, spf[p::p])
    h = np.zeros(n + 1, dtype=np.int64)
    h[1] = 1
    for m in range(2, n + 1):
        p = int(spf[m])
        k = m
        e = 0
        while k % p == 0:
            k //= p
            e += 1
        if p == 2:
            loc = -1 if e == 1 else 0
        elif p % 4 == 1:
            loc = {1: -2, 2: 1}.get(e, 0)
        else:
            loc = -1 if e == 2 else 0
        h[m] = loc * h[k]
    return h


def gaussian_mertens(x):
    """M_G(x) = Σ_{0<N(z)<=x} μ_G(z), over all nonzero Gaussian integers."""
    x = int(x)
    if x < 1:
        raise ValueError("x >= 1 required")
    return 4 * int(_h_table(x)[1:].sum())


def gaussian_mertens_series(nmax):
    """M_G(1..nmax) as an int64 array (index 0 unused)."""
    h = _h_table(int(nmax))
    out = 4 * np.cumsum(h)
    out[0] = 0
    return out


def norm_count(n, ring="gaussian"):
    """#{z : N(z) = n}, cross-checked against the divisor-class formula.

    Gaussian: a(n) = 4(d₁(n) − d₃(n)) with divisor classes mod 4;
    Eisenstein: 6(d₁(n) − d₂(n)) with divisor classes mod 3.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    count = 0
    if ring == "gaussian":
        for a in range(math.isqrt(n) + 1):
            b2 = n - a * a
            b = math.isqrt(b2)
            if b * b == b2:
                count += (4 if a and b else 2)
        formula = 4 * (rk.divisors_mod_count(n, 1, 4)
                       - rk.divisors_mod_count(n, 3, 4))
    elif ring == "eisenstein":
        m = 2 * math.isqrt(n // 3 + 1) + 2
        for a in range(-m, m + 1):
            for b in range(-m, m + 1):
                if a * a + a * b + b * b == n:
                    count += 1
        formula = 6 * (rk.divisors_mod_count(n, 1, 3)
                       - rk.divisors_mod_count(n, 2, 3))
    else:
        raise ValueError(f"unknown ring {ring!r}")
    if count != formula:
        raise AssertionError(f"norm_count({n}) = {count} != formula {formula}")
    return count


def norm_count_table(nmax, ring="gaussian"):
    """counts[n] = #{z : N(z) = n} for all n <= nmax, by lattice bincount."""
    nmax = int(nmax)
    if ring == "gaussian":
        m = math.isqrt(nmax)
        a = np.arange(-m, m + 1, dtype=np.int64)
        N = (a[:, None] ** 2 + a[None, :] ** 2).ravel()
    elif ring == "eisenstein":
        m = int(2 * math.sqrt(nmax / 3.0)) + 2
        a = np.arange(-m, m + 1, dtype=np.int64)
        A, B = np.meshgrid(a, a, indexing="ij")
        N = (A * A + A * B + B * B).ravel()
    else:
        raise ValueError(f"unknown ring {ring!r}")
    N = N[(N >= 1) & (N <= nmax)]
    return np.bincount(N, minlength=nmax + 1)


def twins(r):
    """Unordered Gaussian prime pairs at distance √2, both inside |z| <= r.

    Deterministic order: sorted by the lexicographically smaller member.
    """
    if r < 2:
        raise ValueError("r >= 2 required")
    A, B = _gaussian_primes_in_disk(r)
    prime_set = set(zip(A.tolist(), B.tolist()))
    r2 = r * r
    pairs = []
    for a, b in prime_set:
        for da, db in ((1, 1), (1, -1)):
            c, d = a + da, b + db
            if (c, d) in prime_set and c * c + d * d <= r2:
                pairs.append(((a, b), (c, d)))
    pairs.sort()
    return [(GaussianInt(*u), GaussianInt(*v)) for u, v in pairs]


def gaussian_prime_mask(re_lo, re_hi, im_lo, im_hi):
    """Boolean mask over the box [re_lo..re_hi]×[im_lo..im_hi] (inclusive)."""
    a = np.arange(re_lo, re_hi + 1, dtype=np.int64)
    b = np.arange(im_lo, im_hi + 1, dtype=np.int64)
    A, B = np.meshgrid(a, b, indexing="ij")
    N = A * A + B * B
    nmax = int(N.max())
    s = rk.sieve(max(nmax, 4))
    mask = np.zeros(A.shape, dtype=bool)
    pos = N >= 2
    mask[pos] = s.flags[N[pos]]
    axis = (A == 0) | (B == 0)
    q = np.maximum(np.abs(A), np.abs(B))
    cand = axis & (q % 4 == 3) & (q >= 3)
    mask[cand] = s.flags[q[cand]]
    return mask
