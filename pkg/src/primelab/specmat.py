"""Matrix experiments on primes.

Prime matrices: A(z0, n)_{kl} = 1 iff z0 + k + i·l is a Gaussian prime
(indices 1..n).  Measured statements: invertibility beyond a threshold,
determinant growth normalized by n·log n·log log n, trace against li(n),
circular-law-style eigenvalue statistics under the √(log n / n) scaling, the
characteristic-polynomial function f_n(x) = log|p_[nx]| / log|det|, QR column
means, and row correlation/covariance signs.

Smith matrices A_{ij} = gcd(i,j)^s with det = ∏_k J_s(k) and the exact
factorization A = E·diag(J_s)·Eᵀ, E_{ij} = [j | i] (lower unitriangular,
E⁻¹_{ij} = μ(i/j)).

Almost-periodic matrices A_{km} = cos(kmα + mβ) = Re B_{km} with
B_{km} = exp(i(kmα + mβ)); |det B| is a van der Monde product.

Exact determinants use fraction-free (Bareiss) elimination over big integers;
residual norms are max-abs entry norms throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import ratkernel as rk
from .planarith import GaussianInt, gaussian_prime_mask


def _as_gaussian(z0):
    if isinstance(z0, GaussianInt):
        return z0
    if isinstance(z0, complex):
        return GaussianInt(int(z0.real), int(z0.imag))
    return GaussianInt(int(z0), 0)


def build_prime_matrix(z0, n):
    """0/1 matrix with A[k-1, l-1] = 1 iff z0 + k + i·l is a Gaussian prime."""
    if n < 1:
        raise ValueError("n >= 1 required")
    z = _as_gaussian(z0)
    return gaussian_prime_mask(z.re + 1, z.re + n,
                               z.im + 1, z.im + n).astype(np.int64)


def det_exact(m):
    """Exact determinant by fraction-free Bareiss elimination."""
    a = [[int(x) for x in row] for row in np.asarray(m)]
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("square matrix required")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pkk = a[k][k]
        for r in range(k + 1, n):
            ark = a[r][k]
            row_r = a[r]
            row_k = a[k]
            for c in range(k + 1, n):
                row_r[c] = (pkk * row_r[c] - ark * row_k[c]) // prev
            row_r[k] = 0
        prev = pkk
    return sign * a[n - 1][n - 1]


def det_minor_expansion(m):
    """Cofactor-expansion determinant (test oracle, small n only)."""
    a = np.asarray(m, dtype=object)
    n = a.shape[0]

    def rec(rows, colmask):
        if not rows:
            return 1
        r = rows[0]
        total = 0
        sign = 1
        for c in range(n):
            if colmask & (1 << c):
                continue
            if a[r][c]:
                total += sign * a[r][c] * rec(rows[1:], colmask | (1 << c))
            sign = -sign
        return total

    return rec(list(range(n)), 0)


_SCAN_PRIMES = (2147483647, 2147483629, 2147483587)


def _det_mod(m, p):
    """det mod p by elimination over int64 (p < 2^31 keeps products in range)."""
    a = np.array(m, dtype=np.int64) % p
    n = a.shape[0]
    det = 1
    for k in range(n):
        piv = np.nonzero(a[k:, k])[0]
        if piv.size == 0:
            return 0
        r = k + int(piv[0])
        if r != k:
            a[[k, r]] = a[[r, k]]
            det = -det
        det = det * int(a[k, k]) % p
        inv = pow(int(a[k, k]), p - 2, p)
        if k + 1 < n:
            factors = a[k + 1:, k] * inv % p
            a[k + 1:, k:] = (a[k + 1:, k:] - factors[:, None]
                             * a[k, k:][None, :]) % p
    return det % p


def is_singular_exact(m):
    """Exact singularity test: nonzero det mod any scan prime proves
    invertibility; all-zero residues are confirmed by Bareiss."""
    for p in _SCAN_PRIMES:
        if _det_mod(m, p) != 0:
            return False
    return det_exact(m) == 0


def invertibility_scan(z0, nmax):
    """{singular_ns, threshold}: all singular n <= nmax, and the least n0 with
    every n0 < n <= nmax invertible."""
    z = _as_gaussian(z0)
    full = gaussian_prime_mask(z.re + 1, z.re + nmax,
                               z.im + 1, z.im + nmax).astype(np.int64)
    singular = []
    for n in range(1, nmax + 1):
        if is_singular_exact(full[:n, :n]):
            singular.append(n)
    threshold = max(singular) if singular else 0
    return {"singular_ns": singular, "threshold": threshold}


def commutator_residuals(z0, n):
    """(‖PA+AP‖_max, ‖PA−AP‖_max) with P = diag((−1)^j), j = 1..n."""
    z = _as_gaussian(z0)
    if z.re < 0 or z.im < 0 or (z.re + z.im) % 2 or z.re + z.im == 0:
        raise ValueError("z0 needs nonnegative coordinates with even sum > 0")
    a = build_prime_matrix(z0, n)
    signs = np.array([(-1) ** j for j in range(1, n + 1)], dtype=np.int64)
    pa = signs[:, None] * a
    ap = a * signs[None, :]
    return (int(np.abs(pa + ap).max()), int(np.abs(pa - ap).max()))


def anticommutator_residual(z0, n):
    """‖PA + AP‖_max — exactly 0 for admissible even z0."""
    return commutator_residuals(z0, n)[0]


@dataclass
class Spectrum:
    eigenvalues: np.ndarray
    residual_bound: float


def spectrum(m, solver_cap=4000):
    """Eigenvalues with a measured residual bound max‖Av − λv‖₂/‖A‖_max·n."""
    a = np.asarray(m, dtype=float)
    n = a.shape[0]
    if n > solver_cap:
        raise rk.CapacityError(f"matrix size {n} above solver cap {solver_cap}")
    w, v = np.linalg.eig(a)
    scale = max(float(np.linalg.norm(a)), 1e-300)
    res = np.linalg.norm(a @ v - v * w[None, :], axis=0)
    res /= np.maximum(np.linalg.norm(v, axis=0), 1e-300) * scale
    return Spectrum(w, float(res.max()))


def spectral_symmetry_residual(s):
    """Hausdorff distance between σ(A) and −σ(A)."""
    w = np.asarray(s.eigenvalues)
    d = np.abs(w[:, None] + w[None, :])
    return float(max(d.min(axis=0).max(), d.min(axis=1).max()))


def char_poly(m, exact_cap=64):
    """Coefficients of det(xI − A), descending (leading 1).

    Exact integers via Faddeev–LeVerrier up to exact_cap, float beyond.
    """
    a = np.asarray(m)
    n = a.shape[0]
    if n <= exact_cap:
        A = np.array([[int(x) for x in row] for row in a], dtype=object)
        M = np.eye(n, dtype=object)
        coeffs = [1]
        for k in range(1, n + 1):
            N = A @ M
            ck = -sum(N[i, i] for i in range(n))
            assert ck % k == 0
            ck //= k
            coeffs.append(ck)
            M = N + ck * np.eye(n, dtype=object)
        return coeffs
    w = np.linalg.eigvals(a.astype(float))
    return list(np.poly(w))


def char_poly_function(m, x):
    """f_n(x) = log|p_[nx]| / log|det A| on x ∈ [0,1]; f_n(1) = 1."""
    coeffs = char_poly(m)
    n = len(coeffs) - 1
    det = coeffs[-1]  # |constant term| = |det|
    if det == 0:
        raise ValueError("determinant zero: normalization undefined")
    j = min(int(n * x), n)
    p = coeffs[j]
    if p == 0:
        return -math.inf
    return math.log(abs(p)) / math.log(abs(det))


@dataclass
class SpectralStats:
    radial_cdf: np.ndarray  # (r, F(r)) pairs on scaled radii
    angular_cdf: np.ndarray  # (φ, F(φ)) pairs
    nn_distance: np.ndarray
    scaled_radius: float


def spectral_stats(s, n):
    """Circular-law-style statistics under the √(log n / n) scaling."""
    w = np.asarray(s.eigenvalues)
    scale = math.sqrt(math.log(max(n, 3)) / n)
    z = w * scale
    r = np.sort(np.abs(z))
    phi = np.sort(np.angle(z) % (2 * math.pi))
    k = len(z)
    radial = np.column_stack([r, np.arange(1, k + 1) / k])
    angular = np.column_stack([phi, np.arange(1, k + 1) / k])
    d = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(d, np.inf)
    return SpectralStats(radial, angular, d.min(axis=1), float(r[-1]))


def prime_row_flags(k, n):
    """flags[j-1] for j + k·i Gaussian prime, 1 <= j <= n (k >= 1), sieved by
    the progressions j ≡ ±k·√−1 mod p — no per-entry primality tests."""
    if k < 1:
        raise ValueError("k >= 1 required")
    if n <= 10000:
        return gaussian_prime_mask(1, n, k, k)[:, 0]
    flags = np.zeros(n + 1, dtype=bool)
    flags[1:] = True
    # parity: j²+k² ≡ j+k mod 2, so even (and > 2, composite) iff j ≡ k mod 2
    start = 2 if k % 2 == 0 else 1
    flags[start::2] = False
    if k == 1:
        flags[1] = True  # 1 + i, norm 2
    s = rk.sieve(n)
    for p in s.primes():
        p = int(p)
        if p == 2:
            continue
        if k % p == 0:
            flags[p::p] = False
            continue
        if p % 4 != 1:
            continue
        r = rk.sqrt_minus_one_mod(p) * k % p
        for st in (r, p - r):
            if st == 0:
                st = p
            flags[st::p] = False
    # values j²+k² <= n may equal a sieving prime: recheck directly
    for j in range(1, min(n, math.isqrt(n) + 2) + 1):
        flags[j] = rk.is_prime(j * j + k * k)
    return flags[1:]


def row_corr(k, l, n):
    """Pearson correlation of the primality-indicator rows R_k, R_l."""
    rk_ = prime_row_flags(k, n).astype(float)
    rl_ = prime_row_flags(l, n).astype(float)
    sk, sl = rk_.std(), rl_.std()
    if sk == 0 or sl == 0:
        raise ValueError("degenerate row")
    return float(((rk_ - rk_.mean()) * (rl_ - rl_.mean())).mean() / (sk * sl))


def row_cov_sign_table(K, n):
    """Sign matrix of Cov(R_k, R_l) for 1 <= k,l <= K."""
    rows = [prime_row_flags(k, n).astype(float) for k in range(1, K + 1)]
    table = np.zeros((K, K), dtype=np.int64)
    for i in range(K):
        for j in range(K):
            cov = ((rows[i] - rows[i].mean())
                   * (rows[j] - rows[j].mean())).mean()
            table[i, j] = int(np.sign(cov))
    return table


def qr_column_means(m):
    """Column means of Q in the QR factorization."""
    q, _r = np.linalg.qr(np.asarray(m, dtype=float))
    return q.mean(axis=0)


def trace_vs_li(z0, n):
    """(trace, trace/li(n)) — the diagonal prime count against li(n)."""
    a = build_prime_matrix(z0, n)
    tr = int(np.trace(a))
    return tr, tr / rk.li(max(n, 3))


def det_growth_normalized(z0, n):
    """log|det A(z0,n)| / (n·log n·log log n) — measured, never asserted."""
    a = build_prime_matrix(z0, n)
    sign, logdet = np.linalg.slogdet(a.astype(float))
    if sign == 0:
        return 0.0
    return float(logdet / (n * math.log(n) * math.log(math.log(n))))


# ---------------------------------------------------------------------------
# Smith / GCD matrices
# ---------------------------------------------------------------------------

def build_smith(n, s=1):
    """A_{ij} = gcd(i,j)^s, 1 <= i,j <= n; exact for integer s >= 1."""
    idx = np.arange(1, n + 1, dtype=np.int64)
    g = np.gcd.outer(idx, idx)
    if isinstance(s, int) and s >= 1:
        return np.array([[int(x) ** s for x in row] for row in g],
                        dtype=object)
    return np.power(g.astype(complex), s)


def smith_divisor_factor(n):
    """E with E_{ij} = 1 iff j | i (lower unitriangular)."""
    idx = np.arange(1, n + 1, dtype=np.int64)
    return (idx[:, None] % idx[None, :] == 0).astype(np.int64)


def smith_det_residual(n, s=1):
    """det(gcd^s matrix) − ∏_{k<=n} J_s(k); exact 0 for integer s."""
    a = build_smith(n, s)
    if isinstance(s, int) and s >= 1:
        target = 1
        for k in range(1, n + 1):
            target *= rk.jordan_totient(k, s)
        return det_exact(a) - target
    target = complex(1.0)
    for k in range(1, n + 1):
        target *= rk.jordan_totient(k, s)
    # relative residual: the determinant magnitude explodes with n
    return (complex(np.linalg.det(a)) - target) / max(1.0, abs(target))


def smith_factorization_check(n, s=1):
    """Exact check A = E · diag(J_s(1..n)) · Eᵀ for integer s."""
    if not (isinstance(s, int) and s >= 1):
        raise ValueError("exact factorization check needs integer s >= 1")
    e = smith_divisor_factor(n).astype(object)
    d = np.diag([rk.jordan_totient(k, s) for k in range(1, n + 1)])
    return bool(np.array_equal(e @ d @ e.T, build_smith(n, s)))


def smith_inverse_moebius_check(n):
    """E⁻¹_{ij} = μ(i/j) on divisor pairs (0 elsewhere)."""
    e = smith_divisor_factor(n).astype(object)
    inv = np.zeros((n, n), dtype=object)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i % j == 0:
                inv[i - 1, j - 1] = rk.moebius(i // j)
    return bool(np.array_equal(e @ inv, np.eye(n, dtype=object)))


# ---------------------------------------------------------------------------
# Almost-periodic / van der Monde matrices
# ---------------------------------------------------------------------------

GOLDEN = (math.sqrt(5) - 1) / 2


def build_almost_period(n, alpha, beta, theta=0.0):
    """A_{km} = cos(kmα + mβ + θ), k,m = 1..n."""
    k = np.arange(1, n + 1, dtype=float)
    return np.cos(np.outer(k, k) * alpha + k[None, :] * beta + theta)


def build_vdm(n, alpha, beta):
    """B_{km} = exp(i(kmα + mβ)), k,m = 1..n."""
    k = np.arange(1, n + 1, dtype=float)
    return np.exp(1j * (np.outer(k, k) * alpha + k[None, :] * beta))


def vdm_product_modulus(n, alpha, beta):
    """|∏_{k<l}(z^l − z^k)|·|w|^{n(n+1)/2}·… — the exact |det B| via the
    van der Monde structure B_{km} = w^m (z^k)^m with z=e^{iα}, w=e^{iβ}."""
    z = np.exp(1j * alpha)
    nodes = z ** np.arange(1, n + 1)
    out = 1.0
    for k in range(n):
        for l in range(k + 1, n):
            out *= abs(nodes[l] - nodes[k])
    return out * abs(np.prod(nodes)) * 1.0  # |w|=1 and |∏ z^k| = 1 anyway


def vdm_det_growth(nmax, alpha=GOLDEN, beta=0.0):
    """Series log|det B(n)| / log(2ⁿ·n!) for n = 2..nmax."""
    out = []
    for n in range(2, nmax + 1):
        b = build_vdm(n, alpha, beta)
        _sign, logdet = np.linalg.slogdet(b)
        out.append((n, float(logdet / math.log(2**n * math.factorial(n)))))
    return out
