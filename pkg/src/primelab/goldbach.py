"""Generic Goldbach representation sweeps over the supported integer rings.

r2(z) counts ORDERED pairs (p, q) of primes with p + q = z subject to a
SumVariant (cone, angle cap, parity filter); r3 counts ordered triples.
Comets are grids of r2 over rectangular target regions.

Cone semantics:
  open         — every coordinate of both summands strictly positive
  closed       — coordinates nonnegative
  unrestricted — summands anywhere in the ring

Unrestricted Gaussian targets with odd coordinate sum are decided exactly:
any decomposition of such a target uses exactly one summand of even norm,
and the only Gaussian primes of even norm are the four associates ±1±i.
Targets with even coordinate sum admit summands arbitrarily far away, so
they get a bounded witness search whose exhaustion is a loud error, never a
silent zero.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import signal

from . import ratkernel as rk
from .planarith import (EisensteinInt, GaussianInt, gaussian_prime_mask,
                        is_gaussian_prime)


@dataclass(frozen=True)
class SumVariant:
    cone: str = "open"  # open | closed | unrestricted
    angle_cap: float | None = None
    parity_filter: str = "none"  # none | even-only
    summands: int = 2
    species: str = "any"  # quaternion/octonion summand species

    def __post_init__(self):
        if self.cone not in ("open", "closed", "unrestricted"):
            raise ValueError(f"unknown cone {self.cone!r}")
        if self.parity_filter not in ("none", "even-only"):
            raise ValueError(f"unknown parity filter {self.parity_filter!r}")
        if self.summands not in (2, 3):
            raise ValueError("summands must be 2 or 3")


OPEN = SumVariant(cone="open")
UNRESTRICTED = SumVariant(cone="unrestricted")


@dataclass
class SweepReport:
    ring: str
    variant: SumVariant
    region: tuple
    counts: np.ndarray
    zero_cells: list = field(default_factory=list)

    @property
    def min_count(self):
        return int(self.counts.min())

    @property
    def max_count(self):
        return int(self.counts.max())

    def csv_lines(self, coord_names=("re", "im")):
        yield ",".join(coord_names) + ",count"
        it = np.nditer(self.counts, flags=["multi_index"])
        for v in it:
            idx = tuple(i + lo for i, (lo, _hi) in
                        zip(it.multi_index, self.region))
            yield ",".join(map(str, idx)) + f",{int(v)}"


_EVEN_GAUSSIAN_PRIMES = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def _open_cone_count(a, b, angle_cap=None):
    """Ordered open-cone prime pairs summing to a+bi."""
    if a < 2 or b < 2:
        return 0
    mask = gaussian_prime_mask(1, a - 1, 1, b - 1)
    other = mask[::-1, ::-1]
    if angle_cap is None:
        return int(np.count_nonzero(mask & other))
    xs = np.arange(1, a, dtype=float)[:, None]
    ys = np.arange(1, b, dtype=float)[None, :]
    rel = np.abs(np.angle((xs + 1j * ys) / complex(a, b)))
    ok = rel <= angle_cap + 1e-12
    return int(np.count_nonzero(mask & other & ok & ok[::-1, ::-1]))


def _unrestricted_count(a, b, witness_radius=30):
    """Unrestricted ordered pair count; exact for odd coordinate sum."""
    if (a + b) % 2:
        hits = 0
        for ea, eb in _EVEN_GAUSSIAN_PRIMES:
            if is_gaussian_prime(GaussianInt(a - ea, b - eb)):
                hits += 1
        return 2 * hits
    # even target: unbounded summand set; report a witness-based lower bound
    ca, cb = a // 2, b // 2
    offsets = sorted(
        ((da * da + db * db, da, db)
         for da in range(-witness_radius, witness_radius + 1)
         for db in range(-witness_radius, witness_radius + 1)),
    )
    for _n2, da, db in offsets:
        p = GaussianInt(ca + da, cb + db)
        q = GaussianInt(a, b) - p
        if is_gaussian_prime(p) and is_gaussian_prime(q):
            return 2 if (p.re, p.im) != (q.re, q.im) else 1
    raise RuntimeError(
        f"no witness for even target {a}+{b}i within radius {witness_radius}; "
        "increase witness_radius — this would be a notable counterexample")


def _eisenstein_prime_mask(amax, bmax):
    """mask[x-1, y-1] for x + yω prime, 1 <= x <= amax, 1 <= y <= bmax."""
    xs = np.arange(1, amax + 1, dtype=np.int64)[:, None]
    ys = np.arange(1, bmax + 1, dtype=np.int64)[None, :]
    N = xs * xs + xs * ys + ys * ys
    s = rk.sieve(max(int(N.max()), 4))
    return s.flags[N]


def _eisenstein_open_count(a, b):
    if a < 2 or b < 2:
        return 0
    mask = _eisenstein_prime_mask(a - 1, b - 1)
    return int(np.count_nonzero(mask & mask[::-1, ::-1]))


def _quat_first_summands(z, species):
    """Open-cone first-summand candidates (doubled coords) for target z."""
    dz = tuple(2 * x for x in z)
    if species in ("hurwitz", "any"):
        ranges = [range(1, dz_i, 2) for dz_i in dz]
        yield from itertools.product(*ranges)
    if species in ("lipschitz", "any"):
        ranges = [range(2, dz_i - 1, 2) for dz_i in dz]
        yield from itertools.product(*ranges)


def _quat_open_count(z, species="hurwitz"):
    """Ordered open-cone pairs of quaternion primes summing to integer target z.

    species: hurwitz (half-integer summands), lipschitz (integer summands),
    hurwitz+lipschitz (mixed — always 0 by parity, kept for the API), any.
    """
    if species == "hurwitz+lipschitz":
        return 0  # half-integer + integer can never be an integer target
    if any(x < 1 for x in z):
        return 0
    dz = tuple(2 * x for x in z)
    count = 0
    for dp in _quat_first_summands(z, species):
        np_ = sum(x * x for x in dp)
        if np_ % 4 or not rk.is_prime(np_ // 4):
            continue
        dq = tuple(a - b for a, b in zip(dz, dp))
        nq = sum(x * x for x in dq)
        if nq % 4 == 0 and rk.is_prime(nq // 4):
            count += 1
    return count


def _oct_open_count(z, species):
    """Ordered open-cone octonion prime pairs for an integer target z."""
    dz = tuple(2 * x for x in z)
    if species == "gravesian":
        ranges = [range(2, dz_i - 1, 2) for dz_i in dz]
    elif species == "kleinian":
        ranges = [range(1, dz_i, 2) for dz_i in dz]
    else:
        raise ValueError(f"unknown octonion species {species!r}")
    count = 0
    for dp in itertools.product(*ranges):
        np_ = sum(x * x for x in dp)
        if np_ % 4 or not rk.is_prime(np_ // 4):
            continue
        dq = tuple(a - b for a, b in zip(dz, dp))
        nq = sum(x * x for x in dq)
        if nq % 4 == 0 and rk.is_prime(nq // 4):
            count += 1
    return count


def r2(z, variant=OPEN, ring=None, witness_radius=30):
    """Ordered prime-pair representation count of z under the variant."""
    if ring is None:
        ring = _infer_ring(z)
    if ring == "gaussian":
        a, b = z.re, z.im
        if variant.cone == "open":
            return _open_cone_count(a, b, variant.angle_cap)
        if variant.cone == "closed":
            return _closed_cone_count(a, b)
        return _unrestricted_count(a, b, witness_radius)
    if ring == "eisenstein":
        if variant.cone != "open":
            raise NotImplementedError("Eisenstein sweeps are open-cone")
        return _eisenstein_open_count(z.a, z.b)
    if ring == "quaternion":
        species = variant.species if variant.species != "any" else "any"
        return _quat_open_count(tuple(z), species)
    if ring == "octonion":
        return _oct_open_count(tuple(z), variant.species)
    raise ValueError(f"unknown ring {ring!r}")


def _closed_cone_count(a, b):
    if a < 0 or b < 0:
        return 0
    mask = gaussian_prime_mask(0, a, 0, b)
    return int(np.count_nonzero(mask & mask[::-1, ::-1]))


def _infer_ring(z):
    if isinstance(z, GaussianInt):
        return "gaussian"
    if isinstance(z, EisensteinInt):
        return "eisenstein"
    if isinstance(z, tuple) and len(z) == 4:
        return "quaternion"
    if isinstance(z, tuple) and len(z) == 8:
        return "octonion"
    raise ValueError(f"cannot infer ring of {z!r}")


def r3(z, variant=SumVariant(cone="open", summands=3)):
    """Ordered prime triples (Gaussian open cone)."""
    if variant.summands != 3:
        raise ValueError("r3 needs a summands=3 variant")
    a, b = z.re, z.im
    if a < 3 or b < 3:
        return 0
    mask = gaussian_prime_mask(1, a - 1, 1, b - 1)
    total = 0
    pair = SumVariant(cone="open")
    for x in range(1, a - 1):
        for y in range(1, b - 1):
            if mask[x - 1, y - 1]:
                total += r2(GaussianInt(a - x, b - y), pair)
    return total


def comet(ring, region, variant=OPEN, exact_small=False):
    """SweepReport of r2 over a rectangular target region.

    region: ((a_lo, a_hi), (b_lo, b_hi)) inclusive target coordinate bounds.
    For Gaussian/Eisenstein open cones the grid is computed by a single
    self-convolution of the summand prime mask.
    """
    (alo, ahi), (blo, bhi) = region
    if ring == "gaussian" and variant.cone == "open" and not exact_small:
        mask = gaussian_prime_mask(1, ahi - 1, 1, bhi - 1).astype(float)
        conv = signal.fftconvolve(mask, mask)
        counts = np.rint(conv).astype(np.int64)
        grid = np.zeros((ahi - alo + 1, bhi - blo + 1), dtype=np.int64)
        for a in range(max(alo, 2), ahi + 1):
            for b in range(max(blo, 2), bhi + 1):
                grid[a - alo, b - blo] = counts[a - 2, b - 2]
    elif ring == "eisenstein" and variant.cone == "open":
        mask = _eisenstein_prime_mask(ahi - 1, bhi - 1).astype(float)
        conv = signal.fftconvolve(mask, mask)
        counts = np.rint(conv).astype(np.int64)
        grid = np.zeros((ahi - alo + 1, bhi - blo + 1), dtype=np.int64)
        for a in range(max(alo, 2), ahi + 1):
            for b in range(max(blo, 2), bhi + 1):
                grid[a - alo, b - blo] = counts[a - 2, b - 2]
    else:
        grid = np.zeros((ahi - alo + 1, bhi - blo + 1), dtype=np.int64)
        for a in range(alo, ahi + 1):
            for b in range(blo, bhi + 1):
                if ring == "gaussian":
                    grid[a - alo, b - blo] = r2(GaussianInt(a, b), variant)
                elif ring == "eisenstein":
                    grid[a - alo, b - blo] = r2(EisensteinInt(a, b), variant)
                else:
                    raise ValueError(f"comet unsupported for ring {ring!r}")
    if variant.parity_filter == "even-only":
        for a in range(alo, ahi + 1):
            for b in range(blo, bhi + 1):
                if (a + b) % 2:
                    grid[a - alo, b - blo] = 0
    zero = [(a, b)
            for a in range(alo, ahi + 1) for b in range(blo, bhi + 1)
            if grid[a - alo, b - blo] == 0
            and (variant.parity_filter != "even-only" or (a + b) % 2 == 0)]
    return SweepReport(ring, variant, region, grid, zero)


def quaternion_comet(a, b, cmax, dmax, species="hurwitz"):
    """G(a,b): grid of r2((a,b,c,d)) for 1 <= c <= cmax, 1 <= d <= dmax."""
    grid = np.zeros((cmax, dmax), dtype=np.int64)
    for c in range(1, cmax + 1):
        for d in range(1, dmax + 1):
            grid[c - 1, d - 1] = _quat_open_count((a, b, c, d), species)
    return grid


def first_counterexample(ring, variant, bound, witness_radius=30):
    """Smallest element in scope (norm, then lexicographic) with r2 = 0.

    Gaussian unrestricted: scope is the closed first quadrant, norm <= bound.
    Gaussian open/even: scope is 2 <= a,b <= bound (coordinate bound).
    Eisenstein open: scope is row b=3, 2 <= a <= bound.
    Returns None if every element in scope is representable.
    """
    if ring == "gaussian" and variant.cone == "unrestricted":
        cells = sorted((a * a + b * b, a, b)
                       for a in range(int(math.isqrt(bound)) + 1)
                       for b in range(int(math.isqrt(bound)) + 1)
                       if 0 < a * a + b * b <= bound)
        for _n, a, b in cells:
            if _unrestricted_count(a, b, witness_radius) == 0:
                return GaussianInt(a, b)
        return None
    if ring == "gaussian":
        cells = sorted((a * a + b * b, a, b)
                       for a in range(2, bound + 1)
                       for b in range(2, bound + 1)
                       if variant.parity_filter != "even-only"
                       or (a + b) % 2 == 0)
        for _n, a, b in cells:
            if _open_cone_count(a, b, variant.angle_cap) == 0:
                return GaussianInt(a, b)
        return None
    if ring == "eisenstein":
        for a in range(2, bound + 1):
            if _eisenstein_open_count(a, 3) == 0:
                return EisensteinInt(a, 3)
        return None
    raise ValueError(f"unsupported ring {ring!r}")


def eisenstein_ghosts(bmax_row, amax):
    """All a <= amax with r2(a + row·ω, open cone) = 0 on the given row."""
    return [a for a in range(2, amax + 1)
            if _eisenstein_open_count(a, bmax_row) == 0]


def signed_rep_exists(n, search_bound=None):
    """n = p + q with p, q in ±primes; exact (bound-free) for odd n."""
    if search_bound is None:
        search_bound = max(abs(n) + 100, 100)
    if search_bound < abs(n):
        raise ValueError("search_bound must be >= |n|")
    if n % 2:
        # one summand must be ±2, the only even prime
        return rk.is_prime(abs(n - 2)) or rk.is_prime(abs(n + 2))
    for q in rk.sieve(search_bound).primes():
        q = int(q)
        if rk.is_prime(abs(n - q)) or rk.is_prime(abs(n + q)):
            return True
    return False


def hurwitz_boundary_comet(n, method="case-split"):
    """r2((2,2,2,n)) with ordered Hurwitz-prime pairs.

    case-split: summands are (a,b,c,x)/2 with a,b,c ∈ {1,3}; grouping by the
    number k of 3s, the summand norms become the quadratics 1+2k + t(t+1)
    with x = 2t+1, so the count is Σ_k C(3,k)·#{t : both quadratics prime}.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    if method == "direct":
        return _quat_open_count((2, 2, 2, n), "hurwitz")
    if method != "case-split":
        raise ValueError(f"unknown method {method!r}")
    total = 0
    binom = (1, 3, 3, 1)
    for k in range(4):
        for t in range(n):  # x = 2t+1 runs over odd 1..2n-1
            np_ = 1 + 2 * k + t * t + t
            t2 = n - 1 - t  # 2n - x = 2·t2 + 1
            nq = 1 + 2 * (3 - k) + t2 * t2 + t2
            if rk.is_prime(np_) and rk.is_prime(nq):
                total += binom[k]
    return total


def _poly_eval(coeffs, x):
    out = 0
    for c in reversed(coeffs):
        out = out * x + c
    return out


def pair_coverage(f, g, N):
    """All representable-range n <= N with no x + y = n, x,y >= 1, f(x) and
    g(y) both prime.

    f, g: ascending coefficient tuples of integer polynomials with positive
    leading coefficient.  The scan starts at the least representable sum
    (min prime-x plus min prime-y), so gaps forced by small composite values
    of f or g are not reported.
    """
    for poly in (f, g):
        if poly[-1] <= 0:
            raise ValueError("positive leading coefficient required")
    fflag = np.zeros(N, dtype=np.int64)
    gflag = np.zeros(N, dtype=np.int64)
    for x in range(1, N):
        if rk.is_prime(_poly_eval(f, x)):
            fflag[x] = 1
        if rk.is_prime(_poly_eval(g, x)):
            gflag[x] = 1
    if not fflag.any() or not gflag.any():
        raise ValueError("one polynomial takes no prime value below N")
    n_min = int(np.argmax(fflag)) + int(np.argmax(gflag))
    conv = np.convolve(fflag, gflag)  # conv[n] = #{x+y=n}
    return [n for n in range(n_min, N + 1) if conv[n] == 0]


def gaussian_boundary_comet(c):
    """#{(a,b) ordered : a+b=c, a,b >= 1, a²+1 and b²+1 both prime}."""
    if c < 2:
        raise ValueError("c >= 2 required")
    return sum(1 for a in range(1, c)
               if rk.is_prime(a * a + 1) and rk.is_prime((c - a) ** 2 + 1))


def bunyakovsky_admissible(f):
    """(admissible, reason) for an integer polynomial (ascending coeffs).

    Checks: nonconstant, positive leading coefficient, fixed divisor of the
    value sequence equal to 1; irreducibility certified for degree <= 2 via
    the discriminant.
    """
    deg = len(f) - 1
    while deg > 0 and f[deg] == 0:
        deg -= 1
    if deg < 1:
        return False, "constant polynomial"
    if f[deg] <= 0:
        return False, "leading coefficient not positive"
    content = 0
    for x in range(deg + 2):
        content = math.gcd(content, abs(_poly_eval(f, x)))
    if content != 1:
        return False, f"all values divisible by {content}"
    if deg == 2:
        a, b, c = f[2], f[1], f[0]
        disc = b * b - 4 * a * c
        if disc >= 0 and math.isqrt(disc) ** 2 == disc:
            return False, "reducible (discriminant is a perfect square)"
    return True, "admissible"


def parity_law_sweep(norm_cap):
    """Check r2 > 0 for all even open-cone Gaussian targets with coordinates
    >= 2 and norm <= norm_cap.  A zero cell raises with the counterexample."""
    m = math.isqrt(norm_cap)
    report = comet("gaussian", ((2, m), (2, m)),
                   SumVariant(cone="open", parity_filter="even-only"))
    bad = [(a, b) for a, b in report.zero_cells
           if a * a + b * b <= norm_cap and a >= 2 and b >= 2]
    if bad:
        raise RuntimeError(f"parity-law counterexample cells: {bad[:10]}")
    return report


def diagonal_goldbach(k):
    """Representations of k(1+i): plain open-cone r2 plus the count of
    reflection-symmetric pairs p + i·conj(p) (interpretation, see docs)."""
    z = GaussianInt(k, k)
    reflect = sum(
        1 for a in range(1, k)
        if is_gaussian_prime(GaussianInt(a, k - a))
        and is_gaussian_prime(GaussianInt(k - a, a)))
    return r2(z, OPEN), reflect
