"""Quaternion and octonion integer lattices.

Elements are stored in DOUBLED coordinates: a QuatInt holds d = 2·(a,b,c,d)
so that Lipschitz integers (all coordinates integral) have all-even d and
Hurwitz integers (all coordinates in Z+1/2) have all-odd d.  The norm is
N = (Σ dᵢ²)/4, always a nonnegative integer for valid parity.

Octonions use the Cayley–Dickson doubling (z,w)·(u,v) = (zu − v*w, vz + wu*):
Gravesian integers have all-even doubled coordinates, Kleinian all-odd, and
the Octavian order is the E₈-style lattice whose doubled coordinates reduce
mod 2 to a codeword of the [8,4] extended Hamming code with basis
{11110000, 00111100, 00001111, 01010101}.

An element is prime in its order iff its norm is a rational prime.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import ratkernel as rk


@dataclass(frozen=True)
class QuatInt:
    d: tuple  # four doubled coordinates

    def __post_init__(self):
        if len(self.d) != 4:
            raise ValueError("four coordinates required")
        parities = {x & 1 for x in self.d}
        if len(parities) != 1:
            raise ValueError(f"mixed parity doubled coordinates {self.d}")

    @classmethod
    def from_ints(cls, a, b, c, d):
        return cls((2 * a, 2 * b, 2 * c, 2 * d))

    @classmethod
    def from_halves(cls, a, b, c, d):
        """Element (a+b i+c j+d k)/2 from doubled coordinates directly."""
        return cls((a, b, c, d))

    @property
    def parity(self):
        return "hurwitz" if self.d[0] & 1 else "lipschitz"

    def norm(self):
        q, r = divmod(sum(x * x for x in self.d), 4)
        assert r == 0
        return q

    def conj(self):
        a, b, c, d = self.d
        return QuatInt((a, -b, -c, -d))

    def __add__(self, other):
        return QuatInt(tuple(x + y for x, y in zip(self.d, other.d)))

    def __sub__(self, other):
        return QuatInt(tuple(x - y for x, y in zip(self.d, other.d)))

    def __neg__(self):
        return QuatInt(tuple(-x for x in self.d))

    def __mul__(self, other):
        prod = _hamilton(self.d, other.d)
        if any(x & 1 for x in prod):
            raise ValueError("product leaves the doubled lattice")
        return QuatInt(tuple(x // 2 for x in prod))


def _hamilton(p, q):
    """Hamilton product on raw 4-vectors (doubled coords multiply to 2×doubled)."""
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def quat_mul(z, w):
    return z * w


def quat_conj(z):
    return z.conj()


def quat_norm(z):
    return z.norm()


def quat_units():
    """The 24 units: 8 Lipschitz (±1, ±i, ±j, ±k) and 16 Hurwitz (±1±i±j±k)/2."""
    units = []
    for axis in range(4):
        for s in (2, -2):
            d = [0, 0, 0, 0]
            d[axis] = s
            units.append(QuatInt(tuple(d)))
    for signs in itertools.product((1, -1), repeat=4):
        units.append(QuatInt(signs))
    return units


_UNITS_CACHE = None


def _units():
    global _UNITS_CACHE
    if _UNITS_CACHE is None:
        _UNITS_CACHE = quat_units()
    return _UNITS_CACHE


def is_quat_prime(z):
    return rk.is_prime(z.norm())


def rotate_vector(axis, angle, v):
    """Rotate v about a unit axis by `angle` via r·v·r* with r = e^{axis·θ/2}."""
    ax = np.asarray(axis, dtype=float)
    if abs(np.linalg.norm(ax) - 1.0) > 1e-9:
        raise ValueError("axis must be a unit vector")
    h = angle / 2.0
    r = np.array([math.cos(h), *(math.sin(h) * ax)])
    q = np.array([0.0, *np.asarray(v, dtype=float)])
    rc = r * np.array([1.0, -1.0, -1.0, -1.0])
    return np.array(_hamilton(_hamilton(r, q), rc))[1:]


def lattice_points_norm(p):
    """All Lipschitz and Hurwitz elements with norm p, deterministic order.

    Enumerates nonnegative sorted quadruples with Σ dᵢ² = 4p and expands all
    coordinate permutations and sign patterns (same parity is automatic).
    """
    if p < 1:
        raise ValueError("p >= 1 required")
    target = 4 * p
    seen = set()
    m = math.isqrt(target)
    for a in range(m + 1):
        if 4 * a * a > target:
            break
        for b in range(a, m + 1):
            s2 = a * a + b * b
            if s2 + 2 * b * b > target:
                break
            for c in range(b, m + 1):
                s3 = s2 + c * c
                if s3 + c * c > target:
                    break
                d2 = target - s3
                d = math.isqrt(d2)
                if d * d != d2 or d < c:
                    continue
                base = (a, b, c, d)
                if len({x & 1 for x in base}) != 1:
                    continue
                for perm in set(itertools.permutations(base)):
                    nz = [i for i, x in enumerate(perm) if x]
                    for signs in itertools.product((1, -1), repeat=len(nz)):
                        vec = list(perm)
                        for i, s in zip(nz, signs):
                            vec[i] *= s
                        seen.add(tuple(vec))
    return [QuatInt(d) for d in sorted(seen)]


def classes_above(p):
    """Number of right-unit-multiplication orbits on {N(z) = p}."""
    if p == 2:
        return 1
    if not rk.is_prime(p) or p % 2 == 0:
        raise ValueError("odd prime required")
    return len(_orbit_partition(p, side="right"))


def _orbit_partition(p, side="right"):
    """Partition of the norm-p sphere into unit-multiplication orbits."""
    pts = {z.d for z in lattice_points_norm(p)}
    units = _units()
    orbits = []
    remaining = set(pts)
    while remaining:
        z = remaining.pop()
        orbit = {z}
        for u in units:
            w = _hamilton(z, u.d) if side == "right" else _hamilton(u.d, z)
            w = tuple(x // 2 for x in w)
            orbit.add(w)
        remaining -= orbit
        orbits.append(frozenset(orbit))
    return orbits


def positively_ordered_reps(p):
    """One representative per S₄×sign orbit: sorted nonnegative coordinates.

    Returned as QuatInt values sorted by doubled-coordinate tuple.
    """
    if not rk.is_prime(p):
        raise ValueError("prime required")
    reps = {tuple(sorted(abs(x) for x in z.d)) for z in lattice_points_norm(p)}
    return [QuatInt(d) for d in sorted(reps)]


def u_orbit_lengths(p):
    """Lengths of unit-action orbits on the positively ordered representatives.

    Two representatives are linked when some concrete elements differ by a
    right unit factor; lengths come out in {2, 3} in the tested range.
    """
    if p == 2 or not rk.is_prime(p):
        raise ValueError("odd prime required")
    pts = [z.d for z in lattice_points_norm(p)]
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    def vclass(d):
        return tuple(sorted(abs(x) for x in d))

    for z in pts:
        parent.setdefault(vclass(z), vclass(z))
    for z in pts:
        for u in _units():
            w = tuple(x // 2 for x in _hamilton(z, u.d))
            union(vclass(z), vclass(w))
    sizes = {}
    for v in {vclass(z) for z in pts}:
        sizes[find(v)] = sizes.get(find(v), 0) + 1
    return sorted(sizes.values())


# ---------------------------------------------------------------------------
# Octonions
# ---------------------------------------------------------------------------

_HAMMING_BASIS = (0b11110000, 0b00111100, 0b00001111, 0b01010101)
_HAMMING_CODE = frozenset(
    b0 ^ b1 ^ b2 ^ b3
    for b0 in (0, _HAMMING_BASIS[0])
    for b1 in (0, _HAMMING_BASIS[1])
    for b2 in (0, _HAMMING_BASIS[2])
    for b3 in (0, _HAMMING_BASIS[3])
)


def _parity_word(e):
    return sum((x & 1) << (7 - i) for i, x in enumerate(e))


@dataclass(frozen=True)
class OctInt:
    e: tuple  # eight doubled coordinates

    def __post_init__(self):
        if len(self.e) != 8:
            raise ValueError("eight coordinates required")
        if _parity_word(self.e) not in _HAMMING_CODE:
            raise ValueError(f"doubled coordinates {self.e} outside the order")

    @classmethod
    def from_ints(cls, *coords):
        return cls(tuple(2 * x for x in coords))

    @classmethod
    def from_halves(cls, *coords):
        return cls(tuple(coords))

    @property
    def oct_class(self):
        w = _parity_word(self.e)
        if w == 0:
            return "gravesian"
        if w == 0xFF:
            return "kleinian"
        return "octavian"

    def norm(self):
        q, r = divmod(sum(x * x for x in self.e), 4)
        assert r == 0
        return q

    def conj(self):
        return OctInt((self.e[0],) + tuple(-x for x in self.e[1:]))

    def __add__(self, other):
        return OctInt(tuple(x + y for x, y in zip(self.e, other.e)))

    def __sub__(self, other):
        return OctInt(tuple(x - y for x, y in zip(self.e, other.e)))

    def __neg__(self):
        return OctInt(tuple(-x for x in self.e))


def _quat_conj_raw(p):
    return (p[0], -p[1], -p[2], -p[3])


def _cayley_dickson(x, y):
    """(z,w)·(u,v) = (zu − v*w, vz + wu*) on raw 8-vectors."""
    z, w = x[:4], x[4:]
    u, v = y[:4], y[4:]
    first = tuple(a - b for a, b in
                  zip(_hamilton(z, u), _hamilton(_quat_conj_raw(v), w)))
    second = tuple(a + b for a, b in
                   zip(_hamilton(v, z), _hamilton(w, _quat_conj_raw(u))))
    return first + second


def oct_mul(z, w):
    prod = _cayley_dickson(z.e, w.e)
    if any(x & 1 for x in prod):
        raise ValueError("product leaves the doubled lattice")
    return OctInt(tuple(x // 2 for x in prod))


def oct_norm(z):
    return z.norm()


def is_octavian(e):
    """Membership of a raw doubled-coordinate 8-vector in the Octavian lattice."""
    return len(e) == 8 and _parity_word(e) in _HAMMING_CODE


def oct_units(which="octavian"):
    """Norm-1 elements of the given order.

    Gravesian: the 16 vectors ±2eᵢ (doubled).  Octavian: 240 (E₈ roots).
    """
    units = []
    for i in range(8):
        for s in (2, -2):
            e = [0] * 8
            e[i] = s
            units.append(tuple(e))
    for word in _HAMMING_CODE:
        bits = [i for i in range(8) if word & (1 << (7 - i))]
        if len(bits) != 4:
            continue
        for signs in itertools.product((1, -1), repeat=4):
            e = [0] * 8
            for i, s in zip(bits, signs):
                e[i] = s
            units.append(tuple(e))
    if which == "gravesian":
        units = [e for e in units if _parity_word(e) == 0]
    elif which == "kleinian":
        units = [e for e in units if _parity_word(e) in (0, 0xFF)]
    elif which != "octavian":
        raise ValueError(f"unknown class {which!r}")
    return [OctInt(e) for e in sorted(set(units))]


def is_oct_prime(z, which=None):
    """Prime in its order: prime norm (units are excluded automatically)."""
    if which is not None:
        cls = z.oct_class
        if which == "gravesian" and cls != "gravesian":
            return False
        if which == "kleinian" and cls not in ("gravesian", "kleinian"):
            return False
    return rk.is_prime(z.norm())


def octavian_closure_violations(trials=200, seed=0):
    """Measure how often a product of random Octavian elements leaves the
    coordinate model (closure is NOT asserted for this realization)."""
    rng = np.random.default_rng(seed)
    words = sorted(_HAMMING_CODE)
    bad = 0
    for _ in range(trials):
        es = []
        for _ in range(2):
            w = words[rng.integers(len(words))]
            e = tuple(int(2 * rng.integers(-2, 3)) + ((w >> (7 - i)) & 1)
                      for i in range(8))
            es.append(e)
        prod = _cayley_dickson(es[0], es[1])
        if any(x & 1 for x in prod) or not is_octavian(
                tuple((x // 2) for x in prod)):
            bad += 1
    return bad, trials
