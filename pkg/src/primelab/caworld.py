"""Cellular automata on 0/1 configurations over Z².

Grids live on an origin-anchored window; everything outside the window is
dead.  step() grows the window by one cell on each side so no live cell is
ever clipped, up to a loud capacity cap.  The default rule is Conway's Life
(birth {3}, survive {2,3}); any outer-totalistic rule can be passed instead.

The moat machinery dilates the Gaussian-prime configuration m times and
labels connected components (8-connectivity by default: diagonal steps of
length √2 are the twin distance), then extracts the component containing 1+i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from .ratkernel import CapacityError
from .planarith import gaussian_prime_mask

_WINDOW_CAP = 4096  # max cells per side


@dataclass(frozen=True)
class Rule:
    birth: frozenset
    survive: frozenset

    def __post_init__(self):
        object.__setattr__(self, "birth", frozenset(self.birth))
        object.__setattr__(self, "survive", frozenset(self.survive))
        if not self.birth <= set(range(9)) or not self.survive <= set(range(9)):
            raise ValueError("neighbor counts must lie in 0..8")


LIFE = Rule(frozenset({3}), frozenset({2, 3}))


@dataclass
class Grid:
    origin: tuple  # (re, im) of cells[0, 0]
    cells: np.ndarray = field(repr=False)  # bool, shape (width, height)

    def __post_init__(self):
        self.cells = np.asarray(self.cells, dtype=bool)
        if self.cells.ndim != 2:
            raise ValueError("cells must be 2-d")

    @property
    def width(self):
        return self.cells.shape[0]

    @property
    def height(self):
        return self.cells.shape[1]

    def live_points(self):
        """Set of (re, im) lattice points that are alive."""
        ore, oim = self.origin
        return {(ore + int(i), oim + int(j))
                for i, j in zip(*np.nonzero(self.cells))}

    def get(self, re, im):
        i, j = re - self.origin[0], im - self.origin[1]
        if 0 <= i < self.width and 0 <= j < self.height:
            return bool(self.cells[i, j])
        return False

    def shifted(self, dre, dim):
        return Grid((self.origin[0] + dre, self.origin[1] + dim),
                    self.cells.copy())


def grid_from_points(points):
    pts = sorted(points)
    if not pts:
        return Grid((0, 0), np.zeros((0, 0), dtype=bool))
    res = [p[0] for p in pts]
    ims = [p[1] for p in pts]
    lo = (min(res), min(ims))
    cells = np.zeros((max(res) - lo[0] + 1, max(ims) - lo[1] + 1), dtype=bool)
    for re, im in pts:
        cells[re - lo[0], im - lo[1]] = True
    return Grid(lo, cells)


def grid_from_gaussian_primes(window):
    """Grid of Gaussian primes with re, im in [-window, window]."""
    if window < 0:
        raise ValueError("window >= 0 required")
    mask = gaussian_prime_mask(-window, window, -window, window)
    return Grid((-window, -window), mask)


def step(g, rule=LIFE, cap=_WINDOW_CAP):
    """One synchronous update, window padded by 1 on each side."""
    if g.width + 2 > cap or g.height + 2 > cap:
        raise CapacityError(f"window would exceed {cap} cells per side")
    cells = np.pad(g.cells, 1)
    kernel = np.ones((3, 3), dtype=np.int64)
    kernel[1, 1] = 0
    counts = ndimage.convolve(cells.astype(np.int64), kernel,
                              mode="constant", cval=0)
    birth = np.isin(counts, sorted(rule.birth))
    survive = np.isin(counts, sorted(rule.survive))
    new = np.where(cells, survive, birth)
    return Grid((g.origin[0] - 1, g.origin[1] - 1), new)


def alive_cells(g, rule=LIFE):
    """Lattice points whose value changes after one step."""
    nxt = step(g, rule)
    changed = set()
    lo = min(g.origin[0], nxt.origin[0]), min(g.origin[1], nxt.origin[1])
    hi = (max(g.origin[0] + g.width, nxt.origin[0] + nxt.width),
          max(g.origin[1] + g.height, nxt.origin[1] + nxt.height))
    for re in range(lo[0], hi[0]):
        for im in range(lo[1], hi[1]):
            if g.get(re, im) != nxt.get(re, im):
                changed.add((re, im))
    return changed


def farthest_live_radius(window, rule=LIFE):
    """max |z| over cells that change after one step of the prime grid."""
    g = grid_from_gaussian_primes(window)
    cells = alive_cells(g, rule)
    if not cells:
        return 0.0
    return max((re * re + im * im) ** 0.5 for re, im in cells)


def dilate(g, steps=1, connectivity=8):
    if steps < 0:
        raise ValueError("steps >= 0 required")
    if connectivity not in (4, 8):
        raise ValueError("connectivity must be 4 or 8")
    if steps == 0:
        return Grid(g.origin, g.cells.copy())
    if g.width + 2 * steps > _WINDOW_CAP:
        raise CapacityError("dilation exceeds window cap")
    struct = ndimage.generate_binary_structure(2, 2 if connectivity == 8 else 1)
    cells = np.pad(g.cells, steps)
    cells = ndimage.binary_dilation(cells, struct, iterations=steps)
    return Grid((g.origin[0] - steps, g.origin[1] - steps), cells)


def components(g, connectivity=8):
    """(labels array, count) of connected live components."""
    if connectivity not in (4, 8):
        raise ValueError("connectivity must be 4 or 8")
    struct = ndimage.generate_binary_structure(2, 2 if connectivity == 8 else 1)
    labels, count = ndimage.label(g.cells, structure=struct)
    return labels, count


def component_count(g, connectivity=8):
    return components(g, connectivity)[1]


def moat_component(m, window, connectivity=8):
    """Live points of the component containing 1+i after m dilations of the
    Gaussian-prime grid on [-window, window]²."""
    if window < 2:
        raise ValueError("1+i must be inside the window")
    g = dilate(grid_from_gaussian_primes(window), m, connectivity)
    labels, _ = components(g, connectivity)
    i, j = 1 - g.origin[0], 1 - g.origin[1]
    lab = labels[i, j]
    if lab == 0:
        raise ValueError("1+i is dead in this grid")
    ore, oim = g.origin
    return {(ore + int(a), oim + int(b))
            for a, b in zip(*np.nonzero(labels == lab))}


def to_rle(g):
    """Run-length text: header `origin,width,height` then per-row runs."""
    lines = [f"{g.origin[0]},{g.origin[1]},{g.width},{g.height}"]
    for row in g.cells:
        runs = []
        count, cur = 0, False
        for v in row:
            if bool(v) == cur:
                count += 1
            else:
                runs.append(str(count))
                count, cur = 1, bool(v)
        runs.append(str(count))
        lines.append(" ".join(runs))
    return "\n".join(lines) + "\n"


def from_rle(text):
    lines = text.strip().split("\n")
    ore, oim, w, h = (int(v) for v in lines[0].split(","))
    cells = np.zeros((w, h), dtype=bool)
    for i, line in enumerate(lines[1:]):
        j, cur = 0, False
        for run in line.split():
            n = int(run)
            if cur:
                cells[i, j:j + n] = True
            j += n
            cur = not cur
        if j != h:
            raise ValueError(f"row {i} runs sum to {j}, expected {h}")
    return Grid((ore, oim), cells)


def to_pbm(g):
    """Plain PBM (P1); rows are im from high to low so the plane reads upright."""
    lines = ["P1", f"{g.width} {g.height}"]
    for j in range(g.height - 1, -1, -1):
        lines.append(" ".join("1" if g.cells[i, j] else "0"
                              for i in range(g.width)))
    return "\n".join(lines) + "\n"
