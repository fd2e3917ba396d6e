import numpy as np
import pytest

from primelab import caworld as ca
from primelab.ratkernel import CapacityError


def _pts(*pairs):
    return ca.grid_from_points(set(pairs))


def test_blinker_period_two():
    g = _pts((0, -1), (0, 0), (0, 1))
    g1 = ca.step(g)
    assert g1.live_points() == {(-1, 0), (0, 0), (1, 0)}
    g2 = ca.step(g1)
    assert g2.live_points() == g.live_points()


def test_block_fixed():
    g = _pts((0, 0), (0, 1), (1, 0), (1, 1))
    assert ca.step(g).live_points() == g.live_points()


def test_empty_stays_empty():
    g = ca.grid_from_points(set())
    assert ca.step(g).live_points() == set()


def test_translation_equivariance():
    rng = np.random.default_rng(5)
    for _ in range(100):
        cells = rng.random((12, 12)) < 0.35
        g = ca.Grid((0, 0), cells)
        dx, dy = int(rng.integers(-9, 10)), int(rng.integers(-9, 10))
        a = ca.step(g.shifted(dx, dy)).live_points()
        b = {(x + dx, y + dy) for x, y in ca.step(g).live_points()}
        assert a == b


def test_alive_cells():
    blinker = _pts((0, -1), (0, 0), (0, 1))
    assert ca.alive_cells(blinker) == {(-1, 0), (1, 0), (0, -1), (0, 1)}
    block = _pts((0, 0), (0, 1), (1, 0), (1, 1))
    assert ca.alive_cells(block) == set()


def test_grid_from_gaussian_primes():
    g = ca.grid_from_gaussian_primes(3)
    pts = g.live_points()
    assert (1, 1) in pts and (2, 1) in pts and (3, 0) in pts
    assert (1, 0) not in pts
    # 90-degree rotation symmetry
    assert {(-b, a) for a, b in pts} == pts


def test_capacity_error():
    g = ca.Grid((0, 0), np.zeros((10, 10), dtype=bool))
    with pytest.raises(CapacityError):
        ca.step(g, cap=11)


def test_dilation_monotone():
    g = ca.grid_from_gaussian_primes(15)
    prev = g.live_points()
    prev_components = ca.component_count(g)
    for m in range(1, 4):
        d = ca.dilate(g, m)
        cur = d.live_points()
        assert prev <= cur
        cur_components = ca.component_count(d)
        assert cur_components <= prev_components
        prev, prev_components = cur, cur_components


def test_moat_component_flood_fill_oracle():
    window = 50
    g = ca.grid_from_gaussian_primes(window)
    comp = ca.moat_component(0, window)
    # brute-force 8-connected flood fill from (1, 1)
    live = g.live_points()
    seen = {(1, 1)}
    stack = [(1, 1)]
    while stack:
        x, y = stack.pop()
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                if dx == dy == 0:
                    continue
                w = (x + dx, y + dy)
                if w in live and w not in seen:
                    seen.add(w)
                    stack.append(w)
    assert comp == seen


def test_moat_monotone_in_dilation():
    sizes = [len(ca.moat_component(m, 30)) for m in range(3)]
    assert sizes == sorted(sizes)


def test_moat_requires_origin_live():
    with pytest.raises(ValueError):
        ca.moat_component(0, 1)


def test_rle_roundtrip():
    g = ca.grid_from_gaussian_primes(6)
    r = ca.from_rle(ca.to_rle(g))
    assert np.array_equal(r.cells, g.cells)
    assert r.origin == g.origin
    assert ca.to_rle(r) == ca.to_rle(g)


def test_pbm_header():
    g = ca.grid_from_gaussian_primes(2)
    text = ca.to_pbm(g)
    lines = text.splitlines()
    assert lines[0] == "P1"
    assert lines[1] == f"{g.width} {g.height}"


def test_custom_rule():
    # B1/S (replicator-ish): a single cell births all 8 neighbors and dies
    r = ca.Rule({1}, set())
    g = _pts((0, 0))
    nxt = ca.step(g, r)
    assert nxt.live_points() == {(x, y) for x in (-1, 0, 1)
                                 for y in (-1, 0, 1)} - {(0, 0)}


def test_rule_validation():
    with pytest.raises(ValueError):
        ca.Rule({9}, {2})


def test_farthest_live_radius_positive():
    assert ca.farthest_live_radius(30) > 10
