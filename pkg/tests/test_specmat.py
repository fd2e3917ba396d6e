import math

import numpy as np
import pytest
import sympy

from primelab import ratkernel as rk
from primelab import specmat as sm
from primelab.planarith import GaussianInt


def test_build_prime_matrix_entries():
    a = sm.build_prime_matrix(1, 5)
    from primelab.planarith import is_gaussian_prime
    for k in range(1, 6):
        for l in range(1, 6):
            want = is_gaussian_prime(GaussianInt(1 + k, l))
            assert a[k - 1, l - 1] == want


def test_det_exact_vs_minor_expansion():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        n = int(rng.integers(1, 8))
        m = rng.integers(0, 2, size=(n, n))
        assert sm.det_exact(m) == sm.det_minor_expansion(m)


def test_det_exact_vs_float():
    rng = np.random.default_rng(3)
    for _ in range(50):
        m = rng.integers(-5, 6, size=(6, 6))
        assert sm.det_exact(m) == round(np.linalg.det(m.astype(float)))


def test_invertibility_scan_threshold():
    res = sm.invertibility_scan(1, 60)
    assert res["threshold"] == 28
    assert 28 in res["singular_ns"]
    assert 29 not in res["singular_ns"]


def test_singularity_matches_exact_det():
    mask = sm.build_prime_matrix(1, 35)
    for n in range(1, 36):
        d = sm.det_exact(mask[:n, :n])
        assert sm.is_singular_exact(mask[:n, :n]) == (d == 0)


def test_anticommutator_even_z0():
    for z0 in (2, 4, GaussianInt(1, 1), GaussianInt(2, 2)):
        assert sm.anticommutator_residual(z0, 20) == 0


def test_commutator_rejects_odd_z0():
    with pytest.raises(ValueError):
        sm.commutator_residuals(1, 10)


def test_spectrum_residual_bound():
    a = sm.build_prime_matrix(1, 40)
    s = sm.spectrum(a)
    assert s.residual_bound < 1e-10
    assert len(s.eigenvalues) == 40
    # eigenvalue product = det
    d = sm.det_exact(a)
    assert abs(np.prod(s.eigenvalues) - d) <= 1e-6 * max(1, abs(d))


def test_spectrum_capacity():
    with pytest.raises(rk.CapacityError):
        sm.spectrum(np.eye(10), solver_cap=5)


def test_spectral_symmetry_even_z0():
    a = sm.build_prime_matrix(GaussianInt(1, 1), 100)
    s = sm.spectrum(a)
    assert sm.spectral_symmetry_residual(s) < 1e-6


def test_char_poly_consistency():
    a = sm.build_prime_matrix(1, 5)
    coeffs = sm.char_poly(a)
    assert coeffs[0] == 1
    det = sm.det_exact(a)
    assert coeffs[-1] == (-1) ** 5 * det
    # compare against sympy charpoly
    M = sympy.Matrix(a.astype(int).tolist())
    want = [int(c) for c in M.charpoly().all_coeffs()]
    assert coeffs == want


def test_char_poly_2x2_symbolic():
    a, b, x = sympy.symbols("a b x")
    m = np.array([[sympy.Integer(1), sympy.Integer(1)], [a, b]], dtype=object)
    # Faddeev-LeVerrier over symbolic entries
    A = m
    M = np.eye(2, dtype=object)
    coeffs = [sympy.Integer(1)]
    for k in range(1, 3):
        N = A @ M
        ck = -(N[0, 0] + N[1, 1]) / k
        ck = sympy.expand(ck)
        coeffs.append(ck)
        M = N + ck * np.eye(2, dtype=object)
    poly = sympy.expand(x**2 + coeffs[1] * x + coeffs[2])
    assert sympy.simplify(poly - (x**2 - (1 + b) * x + (b - a))) == 0


def test_char_poly_function_normalization():
    a = sm.build_prime_matrix(1, 30)
    assert sm.char_poly_function(a, 1.0) == 1.0


def test_prime_row_flags_sieved_matches_direct():
    from primelab.planarith import is_gaussian_prime
    for k in (1, 2, 3, 6):
        flags = sm.prime_row_flags(k, 20001)  # forces the sieved path
        for j in range(1, 2000):
            assert flags[j - 1] == is_gaussian_prime(GaussianInt(j, k)), (j, k)


def test_row_cov_sign_table_small():
    t = sm.row_cov_sign_table(4, 10**5)
    want = np.array([[(-1) ** (k - l) for l in range(4)] for k in range(4)])
    assert (t == want).mean() >= 0.9


def test_trace_vs_li():
    tr, ratio = sm.trace_vs_li(1, 100)
    from primelab.planarith import is_gaussian_prime
    want = sum(1 for k in range(1, 101)
               if is_gaussian_prime(GaussianInt(1 + k, k)))
    assert tr == want


def test_smith_det_exact():
    for n in range(1, 51):
        for s in (1, 2, 3):
            assert sm.smith_det_residual(n, s) == 0


def test_smith_det_192():
    a = sm.build_smith(7, 1)
    assert sm.det_exact(a) == 192


def test_smith_factorization():
    for n in (5, 10, 20):
        assert sm.smith_factorization_check(n, 1)
        assert sm.smith_factorization_check(n, 2)
        assert sm.smith_inverse_moebius_check(n)


def test_smith_complex_s():
    r = sm.smith_det_residual(20, 1.5 + 0.5j)
    assert abs(r) < 1e-8


def test_almost_period_matches_re_vdm():
    n = 12
    a = sm.build_almost_period(n, sm.GOLDEN, 0.3)
    b = sm.build_vdm(n, sm.GOLDEN, 0.3)
    assert np.max(np.abs(a - b.real)) < 1e-15


def test_almost_period_norm_bound():
    for n in (5, 20, 60):
        a = sm.build_almost_period(n, sm.GOLDEN, 0.1)
        assert np.linalg.norm(a, 2) <= n + 1e-9


def test_vdm_det_is_vandermonde_product():
    for n in (3, 10, 30, 50):
        b = sm.build_vdm(n, sm.GOLDEN, 0.7)
        got = abs(np.linalg.det(b))
        want = sm.vdm_product_modulus(n, sm.GOLDEN, 0.7)
        assert abs(got - want) < 1e-8 * max(1.0, want)


def test_vdm_growth_bounded():
    series = sm.vdm_det_growth(100)
    for n, v in series:
        assert v <= 1.0 + 1e-12


def test_vdm_rational_alpha_degenerate():
    b = sm.build_vdm(8, 2 * math.pi / 3, 0.0)
    assert abs(np.linalg.det(b)) < 1e-8


def test_qr_column_means_shape():
    a = sm.build_prime_matrix(1, 30)
    q = sm.qr_column_means(a)
    assert q.shape == (30,)


def test_spectral_stats_uniform_disk():
    rng = np.random.default_rng(0)
    n = 4000
    r = np.sqrt(rng.uniform(0, 1, n))
    phi = rng.uniform(0, 2 * math.pi, n)
    z = r * np.exp(1j * phi)
    # undo the scaling the stats apply
    scale = math.sqrt(math.log(n) / n)
    s = sm.Spectrum(z / scale, 0.0)
    stats = sm.spectral_stats(s, n)
    rr, fr = stats.radial_cdf[:, 0], stats.radial_cdf[:, 1]
    assert np.max(np.abs(fr - rr**2)) < 0.05
