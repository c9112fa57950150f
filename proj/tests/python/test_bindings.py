import numpy as np
import pytest

import opmeans

A = np.array([[2.0, 1.0], [1.0, 2.0]])
B = np.array([[2.0, -2.0], [-2.0, 5.0]])


def spd_power(m, p):
    w, v = np.linalg.eigh(m)
    return (v * w**p) @ v.T


def test_natural_matches_numpy():
    ah = spd_power(A, 0.5)
    bh = spd_power(B, 0.5)
    for t in (0.0, 0.3, 0.5, 1.0):
        inner = bh @ np.linalg.inv(A) @ bh
        expected = ah @ spd_power(inner, t) @ ah
        np.testing.assert_allclose(opmeans.natural(A, B, t), expected, atol=1e-12)


def test_geometric_mean_is_symmetric_in_its_arguments():
    np.testing.assert_allclose(opmeans.geometric_mean(A, B), opmeans.geometric_mean(B, A), atol=1e-12)


def test_natural_is_not_symmetric():
    assert np.abs(opmeans.natural(A, B) - opmeans.natural(B, A)).max() > 1e-3


def test_simple_means():
    np.testing.assert_allclose(opmeans.arithmetic_mean(A, B), (A + B) / 2)
    expected = 2 * np.linalg.inv(np.linalg.inv(A) + np.linalg.inv(B))
    np.testing.assert_allclose(opmeans.harmonic_mean(A, B), expected, atol=1e-12)


def test_quasi_tsallis_approaches_relative_entropy():
    qre = opmeans.quasi_relative_entropy(A, B)
    np.testing.assert_allclose(opmeans.quasi_tsallis(A, B, 1e-6), qre, atol=1e-4)


def test_scalar_helpers():
    assert opmeans.kantorovich(1.0) == pytest.approx(1.0)
    assert opmeans.kantorovich(4.0) == pytest.approx(25.0 / 16.0)
    assert opmeans.ln_t(np.e, 1e-9) == pytest.approx(1.0)
    with pytest.raises(opmeans.ParameterError):
        opmeans.ln_t(2.0, 0.0)
    assert opmeans.ln_t(4.0, 0.5) == pytest.approx(2.0)


def test_eig_sym_descending_and_orthonormal():
    m = opmeans.random_spd(5, seed=3)
    w, v = opmeans.eig_sym(m)
    assert np.all(np.diff(w) <= 0)
    np.testing.assert_allclose(v.T @ v, np.eye(5), atol=1e-12)
    np.testing.assert_allclose(np.sort(w), np.linalg.eigvalsh(m), rtol=1e-12)


def test_random_spd_is_seeded():
    np.testing.assert_array_equal(opmeans.random_spd(4, seed=9), opmeans.random_spd(4, seed=9))
    assert np.linalg.cond(opmeans.random_spd(4, seed=9, cond_max=50.0)) <= 50.0 * (1 + 1e-9)


def test_errors_map_to_exception_classes():
    with pytest.raises(opmeans.NotPositiveDefinite):
        opmeans.natural(A, np.array([[1.0, 2.0], [2.0, 1.0]]))
    with pytest.raises(opmeans.DimensionError):
        opmeans.natural(A, np.eye(3))
    assert issubclass(opmeans.HypothesisNotMet, ValueError)


def test_check_and_falsify():
    assert "natural_symmetry" in opmeans.claim_names()
    report = opmeans.check("eq1_congruence_identity", A, B)
    assert report["passed"]
    report = opmeans.check("natural_symmetry", A, B)
    assert not report["passed"]
    found = opmeans.falsify("natural_below_arithmetic", trials=1000, seed=5)
    assert found["found"]
    assert found["violation_margin"] < -1e-6


def test_small_suite_is_deterministic():
    first = opmeans.run_suite(trials=5, dim_max=4, seed=11, falsify_trials=200)
    second = opmeans.run_suite(trials=5, dim_max=4, seed=11, falsify_trials=200)
    assert first == second
    assert all(c["passed"] for c in first["claims"])


def test_reference_examples():
    results = {r["name"]: r for r in opmeans.reference_examples()}
    assert results["natural_ab_entries"]["ok"]
    assert results["arithmetic_minus_natural_eigenvalues_b_flipped"]["ok"]
