"""Smoke tests for the pybind11 module against numpy references."""

import math

import numpy as np
import pytest

import spindimer as sd


def test_model_basics():
    m = sd.DimerModel(1.0, 1.0, 0.0, 2)
    assert m.spin == 1.0
    assert m.hilbert_dim == 6
    with pytest.raises(ValueError):
        sd.DimerModel(1.0, 1.0, 0.0, 1)


def test_spin_matrices_algebra():
    sx, syi, sz = sd.spin_matrices(3)
    sy = 1j * syi
    s = 1.5
    comm = sx @ sy - sy @ sx
    assert np.allclose(comm, 1j * sz, atol=1e-13)
    casimir = sx @ sx + sy @ sy + sz @ sz
    assert np.allclose(casimir, s * (s + 1) * np.eye(4), atol=1e-13)


def test_hamiltonian_matches_numpy_eigvalsh():
    m = sd.DimerModel(1.0, 1.3, -0.4, 5)
    h = sd.build_hamiltonian(m)
    assert np.allclose(h, h.T)
    vals_np = np.linalg.eigvalsh(h)
    vals_jacobi, vecs = sd.eigh(h)
    assert np.allclose(vals_np, vals_jacobi, atol=1e-10)
    assert np.allclose(vecs.T @ vecs, np.eye(h.shape[0]), atol=1e-12)
    closed = sorted(
        e
        for sec in sd.closed_form_spectrum(m)
        for e in ([sec.energy_minus] if sec.edge else [sec.energy_minus, sec.energy_plus])
    )
    assert np.allclose(closed, vals_np, atol=1e-10)


def test_negativity_values():
    m = sd.DimerModel(1.0, 1.0, 0.0, 2)
    rho = sd.ground_state_density(m)
    n, negs = sd.negativity(rho)
    assert math.isclose(n, 1.0 / 3.0, abs_tol=1e-12)
    assert math.isclose(n, -sum(negs), abs_tol=1e-14)
    assert math.isclose(sd.negativity_closed_pm_half(m), 1.0 / 3.0, abs_tol=1e-12)

    m0 = sd.DimerModel(1.0, 1.0, 1.0, 3)
    n0, _ = sd.negativity(sd.ground_state_density(m0))
    assert math.isclose(n0, 0.5, abs_tol=1e-12)


def test_partial_transpose_against_numpy():
    m = sd.DimerModel(1.0, 0.9, 0.6, 3)
    rho = sd.thermal_density(m, 0.4)
    assert math.isclose(np.trace(rho), 1.0, abs_tol=1e-12)
    b = rho.shape[0] // 2
    blocks = rho.reshape(2, b, 2, b)
    pt_np = blocks.transpose(2, 1, 0, 3).reshape(2 * b, 2 * b)
    assert np.array_equal(sd.partial_transpose_half(rho), pt_np)
    lam = np.linalg.eigvalsh(pt_np)
    n_np = -lam[lam < -1e-12].sum()
    n, _ = sd.negativity(rho)
    assert math.isclose(n, n_np, abs_tol=1e-12)


def test_analysis_surfaces():
    m = sd.DimerModel(1.0, 1.0, 0.0, 3)
    prof = sd.thermal_profile(m, sd.geometric_grid(1e-3, 2.0, 16))
    assert prof["columns"] == ["kT_over_J", "negativity"]
    assert len(prof["rows"]) == 16

    thr = sd.threshold_temperature(m)
    assert thr["t_threshold"] > 0.4
    assert thr["bracket"][0] <= thr["t_threshold"] <= thr["bracket"][1]

    table = sd.negativity_vs_d(1.0, [2, 4], -1.0, 2.0, 31, 1.0)
    assert len(table["rows"]) == 62

    points = sd.phase_diagram(1.0, 3, 0.5, 1.5, 3, -1.0, 1.0, 5)
    assert len(points) == 15
    assert all(0.0 <= p["negativity"] <= 0.5 + 1e-12 for p in points)


def test_error_paths():
    m = sd.DimerModel(1.0, 1.0, 0.0, 2)
    with pytest.raises(ValueError):
        sd.thermal_density(m, 0.0)
    with pytest.raises(IndexError):
        sd.eigenvector_in_product_basis(m, 5, sd.Branch.minus)
