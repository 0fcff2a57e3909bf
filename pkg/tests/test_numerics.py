"""Symmetric eigensolver wrapper, Boltzmann weights, and the trace norm."""

import math

import numpy as np
import pytest

from spin1pair.errors import NonPositiveTemperature, NotSymmetric
from spin1pair.numerics import boltzmann_weights, eigh_symmetric, trace_norm


def test_eigh_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        eigh_symmetric(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_eigh_known_two_by_two():
    dec = eigh_symmetric(np.array([[2.0, 1.0], [1.0, 2.0]]))
    np.testing.assert_allclose(dec.eigenvalues, [1.0, 3.0], atol=1e-14)
    np.testing.assert_allclose(dec.eigenvectors.T @ dec.eigenvectors, np.eye(2), atol=1e-14)


def test_eigh_ascending_orthonormal_and_reconstructs(rng):
    a = rng.standard_normal((9, 9))
    a = (a + a.T) / 2.0
    dec = eigh_symmetric(a)
    assert (np.diff(dec.eigenvalues) >= -1e-14).all()
    np.testing.assert_allclose(dec.eigenvectors.T @ dec.eigenvectors, np.eye(9), atol=1e-12)
    recon = (dec.eigenvectors * dec.eigenvalues) @ dec.eigenvectors.T
    np.testing.assert_allclose(recon, a, atol=1e-12)


def test_eigh_residuals(rng):
    a = rng.standard_normal((9, 9))
    a = (a + a.T) / 2.0
    dec = eigh_symmetric(a)
    for lam, v in zip(dec.eigenvalues, dec.eigenvectors.T):
        assert np.abs(a @ v - lam * v).max() < 1e-12 * max(1.0, np.abs(a).max())


def test_eigh_degenerate_clusters_canonical_sign(rng):
    q, _ = np.linalg.qr(rng.standard_normal((6, 6)))
    lam = np.array([1.0, 1.0, 1.0, 2.0, 2.0, 5.0])
    a = (q * lam) @ q.T
    a = (a + a.T) / 2.0
    dec = eigh_symmetric(a)
    np.testing.assert_allclose(dec.eigenvalues, lam, atol=1e-12)
    # the two degenerate clusters occupy the first five columns
    for v in dec.eigenvectors[:, :5].T:
        assert v[np.argmax(np.abs(v))] > 0.0
    recon = (dec.eigenvectors * dec.eigenvalues) @ dec.eigenvectors.T
    np.testing.assert_allclose(recon, a, atol=1e-12)


def test_eigh_deterministic(rng):
    a = rng.standard_normal((9, 9))
    a = (a + a.T) / 2.0
    d1 = eigh_symmetric(a)
    d2 = eigh_symmetric(a.copy())
    assert (d1.eigenvalues == d2.eigenvalues).all()
    assert (d1.eigenvectors == d2.eigenvectors).all()


def test_boltzmann_weights_values():
    w = boltzmann_weights(np.array([0.0, 1.0, 2.0]), 1.0)
    raw = np.exp([0.0, -1.0, -2.0])
    np.testing.assert_allclose(w, raw / raw.sum(), atol=1e-15)
    assert abs(w.sum() - 1.0) < 1e-15


def test_boltzmann_weights_shift_prevents_overflow():
    w = boltzmann_weights(np.array([-1e6, 0.0]), 1e-3)
    assert np.isfinite(w).all()
    np.testing.assert_allclose(w, [1.0, 0.0], atol=1e-300)


def test_boltzmann_weights_degenerate_energies():
    w = boltzmann_weights(np.array([3.0, 3.0, 3.0]), 0.7)
    np.testing.assert_allclose(w, [1 / 3, 1 / 3, 1 / 3], atol=1e-15)


@pytest.mark.parametrize("temperature", [0.0, -1.0])
def test_boltzmann_weights_rejects_nonpositive_temperature(temperature):
    with pytest.raises(NonPositiveTemperature):
        boltzmann_weights(np.array([0.0, 1.0]), temperature)


def test_trace_norm_known_values():
    assert abs(trace_norm(np.diag([3.0, -4.0])) - 7.0) < 1e-14
    assert abs(trace_norm(np.eye(3)) - 3.0) < 1e-14
    assert trace_norm(np.zeros((4, 4))) == 0.0


def test_trace_norm_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        trace_norm(np.array([[0.0, 2.0], [0.0, 0.0]]))


def test_trace_norm_is_sum_of_absolute_eigenvalues(rng):
    a = rng.standard_normal((5, 5))
    a = (a + a.T) / 2.0
    assert abs(trace_norm(a) - np.abs(np.linalg.eigvalsh(a)).sum()) < 1e-12
