"""Spin-1 matrices, Kronecker products, and the exchange operator."""

import math

import numpy as np
import pytest

from spin1pair.spin_algebra import heisenberg_dot, kron, spin1_components

SQ3 = math.sqrt(3.0)


def test_spin_matrices_are_the_standard_representation():
    sx, sy, sz = spin1_components()
    r = 1.0 / math.sqrt(2.0)
    np.testing.assert_allclose(sz, np.diag([1.0, 0.0, -1.0]), atol=0)
    np.testing.assert_allclose(
        sx, np.array([[0, r, 0], [r, 0, r], [0, r, 0]]), atol=0
    )
    np.testing.assert_allclose(
        sy, np.array([[0, -1j * r, 0], [1j * r, 0, -1j * r], [0, 1j * r, 0]]), atol=0
    )


def test_commutation_relations():
    sx, sy, sz = spin1_components()
    for a, b, c in ((sx, sy, sz), (sy, sz, sx), (sz, sx, sy)):
        np.testing.assert_allclose(a @ b - b @ a, 1j * c, atol=1e-15)


def test_casimir_is_two():
    sx, sy, sz = spin1_components()
    np.testing.assert_allclose(sx @ sx + sy @ sy + sz @ sz, 2.0 * np.eye(3), atol=1e-15)


def test_kron_shapes_and_identity():
    eye3 = np.eye(3, dtype=complex)
    out = kron(eye3, eye3)
    assert out.shape == (9, 9)
    assert out.dtype == np.float64
    np.testing.assert_allclose(out, np.eye(9), atol=0)


def test_kron_of_longitudinal_components():
    _, _, sz = spin1_components()
    np.testing.assert_allclose(
        kron(sz, sz), np.diag([1.0, 0, -1, 0, 0, 0, -1, 0, 1]), atol=0
    )


def test_exchange_is_real_symmetric():
    d = heisenberg_dot()
    assert d.dtype == np.float64
    np.testing.assert_allclose(d, d.T, atol=0)


def test_exchange_matches_component_construction():
    sx, sy, sz = spin1_components()
    expected = kron(sz, sz) + 0.5 * (kron(sx, sx) + kron(sy, sy))
    np.testing.assert_allclose(heisenberg_dot(), expected, atol=0)


def test_exchange_eigenvalues():
    lam = np.linalg.eigvalsh(heisenberg_dot())
    expected = np.sort(
        [1.0, 1.0, 0.5, 0.5, -0.5, -0.5, -1.0, (-1.0 + SQ3) / 2.0, (-1.0 - SQ3) / 2.0]
    )
    np.testing.assert_allclose(lam, expected, atol=1e-12)


def test_exchange_squared_eigenvalues():
    d = heisenberg_dot()
    lam = np.linalg.eigvalsh(d @ d)
    expected = np.sort(
        [1.0, 1.0, 0.25, 0.25, 0.25, 0.25, 1.0, (2.0 - SQ3) / 2.0, (2.0 + SQ3) / 2.0]
    )
    np.testing.assert_allclose(lam, expected, atol=1e-12)


def test_exchange_trace_invariants():
    d = heisenberg_dot()
    assert abs(np.trace(d)) < 1e-14
    assert abs(np.trace(d @ d) - 6.0) < 1e-13


def test_exchange_commutes_with_total_sz():
    _, _, sz = spin1_components()
    eye3 = np.eye(3, dtype=complex)
    sz_total = kron(sz, eye3) + kron(eye3, sz)
    d = heisenberg_dot()
    np.testing.assert_allclose(d @ sz_total - sz_total @ d, np.zeros((9, 9)), atol=1e-14)


def test_kron_rejects_nothing_but_preserves_reality(rng):
    a = rng.standard_normal((3, 3))
    b = rng.standard_normal((3, 3))
    np.testing.assert_allclose(
        kron(a.astype(complex), b.astype(complex)), np.kron(a, b), atol=1e-14
    )


def test_exchange_swap_symmetry():
    # exchanging the two sites leaves the operator invariant
    d = heisenberg_dot()
    swapped = d.reshape(3, 3, 3, 3).transpose(1, 0, 3, 2).reshape(9, 9)
    np.testing.assert_allclose(d, swapped, atol=0)


@pytest.mark.parametrize("m_total", [-2, -1, 0, 1, 2])
def test_exchange_block_diagonal_in_total_magnetization(m_total):
    d = heisenberg_dot()
    m = np.array([1, 0, -1])
    totals = (m[:, None] + m[None, :]).ravel()
    inside = totals == m_total
    # no matrix element connects different total-magnetization sectors
    np.testing.assert_allclose(d[np.ix_(inside, ~inside)], 0.0, atol=0)
