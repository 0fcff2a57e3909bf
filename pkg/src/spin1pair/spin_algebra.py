"""Single-site spin-1 operators and their lifts to the two-site space.

Conventions used everywhere in this package:

* Single-site basis |1>, |0>, |-1> (eigenstates of S_z), hbar = 1.
* Two-site basis ordered first-site major:
  |1,1>, |1,0>, |1,-1>, |0,1>, |0,0>, |0,-1>, |-1,1>, |-1,0>, |-1,-1>,
  i.e. flat index 3*a + b for single-site indices a, b.
* Two-site operators are real symmetric 9x9 arrays.  The only complex
  single-site operator, S_y, enters two-site products solely as S_y (x) S_y,
  which is real; lifting asserts the imaginary residue is below 1e-14 and
  drops it.

The exchange operator returned by :func:`heisenberg_dot` is the anisotropic
dot product

    S_1z S_2z + (S_1x S_2x + S_1y S_2y) / 2,

i.e. the transverse part carries a factor 1/2 relative to the isotropic
dot product.  This is the normalization under which the biquadratic model
K * dot^2 + B * (S_1z + S_2z) has the closed-form nine-level spectrum
{K +- 2B, K/4 +- B (each twice), K, (2 +- sqrt(3)) K / 2} that the rest of
the package uses as its analytic oracle; the isotropic dot product does not
reproduce those levels.
"""

import numpy as np

_IMAG_TOL = 1e-14


def spin1_components():
    """Return the spin-1 component matrices (S_x, S_y, S_z).

    Standard spin-1 representation: S_x and S_y carry 1/sqrt(2) factors,
    S_z = diag(1, 0, -1).  They satisfy [S_x, S_y] = i S_z and
    S_x^2 + S_y^2 + S_z^2 = 2 I.
    """
    rt2 = np.sqrt(2.0)
    sx = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex) / rt2
    sy = np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=complex) / rt2
    sz = np.array([[1, 0, 0], [0, 0, 0], [0, 0, -1]], dtype=complex)
    return sx, sy, sz


def kron(a, b):
    """Lift a pair of single-site operators to the 9x9 two-site space.

    Standard Kronecker product in the first-site-major basis ordering.
    Intended for products whose result is real (all products entering the
    Hamiltonian are); the imaginary residue is asserted below 1e-14 and
    dropped so downstream code works with real symmetric matrices only.
    """
    out = np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))
    assert np.abs(out.imag).max() <= _IMAG_TOL, "two-site product is not real"
    return np.ascontiguousarray(out.real)


def heisenberg_dot():
    """Exchange operator S_1z S_2z + (S_1x S_2x + S_1y S_2y) / 2.

    Real symmetric 9x9; commutes with the total field operator
    S_1z + S_2z.  Its eigenvalues are {1 (x2), 1/2 (x2), -1/2 (x2), -1,
    (-1 + sqrt(3))/2, (-1 - sqrt(3))/2}; the squares of these produce the
    closed-form biquadratic spectrum (see module docstring).
    """
    sx, sy, sz = spin1_components()
    return kron(sz, sz) + 0.5 * (kron(sx, sx) + kron(sy, sy))
