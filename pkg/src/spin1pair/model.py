"""Two-site biquadratic exchange model in an axial field.

    H = J * dot + K * dot^2 + B * (S_1z + S_2z),        k_B = 1

with ``dot`` the anisotropic exchange operator of
:func:`spin_algebra.heisenberg_dot`.  The bilinear J term is optional and
defaults to 0; the constant offset epsilon = J - K that accompanies the
couplings in :func:`derive_couplings` is never added to H, because a
constant shift cancels exactly in the Gibbs state (a tested invariant).

For J = 0 the model has a closed-form spectrum, exposed by
:func:`analytic_spectrum` as the oracle that the numeric eigensolver is
tested against:

    E1 = K + 2B   |1,1>                E2  = K - 2B   |-1,-1>
    E3 = K/4 + B  |1,0>               E4  = K/4 + B  |0,1>
    E5 = K/4 - B  |0,-1>              E6  = K/4 - B  |-1,0>
    E7 = K        (|-1,1> - |1,-1>)/sqrt(2)
    E8+- = (2 +- sqrt(3)) K / 2
           (|1,-1> + (1 -+ sqrt(3)) |0,0> + |-1,1>) / sqrt(2 + (sqrt(3) -+ 1)^2)
"""

from dataclasses import dataclass
from math import isfinite, sqrt

import numpy as np

from .errors import BilinearTermPresent, ZeroRepulsion
from .spin_algebra import heisenberg_dot, kron, spin1_components

_SQ3 = sqrt(3.0)

_DOT = heisenberg_dot()
_DOT2 = _DOT @ _DOT
_SZ_TOTAL = kron(spin1_components()[2], np.eye(3)) + kron(np.eye(3), spin1_components()[2])


@dataclass(frozen=True)
class ModelParams:
    """Physical knobs of the model; energy units with k_B = hbar = 1.

    No sign restriction is imposed; the regime of interest in the figures
    is K < 0 (and J < 0 when the bilinear term is kept).
    """

    K: float
    B: float
    J: float = 0.0

    def __post_init__(self):
        for name in ("K", "B", "J"):
            value = getattr(self, name)
            if not isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class CouplingSet:
    """Couplings produced by second-order hopping: J, K and epsilon = J - K."""

    J: float
    K: float
    epsilon: float


@dataclass(frozen=True)
class AnalyticLevel:
    """One closed-form level: label, energy, unit eigenvector (length 9)."""

    label: str
    energy: float
    vector: np.ndarray


@dataclass(frozen=True)
class AnalyticSpectrum:
    """The nine closed-form levels in declaration order Psi1..Psi7, Psi8+, Psi8-."""

    levels: tuple

    @property
    def energies(self):
        return np.array([lv.energy for lv in self.levels])

    @property
    def labels(self):
        return tuple(lv.label for lv in self.levels)

    def sorted_levels(self):
        """Levels sorted ascending by energy, ties broken by label."""
        return sorted(self.levels, key=lambda lv: (lv.energy, lv.label))


def derive_couplings(t, U0, U2):
    """Exchange couplings from hopping t and spin-channel repulsions U0, U2.

        J = -2 t^2 / U2,   K = -2 t^2 / (3 U2) - 4 t^2 / U0,   epsilon = J - K.

    Raises ZeroRepulsion when either repulsion energy is zero.
    """
    if U0 == 0 or U2 == 0:
        raise ZeroRepulsion("repulsion energies U0 and U2 must be nonzero")
    J = -2.0 * t * t / U2
    K = -2.0 * t * t / (3.0 * U2) - 4.0 * t * t / U0
    return CouplingSet(J=J, K=K, epsilon=J - K)


def build_hamiltonian(p):
    """Dense 9x9 Hamiltonian J * dot + K * dot^2 + B * (S_1z + S_2z)."""
    return p.J * _DOT + p.K * _DOT2 + p.B * _SZ_TOTAL


def _basis(i):
    e = np.zeros(9)
    e[i] = 1.0
    return e


def analytic_spectrum(p):
    """Closed-form spectrum for J = 0 (see module docstring).

    Raises BilinearTermPresent when p.J != 0: the closed forms only hold
    for the pure biquadratic-plus-field Hamiltonian.
    """
    if p.J != 0:
        raise BilinearTermPresent(f"closed-form spectrum requires J = 0, got J = {p.J!r}")
    K, B = p.K, p.B
    psi7 = (_basis(6) - _basis(2)) / sqrt(2.0)
    # Psi8 normalization: 2 + (sqrt(3) -+ 1)^2 = 6 -+ 2 sqrt(3).
    psi8p = (_basis(2) + (1 - _SQ3) * _basis(4) + _basis(6)) / sqrt(6.0 - 2.0 * _SQ3)
    psi8m = (_basis(2) + (1 + _SQ3) * _basis(4) + _basis(6)) / sqrt(6.0 + 2.0 * _SQ3)
    levels = (
        AnalyticLevel("Psi1", K + 2 * B, _basis(0)),
        AnalyticLevel("Psi2", K - 2 * B, _basis(8)),
        AnalyticLevel("Psi3", K / 4 + B, _basis(1)),
        AnalyticLevel("Psi4", K / 4 + B, _basis(3)),
        AnalyticLevel("Psi5", K / 4 - B, _basis(5)),
        AnalyticLevel("Psi6", K / 4 - B, _basis(7)),
        AnalyticLevel("Psi7", K, psi7),
        AnalyticLevel("Psi8+", (2 + _SQ3) / 2 * K, psi8p),
        AnalyticLevel("Psi8-", (2 - _SQ3) / 2 * K, psi8m),
    )
    return AnalyticSpectrum(levels=levels)
