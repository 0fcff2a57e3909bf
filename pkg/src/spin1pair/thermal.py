"""Gibbs state and partition function (trace route and closed form).

Both partition-function routes report a ``PartitionValue`` pair
(mantissa, shift) with Z = mantissa * exp(-shift) and shift = E_min / T:
dividing every Boltzmann factor by the largest one keeps the mantissa in
[1, 9] for any temperature, so beta up to ~1e6 neither overflows nor
underflows.  T = 0 is excluded throughout; the zero-temperature limit is
a degeneracy-policy question handled by analysis.ground_state.
"""

from dataclasses import dataclass
from math import exp, log

import numpy as np

from .errors import NonPositiveTemperature
from .model import analytic_spectrum
from .numerics import _require_symmetric, boltzmann_weights, eigh_symmetric


@dataclass(frozen=True)
class PartitionValue:
    """Partition function in overflow-safe form: Z = mantissa * exp(-shift).

    ``shift`` is E_min / T, so ``mantissa`` is the sum of the shifted
    Boltzmann factors exp(-(E_l - E_min)/T), always in [1, 9] here.
    """

    mantissa: float
    shift: float

    @property
    def value(self):
        """Plain float Z; may overflow for very negative shift (beta E_min << 0)."""
        return self.mantissa * exp(-self.shift)

    @property
    def log(self):
        """log Z, safe at any shift."""
        return log(self.mantissa) - self.shift


def _require_positive_temperature(T):
    if not T > 0:
        raise NonPositiveTemperature(f"temperature must be positive, got {T!r}")


def gibbs_state(h, T):
    """Thermal state exp(-H/T)/Z as V diag(w) V^T from the eigensolver.

    Returns a 9x9 real symmetric, positive semidefinite, unit-trace array.
    Raises NonPositiveTemperature for T <= 0 and NotSymmetric for a
    non-symmetric Hamiltonian.
    """
    _require_positive_temperature(T)
    dec = eigh_symmetric(h)
    w = boltzmann_weights(dec.eigenvalues, T)
    rho = (dec.eigenvectors * w) @ dec.eigenvectors.T
    # kill the last-digit asymmetry of the matrix product
    return (rho + rho.T) / 2.0


def partition_function_trace(h, T):
    """Z = sum_l exp(-E_l / T) over the numeric spectrum of h.

    Evaluated as exp(-E_min/T) * sum_l exp(-(E_l - E_min)/T) and reported
    as a PartitionValue so extreme beta stays finite.
    """
    _require_positive_temperature(T)
    m = _require_symmetric(h)
    lam = np.linalg.eigvalsh(m)
    e_min = float(lam[0])
    mant = float(np.exp(-(lam - e_min) / T).sum())
    return PartitionValue(mantissa=mant, shift=e_min / T)


def partition_function_closed(p, T):
    """Closed-form Z for the J = 0 model, same (mantissa, shift) convention.

    The compact product form

        exp(-K/T) * (1 + 2 cosh(2B/T) + 2 cosh(sqrt(3) K / (2T))
                       + 4 exp(3K/(4T)) cosh(B/T))

    expands term by term into the nine Boltzmann factors of the closed-form
    levels; it is evaluated in that expanded form with the E_min shift so
    the result matches the trace route's stability at any beta.  Raises
    BilinearTermPresent for J != 0 and NonPositiveTemperature for T <= 0.
    """
    _require_positive_temperature(T)
    energies = analytic_spectrum(p).energies
    e_min = float(energies.min())
    mant = float(np.exp(-(energies - e_min) / T).sum())
    return PartitionValue(mantissa=mant, shift=e_min / T)
