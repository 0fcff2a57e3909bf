"""Parameter sweeps, T -> 0 ground-state policy, and critical-point searches.

A point counts as entangled when its negativity exceeds a threshold
(default 1e-9, safely above eigensolver noise at ~1e-11 yet far below any
physical signal of interest).  The three critical-point finders share the
same structure: a deterministic outward scan brackets the last entangled /
first separable pair, then plain bisection shrinks the bracket below
``tol``.  Everything here is pure floating-point arithmetic with no
randomness, so results are reproducible bit-for-bit.
"""

from dataclasses import dataclass

import numpy as np

from .entanglement import negativity
from .errors import (
    BracketNotFound,
    DomainError,
    NoEntangledPhase,
    NoEntanglementAtZeroField,
    NonPositiveTemperature,
)
from .model import ModelParams, analytic_spectrum, build_hamiltonian
from .numerics import eigh_symmetric
from .thermal import gibbs_state

# Relative tolerance for collecting the degenerate ground manifold.
_DEGENERACY_TOL = 1e-9

# Scan caps: field search gives up beyond 100 * max(1, |K|); temperature and
# coupling searches scan multiplicatively (factor 1.5) up to these values.
_FIELD_CAP_FACTOR = 100.0
_TEMP_SCAN_START = 1e-3
_TEMP_SCAN_CAP = 1e3
_COUPLING_SCAN_START = 0.01
_COUPLING_SCAN_CAP = 1e3
_SCAN_FACTOR = 1.5


@dataclass(frozen=True)
class GroundState:
    """Minimum energy, the degenerate eigenvectors (rows), and the T -> 0 state.

    The zero-temperature density matrix is the equal-weight mixture of the
    projectors onto the degenerate ground manifold, which is the T -> 0
    limit of the Gibbs state.
    """

    energy: float
    vectors: np.ndarray
    density_matrix: np.ndarray


@dataclass(frozen=True)
class AxisSpec:
    """Inclusive linear grid (start, stop, count) along one parameter axis."""

    start: float
    stop: float
    count: int

    def __post_init__(self):
        if int(self.count) != self.count or self.count < 1:
            raise ValueError(f"axis count must be a positive integer, got {self.count!r}")

    def values(self):
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class SweepSpec:
    """Rectangular (K, B, T) grid; J is fixed across the sweep (default 0)."""

    K_axis: AxisSpec
    B_axis: AxisSpec
    T_axis: AxisSpec
    J: float = 0.0

    def __post_init__(self):
        t = self.T_axis.values()
        if not (t > 0).all():
            raise NonPositiveTemperature(
                f"all sweep temperatures must be positive, got grid start {t.min()!r}"
            )


@dataclass(frozen=True)
class SweepResult:
    """Rows of (K, B, T, negativity) in K-major, then B, then T order."""

    rows: np.ndarray

    header = ("K", "B", "T", "negativity")


@dataclass(frozen=True)
class CriticalPoint:
    """One threshold crossing of the negativity along a parameter axis.

    ``crossing`` gives the direction of the negativity along the increasing
    parameter: "falling" (entangled below, separable above) or "rising".
    ``bracket`` is (low, high) with high - low <= tol and the two ends on
    opposite sides of the threshold; ``estimate`` is the bracket midpoint
    and ``residual_negativity`` the negativity evaluated there.
    """

    parameter: str
    crossing: str
    bracket: tuple
    estimate: float
    residual_negativity: float


def negativity_point(K, B, T, J=0.0):
    """Negativity of the thermal state at one (K, B, T) point."""
    h = build_hamiltonian(ModelParams(K=K, B=B, J=J))
    return negativity(gibbs_state(h, T))


def ground_state(p):
    """Ground energy, degenerate manifold, and the T -> 0 density matrix.

    Uses the closed-form spectrum for J = 0 and the numeric eigensolver
    otherwise.  Levels within 1e-9 * max(1, |E_min|) of the minimum belong
    to the manifold; the returned state is their equal-weight projector
    mixture.
    """
    if p.J == 0:
        levels = analytic_spectrum(p).sorted_levels()
        energies = np.array([lv.energy for lv in levels])
        vectors = np.stack([lv.vector for lv in levels])
    else:
        dec = eigh_symmetric(build_hamiltonian(p))
        energies = dec.eigenvalues
        vectors = dec.eigenvectors.T
    e_min = float(energies[0])
    member = energies - e_min < _DEGENERACY_TOL * max(1.0, abs(e_min))
    chosen = vectors[member]
    rho = (chosen.T @ chosen) / chosen.shape[0]
    return GroundState(energy=e_min, vectors=chosen, density_matrix=rho)


def sweep(spec):
    """Negativity over the full (K, B, T) grid, rows in K-major order.

    Any domain error raised at a grid point is re-raised with the offending
    coordinates appended to the message.
    """
    rows = []
    for K in map(float, spec.K_axis.values()):
        for B in map(float, spec.B_axis.values()):
            for T in map(float, spec.T_axis.values()):
                try:
                    n = negativity_point(K, B, T, spec.J)
                except DomainError as exc:
                    raise type(exc)(f"{exc} (at K={K!r}, B={B!r}, T={T!r})") from exc
                rows.append((K, B, T, n))
    return SweepResult(rows=np.array(rows, dtype=float).reshape(len(rows), 4))


def _bisect(predicate, lo, hi, tol):
    """Shrink [lo, hi] with predicate(lo) true, predicate(hi) false."""
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if predicate(mid):
            lo = mid
        else:
            hi = mid
    return lo, hi


def critical_field(K, T, threshold=1e-9, tol=1e-6):
    """Field B_c at which the negativity falls through ``threshold``.

    Requires an entangled starting point at B = 0 (else
    NoEntanglementAtZeroField); scans B upward in steps of
    0.1 * max(1, |K|) and raises BracketNotFound if no separable point
    appears below B = 100 * max(1, |K|).
    """
    def entangled(B):
        return negativity_point(K, B, T) > threshold

    if not entangled(0.0):
        raise NoEntanglementAtZeroField(
            f"negativity at B = 0 is not above threshold {threshold!r} for K={K!r}, T={T!r}"
        )
    step = 0.1 * max(1.0, abs(K))
    cap = _FIELD_CAP_FACTOR * max(1.0, abs(K))
    lo, hi = 0.0, step
    while entangled(hi):
        lo, hi = hi, hi + step
        if hi > cap:
            raise BracketNotFound(
                f"no separable field found below B = {cap!r} for K={K!r}, T={T!r}"
            )
    lo, hi = _bisect(entangled, lo, hi, tol)
    estimate = 0.5 * (lo + hi)
    return CriticalPoint(
        parameter="B",
        crossing="falling",
        bracket=(lo, hi),
        estimate=estimate,
        residual_negativity=negativity_point(K, estimate, T),
    )


def _temperature_scan():
    out = []
    t = _TEMP_SCAN_START
    while t <= _TEMP_SCAN_CAP:
        out.append(t)
        t *= _SCAN_FACTOR
    return out


def critical_temperature(K, B, threshold=1e-9, tol=1e-6):
    """All temperature crossings of the negativity threshold, upper first.

    Scans T multiplicatively (1e-3, factor 1.5, up to 1e3), bisects every
    sign change of the entangled predicate, and returns a list of
    CriticalPoint values: the upper (final falling) crossing first, then
    any remaining crossings in ascending T.  A state entangled only inside
    an interior window (entanglement revival) therefore yields
    [upper, lower].  Raises NoEntangledPhase when no scanned temperature is
    entangled, and BracketNotFound when the top of the scan range is still
    entangled.
    """
    def entangled(T):
        return negativity_point(K, B, T) > threshold

    ts = _temperature_scan()
    flags = [entangled(t) for t in ts]
    if not any(flags):
        raise NoEntangledPhase(
            f"no temperature in [{ts[0]!r}, {ts[-1]!r}] is entangled for K={K!r}, B={B!r}"
        )
    if flags[-1]:
        raise BracketNotFound(
            f"still entangled at the top of the temperature scan (T = {ts[-1]!r}) "
            f"for K={K!r}, B={B!r}"
        )
    crossings = []
    for i in range(len(ts) - 1):
        if flags[i] == flags[i + 1]:
            continue
        if flags[i]:
            lo, hi = _bisect(entangled, ts[i], ts[i + 1], tol)
            direction = "falling"
        else:
            lo, hi = _bisect(lambda t: not entangled(t), ts[i], ts[i + 1], tol)
            direction = "rising"
        estimate = 0.5 * (lo + hi)
        crossings.append(CriticalPoint(
            parameter="T",
            crossing=direction,
            bracket=(lo, hi),
            estimate=estimate,
            residual_negativity=negativity_point(K, B, estimate),
        ))
    # the last crossing is the falling one (flags end separable)
    return [crossings[-1]] + crossings[:-1]


def critical_coupling(T, B=0.0, threshold=1e-9, tol=1e-6):
    """Coupling K_c (K < 0) at which entanglement first appears.

    Scans |K| multiplicatively from 0.01 up to 1e3 to bracket the onset,
    then bisects on |K|.  Reported on the signed K axis, where the
    negativity falls from entangled (K below K_c) to separable (K above),
    hence crossing = "falling".  Raises BracketNotFound when no scanned
    |K| <= 1e3 is entangled.
    """
    def entangled_mag(k_mag):
        return negativity_point(-k_mag, B, T) > threshold

    prev = 0.0
    k = _COUPLING_SCAN_START
    while k <= _COUPLING_SCAN_CAP:
        if entangled_mag(k):
            break
        prev, k = k, k * _SCAN_FACTOR
    else:
        raise BracketNotFound(
            f"no entangled coupling found below |K| = {_COUPLING_SCAN_CAP!r} "
            f"for T={T!r}, B={B!r}"
        )
    # bracket on the magnitude axis: prev separable, k entangled
    lo_mag, hi_mag = _bisect(lambda m: not entangled_mag(m), prev, k, tol)
    estimate_mag = 0.5 * (lo_mag + hi_mag)
    return CriticalPoint(
        parameter="K",
        crossing="falling",
        bracket=(-hi_mag, -lo_mag),
        estimate=-estimate_mag,
        residual_negativity=negativity_point(-estimate_mag, B, T),
    )
