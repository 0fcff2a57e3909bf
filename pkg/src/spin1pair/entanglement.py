"""Partial transpose and negativity, with closed-form oracles.

Negativity is computed by two formulas that must agree:

    N = (||rho^{T_A}||_1 - 1) / 2        (trace-norm route)
    N = -sum of negative eigenvalues of rho^{T_A}

For a unit-trace input these coincide exactly; a disagreement beyond 1e-9
signals an eigensolver or normalization bug and raises FormulaMismatch.
The returned value is the negative-eigenvalue form clamped to >= 0 so that
round-off never produces -0.0 or tiny negative outputs.

The closed-form oracle :func:`analytic_pt_matrix` evaluates the partial
transpose of the Gibbs state directly from the model's closed-form levels,
with no eigensolver involved, which makes it an independent cross-check of
the numeric route.
"""

from dataclasses import dataclass
from math import cosh, exp, sinh, sqrt

import numpy as np

from .errors import FormulaMismatch, NotNormalized
from .model import analytic_spectrum
from .numerics import trace_norm
from .thermal import _require_positive_temperature, partition_function_closed

_SQ3 = sqrt(3.0)
_ROUTE_TOL = 1e-9


def partial_transpose(rho, subsystem="A"):
    """Transpose one site's indices of a two-site operator.

    Writing rho as 3x3 blocks rho[a, a'] (each block 3x3 over the second
    site), subsystem "A" swaps the block indices (result[a, a'] =
    rho[a', a]) and subsystem "B" transposes each block in place.  Trace
    and symmetry of a real symmetric input are preserved.
    """
    r = np.asarray(rho, dtype=float).reshape(3, 3, 3, 3)
    if subsystem == "A":
        out = r.transpose(2, 1, 0, 3)
    elif subsystem == "B":
        out = r.transpose(0, 3, 2, 1)
    else:
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    return np.ascontiguousarray(out.reshape(9, 9))


@dataclass(frozen=True)
class AnalyticPTEntries:
    """Scalars of the compact closed-form partial transpose.

    With x = sqrt(3) K / (2T) and m = (2 + sqrt(3)) K / 2:

        M_plus/M_minus = +-3 + 3 cosh(x) - sqrt(3) sinh(x)
        Q = exp(-m/T) (-1 + exp(sqrt(3) K / T)) / (2 sqrt(3))
        P = exp(-m/T) (3 - sqrt(3) + (3 + sqrt(3)) exp(sqrt(3) K / T)) / 6

    Note the single minus sign in front of sqrt(3) sinh(x) for *both* M
    scalars; it is forced by the Gibbs expansion of the matrix entries and
    is cross-checked against the numeric partial transpose in the tests.
    These literal forms overflow once |K|/T exceeds roughly 350;
    :func:`analytic_pt_matrix` evaluates the same quantities in a shifted
    form that is stable for all T > 0.
    """

    M_plus: float
    M_minus: float
    Q: float
    P: float
    m: float


def analytic_pt_entries(p, T):
    """Literal evaluation of the compact closed-form scalars (see class doc)."""
    _require_positive_temperature(T)
    analytic_spectrum(p)  # rejects J != 0
    K = p.K
    x = _SQ3 * K / (2.0 * T)
    m = (2.0 + _SQ3) / 2.0 * K
    grow = exp(_SQ3 * K / T)
    return AnalyticPTEntries(
        M_plus=3.0 + 3.0 * cosh(x) - _SQ3 * sinh(x),
        M_minus=-3.0 + 3.0 * cosh(x) - _SQ3 * sinh(x),
        Q=exp(-m / T) * (-1.0 + grow) / (2.0 * _SQ3),
        P=exp(-m / T) * (3.0 - _SQ3 + (3.0 + _SQ3) * grow) / 6.0,
        m=m,
    )


def analytic_pt_matrix(p, T):
    """Closed-form partial transpose (subsystem A) of the Gibbs state, J = 0.

    Layout in the first-site-major basis, with w(E) = exp(-E/T)/Z and the
    closed-form levels E1 = K+2B, E2 = K-2B, E3 = K/4+B, E5 = K/4-B,
    E7 = K, E8+- = (2 +- sqrt(3)) K / 2:

        diagonal: [w(E1), w(E3), M, w(E3), P', w(E5), M, w(E5), w(E2)]
        corners [0,8] = [8,0]: C;  coherences [1,5], [3,7] (symmetric): Q'

    where the compact scalars of :class:`AnalyticPTEntries` expand into
    short exponential sums over the levels:

        M  = M_plus  exp(-K/T)/(6Z) = w(E7)/2 + a_- w(E8-) + a_+ w(E8+)
        C  = M_minus exp(-K/T)/(6Z) = -w(E7)/2 + a_- w(E8-) + a_+ w(E8+)
        P' = P/Z = (3-sqrt(3))/6 w(E8+) + (3+sqrt(3))/6 w(E8-)
        Q' = Q/Z = (w(E8-) - w(E8+)) / (2 sqrt(3)),  a_+- = (3 +- sqrt(3))/12.

    Every term is evaluated with the partition function's E_min shift, so
    the oracle stays finite for all T > 0 (the literal compact scalars
    would overflow at large beta even though each matrix entry is bounded).
    No eigensolver is involved.
    """
    pv = partition_function_closed(p, T)  # validates J = 0 and T > 0
    spec = analytic_spectrum(p)
    e_min = pv.shift * T

    def w(energy):
        return exp(-(energy - e_min) / T) / pv.mantissa

    e = {lv.label: lv.energy for lv in spec.levels}
    a_plus = (3.0 + _SQ3) / 12.0
    a_minus = (3.0 - _SQ3) / 12.0
    w8p, w8m, w7 = w(e["Psi8+"]), w(e["Psi8-"]), w(e["Psi7"])
    center_m = w7 / 2.0 + a_minus * w8m + a_plus * w8p
    corner = -w7 / 2.0 + a_minus * w8m + a_plus * w8p
    p_center = (3.0 - _SQ3) / 6.0 * w8p + (3.0 + _SQ3) / 6.0 * w8m
    q = (w8m - w8p) / (2.0 * _SQ3)

    out = np.zeros((9, 9))
    diag = [w(e["Psi1"]), w(e["Psi3"]), center_m, w(e["Psi4"]), p_center,
            w(e["Psi5"]), center_m, w(e["Psi6"]), w(e["Psi2"])]
    np.fill_diagonal(out, diag)
    out[0, 8] = out[8, 0] = corner
    out[1, 5] = out[5, 1] = q
    out[3, 7] = out[7, 3] = q
    return out


def negativity(rho):
    """Entanglement negativity of a two-site density matrix.

    Both formulas from the module docstring are always evaluated; raises
    FormulaMismatch when they disagree beyond 1e-9.  Returns the
    negative-eigenvalue sum clamped to >= 0.
    """
    pt = partial_transpose(rho, "A")
    trace_route = (trace_norm(pt) - 1.0) / 2.0
    lam = np.linalg.eigvalsh(pt)
    negative_sum = -float(lam[lam < 0].sum())
    if abs(trace_route - negative_sum) > _ROUTE_TOL:
        raise FormulaMismatch(
            f"negativity routes disagree: trace-norm {trace_route!r} vs "
            f"negative-eigenvalue sum {negative_sum!r}"
        )
    return max(0.0, negative_sum)


def pure_state_negativity(coefficients):
    """Negativity of a pure two-site state from its Schmidt amplitudes.

    For |psi> = sum_i c_i |i>|i'>:  N = ((sum_i |c_i|)^2 - 1) / 2.
    Raises NotNormalized unless sum |c_i|^2 = 1 within 1e-12.
    """
    c = np.abs(np.asarray(coefficients, dtype=float))
    norm = float((c * c).sum())
    if abs(norm - 1.0) > 1e-12:
        raise NotNormalized(f"Schmidt amplitudes must have unit norm, got sum |c|^2 = {norm!r}")
    return (float(c.sum()) ** 2 - 1.0) / 2.0
