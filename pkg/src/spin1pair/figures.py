"""Reference data tables: negativity versus coupling, field, and temperature.

Each table reproduces one standard view of the thermal entanglement of the
pair: (1) negativity against K at three temperatures and zero field,
(2) a long-format (K, B) grid at fixed temperature, and (3) negativity
against temperature at three fields for a fixed coupling.  Axis overrides
keep the shape of each table (its column set) fixed; only the sampled grid
moves.
"""

import numpy as np

from .analysis import negativity_point

_FIG1_K = (-6.0, 0.0, 121)
_FIG1_TEMPS = (0.05, 0.6, 1.0)
_FIG1_B = 0.0

_FIG2_K = (-6.0, 0.0, 121)
_FIG2_B = (0.0, 3.0, 121)
_FIG2_T = 0.1

_FIG3_T = (0.025, 3.0, 120)
_FIG3_FIELDS = (0.2, 1.0, 1.5)
_FIG3_K = -3.0


def _axis_values(default, override):
    if override is None:
        start, stop, count = default
    else:
        start, stop, count = override.start, override.stop, override.count
    return np.linspace(start, stop, count)


def figure_table(n, k_axis=None, b_axis=None, t_axis=None):
    """Header and rows for figure ``n`` in {1, 2, 3}.

    Figure 1 accepts a K-axis override, figure 2 K- and B-axis overrides,
    figure 3 a T-axis override; any other override raises ValueError, as
    does an unknown figure number.
    """
    if n == 1:
        if b_axis is not None or t_axis is not None:
            raise ValueError("figure 1 accepts only a K-axis override")
        ks = _axis_values(_FIG1_K, k_axis)
        header = ["K", "N(T=0.05)", "N(T=0.6)", "N(T=1.0)"]
        rows = [
            [k] + [negativity_point(k, _FIG1_B, t) for t in _FIG1_TEMPS]
            for k in ks
        ]
        return header, rows
    if n == 2:
        if t_axis is not None:
            raise ValueError("figure 2 accepts only K- and B-axis overrides")
        ks = _axis_values(_FIG2_K, k_axis)
        bs = _axis_values(_FIG2_B, b_axis)
        header = ["K", "B", "N"]
        rows = [
            [k, b, negativity_point(k, b, _FIG2_T)]
            for k in ks
            for b in bs
        ]
        return header, rows
    if n == 3:
        if k_axis is not None or b_axis is not None:
            raise ValueError("figure 3 accepts only a T-axis override")
        ts = _axis_values(_FIG3_T, t_axis)
        header = ["T", "N(B=0.2)", "N(B=1.0)", "N(B=1.5)"]
        rows = [
            [t] + [negativity_point(_FIG3_K, b, t) for b in _FIG3_FIELDS]
            for t in ts
        ]
        return header, rows
    raise ValueError(f"unknown figure number {n!r}; expected 1, 2, or 3")
