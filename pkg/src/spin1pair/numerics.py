"""Dense real-symmetric eigensolver wrapper, stable Boltzmann weights, trace norm.

All matrices in this package are 9x9 real symmetric, so a dense LAPACK
eigensolver is both exact enough (reconstruction residual ~1e-15) and fast
enough (~30 us) for every downstream use, including the full figure sweeps.
The wrapper adds the contract pieces LAPACK does not guarantee: a symmetry
precondition check, and a deterministic ordering *within* degenerate
clusters so repeated runs emit byte-identical CSV.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveTemperature, NotSymmetric

_SYM_TOL = 1e-12
# Two eigenvalues closer than this (relative to the spectral scale) are
# treated as one degenerate cluster for ordering purposes.
_CLUSTER_TOL = 1e-9


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues sorted ascending with matching orthonormal eigenvectors.

    ``eigenvectors[:, i]`` belongs to ``eigenvalues[i]``.  Within any
    degenerate cluster the vectors are sign-canonicalized (largest-magnitude
    entry made positive) and sorted lexicographically by their entries, so
    the decomposition of a given matrix is deterministic.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _require_symmetric(m, tol=_SYM_TOL):
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {m.shape}")
    residue = np.abs(m - m.T).max()
    if residue > tol:
        raise NotSymmetric(f"matrix is not symmetric: max |m - m^T| = {residue:.3e} > {tol:g}")
    return m


def _canonicalize_cluster(vectors):
    """Deterministic basis for one degenerate cluster (n x k column block)."""
    # Sign convention: make the entry of largest magnitude positive
    # (first such entry if several tie).
    fixed = vectors.copy()
    for j in range(fixed.shape[1]):
        col = fixed[:, j]
        lead = np.argmax(np.abs(col))
        if col[lead] < 0:
            fixed[:, j] = -col
    # Lexicographic column order by entries; np.lexsort keys are
    # last-significant-first, so feed the rows reversed.
    order = np.lexsort(fixed[::-1, :])
    return fixed[:, order]


def eigh_symmetric(m):
    """Full eigendecomposition of a real symmetric matrix.

    Eigenvalues come back sorted ascending; inside each degenerate cluster
    (gap below 1e-9 relative to the spectral scale) the eigenvector columns
    get a canonical sign and lexicographic order.  Raises NotSymmetric when
    max |m - m^T| exceeds 1e-12.
    """
    m = _require_symmetric(m)
    lam, vec = np.linalg.eigh(m)
    scale = max(1.0, float(np.abs(lam).max(initial=0.0)))
    tol = _CLUSTER_TOL * scale
    start = 0
    for i in range(1, lam.size + 1):
        if i == lam.size or lam[i] - lam[i - 1] > tol:
            if i - start > 1:
                vec[:, start:i] = _canonicalize_cluster(vec[:, start:i])
            start = i
    return EigenDecomposition(eigenvalues=lam, eigenvectors=vec)


def boltzmann_weights(energies, T):
    """Normalized Boltzmann weights exp(-(E - E_min)/T) / sum(...).

    The shift by E_min keeps the largest exponent at zero, so the weights
    stay finite for arbitrarily small positive T (deep levels underflow to
    exactly 0, which is the correct limit).  Raises NonPositiveTemperature
    for T <= 0; the T = 0 convention lives in analysis.ground_state.
    """
    if not T > 0:
        raise NonPositiveTemperature(f"temperature must be positive, got {T!r}")
    energies = np.asarray(energies, dtype=float)
    w = np.exp(-(energies - energies.min()) / T)
    return w / w.sum()


def trace_norm(m):
    """Sum of absolute eigenvalues of a real symmetric matrix."""
    m = _require_symmetric(m)
    return float(np.abs(np.linalg.eigvalsh(m)).sum())
