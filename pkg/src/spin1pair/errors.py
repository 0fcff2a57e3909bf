"""Domain errors shared across the package.

Every error below signals a violated contract of one specific operation
(bad physical input, an oracle mismatch, or a failed search), never a
programming bug.  The CLI maps any :class:`DomainError` to exit code 3 and
the HTTP service maps it to status 400 with the class name in the payload.
"""


class DomainError(Exception):
    """Base class for all domain-level failures."""


class NotSymmetric(DomainError):
    """A matrix argument violated its symmetry precondition."""


class NonPositiveTemperature(DomainError):
    """Thermal quantities require T > 0; the T = 0 limit lives in analysis.ground_state."""


class ZeroRepulsion(DomainError):
    """Coupling derivation requires both repulsion energies to be nonzero."""


class BilinearTermPresent(DomainError):
    """A closed-form route was requested but it only holds for J = 0."""


class NotNormalized(DomainError):
    """Schmidt amplitudes must have unit norm."""


class FormulaMismatch(DomainError):
    """The two negativity formulas disagreed beyond tolerance (eigensolver bug)."""


class NoEntanglementAtZeroField(DomainError):
    """Critical-field search needs an entangled starting point at B = 0."""


class NoEntangledPhase(DomainError):
    """No temperature in the scan range shows negativity above threshold."""


class BracketNotFound(DomainError):
    """A threshold crossing could not be bracketed inside the scan range."""
