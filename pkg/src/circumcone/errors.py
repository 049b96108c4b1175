"""Exception hierarchy shared by all modules.

Every domain failure derives from CircumconeError so the CLI and the
service can map it to a single exit-code / HTTP-status contract.
"""


class CircumconeError(Exception):
    """Base class for all domain errors."""


class ZeroVector(CircumconeError):
    """A generator or direction was (numerically) zero."""


class DuplicateGenerator(CircumconeError):
    """Two generators coincide after normalization."""


class DimensionMismatch(CircumconeError):
    """A vector does not match the ambient dimension."""


class DependentBase(CircumconeError):
    """The conic base is linearly dependent; the Gram matrix is singular."""


class AffinelyDependent(CircumconeError):
    """The circumcenter linear system is singular."""


class DegenerateDirection(CircumconeError):
    """d = 0; aperture and related quantities are undefined."""


class HypothesisFails(CircumconeError):
    """The affine hull of the extremal section contains the origin."""

    def __init__(self, variant: str, distance: float):
        super().__init__(
            f"affine-hull hypothesis fails for {variant} "
            f"(origin distance {distance:.3e})"
        )
        self.variant = variant
        self.distance = distance


class UnsupportedExact(CircumconeError):
    """Exact evaluation refused for this cone variant (use the sampled path)."""


class InfeasiblePoint(CircumconeError):
    """A point violates the constraint system beyond tolerance."""


class NoActiveConstraints(CircumconeError):
    """No constraint is active; the active-cone construction is vacuous."""


class DegenerateBox(CircumconeError):
    """Both signs of a box row are active (tau at or below tolerance)."""


class ApexError(CircumconeError):
    """An active SOC constraint sits at its non-smooth apex."""

    def __init__(self, index: int):
        super().__init__(f"active SOC constraint {index} is at its apex")
        self.index = index


class StepTooLong(CircumconeError):
    """sigma >= sigma* would leave the interior of the polar cone."""


class StepFailure(CircumconeError):
    """Backtracking exhausted its halvings; geometry is degenerate."""


class DegenerateAffine(CircumconeError):
    """The origin lies on the affine hull of the base."""
