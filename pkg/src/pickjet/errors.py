"""Exception types shared across the package."""


class PickjetError(Exception):
    """Base class for all errors raised by this package."""


class NotSquareError(PickjetError):
    """A matrix operation received a non-square input."""


class NotHermitianError(PickjetError):
    """Conjugate-transpose symmetry is violated beyond the given tolerance."""

    def __init__(self, defect: float, tol: float):
        super().__init__(f"asymmetry defect {defect:.6e} exceeds tolerance {tol:.6e}")
        self.defect = defect
        self.tol = tol


class NotPositiveDefiniteError(PickjetError):
    """A Cholesky pivot fell at or below the positivity floor."""

    def __init__(self, index: int, pivot: float):
        super().__init__(f"pivot {pivot:.6e} at index {index} is not positive")
        self.index = index
        self.pivot = pivot


class ConvergenceError(PickjetError):
    """The eigensolver did not reach its target accuracy within the sweep cap."""


class CenterMismatchError(PickjetError):
    """Jet arithmetic combined series developed at different centers."""


class OrderMismatchError(PickjetError):
    """Jet arithmetic combined series of different truncation orders."""


class JetDivisionError(PickjetError):
    """Reciprocal of a jet whose constant coefficient is (numerically) zero."""


class OutsideDiscError(PickjetError):
    """A point that must lie strictly inside the unit disc does not."""


class NonPositiveScaleError(PickjetError):
    """Jet data can only be rescaled by a strictly positive factor."""


class InstanceError(PickjetError):
    """Base class for interpolation-data validation failures."""


class NodeOutsideDiscError(InstanceError):
    """A node lies on or outside the unit circle (or too close to it)."""


class DuplicateNodeError(InstanceError):
    """Two nodes coincide within the distinctness threshold."""


class EmptyJetError(InstanceError):
    """A node carries no prescribed coefficients."""


class NonFiniteValueError(InstanceError):
    """A node or jet entry is NaN or infinite."""


class ParseError(PickjetError):
    """An instance or matrix document does not match the documented format."""
