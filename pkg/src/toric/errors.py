"""Exceptions shared across the package."""


class ToricError(Exception):
    """Base class for package errors."""


class InputError(ToricError):
    """Malformed matrix file, bad gallery parameters, unparseable input."""


class NotPointedError(ToricError):
    """Operation requires a pointed configuration (NA has no units)."""


class NotHomogeneousError(ToricError):
    """Operation requires a grading w with w.a_i = 1 for every column."""


class NotSublatticeError(ToricError):
    """lattice_index called on a pair that is not nested."""


class NotACircuitError(ToricError):
    """true_degree called on a vector that is not a circuit."""


class CapExceededError(ToricError):
    """A configured size cap was hit (exhaustive UGB, Hilbert basis rank, ...)."""


class InstabilityError(ToricError):
    """Polynomial interpolation did not stabilize below the s_max cap."""


class DegenerateError(ToricError):
    """Geometric input degenerate for the requested operation."""


class InternalCheckError(ToricError):
    """A redundant internal self-check failed; indicates a bug, not bad input."""
