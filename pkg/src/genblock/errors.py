"""Exception hierarchy shared by all modules."""


class GeometryError(Exception):
    """Base class for every error raised by genblock."""


class DomainError(GeometryError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class DimensionError(DomainError):
    """A matrix or subspace has the wrong rank or ambient dimension."""


class CapabilityError(GeometryError):
    """Requested parameters are outside what the package supports."""


class LimitError(CapabilityError):
    """An enumeration would exceed the configured size guard."""


class ParseError(GeometryError, ValueError):
    """Malformed certificate, solution or LP text."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConstructionUnavailable(GeometryError):
    """A builder could not find the auxiliary structure it needs."""


class IncompleteSearchError(GeometryError):
    """Branch and bound hit its node cap before proving optimality."""


class InfeasibleError(GeometryError):
    """An ILP model has no feasible solution."""
