"""Exception types shared across the package."""


class GroundedError(Exception):
    """Base class for every error raised by this package."""


class GeometryError(GroundedError, ValueError):
    """A shape or representation violates its structural invariants."""


class GeneralPositionError(GroundedError, ValueError):
    """Two segments share a supporting horizontal or vertical line."""


class ShapeClassError(GroundedError, ValueError):
    """An algorithm was handed shapes outside the class it solves."""


class InstanceTooLarge(GroundedError):
    """The brute-force fallback refuses instances beyond its size guard."""


class ReductionError(GroundedError, ValueError):
    """Bad input to, or an internal failure of, the hardness construction."""


class ParseError(GroundedError, ValueError):
    def __init__(self, lineno: int, reason: str):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason
