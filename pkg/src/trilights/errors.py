"""Exception types shared across the package."""


class TrilightsError(Exception):
    """Base class for all package-specific errors."""


class SizeError(TrilightsError, ValueError):
    """Board size out of the supported range."""


class CoordinateError(TrilightsError, ValueError):
    """Row/column or button id outside the board."""


class ShapeError(TrilightsError, ValueError):
    """Vector/matrix dimensions do not match."""


class FormatError(TrilightsError, ValueError):
    """Malformed textual input (bitstring, id list, covering text)."""


class OracleRangeError(TrilightsError, ValueError):
    """Exhaustive oracle invoked beyond its search bound."""


class KernelPreconditionError(TrilightsError, ValueError):
    """Input pattern is required to be a kernel element but is not."""


class VerificationError(TrilightsError, RuntimeError):
    """A constructed object failed its mandatory self-check."""
