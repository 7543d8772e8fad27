class ResourceLimitError(RuntimeError):
    """Raised when a brute-force routine is asked for a problem beyond its size guard."""


class UnsupportedDimensionError(ValueError):
    """Raised when a routine only supports a fixed range of matrix dimensions."""
