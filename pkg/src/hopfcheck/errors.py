"""Exception types shared across the package."""


class HopfcheckError(Exception):
    pass


class StructuralError(HopfcheckError):
    """Operands from incompatible structures (different rings, bases, ...)."""


class UnsupportedRingError(HopfcheckError):
    """An operation (inverse, kernel computation) needs a field."""


class TruncationError(HopfcheckError):
    """A product would exceed the truncation degree of the presentation."""


class ResourceGuardError(HopfcheckError):
    """A requested construction exceeds the built-in size guard."""


class ConstructionError(HopfcheckError):
    """A presentation fails a structural check at construction time."""


class SpecFileError(HopfcheckError):
    """A parse or validation error in an algebra spec file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
