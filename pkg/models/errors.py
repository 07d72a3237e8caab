"""Exception family shared by the library, the harness and the CLI."""


class DegcxError(ValueError):
    """Base class for every error raised on bad input."""


class DimensionMismatchError(DegcxError):
    """Objects living in rings (or on vertex sets) of different size were combined."""


class DomainError(DegcxError):
    """An argument lies outside the domain of the operation."""


class ParseError(DegcxError):
    """Malformed ideal or complex text."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class ScanLimitError(DegcxError):
    """The cohomology scan window exceeds the configured lattice cap."""

    def __init__(self, lattice_size: int, limit: int):
        self.lattice_size = lattice_size
        self.limit = limit
        super().__init__(
            f"scan window has {lattice_size} lattice points, limit is {limit} "
            f"(raise DEGCX_MAX_LATTICE to allow it)"
        )
