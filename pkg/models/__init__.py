from .complex import Kind, SimplicialComplex
from .errors import DegcxError, DimensionMismatchError, DomainError, ParseError, ScanLimitError
from .monomial import MonomialIdeal, minimalize

__all__ = [
    "Kind",
    "SimplicialComplex",
    "MonomialIdeal",
    "minimalize",
    "DegcxError",
    "DimensionMismatchError",
    "DomainError",
    "ParseError",
    "ScanLimitError",
]
