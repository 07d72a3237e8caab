from .cohomology import scan_cohomology, takayama_dim
from .degree_complex import PowerMode, degree_complex_direct
from .primes import SymbolicPower, minimal_primes, symbolic_power_ideal
from .verifier import CHECKS, Verifier, VerifyReport

__all__ = [
    "scan_cohomology",
    "takayama_dim",
    "PowerMode",
    "degree_complex_direct",
    "SymbolicPower",
    "minimal_primes",
    "symbolic_power_ideal",
    "CHECKS",
    "Verifier",
    "VerifyReport",
]
