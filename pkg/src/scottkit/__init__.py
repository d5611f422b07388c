"""A countable complete lattice whose Scott topology is not sober, made executable.

The package builds the poset P, the lattice M of principal-style down-sets,
its one-point extension R and the free-join lattice F, and checks their
claimed properties by brute force on finite windows.
"""

from .errors import (
    InvalidArgument, OracleNotScottOpen, OutOfRange, PreconditionViolation, ScottkitError,
)
from .gallery import SCENARIOS, VerificationReport, run_all, run_scenario
from .poset import FinitePoset

__all__ = [
    "ScottkitError", "InvalidArgument", "OutOfRange", "PreconditionViolation",
    "OracleNotScottOpen", "FinitePoset", "SCENARIOS", "VerificationReport", "run_scenario",
    "run_all",
]

__version__ = "0.1.0"
