"""Exact verification of factorial Grothendieck polynomial identities via
five- and six-vertex lattice models."""

from .combinatorics import Partition, PositionVector
from .exact import EvaluationPoint, ExactScalar, scalar
from .grothendieck import FactorialAlphabet, grothendieck_det, grothendieck_symbolic
from .poly import MultiPoly
from .report import IdentityReport

__version__ = "0.1.0"

__all__ = [
    "EvaluationPoint", "ExactScalar", "FactorialAlphabet", "IdentityReport", "MultiPoly",
    "Partition", "PositionVector", "grothendieck_det", "grothendieck_symbolic", "scalar",
]
