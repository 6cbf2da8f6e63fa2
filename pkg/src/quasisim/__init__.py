"""Exact quasisimilarity classification of invariant subspaces of a two-block model operator."""

__version__ = "0.1.0"

from .divisor import BlaschkeDivisor
from .model import CommutantElement, ModelPair, ModelVector
from .subspace import Subspace, canonical_basis
from .jordan import JordanData, invariant_data
from .canonical import Triple, admissible, canonical_subspace
from .oracle import Verdict, classify, find_quasisimilarity
from .lr import lr_coefficient

__all__ = [
    "BlaschkeDivisor",
    "CommutantElement",
    "JordanData",
    "ModelPair",
    "ModelVector",
    "Subspace",
    "Triple",
    "Verdict",
    "admissible",
    "canonical_basis",
    "canonical_subspace",
    "classify",
    "find_quasisimilarity",
    "invariant_data",
    "lr_coefficient",
]
