"""Exact evaluation of quantum propositions under classical, gappy, many-valued and weak semantics."""

from qsem.exact import ExactMatrix, ExactVector, Scalar, SubspaceBasis
from qsem.projector import Projector, SubspaceRelation
from qsem.semantics import (
    ClassicalFalse,
    ClassicalTrue,
    Degree,
    Gap,
    SemanticsKind,
    State,
    TruthValue,
    Weak,
    born_degree,
    many_valued,
    supervaluate,
    weak_value,
    weak_valued,
)

__version__ = "0.1.0"

__all__ = [
    "ClassicalFalse",
    "ClassicalTrue",
    "Degree",
    "ExactMatrix",
    "ExactVector",
    "Gap",
    "Projector",
    "Scalar",
    "SemanticsKind",
    "State",
    "SubspaceBasis",
    "SubspaceRelation",
    "TruthValue",
    "Weak",
    "born_degree",
    "many_valued",
    "supervaluate",
    "weak_value",
    "weak_valued",
]
