"""
SHOQ knowledge bases, their semantics and their compilation to forest logic programs.
"""

from .closure import closure
from .concepts import (
    And,
    AtLeast,
    AtMost,
    Atomic,
    Concept,
    ConceptInclusion,
    DlKnowledgeBase,
    Exists,
    Forall,
    Nominal,
    Not,
    Or,
    Role,
    RoleInclusion,
    Transitivity,
)
from .hybrid import FHybridKB, HybridModel, concept_sat, fhybrid_bounded_check, fhybrid_sat, project
from .semantics import DlInterpretation, eval_concept, satisfies
from .translate import translate, translate_simple

__all__ = [
    "And",
    "AtLeast",
    "AtMost",
    "Atomic",
    "Concept",
    "ConceptInclusion",
    "DlInterpretation",
    "DlKnowledgeBase",
    "Exists",
    "FHybridKB",
    "Forall",
    "HybridModel",
    "Nominal",
    "Not",
    "Or",
    "Role",
    "RoleInclusion",
    "Transitivity",
    "closure",
    "concept_sat",
    "eval_concept",
    "fhybrid_bounded_check",
    "fhybrid_sat",
    "project",
    "satisfies",
    "translate",
    "translate_simple",
]
