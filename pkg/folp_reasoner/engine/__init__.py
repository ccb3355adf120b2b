"""
Completion-structure tableau for forest logic programs.
"""

from .applicability import check_blocked, is_saturated
from .model import extract_model
from .rules import SearchContext, build_rules
from .solver import ForestSolver, solve
from .structure import CompletionStructure, init_completion, is_clash_free, is_contradictory, is_redundant, update

__all__ = [
    "CompletionStructure",
    "ForestSolver",
    "SearchContext",
    "build_rules",
    "check_blocked",
    "extract_model",
    "init_completion",
    "is_clash_free",
    "is_contradictory",
    "is_redundant",
    "is_saturated",
    "solve",
    "update",
]
