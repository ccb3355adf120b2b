"""
Expansion rules of the completion tableau, in the order they are tried at a node.
"""

from typing import List

from .base import Application, Branch, ExpansionRule, SearchContext
from .binary import (
    ExpandBinaryNegative,
    ExpandBinaryPositive,
    MaterializeConstantArcs,
    expand_binary_negative,
    expand_binary_positive,
)
from .choose import ChooseBinary, ChooseUnary, choose_binary, choose_unary
from .unary_negative import ExpandUnaryNegative, expand_unary_negative
from .unary_positive import ExpandUnaryPositive, expand_unary_positive

RULE_ORDER = (
    ExpandUnaryPositive,
    ExpandBinaryPositive,
    ExpandBinaryNegative,
    ChooseUnary,
    ExpandUnaryNegative,
    MaterializeConstantArcs,
    ChooseBinary,
)


def build_rules(context: SearchContext) -> List[ExpansionRule]:
    """Instantiate every expansion rule over a shared context."""
    return [rule_class(context) for rule_class in RULE_ORDER]


__all__ = [
    "Application",
    "Branch",
    "ChooseBinary",
    "ChooseUnary",
    "ExpandBinaryNegative",
    "ExpandBinaryPositive",
    "ExpandUnaryNegative",
    "ExpandUnaryPositive",
    "ExpansionRule",
    "MaterializeConstantArcs",
    "RULE_ORDER",
    "SearchContext",
    "build_rules",
    "choose_binary",
    "choose_unary",
    "expand_binary_negative",
    "expand_binary_positive",
    "expand_unary_negative",
    "expand_unary_positive",
]
