"""
Printers producing the `.folp` and `.dl` syntax read by the parsers.
"""

from ..models import Program
from ..shoq.concepts import DlKnowledgeBase


def print_program(program: Program) -> str:
    """
    Render a program, one rule per line.

    Labels are kept and predicate names that are not plain identifiers
    are quoted, so the output parses back to an equal program. An empty
    program prints as the empty string.
    """
    if not program.rules:
        return ""
    return "\n".join(str(rule) for rule in program.rules) + "\n"


def print_dl(kb: DlKnowledgeBase) -> str:
    """Render a knowledge base, one axiom per line."""
    axioms = kb.axioms
    if not axioms:
        return ""
    return "\n".join(str(axiom) for axiom in axioms) + "\n"
