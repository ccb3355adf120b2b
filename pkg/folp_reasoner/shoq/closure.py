"""
Closure of a SHOQ knowledge base.
"""

import logging
from typing import Dict, List

from .concepts import (
    And,
    AtLeast,
    AtMost,
    Atomic,
    DlKnowledgeBase,
    Exists,
    Expression,
    Forall,
    Nominal,
    Not,
    Or,
    Role,
)

logger = logging.getLogger(__name__)


def closure(kb: DlKnowledgeBase) -> List[Expression]:
    """
    The smallest set of concepts and roles closed under the subexpression rules.

    Members are returned in discovery order, axioms first, which fixes the
    order of the translated rule families.
    """
    found: Dict[Expression, None] = {}
    worklist: List[Expression] = []

    def add(expression: Expression):
        if expression not in found:
            found[expression] = None
            worklist.append(expression)

    for axiom in kb.terminological:
        add(axiom.sub)
        add(axiom.sup)
    for axiom in kb.role_axioms:
        add(Role(axiom.sub))
        add(Role(axiom.sup))
    for role in kb.transitive:
        add(Role(role))

    transitive = set(kb.transitive)
    index = 0
    while index < len(worklist):
        current = worklist[index]
        index += 1
        if isinstance(current, (Role, Atomic, Nominal)):
            continue
        if isinstance(current, Not):
            add(current.operand)
        elif isinstance(current, (And, Or)):
            add(current.left)
            add(current.right)
        elif isinstance(current, Exists):
            add(Role(current.role))
            add(current.filler)
            for sub in sorted(kb.subroles(current.role) - {current.role}):
                if sub in transitive:
                    add(Exists(sub, current.filler))
        elif isinstance(current, Forall):
            add(Exists(current.role, Not(current.filler)))
        elif isinstance(current, AtMost):
            add(AtLeast(current.n + 1, current.role, current.filler))
        elif isinstance(current, AtLeast):
            add(Role(current.role))
            add(current.filler)

    logger.debug("closure has %d members", len(worklist))
    return worklist
