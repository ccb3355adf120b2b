"""
Compilation of SHOQ knowledge bases into forest logic programs.

Each closure member becomes a predicate named by its canonical string and
gets the rules that define its semantics; every axiom becomes a constraint.
"""

import logging
from typing import Iterable, List, Optional

from ..errors import TranslationError
from ..models import Constant, Inequality, Literal, Predicate, Program, Rule, Variable
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
)

logger = logging.getLogger(__name__)

DEFAULT_NUMBER_CAP = 8

X = Variable("X")
Y = Variable("Y")


def concept_predicate(concept: Concept) -> Predicate:
    return Predicate(str(concept), 1)


def role_predicate(role: str) -> Predicate:
    return Predicate(role, 2)


def _unary(concept: Concept, term=X, positive: bool = True) -> Literal:
    return Literal(concept_predicate(concept), (term,), positive)


def _binary(role: str, source=X, target=Y, positive: bool = True) -> Literal:
    return Literal(role_predicate(role), (source, target), positive)


def check_number_restrictions(kb: DlKnowledgeBase, members: Iterable, number_cap: Optional[int]):
    """
    Raises:
        TranslationError: a number restriction uses a non-simple role or exceeds the cap
    """
    for member in members:
        if not isinstance(member, (AtLeast, AtMost)):
            continue
        if not kb.is_simple_role(member.role):
            raise TranslationError(f"role {member.role} in {member} is not simple")
        if number_cap is not None and member.n > number_cap:
            raise TranslationError(f"number {member.n} in {member} exceeds the cap of {number_cap}")


def _member_rules(kb: DlKnowledgeBase, member, transitive_rules: bool) -> List[Rule]:
    if isinstance(member, Role):
        head = _binary(member.name)
        return [Rule(head, free=True)]
    if isinstance(member, Atomic):
        return [Rule(_unary(member), free=True)]
    if isinstance(member, Nominal):
        return [Rule(_unary(member, Constant(member.individual)))]

    head = _unary(member)
    if isinstance(member, Not):
        return [Rule(head, (_unary(member.operand, positive=False),))]
    if isinstance(member, And):
        return [Rule(head, (_unary(member.left), _unary(member.right)))]
    if isinstance(member, Or):
        return [Rule(head, (_unary(member.left),)), Rule(head, (_unary(member.right),))]
    if isinstance(member, Exists):
        rules = [Rule(head, (_binary(member.role), _unary(member.filler, Y)))]
        if transitive_rules:
            for sub in sorted(kb.subroles(member.role) - {member.role}):
                if sub in kb.transitive:
                    rules.append(Rule(head, (_unary(Exists(sub, member.filler)),)))
            if member.role in kb.transitive:
                rules.append(Rule(head, (_binary(member.role), _unary(member, Y))))
        return rules
    if isinstance(member, Forall):
        witness = Exists(member.role, Not(member.filler))
        return [Rule(head, (_unary(witness, positive=False),))]
    if isinstance(member, AtMost):
        bound = AtLeast(member.n + 1, member.role, member.filler)
        return [Rule(head, (_unary(bound, positive=False),))]
    if isinstance(member, AtLeast):
        successors = [Variable(f"Y{i}") for i in range(1, member.n + 1)]
        body: list = [_binary(member.role, X, y) for y in successors]
        body += [_unary(member.filler, y) for y in successors]
        body += [
            Inequality(successors[i], successors[j])
            for i in range(len(successors))
            for j in range(i + 1, len(successors))
        ]
        return [Rule(head, tuple(body))]
    raise TypeError(f"Unknown closure member {member!r}")


def translate(
    kb: DlKnowledgeBase,
    number_cap: Optional[int] = DEFAULT_NUMBER_CAP,
    extra_concepts: Iterable[Concept] = (),
    transitive_rules: bool = True,
) -> Program:
    """
    Compile a knowledge base to a forest logic program.

    Args:
        kb: The knowledge base
        number_cap: Largest number allowed in a number restriction
        extra_concepts: Concepts to define even when no axiom mentions them
        transitive_rules: Emit the rules for transitive roles and their subroles

    Raises:
        TranslationError: non-simple role in a number restriction, or a number above the cap
    """
    members = closure(kb)
    known = set(members)
    for concept in extra_concepts:
        extended = closure(DlKnowledgeBase((_self_inclusion(concept),), kb.role_axioms, kb.transitive))
        for member in extended:
            if member not in known:
                known.add(member)
                members.append(member)
    check_number_restrictions(kb, members, number_cap)

    rules: List[Rule] = []
    for axiom in kb.terminological:
        rules.append(Rule(None, (_unary(axiom.sub), _unary(axiom.sup, positive=False))))
    for axiom in kb.role_axioms:
        rules.append(Rule(None, (_binary(axiom.sub), _binary(axiom.sup, positive=False))))
    for member in members:
        rules.extend(_member_rules(kb, member, transitive_rules))

    logger.debug("translated %d closure members into %d rules", len(members), len(rules))
    return Program(tuple(rules), source="<translation>")


def _self_inclusion(concept: Concept) -> ConceptInclusion:
    return ConceptInclusion(concept, concept)


def translate_simple(kb: DlKnowledgeBase, number_cap: Optional[int] = DEFAULT_NUMBER_CAP, extra_concepts: Iterable[Concept] = ()) -> Program:
    """
    Compile an ALCHOQ knowledge base; the result is a simple program.

    Raises:
        TranslationError: the knowledge base has transitivity axioms
    """
    if kb.transitive:
        raise TranslationError(f"not ALCHOQ: transitive roles {', '.join(kb.transitive)}")
    return translate(kb, number_cap, extra_concepts, transitive_rules=False)
