"""
Model checking for SHOQ over finite interpretations.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Mapping, Set, Tuple

from ..errors import InterpretationError
from .concepts import (
    And,
    AtLeast,
    AtMost,
    Atomic,
    Concept,
    DlKnowledgeBase,
    Exists,
    Forall,
    Nominal,
    Not,
    Or,
)

logger = logging.getLogger(__name__)

Pair = Tuple[str, str]


@dataclass(frozen=True)
class DlInterpretation:
    """
    A finite DL interpretation.

    Individuals denote themselves (unique names). Concept and role names
    missing from the maps have empty extensions.
    """

    domain: FrozenSet[str]
    concepts: Mapping[str, FrozenSet[str]] = field(default_factory=dict)
    roles: Mapping[str, FrozenSet[Pair]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "domain", frozenset(self.domain))
        object.__setattr__(self, "concepts", {k: frozenset(v) for k, v in self.concepts.items()})
        object.__setattr__(self, "roles", {k: frozenset(tuple(p) for p in v) for k, v in self.roles.items()})
        if not self.domain:
            raise ValueError("An interpretation needs a non-empty domain")
        for name, members in self.concepts.items():
            if not members <= self.domain:
                raise ValueError(f"Extension of {name} leaves the domain: {sorted(members - self.domain)}")
        for name, pairs in self.roles.items():
            for pair in pairs:
                if not set(pair) <= self.domain:
                    raise ValueError(f"Extension of {name} leaves the domain: {pair}")

    def concept(self, name: str) -> FrozenSet[str]:
        return self.concepts.get(name, frozenset())

    def role(self, name: str) -> FrozenSet[Pair]:
        return self.roles.get(name, frozenset())

    def successors(self, role: str, element: str) -> Set[str]:
        return {y for x, y in self.role(role) if x == element}

    def to_dict(self) -> Dict[str, object]:
        return {
            "domain": sorted(self.domain),
            "concepts": {k: sorted(v) for k, v in sorted(self.concepts.items())},
            "roles": {k: sorted(v) for k, v in sorted(self.roles.items())},
        }


def eval_concept(concept: Concept, interpretation: DlInterpretation) -> FrozenSet[str]:
    """
    The extension of a concept.

    Raises:
        InterpretationError: a nominal names an individual outside the domain
    """
    domain = interpretation.domain
    if isinstance(concept, Atomic):
        return interpretation.concept(concept.name)
    if isinstance(concept, Nominal):
        if concept.individual not in domain:
            raise InterpretationError(f"individual {concept.individual} is not in the domain")
        return frozenset({concept.individual})
    if isinstance(concept, Not):
        return domain - eval_concept(concept.operand, interpretation)
    if isinstance(concept, And):
        return eval_concept(concept.left, interpretation) & eval_concept(concept.right, interpretation)
    if isinstance(concept, Or):
        return eval_concept(concept.left, interpretation) | eval_concept(concept.right, interpretation)

    filler = eval_concept(concept.filler, interpretation)
    counts = {x: len(interpretation.successors(concept.role, x) & filler) for x in domain}
    if isinstance(concept, Exists):
        return frozenset(x for x in domain if counts[x] >= 1)
    if isinstance(concept, Forall):
        return frozenset(x for x in domain if interpretation.successors(concept.role, x) <= filler)
    if isinstance(concept, AtLeast):
        return frozenset(x for x in domain if counts[x] >= concept.n)
    if isinstance(concept, AtMost):
        return frozenset(x for x in domain if counts[x] <= concept.n)
    raise TypeError(f"Unknown concept {concept!r}")


def is_transitive(pairs: Iterable[Pair]) -> bool:
    relation = set(pairs)
    return all((x, z) in relation for x, y in relation for w, z in relation if y == w)


def satisfies(kb: DlKnowledgeBase, interpretation: DlInterpretation) -> bool:
    """True iff the interpretation is a model of every axiom of the knowledge base."""
    for axiom in kb.terminological:
        if not eval_concept(axiom.sub, interpretation) <= eval_concept(axiom.sup, interpretation):
            logger.debug("violated: %s", axiom)
            return False
    for axiom in kb.role_axioms:
        if not interpretation.role(axiom.sub) <= interpretation.role(axiom.sup):
            logger.debug("violated: %s", axiom)
            return False
    for role in kb.transitive:
        if not is_transitive(interpretation.role(role)):
            logger.debug("violated: trans(%s)", role)
            return False
    return True
