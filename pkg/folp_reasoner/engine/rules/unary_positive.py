"""
Expansion of positive unary content: justify p(x) by one rule for p.
"""

import itertools
import logging
from typing import Iterator, List, Optional, Sequence

from ...forest import NodeId
from ...models import Predicate, Rule, SignedPredicate, Successor, UnaryShape
from ..structure import CompletionStructure, atom_of, update
from .base import Application, Branch, ExpansionRule, SearchContext, head_matches

logger = logging.getLogger(__name__)

# Placeholder for a successor that does not exist yet.
FRESH = None


def _candidates(cs: CompletionStructure, x: NodeId, successor: Successor, allow_fresh: bool) -> List[Optional[NodeId]]:
    """A fresh child first, then existing successors, then the remaining constants."""
    if not successor.term.is_variable:
        return [NodeId(successor.term.name)]
    existing = cs.successors(x)
    options: List[Optional[NodeId]] = [FRESH] if allow_fresh else []
    options.extend(existing)
    options.extend(NodeId(c) for c in sorted(cs.constants) if NodeId(c) not in existing)
    return options


def _respects_psi(shape: UnaryShape, assignment: Sequence[Optional[NodeId]]) -> bool:
    for i, j in shape.psi:
        if assignment[i] is not FRESH and assignment[i] == assignment[j]:
            return False
    return True


def _assignments(
    cs: CompletionStructure, x: NodeId, shape: UnaryShape, context: SearchContext
) -> Iterator[Sequence[Optional[NodeId]]]:
    allow_fresh = bool(shape.successors) and context.allows_child_of(x)
    pools = [_candidates(cs, x, successor, allow_fresh) for successor in shape.successors]
    for assignment in itertools.product(*pools):
        if _respects_psi(shape, assignment):
            yield assignment


def _apply(
    cs: CompletionStructure, x: NodeId, predicate: Predicate, shape: UnaryShape, assignment: Sequence[Optional[NodeId]]
) -> List[NodeId]:
    """Place the body of a rule instance on a clone; returns the nodes used."""
    nodes: List[NodeId] = []
    for successor, chosen in zip(shape.successors, assignment):
        if chosen is FRESH:
            chosen = cs.add_child(x)
        elif successor.gamma and chosen not in cs.successors(x):
            cs.ensure_es(x, chosen.root)
        nodes.append(chosen)

    source = atom_of(predicate, x)
    for lit in shape.beta:
        update(cs, source, lit.signed, x)
    for successor, y in zip(shape.successors, nodes):
        for lit in successor.gamma:
            update(cs, source, lit.signed, (x, y))
        for lit in successor.delta:
            update(cs, source, lit.signed, y)
    return nodes


def expand_unary_positive(
    cs: CompletionStructure, x: NodeId, predicate: Predicate, context: SearchContext
) -> Iterator[Branch]:
    """
    One branch per rule for ``predicate`` and per mapping of its successor
    terms onto nodes.

    Successor terms try a fresh child before existing successors and
    constants; a fresh child beyond the depth limit is skipped and marks
    the context as pruned. A free predicate is simply marked as expanded.
    """
    signed = SignedPredicate(predicate, True)
    if context.free_covers(predicate, (x,)):
        branch = cs.clone()
        branch.mark_expanded(x, signed)
        branch.touched.add(x)
        yield branch, "free"
        return

    rule: Rule
    for rule in context.program.rules_for(predicate):
        if not head_matches(rule, (x,)):
            continue
        shape = rule.unary_shape
        for assignment in _assignments(cs, x, shape, context):
            branch = cs.clone()
            nodes = _apply(branch, x, predicate, shape, assignment)
            branch.mark_expanded(x, signed)
            branch.touched.add(x)
            if branch.dead:
                continue
            detail = " ".join(f"{s.term}={n}" for s, n in zip(shape.successors, nodes))
            yield branch, f"{context.label(rule)} {detail}".rstrip()


class ExpandUnaryPositive(ExpansionRule):
    """(i): an unexpanded positive unary predicate at x."""

    rule_id = "i"

    def find(self, cs: CompletionStructure, x: NodeId) -> Optional[Application]:
        for sp in cs.unexpanded(x):
            if sp.positive:
                return Application(self.rule_id, x, x, sp)
        return None

    def expand(self, cs: CompletionStructure, application: Application) -> Iterator[Branch]:
        return expand_unary_positive(cs, application.node, application.signed.predicate, self.context)
