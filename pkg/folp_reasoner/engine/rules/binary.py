"""
Expansion of binary content on the arcs leaving a node.
"""

import logging
from typing import Callable, Iterator, List, Optional, Tuple

from ...forest import Arc, NodeId
from ...models import Literal, Predicate, SignedPredicate
from ..structure import CompletionStructure, Target, atom_of, update
from .base import (
    Application,
    Branch,
    ExpansionRule,
    SearchContext,
    head_matches,
    literal_holds,
    literal_refuted,
    refute,
)

logger = logging.getLogger(__name__)

Options = List[Tuple[Literal, Target]]


def _placed(shape, arc: Arc) -> List[Tuple[Literal, Target]]:
    x, y = arc
    return [(lit, x) for lit in shape.beta] + [(lit, arc) for lit in shape.gamma] + [(lit, y) for lit in shape.delta]


def expand_binary_positive(
    cs: CompletionStructure, arc: Arc, predicate: Predicate, context: SearchContext
) -> Iterator[Branch]:
    """One branch per rule for ``predicate`` whose head matches the arc."""
    signed = SignedPredicate(predicate, True)
    x, _ = arc
    if context.free_covers(predicate, arc):
        branch = cs.clone()
        branch.mark_expanded(arc, signed)
        branch.touched.add(x)
        yield branch, "free"
        return

    source = atom_of(predicate, arc)
    for rule in context.program.rules_for(predicate):
        if not head_matches(rule, arc):
            continue
        branch = cs.clone()
        for lit, target in _placed(rule.binary_shape, arc):
            update(branch, source, lit.signed, target)
        branch.mark_expanded(arc, signed)
        branch.touched.add(x)
        if branch.dead:
            continue
        yield branch, context.label(rule)


def binary_obligations(
    context: SearchContext, arc: Arc, predicate: Predicate
) -> Callable[[CompletionStructure], Optional[Options]]:
    rules = [rule for rule in context.program.rules_for(predicate) if head_matches(rule, arc)]

    def obligations(cs: CompletionStructure) -> Optional[Options]:
        for rule in rules:
            placed = _placed(rule.binary_shape, arc)
            if any(literal_refuted(cs, lit, target) for lit, target in placed):
                continue
            return [(lit, target) for lit, target in placed if not literal_holds(cs, lit, target)]
        return None

    return obligations


def expand_binary_negative(
    cs: CompletionStructure, arc: Arc, predicate: Predicate, context: SearchContext
) -> Iterator[Branch]:
    """Branches in which every rule for ``predicate`` is refuted on the arc."""
    signed = SignedPredicate(predicate, False)
    start = cs.clone()
    start.touched.add(arc[0])
    for branch, detail in refute(start, binary_obligations(context, arc, predicate)):
        branch.mark_expanded(arc, signed)
        yield branch, detail


class _ArcRule(ExpansionRule):
    positive = True

    def find(self, cs: CompletionStructure, x) -> Optional[Application]:
        for arc in cs.out_arcs(x):
            for sp in cs.unexpanded(arc):
                if sp.positive == self.positive:
                    return Application(self.rule_id, x, arc, sp)
        return None


class ExpandBinaryPositive(_ArcRule):
    """(iv): an unexpanded positive binary predicate on an arc out of x."""

    rule_id = "iv"
    positive = True

    def expand(self, cs: CompletionStructure, application: Application) -> Iterator[Branch]:
        return expand_binary_positive(cs, application.target, application.signed.predicate, self.context)


class ExpandBinaryNegative(_ArcRule):
    """(v): an unexpanded negative binary predicate on an arc out of x."""

    rule_id = "v"
    positive = False

    def expand(self, cs: CompletionStructure, application: Application) -> Iterator[Branch]:
        return expand_binary_negative(cs, application.target, application.signed.predicate, self.context)


class MaterializeConstantArcs(ExpansionRule):
    """
    ES arcs to constants c for which some rule f(s, c) could fire at x
    without a positive binary literal, so that f(x, c) gets decided.
    """

    rule_id = "es"

    def find(self, cs: CompletionStructure, x) -> Optional[Application]:
        targets = self.context.implicit_arc_targets(x, cs)
        if not targets:
            return None
        return Application(self.rule_id, x, (x, NodeId(targets[0])))

    def expand(self, cs: CompletionStructure, application: Application) -> Iterator[Branch]:
        x, y = application.target
        branch = cs.clone()
        branch.ensure_es(x, y.root)
        branch.touched.add(x)
        yield branch, f"arc to {y}"
