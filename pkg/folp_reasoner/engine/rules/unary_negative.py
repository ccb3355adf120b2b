"""
Expansion of negative unary content: refute every rule for q at x.
"""

import itertools
import logging
from typing import Callable, Iterator, List, Optional, Tuple

from ...forest import NodeId
from ...models import Literal, Predicate, SignedPredicate
from ..structure import CompletionStructure, Target
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


def _instance_options(cs: CompletionStructure, x: NodeId, shape, nodes) -> Optional[Options]:
    """
    Flip options for one successor instance, or None when it is already refuted.

    A constant successor without an arc from x has every binary atom false:
    a positive binary literal on it is refuted, a negative one holds.
    """
    options: Options = []
    present = set(cs.successors(x))
    for successor, y in zip(shape.successors, nodes):
        arc = (x, y)
        for lit in successor.gamma:
            if y not in present:
                if lit.positive:
                    return None
                options.append((lit, arc))
                continue
            if literal_refuted(cs, lit, arc):
                return None
            if not literal_holds(cs, lit, arc):
                options.append((lit, arc))
        for lit in successor.delta:
            if literal_refuted(cs, lit, y):
                return None
            if not literal_holds(cs, lit, y):
                options.append((lit, y))
    return options


def unary_obligations(
    context: SearchContext, x: NodeId, predicate: Predicate
) -> Callable[[CompletionStructure], Optional[Options]]:
    """
    Open refutation obligations for not q(x).

    A rule is met once a root literal is refuted or every instance of its
    successor terms over succ(x) is refuted.
    """
    rules = [rule for rule in context.program.rules_for(predicate) if head_matches(rule, (x,))]

    def obligations(cs: CompletionStructure) -> Optional[Options]:
        for rule in rules:
            shape = rule.unary_shape
            if any(literal_refuted(cs, lit, x) for lit in shape.beta):
                continue
            beta_options: Options = [(lit, x) for lit in shape.beta if not literal_holds(cs, lit, x)]
            pools = []
            for successor in shape.successors:
                if successor.term.is_variable:
                    pools.append(cs.successors(x))
                else:
                    pools.append([NodeId(successor.term.name)])
            for nodes in itertools.product(*pools):
                if any(nodes[i] == nodes[j] for i, j in shape.psi):
                    continue
                instance = _instance_options(cs, x, shape, nodes)
                if instance is None:
                    continue
                return beta_options + instance
        return None

    return obligations


def expand_unary_negative(
    cs: CompletionStructure, x: NodeId, predicate: Predicate, context: SearchContext
) -> Iterator[Branch]:
    """
    Branches in which every rule for ``predicate`` is refuted at x.

    If a refutation adds an ES arc, not q(x) stays unexpanded so the new
    successor is taken into account on the next pass.
    """
    signed = SignedPredicate(predicate, False)
    before = len(cs.successors(x))
    start = cs.clone()
    start.touched.add(x)
    for branch, detail in refute(start, unary_obligations(context, x, predicate)):
        if len(branch.successors(x)) == before:
            branch.mark_expanded(x, signed)
        yield branch, detail


class ExpandUnaryNegative(ExpansionRule):
    """(iii): an unexpanded negative unary predicate at x."""

    rule_id = "iii"

    def find(self, cs: CompletionStructure, x: NodeId) -> Optional[Application]:
        for sp in cs.unexpanded(x):
            if not sp.positive:
                return Application(self.rule_id, x, x, sp)
        return None

    def expand(self, cs: CompletionStructure, application: Application) -> Iterator[Branch]:
        return expand_unary_negative(cs, application.node, application.signed.predicate, self.context)
