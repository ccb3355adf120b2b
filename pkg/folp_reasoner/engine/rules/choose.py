"""
Choice rules: decide every predicate at every node and arc.
"""

import logging
from typing import Iterator, Optional

from ...forest import Arc, NodeId
from ...models import Predicate, SignedPredicate
from ..structure import CompletionStructure, Target, update
from .base import Application, Branch, ExpansionRule

logger = logging.getLogger(__name__)


def _choose(cs: CompletionStructure, target: Target, node: NodeId, predicate: Predicate) -> Iterator[Branch]:
    for positive in (True, False):
        branch = cs.clone()
        update(branch, None, SignedPredicate(predicate, positive), target)
        branch.touched.add(node)
        yield branch, str(SignedPredicate(predicate, positive))


def choose_unary(cs: CompletionStructure, x: NodeId, predicate: Predicate) -> Iterator[Branch]:
    """Branch on q(x) and not q(x), positive first."""
    return _choose(cs, x, x, predicate)


def choose_binary(cs: CompletionStructure, arc: Arc, predicate: Predicate) -> Iterator[Branch]:
    """Branch on f(x,y) and not f(x,y), positive first."""
    return _choose(cs, arc, arc[0], predicate)


class ChooseUnary(ExpansionRule):
    """(ii): a unary predicate still undecided at x."""

    rule_id = "ii"

    def find(self, cs: CompletionStructure, x: NodeId) -> Optional[Application]:
        for predicate in self.context.upreds:
            if not cs.decided(x, predicate):
                return Application(self.rule_id, x, x, SignedPredicate(predicate, True))
        return None

    def expand(self, cs: CompletionStructure, application: Application) -> Iterator[Branch]:
        return choose_unary(cs, application.node, application.signed.predicate)


class ChooseBinary(ExpansionRule):
    """(vi): a binary predicate still undecided on an arc out of x."""

    rule_id = "vi"

    def find(self, cs: CompletionStructure, x: NodeId) -> Optional[Application]:
        for arc in cs.out_arcs(x):
            for predicate in self.context.bpreds:
                if not cs.decided(arc, predicate):
                    return Application(self.rule_id, x, arc, SignedPredicate(predicate, True))
        return None

    def expand(self, cs: CompletionStructure, application: Application) -> Iterator[Branch]:
        return choose_binary(cs, application.target, application.signed.predicate)
