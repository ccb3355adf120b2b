"""
Saturation, blocking and redundancy: when a node needs no more work.
"""

import logging
from typing import Optional

from ..forest import NodeId, connpr
from ..models import SearchMode
from .rules.base import SearchContext
from .structure import CompletionStructure

logger = logging.getLogger(__name__)


def is_saturated(cs: CompletionStructure, x: NodeId, context: SearchContext) -> bool:
    """
    No expansion rule applies at x.

    Every unary predicate is decided and expanded at x, every binary
    predicate is decided and expanded on every arc out of x, and no arc to
    a constant is waiting to be added.
    """
    content = cs.content(x)
    if any(not cs.decided(x, predicate) for predicate in context.upreds):
        return False
    if not all(content.values()):
        return False
    for arc in cs.out_arcs(x):
        arc_content = cs.content(arc)
        if any(not cs.decided(arc, predicate) for predicate in context.bpreds):
            return False
        if not all(arc_content.values()):
            return False
    return not context.implicit_arc_targets(x, cs)


def _contained(cs: CompletionStructure, x: NodeId, y: NodeId) -> bool:
    return cs.signed(x) <= cs.signed(y)


def check_blocked(cs: CompletionStructure, x: NodeId, mode: SearchMode, context: SearchContext) -> Optional[NodeId]:
    """
    A node that blocks x, or None.

    Constants are never blocked. In full mode the blocker is the ancestor
    closest to the root, not a constant, whose content includes that of x
    and from which no non-free predicate of x is reachable in G. In simple
    mode any saturated, unblocked non-constant node with larger content
    will do.
    """
    if cs.is_constant(x):
        return None
    if mode == SearchMode.SIMPLE:
        blocked = cs.blocked
        for y in cs.nodes():
            if y == x or y in blocked or cs.is_constant(y):
                continue
            if _contained(cs, x, y) and is_saturated(cs, y, context):
                return y
        return None

    for y in x.ancestors():
        if cs.is_constant(y):
            continue
        if _contained(cs, x, y) and not connpr(cs.g, y, x, context.free):
            return y
    return None


def blocking_still_holds(cs: CompletionStructure, y: NodeId, x: NodeId, mode: SearchMode, context: SearchContext) -> bool:
    """Re-check a recorded pair (y, x) after the structure has changed."""
    if y not in cs.ef or x not in cs.ef or cs.is_constant(x) or cs.is_constant(y):
        return False
    if not _contained(cs, x, y):
        return False
    if mode == SearchMode.SIMPLE:
        return is_saturated(cs, y, context)
    return not connpr(cs.g, y, x, context.free)
