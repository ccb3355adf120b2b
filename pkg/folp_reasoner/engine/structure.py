"""
Completion structures: the state of the tableau.

A structure holds an extended forest, the signed content of every node and
arc together with its expansion status, the atom dependency graph and the
blocking pairs. Search branches work on clones, so every mutating helper
here changes the structure in place.
"""

import logging
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple, Union

from ..errors import UnknownPredicateError
from ..forest import Arc, DepGraph, ExtendedForest, NodeId, has_cycle
from ..models import GroundAtom, Predicate, Program, SignedPredicate
from ..utils import fresh_name

logger = logging.getLogger(__name__)

Target = Union[NodeId, Arc]


def atom_of(predicate: Predicate, target: Target) -> GroundAtom:
    """p(x) for a node, f(x,y) for an arc."""
    if isinstance(target, NodeId):
        return GroundAtom(predicate.name, (target,))
    return GroundAtom(predicate.name, tuple(target))


def format_target(target: Target) -> str:
    if isinstance(target, NodeId):
        return str(target)
    return f"({target[0]},{target[1]})"


class CompletionStructure:
    """
    EF, ct, st, G and bl of a completion structure.

    ``ct`` maps every node or arc to an insertion-ordered dict from signed
    predicate to its status (True once expanded).
    """

    def __init__(self, constants: FrozenSet[str] = frozenset()):
        self.ef = ExtendedForest()
        self.ct: Dict[Target, Dict[SignedPredicate, bool]] = {}
        self.g = DepGraph()
        self.bl: Set[Tuple[NodeId, NodeId]] = set()
        self.constants: FrozenSet[str] = frozenset(constants)
        self.anonymous: Optional[str] = None
        self.touched: Set[NodeId] = set()
        self.contradiction: Optional[str] = None
        self.cycle: Optional[str] = None

    def clone(self) -> "CompletionStructure":
        other = CompletionStructure(self.constants)
        other.ef = self.ef.copy()
        other.ct = {target: dict(content) for target, content in self.ct.items()}
        other.g = self.g.copy()
        other.bl = set(self.bl)
        other.anonymous = self.anonymous
        other.touched = set(self.touched)
        other.contradiction = self.contradiction
        other.cycle = self.cycle
        return other

    # -- nodes and arcs ------------------------------------------------------

    def add_tree(self, root: str) -> NodeId:
        node = self.ef.add_tree(root)
        self.ct[node] = {}
        return node

    def is_constant(self, x: NodeId) -> bool:
        return x.is_root and x.root in self.constants

    def add_child(self, x: NodeId) -> NodeId:
        """New tree successor of x; expanded negatives of x are reopened."""
        child = self.ef.add_child(x)
        self.ct[child] = {}
        self.ct[(x, child)] = {}
        self.reopen_negatives(x)
        return child

    def ensure_es(self, x: NodeId, root: str) -> bool:
        """ES arc (x, root); True if it is new, in which case x's expanded negatives are reopened."""
        target = NodeId(root)
        if target in self.ef.successors(x):
            return False
        self.ef.add_es(x, root)
        self.ct.setdefault((x, target), {})
        self.reopen_negatives(x)
        return True

    def reopen_negatives(self, x: NodeId):
        content = self.ct.get(x, {})
        for sp, expanded in content.items():
            if expanded and not sp.positive:
                content[sp] = False

    def successors(self, x: NodeId) -> List[NodeId]:
        return self.ef.successors(x)

    def out_arcs(self, x: NodeId) -> List[Arc]:
        return self.ef.outgoing(x)

    def nodes(self) -> List[NodeId]:
        return sorted(self.ef.nodes(), key=lambda n: n.sort_key)

    @property
    def blocked(self) -> Dict[NodeId, NodeId]:
        """Blocked node -> blocking node."""
        return {x: y for y, x in self.bl}

    # -- content -------------------------------------------------------------

    def content(self, target: Target) -> Dict[SignedPredicate, bool]:
        return self.ct.get(target, {})

    def signed(self, target: Target) -> FrozenSet[SignedPredicate]:
        return frozenset(self.ct.get(target, {}))

    def has(self, target: Target, sp: SignedPredicate) -> bool:
        return sp in self.ct.get(target, {})

    def decided(self, target: Target, predicate: Predicate) -> bool:
        content = self.ct.get(target, {})
        return SignedPredicate(predicate, True) in content or SignedPredicate(predicate, False) in content

    def is_expanded(self, target: Target, sp: SignedPredicate) -> bool:
        return self.ct.get(target, {}).get(sp, False)

    def mark_expanded(self, target: Target, sp: SignedPredicate):
        self.ct[target][sp] = True

    def positives(self, target: Target) -> List[Predicate]:
        return [sp.predicate for sp in self.ct.get(target, {}) if sp.positive]

    def unexpanded(self, target: Target) -> Iterator[SignedPredicate]:
        for sp, expanded in self.ct.get(target, {}).items():
            if not expanded:
                yield sp

    @property
    def dead(self) -> bool:
        return self.contradiction is not None or self.cycle is not None

    def to_dict(self) -> Dict[str, object]:
        def render(target: Target) -> List[str]:
            return sorted(str(sp) for sp in self.ct.get(target, {}))

        return {
            "nodes": {str(n): render(n) for n in self.nodes()},
            "arcs": {format_target(a): render(a) for a in self.ef.arcs()},
            "es": sorted(f"{x}->{root}" for x, root in self.ef.es),
            "blocking": sorted(f"{y}->{x}" for y, x in self.bl),
        }


def init_completion(
    predicate: Predicate,
    program: Program,
    anonymous_root: bool,
    seed_at: Optional[str] = None,
) -> CompletionStructure:
    """
    Initial structure for checking ``predicate``.

    One single-node tree per constant. With ``anonymous_root`` an extra tree
    with a fresh root holds the predicate; otherwise it is placed at the
    constant ``seed_at`` (the first constant when omitted).

    Raises:
        UnknownPredicateError: predicate is not unary or has no constant to sit on
    """
    if predicate.arity != 1:
        raise UnknownPredicateError(f"satisfiability is checked for unary predicates, {predicate} is not")
    constants = program.constants
    cs = CompletionStructure(frozenset(constants))
    for constant in constants:
        cs.add_tree(constant)
    if anonymous_root:
        cs.anonymous = fresh_name("x", constants)
        seat = cs.add_tree(cs.anonymous)
    else:
        if not constants:
            raise UnknownPredicateError("no constant to place the predicate on")
        name = seed_at if seed_at is not None else constants[0]
        if name not in constants:
            raise UnknownPredicateError(f"{name} is not a program constant")
        seat = NodeId(name)
    update(cs, None, SignedPredicate(predicate, True), seat)
    return cs


def update(
    cs: CompletionStructure,
    source: Optional[GroundAtom],
    sp: SignedPredicate,
    target: Target,
) -> CompletionStructure:
    """
    Insert ``sp`` into ct(target) and extend G.

    A new member starts unexpanded. A positive member becomes a vertex of G;
    with a source atom it also gets the arc source -> member. Meeting the
    negation of sp flags a contradiction, closing a cycle in G flags a cycle.
    """
    content = cs.ct.setdefault(target, {})
    if sp not in content:
        content[sp] = False
    if sp.negate() in content and cs.contradiction is None:
        cs.contradiction = f"{sp.predicate} and not {sp.predicate} at {format_target(target)}"
    if sp.positive:
        atom = atom_of(sp.predicate, target)
        cs.g.add_vertex(atom)
        if source is not None:
            if cs.cycle is None and cs.g.would_close_cycle(source, atom):
                cs.cycle = f"positive cycle through {source} and {atom}"
            cs.g.add_arc(source, atom)
    return cs


def is_contradictory(cs: CompletionStructure) -> bool:
    """Some content holds both q and not q."""
    for content in cs.ct.values():
        for sp in content:
            if sp.positive and sp.negate() in content:
                return True
    return False


def is_redundant(cs: CompletionStructure, x: NodeId, k: int) -> bool:
    """At least k strict ancestors of x carry exactly the content of x."""
    content = cs.signed(x)
    same = sum(1 for y in x.ancestors() if cs.signed(y) == content)
    return same >= k


def is_clash_free(cs: CompletionStructure, k: Optional[int] = None) -> bool:
    """Not contradictory, no positive cycle in G and, given k, no redundant node."""
    if is_contradictory(cs) or has_cycle(cs.g):
        return False
    if k is not None:
        blocked = cs.blocked
        return not any(is_redundant(cs, x, k) for x in cs.nodes() if x not in blocked)
    return True
