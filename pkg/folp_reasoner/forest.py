"""
Extended forests and atom dependency graphs.

Nodes are addressed by their root constant and a path of child indexes;
``j.1.2`` is the second child of the first child of root ``j``.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from .errors import FolpError
from .models import GroundAtom, Predicate
from .utils import reachable

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class NodeId:
    """Address of a forest node."""

    root: str
    path: Tuple[int, ...] = ()

    def __post_init__(self):
        if not self.root:
            raise ValueError("A node needs a root name")
        if any(n < 1 for n in self.path):
            raise ValueError(f"Child indexes are positive integers: {self.path}")

    @property
    def is_root(self) -> bool:
        return not self.path

    @property
    def depth(self) -> int:
        return len(self.path)

    @property
    def parent(self) -> Optional["NodeId"]:
        return NodeId(self.root, self.path[:-1]) if self.path else None

    def child(self, n: int) -> "NodeId":
        return NodeId(self.root, self.path + (n,))

    def ancestors(self) -> List["NodeId"]:
        """Strict ancestors, closest to the root first."""
        return [NodeId(self.root, self.path[:i]) for i in range(len(self.path))]

    @property
    def sort_key(self) -> Tuple[int, str, Tuple[int, ...]]:
        return (len(self.path), self.root, self.path)

    @classmethod
    def parse(cls, text: str) -> "NodeId":
        root, *rest = text.split(".")
        return cls(root, tuple(int(part) for part in rest))

    def __str__(self) -> str:
        return ".".join([self.root] + [str(n) for n in self.path])


Arc = Tuple[NodeId, NodeId]


def is_ancestor(x: NodeId, y: NodeId) -> bool:
    """x <= y in the prefix order (reflexive)."""
    return x.root == y.root and y.path[: len(x.path)] == x.path


def path_between(x: NodeId, y: NodeId) -> List[NodeId]:
    """All z with x <= z <= y, from x down to y."""
    if not is_ancestor(x, y):
        raise FolpError(f"{x} is not an ancestor of {y}")
    return [NodeId(x.root, y.path[:i]) for i in range(len(x.path), len(y.path) + 1)]


class ExtendedForest:
    """
    A forest plus ES arcs from nodes back to tree roots.

    Children keep creation order; ES targets keep insertion order.
    """

    def __init__(self):
        self._trees: Dict[str, List[NodeId]] = {}
        self._children: Dict[NodeId, List[NodeId]] = {}
        self._es: Dict[NodeId, List[NodeId]] = {}

    def copy(self) -> "ExtendedForest":
        clone = ExtendedForest()
        clone._trees = {root: list(nodes) for root, nodes in self._trees.items()}
        clone._children = {node: list(kids) for node, kids in self._children.items()}
        clone._es = {node: list(targets) for node, targets in self._es.items()}
        return clone

    def add_tree(self, root: str) -> NodeId:
        if root in self._trees:
            raise FolpError(f"tree {root} already exists")
        node = NodeId(root)
        self._trees[root] = [node]
        self._children[node] = []
        self._es[node] = []
        return node

    def add_child(self, x: NodeId) -> NodeId:
        """Create the next tree successor x.n of x."""
        kids = self._require(x)
        node = x.child(len(kids) + 1)
        kids.append(node)
        self._trees[x.root].append(node)
        self._children[node] = []
        self._es[node] = []
        return node

    def add_es(self, x: NodeId, root: str) -> bool:
        """Add the ES arc (x, root); False if it was already there."""
        self._require(x)
        target = NodeId(root)
        if root not in self._trees:
            raise FolpError(f"ES arc target {root} is not a tree root")
        targets = self._es[x]
        if target in targets:
            return False
        targets.append(target)
        return True

    def _require(self, x: NodeId) -> List[NodeId]:
        try:
            return self._children[x]
        except KeyError:
            raise FolpError(f"unknown node {x}") from None

    def __contains__(self, x: object) -> bool:
        return x in self._children

    @property
    def roots(self) -> List[str]:
        return list(self._trees)

    @property
    def trees(self) -> Dict[str, FrozenSet[NodeId]]:
        return {root: frozenset(nodes) for root, nodes in self._trees.items()}

    @property
    def es(self) -> FrozenSet[Tuple[NodeId, str]]:
        return frozenset((x, target.root) for x, targets in self._es.items() for target in targets)

    def children(self, x: NodeId) -> List[NodeId]:
        return list(self._require(x))

    def es_targets(self, x: NodeId) -> List[NodeId]:
        self._require(x)
        return list(self._es[x])

    def successors(self, x: NodeId) -> List[NodeId]:
        """Tree children then ES targets, in creation order."""
        kids = self._require(x)
        return kids + [t for t in self._es[x] if t not in kids]

    def nodes(self) -> Iterator[NodeId]:
        for nodes in self._trees.values():
            yield from nodes

    def tree_arcs(self) -> Iterator[Arc]:
        for x, kids in self._children.items():
            for kid in kids:
                yield (x, kid)

    def es_arcs(self) -> Iterator[Arc]:
        for x, targets in self._es.items():
            for target in targets:
                yield (x, target)

    def arcs(self) -> Iterator[Arc]:
        yield from self.tree_arcs()
        yield from self.es_arcs()

    def is_tree_arc(self, arc: Arc) -> bool:
        x, y = arc
        return y.parent == x and y.root == x.root

    def outgoing(self, x: NodeId) -> List[Arc]:
        return [(x, y) for y in self.successors(x)]

    def __len__(self) -> int:
        return len(self._children)


def succ_ef(ef: ExtendedForest, x: NodeId) -> Set[NodeId]:
    """succ_EF(x): tree successors and ES targets of x."""
    return set(ef.successors(x))


class DepGraph:
    """
    Directed graph over positive ground atoms.

    Arcs only grow. Reachability answers are cached and dropped whenever the
    graph changes.
    """

    def __init__(self):
        self._succ: Dict[GroundAtom, Set[GroundAtom]] = {}
        self._arc_count = 0
        self._reach_cache: Dict[GroundAtom, Set[GroundAtom]] = {}

    def copy(self) -> "DepGraph":
        clone = DepGraph()
        clone._succ = {v: set(targets) for v, targets in self._succ.items()}
        clone._arc_count = self._arc_count
        return clone

    def add_vertex(self, atom: GroundAtom) -> bool:
        if atom in self._succ:
            return False
        self._succ[atom] = set()
        self._reach_cache.clear()
        return True

    def add_arc(self, source: GroundAtom, target: GroundAtom) -> bool:
        """Add an arc between existing or new vertices; False if already present."""
        self.add_vertex(source)
        self.add_vertex(target)
        if target in self._succ[source]:
            return False
        self._succ[source].add(target)
        self._arc_count += 1
        self._reach_cache.clear()
        return True

    def would_close_cycle(self, source: GroundAtom, target: GroundAtom) -> bool:
        """True iff adding (source, target) creates a directed cycle."""
        if source == target:
            return True
        if target not in self._succ or source not in self._succ:
            return False
        return source in self.reachable_from(target)

    def reachable_from(self, atom: GroundAtom) -> Set[GroundAtom]:
        cached = self._reach_cache.get(atom)
        if cached is None:
            cached = reachable(self._succ, atom)
            self._reach_cache[atom] = cached
        return cached

    def __contains__(self, atom: object) -> bool:
        return atom in self._succ

    @property
    def vertices(self) -> FrozenSet[GroundAtom]:
        return frozenset(self._succ)

    @property
    def arcs(self) -> FrozenSet[Tuple[GroundAtom, GroundAtom]]:
        return frozenset((s, t) for s, targets in self._succ.items() for t in targets)

    def successors(self, atom: GroundAtom) -> Set[GroundAtom]:
        return set(self._succ.get(atom, ()))

    def adjacency(self) -> Dict[GroundAtom, Set[GroundAtom]]:
        return {v: set(targets) for v, targets in self._succ.items()}

    @property
    def arc_count(self) -> int:
        return self._arc_count

    @classmethod
    def from_arcs(cls, arcs: Iterable[Tuple[GroundAtom, GroundAtom]], vertices: Iterable[GroundAtom] = ()) -> "DepGraph":
        graph = cls()
        for vertex in vertices:
            graph.add_vertex(vertex)
        for source, target in arcs:
            graph.add_arc(source, target)
        return graph


def has_cycle(g: DepGraph) -> bool:
    """True iff g has a directed cycle; every vertex is positive, so any cycle is positive."""
    color: Dict[GroundAtom, int] = {}
    adjacency = g.adjacency()
    for start in adjacency:
        if color.get(start):
            continue
        color[start] = 1
        stack = [(start, iter(adjacency[start]))]
        while stack:
            vertex, successors = stack[-1]
            for successor in successors:
                state = color.get(successor, 0)
                if state == 1:
                    return True
                if state == 0:
                    color[successor] = 1
                    stack.append((successor, iter(adjacency.get(successor, ()))))
                    break
            else:
                color[vertex] = 2
                stack.pop()
    return False


def connpr(g: DepGraph, y: NodeId, x: NodeId, free: Iterable[Predicate]) -> Set[Tuple[str, str]]:
    """
    Pairs (p, q), q not free, with a path from p(y) to q(x) in g.

    Args:
        g: Atom dependency graph
        y: Candidate blocking node
        x: Candidate blocked node
        free: Free predicates, whose targets are ignored

    Returns:
        Predicate-name pairs
    """
    free_names = {pred.name for pred in free}
    pairs: Set[Tuple[str, str]] = set()
    for atom in g.vertices:
        if len(atom.args) != 1 or atom.args[0] != y:
            continue
        for target in g.reachable_from(atom):
            if len(target.args) == 1 and target.args[0] == x and target.predicate not in free_names:
                pairs.add((atom.predicate, target.predicate))
    return pairs
