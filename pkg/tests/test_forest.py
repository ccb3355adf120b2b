"""
Tests for forest node addressing, extended forests and the atom
dependency graph.
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from folp_reasoner.errors import FolpError
from folp_reasoner.forest import DepGraph, ExtendedForest, NodeId, connpr, has_cycle, is_ancestor, path_between
from folp_reasoner.models import GroundAtom, Predicate


class TestNodeId:
    """Test node addresses."""

    def test_parse_and_str(self):
        node = NodeId.parse("j.1.11")
        assert node == NodeId("j", (1, 11))
        assert str(node) == "j.1.11"
        assert node.depth == 2

    def test_parent_and_ancestors(self):
        node = NodeId("x", (2, 1))
        assert node.parent == NodeId("x", (2,))
        assert node.ancestors() == [NodeId("x"), NodeId("x", (2,))]
        assert NodeId("x").parent is None

    def test_child_index_must_be_positive(self):
        with pytest.raises(ValueError):
            NodeId("x", (0,))

    def test_ancestor_order(self):
        root, leaf = NodeId("a"), NodeId("a", (1, 2))
        assert is_ancestor(root, leaf)
        assert is_ancestor(leaf, leaf)
        assert not is_ancestor(leaf, root)
        assert not is_ancestor(NodeId("b"), leaf)

    def test_path_between(self):
        path = path_between(NodeId("a"), NodeId("a", (1, 2)))
        assert [str(n) for n in path] == ["a", "a.1", "a.1.2"]
        with pytest.raises(FolpError):
            path_between(NodeId("a", (1,)), NodeId("a", (2,)))


class TestExtendedForest:
    """Test trees, children and ES arcs."""

    def setup_method(self):
        self.forest = ExtendedForest()
        self.a = self.forest.add_tree("a")
        self.x = self.forest.add_tree("x")

    def test_duplicate_tree(self):
        with pytest.raises(FolpError):
            self.forest.add_tree("a")

    def test_children_are_numbered(self):
        first = self.forest.add_child(self.x)
        second = self.forest.add_child(self.x)
        assert [str(first), str(second)] == ["x.1", "x.2"]
        assert str(self.forest.add_child(first)) == "x.1.1"
        assert len(self.forest) == 5

    def test_es_arcs(self):
        child = self.forest.add_child(self.x)
        assert self.forest.add_es(child, "a") is True
        assert self.forest.add_es(child, "a") is False
        assert self.forest.successors(child) == [self.a]
        assert list(self.forest.es_arcs()) == [(child, self.a)]
        assert list(self.forest.tree_arcs()) == [(self.x, child)]

    def test_es_target_must_be_a_root(self):
        with pytest.raises(FolpError):
            self.forest.add_es(self.x, "nowhere")

    def test_copy_is_independent(self):
        clone = self.forest.copy()
        clone.add_child(self.a)
        assert self.forest.children(self.a) == []


def atom(predicate, node):
    return GroundAtom(predicate, (node,))


class TestDepGraph:
    """Test the atom dependency graph."""

    def test_cycle_detection(self):
        a, b, c = atom("p", NodeId("x")), atom("q", NodeId("x")), atom("r", NodeId("x"))
        graph = DepGraph.from_arcs([(a, b), (b, c)])
        assert not has_cycle(graph)
        assert graph.would_close_cycle(c, a)
        assert graph.would_close_cycle(a, a)
        assert not graph.would_close_cycle(a, c)
        graph.add_arc(c, a)
        assert has_cycle(graph)

    def test_reachable_from(self):
        a, b, c = atom("p", NodeId("x")), atom("q", NodeId("x")), atom("r", NodeId("x"))
        graph = DepGraph.from_arcs([(a, b), (b, c)])
        assert graph.reachable_from(a) == {b, c}
        graph.add_arc(c, a)
        assert graph.reachable_from(b) == {a, b, c}

    def test_connpr_skips_free_targets(self):
        y, x = NodeId("a"), NodeId("a", (1,))
        graph = DepGraph.from_arcs([(atom("p", y), atom("q", x)), (atom("p", y), atom("f", x))])
        pairs = connpr(graph, y, x, [Predicate("f", 1)])
        assert pairs == {("p", "q")}


PREDICATES = ("p", "q", "r")
NODES = (NodeId("a"), NodeId("a", (1,)), NodeId("a", (2,)))
ATOMS = [atom(p, n) for p in PREDICATES for n in NODES]


def closure(arcs):
    """Transitive closure by Floyd-Warshall."""
    reach = {(s, t): False for s in ATOMS for t in ATOMS}
    for s, t in arcs:
        reach[(s, t)] = True
    for k, i, j in itertools.product(ATOMS, repeat=3):
        if reach[(i, k)] and reach[(k, j)]:
            reach[(i, j)] = True
    return reach


arc_lists = st.lists(st.tuples(st.sampled_from(ATOMS), st.sampled_from(ATOMS)), max_size=20)


class TestConnprProperty:
    """connpr agrees with a closure computed from scratch."""

    @settings(max_examples=100, deadline=None)
    @given(arcs=arc_lists, free=st.sets(st.sampled_from(PREDICATES)))
    def test_matches_floyd_warshall(self, arcs, free):
        graph = DepGraph.from_arcs(arcs)
        y, x = NODES[0], NODES[1]
        reach = closure(arcs)
        expected = {
            (p, q)
            for p in PREDICATES
            for q in PREDICATES
            if q not in free and reach[(atom(p, y), atom(q, x))]
        }
        assert connpr(graph, y, x, [Predicate(name, 1) for name in free]) == expected

    @settings(max_examples=100, deadline=None)
    @given(arcs=arc_lists)
    def test_has_cycle_matches_closure(self, arcs):
        reach = closure(arcs)
        assert has_cycle(DepGraph.from_arcs(arcs)) == any(reach[(v, v)] for v in ATOMS)
