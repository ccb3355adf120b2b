"""
Tests for the completion tableau: structures, verdicts on the reference
programs and search limits.
"""

import pytest

from folp_reasoner.engine import (
    CompletionStructure,
    ForestSolver,
    SearchContext,
    build_rules,
    extract_model,
    init_completion,
    is_clash_free,
    is_contradictory,
    is_redundant,
    solve,
    update,
)
from folp_reasoner.engine.solver import DEAD
from folp_reasoner.errors import InvalidProgramError, ModelExtractionError, UnknownPredicateError
from folp_reasoner.forest import NodeId
from folp_reasoner.models import GroundAtom, SearchConfig, SearchMode, SignedPredicate
from folp_reasoner.oracle import is_answer_set
from folp_reasoner.textio import parse_program


def assert_open_answer_set(program, verdict):
    model = verdict.model
    assert is_answer_set(program, model.universe, model.atoms), str(model)
    assert model.atoms_of(verdict.predicate)


class TestCompletionStructure:
    """Test structure bookkeeping."""

    def setup_method(self):
        self.program = parse_program("p(X) :- f(X,Y), q(Y).\nf(X,Y) v not f(X,Y).\nq(X) v not q(X).\nq(a).")
        self.p = self.program.predicate("p")
        self.q = self.program.predicate("q")

    def test_init_with_anonymous_root(self):
        cs = init_completion(self.p, self.program, anonymous_root=True)
        assert cs.anonymous == "x"
        assert [str(n) for n in cs.nodes()] == ["a", "x"]
        assert cs.has(NodeId("x"), SignedPredicate(self.p))
        assert cs.is_constant(NodeId("a"))
        assert not cs.is_constant(NodeId("x"))

    def test_init_at_constant(self):
        cs = init_completion(self.p, self.program, anonymous_root=False)
        assert [str(n) for n in cs.nodes()] == ["a"]
        assert cs.has(NodeId("a"), SignedPredicate(self.p))

    def test_init_rejects_binary_predicate(self):
        with pytest.raises(UnknownPredicateError):
            init_completion(self.program.predicate("f"), self.program, anonymous_root=True)

    def test_contradiction(self):
        cs = init_completion(self.p, self.program, anonymous_root=True)
        update(cs, None, SignedPredicate(self.p, False), NodeId("x"))
        assert cs.dead
        assert is_contradictory(cs)
        assert not is_clash_free(cs)
        with pytest.raises(ModelExtractionError):
            extract_model(cs)

    def test_positive_cycle(self):
        cs = init_completion(self.p, self.program, anonymous_root=True)
        x = NodeId("x")
        update(cs, GroundAtom("p", (x,)), SignedPredicate(self.q), x)
        assert not cs.dead
        update(cs, GroundAtom("q", (x,)), SignedPredicate(self.p), x)
        assert cs.cycle is not None
        assert not is_clash_free(cs)

    def test_clone_is_independent(self):
        cs = init_completion(self.p, self.program, anonymous_root=True)
        clone = cs.clone()
        clone.add_child(NodeId("x"))
        update(clone, None, SignedPredicate(self.q), NodeId("x"))
        assert [str(n) for n in cs.nodes()] == ["a", "x"]
        assert not cs.has(NodeId("x"), SignedPredicate(self.q))

    def test_new_successor_reopens_negatives(self):
        cs = init_completion(self.p, self.program, anonymous_root=True)
        x = NodeId("x")
        negative = SignedPredicate(self.q, False)
        update(cs, None, negative, x)
        cs.mark_expanded(x, negative)
        cs.add_child(x)
        assert not cs.is_expanded(x, negative)

    def test_redundancy(self):
        cs = CompletionStructure()
        x = cs.add_tree("x")
        child = cs.add_child(x)
        grandchild = cs.add_child(child)
        for node in (x, child, grandchild):
            update(cs, None, SignedPredicate(self.q), node)
        assert is_redundant(cs, grandchild, 2)
        assert not is_redundant(cs, grandchild, 3)
        assert not is_clash_free(cs, k=2)
        assert is_clash_free(cs, k=3)

    def test_extract_model(self):
        cs = init_completion(self.p, self.program, anonymous_root=True)
        x = NodeId("x")
        child = cs.add_child(x)
        update(cs, None, SignedPredicate(self.program.predicate("f")), (x, child))
        update(cs, None, SignedPredicate(self.q, False), child)
        model = extract_model(cs)
        assert model.universe == frozenset({"a", "x", "x.1"})
        assert model.atoms == frozenset({GroundAtom("p", ("x",)), GroundAtom("f", ("x", "x.1"))})


class TestReferencePrograms:
    """Verdicts on the corpus programs."""

    def test_example1(self, example1):
        verdict = solve(example1, "fail")
        assert verdict.is_sat
        assert_open_answer_set(example1, verdict)
        assert not verdict.model.holds("fail", "john")

    def test_example6(self, example6):
        assert solve(example6, "q").is_unsat
        verdict = solve(example6, "p")
        assert verdict.is_sat
        assert_open_answer_set(example6, verdict)
        assert not verdict.model.holds("p", "a")

    def test_choice_inconsistent(self, load):
        assert solve(load("choice-inconsistent.folp"), "a").is_unsat

    def test_happy(self, happy):
        verdict = solve(happy, "happy")
        assert verdict.is_sat
        assert verdict.mode == SearchMode.FULL
        assert_open_answer_set(happy, verdict)
        model = verdict.model
        assert model.universe == frozenset({"j", "j.1", "j.1.1", "j.1.2"})
        expected = {("happy", node) for node in ("j", "j.1", "j.1.1", "j.1.2")}
        expected |= {("sees", "j", "j.1"), ("friend", "j", "j.1")}
        expected |= {("friend", "j.1", child) for child in ("j.1.1", "j.1.2")}
        expected |= {("friend", blocked, child) for blocked in ("j.1.1", "j.1.2") for child in ("j.1.1", "j.1.2")}
        assert model.atoms == frozenset(GroundAtom(name, tuple(args)) for name, *args in expected)
        j1 = NodeId.parse("j.1")
        assert verdict.structure.bl == {(j1, NodeId.parse("j.1.1")), (j1, NodeId.parse("j.1.2"))}

    def test_happy_follows_the_justification_through_j1(self, happy):
        structure = solve(happy, "happy").structure
        j, j1 = NodeId("j"), NodeId.parse("j.1")
        assert structure.g.successors(GroundAtom("happy", (j,))) >= {GroundAtom("happy", (j1,))}
        content = {str(sp) for sp in structure.content(j1)}
        assert content == {"happy", "not unhappy", "not c", "not hungry"}
        assert {str(sp) for sp in structure.content(j)} == content

    def test_marked_cycle_simple(self, load):
        program = load("marked-cycle-simple.folp")
        solver = ForestSolver(program)
        assert solver.mode == SearchMode.SIMPLE
        assert solver.solve("p").is_unsat
        assert solver.solve("q").is_unsat

    def test_marked_cycle_runs_in_full_mode(self, load):
        assert ForestSolver(load("marked-cycle.folp")).mode == SearchMode.FULL

    def test_verified_models(self, example1):
        verdict = solve(example1, "fail", SearchConfig(verify_models=True))
        assert verdict.is_sat

    def test_constraints_are_respected(self):
        program = parse_program("p(X) v not p(X).\nq(X) v not q(X).\n:- p(X), not q(X).")
        verdict = solve(program, "p")
        assert verdict.is_sat
        assert verdict.model.atoms_of("q")
        assert_open_answer_set(program, verdict)
        assert not any(a.predicate.startswith("__constr") for a in verdict.model.atoms)

    def test_unsatisfiable_by_constraint(self):
        program = parse_program("p(X) v not p(X).\n:- p(X).")
        assert solve(program, "p").is_unsat


CORPUS_QUERIES = [
    ("choice-inconsistent.folp", "a"),
    ("choice-inconsistent.folp", "b"),
    ("example1.folp", "fail"),
    ("example1.folp", "pass"),
    ("example6.folp", "p"),
    ("example6.folp", "q"),
    ("father-rules.folp", "unhappy"),
    ("father-rules.folp", "Father"),
    ("happy.folp", "happy"),
    ("happy.folp", "unhappy"),
    ("happy.folp", "c"),
    ("happy.folp", "hungry"),
    ("marked-cycle.folp", "p"),
    ("marked-cycle.folp", "q"),
    ("marked-cycle-simple.folp", "p"),
    ("marked-cycle-simple.folp", "q"),
]


class TestCorpusModels:
    """Every model found for a corpus predicate is an open answer set."""

    @pytest.mark.parametrize("name,query", CORPUS_QUERIES)
    def test_models_are_answer_sets(self, load, name, query):
        program = load(name)
        verdict = solve(program, query, SearchConfig(depth_cap=4, step_limit=100_000))
        if verdict.is_sat:
            assert_open_answer_set(program, verdict)


class TestSearchLimits:
    """Unknown verdicts and configuration."""

    def test_depth_cap_below_bound(self):
        program = parse_program("p(X) :- f(X,Y).\nf(X,Y) v not f(X,Y).")
        verdict = solve(program, "p", SearchConfig(depth_cap=0, deepening=False))
        assert verdict.is_unknown
        assert verdict.reason.startswith("depth cap 0 reached below bound")
        assert verdict.stats.pruned
        assert solve(program, "p", SearchConfig(depth_cap=1, deepening=False)).is_sat

    def test_happy_fits_depth_one(self, happy):
        verdict = solve(happy, "happy", SearchConfig(depth_cap=1, deepening=False))
        assert verdict.is_sat
        assert verdict.model.universe == frozenset({"j", "j.1", "j.2"})
        assert_open_answer_set(happy, verdict)

    def test_deepening_keeps_the_first_justification(self, happy):
        verdict = solve(happy, "happy", SearchConfig(emit_trace=True))
        assert verdict.trace[1] == "STEP 2 i j happy r1 Y=j.1"
        assert verdict.stats.iterations >= 2
        assert verdict.stats.depth_reached == 2

    def test_step_limit(self, happy):
        verdict = solve(happy, "happy", SearchConfig(step_limit=1))
        assert verdict.is_unknown
        assert verdict.reason == "step limit 1 exceeded"

    def test_appendix_k_variant(self, example1):
        solver = ForestSolver(example1, SearchConfig(k_variant="appendix"))
        assert solver.k == 63

    def test_explicit_k(self, example1):
        assert ForestSolver(example1, SearchConfig(redundancy_k=3)).k == 3

    def test_stats(self, example1):
        verdict = solve(example1, "fail")
        assert verdict.stats.steps >= 1
        assert verdict.stats.iterations >= 1
        assert verdict.to_dict()["stats"]["steps"] == verdict.stats.steps

    def test_unknown_predicate(self, example1):
        with pytest.raises(UnknownPredicateError):
            solve(example1, "nobody")

    def test_binary_predicate(self, happy):
        with pytest.raises(UnknownPredicateError):
            solve(happy, "friend")

    def test_invalid_program(self):
        with pytest.raises(InvalidProgramError):
            solve(parse_program("p(X) :- f(X,X)."), "p")

    @pytest.mark.parametrize("seed", [1, 7, 42])
    def test_seeded_search_is_sound(self, example6, seed):
        config = SearchConfig(seed=seed)
        first = solve(example6, "p", config)
        second = solve(example6, "p", config)
        assert first.is_sat
        assert first.model == second.model
        assert_open_answer_set(example6, first)
        assert solve(example6, "q", config).is_unsat



class TestRedundancyCheck:
    """Redundancy is only decided on saturated, unblocked nodes."""

    def setup_method(self):
        program = parse_program("p(X) :- f(X,Y).\nq(X) v not q(X).\nf(X,Y) v not f(X,Y).")
        self.solver = ForestSolver(program, SearchConfig(mode="full", redundancy_k=1))
        self.context = SearchContext(self.solver.program, self.solver.mode)
        self.rules = build_rules(self.context)
        self.cs = CompletionStructure()
        self.x = self.cs.add_tree("x")
        self.child = self.cs.add_child(self.x)
        for node in (self.x, self.child):
            for name in ("p", "q"):
                update(self.cs, None, SignedPredicate(program.predicate(name), False), node)
        f = SignedPredicate(program.predicate("f"))
        update(self.cs, None, f, (self.x, self.child))
        self.cs.mark_expanded((self.x, self.child), f)
        self.saturate(self.x)
        self.cs.touched.add(self.child)

    def saturate(self, node):
        for sp in list(self.cs.content(node)):
            self.cs.mark_expanded(node, sp)

    def test_unsaturated_copy_keeps_expanding(self):
        outcome = self.solver._step(self.cs, self.context, self.rules)
        assert outcome is not None and outcome is not DEAD
        application, _ = outcome
        assert application.node == self.child

    def test_saturated_copy_is_redundant(self):
        self.saturate(self.child)
        assert self.solver._step(self.cs, self.context, self.rules) is DEAD

    def test_blocked_copy_is_not_redundant(self):
        self.saturate(self.child)
        self.cs.bl.add((self.x, self.child))
        assert self.solver._step(self.cs, self.context, self.rules) is None
