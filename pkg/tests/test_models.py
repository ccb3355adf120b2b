"""
Unit tests for the FoLP data model.
"""

import pytest

from folp_reasoner.models import (
    Constant,
    GroundAtom,
    Inequality,
    KVariant,
    Literal,
    OpenInterpretation,
    Predicate,
    Program,
    Rule,
    RuleKind,
    SearchConfig,
    SearchMode,
    SourceSpan,
    Variable,
    Verdict,
    VerdictStatus,
    make_term,
)
from folp_reasoner.utils import fresh_name, fresh_names, format_predicate_name

X, Y, Z = Variable("X"), Variable("Y"), Variable("Z")
P = Predicate("p", 1)
Q = Predicate("q", 1)
F = Predicate("f", 2)


class TestTerms:
    """Test constants, variables and predicates."""

    def test_make_term_picks_by_case(self):
        """Uppercase names are variables, lowercase names constants."""
        assert make_term("X") == Variable("X")
        assert make_term("john") == Constant("john")

    def test_constant_must_be_lowercase(self):
        with pytest.raises(ValueError):
            Constant("John")

    def test_variable_must_be_uppercase(self):
        with pytest.raises(ValueError):
            Variable("x")

    def test_predicate_arity(self):
        """A predicate needs a positive arity."""
        with pytest.raises(ValueError):
            Predicate("p", 0)
        assert Predicate("f", 2).is_binary

    def test_quoted_predicate_names(self):
        assert format_predicate_name("happy") == "happy"
        assert format_predicate_name("exists child.Human") == '"exists child.Human"'
        assert format_predicate_name("not") == '"not"'

    def test_literal_arity_is_checked(self):
        with pytest.raises(ValueError):
            Literal(P, (X, Y))

    def test_source_span_order(self):
        assert str(SourceSpan("a.folp", 2, 3, 2, 9)) == "a.folp:2:3"
        with pytest.raises(ValueError):
            SourceSpan("a.folp", 2, 3, 1, 1)


class TestRule:
    """Test rule construction and classification."""

    def test_constraint_needs_body(self):
        with pytest.raises(ValueError):
            Rule(None, ())

    def test_free_rule_has_no_body(self):
        with pytest.raises(ValueError):
            Rule(Literal(P, (X,)), (Literal(Q, (X,)),), free=True)

    def test_rule_kinds(self):
        """Every rule falls into one of the six variants."""
        assert Rule(Literal(P, (X,)), free=True).kind == RuleKind.FREE_UNARY
        assert Rule(Literal(F, (X, Y)), free=True).kind == RuleKind.FREE_BINARY
        assert Rule(Literal(P, (X,)), (Literal(Q, (X,)),)).kind == RuleKind.UNARY
        assert Rule(Literal(F, (X, Y)), (Literal(P, (X,)),)).kind == RuleKind.BINARY
        assert Rule(None, (Literal(P, (X,)), Literal(Q, (X,), False))).kind == RuleKind.CONSTRAINT_UNARY

    def test_unary_shape_with_inequality(self):
        """Two successors joined by an inequality give degree 2 and one psi pair."""
        rule = Rule(
            Literal(P, (X,)),
            (Literal(F, (X, Y)), Literal(F, (X, Z)), Inequality(Y, Z)),
        )
        shape = rule.unary_shape
        assert shape.degree == 2
        assert shape.psi == ((0, 1),)

    def test_rule_equality_ignores_span(self):
        span = SourceSpan("a.folp", 1, 1, 1, 10)
        first = Rule(Literal(P, (X,)), (Literal(Q, (X,)),), span=span)
        second = Rule(Literal(P, (X,)), (Literal(Q, (X,)),))
        assert first == second

    def test_rule_str(self):
        rule = Rule(Literal(P, (X,)), (Literal(Q, (X,), False),), label="r1")
        assert str(rule) == "r1: p(X) :- not q(X)."
        assert str(Rule(Literal(P, (Constant("a"),)))) == "p(a)."
        assert str(Rule(Literal(P, (X,)), free=True)) == "p(X) v not p(X)."


class TestProgram:
    """Test program-level views."""

    def test_signature(self, happy):
        assert happy.constants == ("j",)
        assert {p.name for p in happy.unary_predicates} == {"happy", "unhappy", "c", "hungry"}
        assert {p.name for p in happy.binary_predicates} == {"sees", "friend", "enemy", "d"}
        assert {p.name for p in happy.free_predicates} == {"sees", "friend", "enemy"}

    def test_rules_for(self, happy):
        happy_rules = happy.rules_for(happy.predicate("happy"))
        assert len(happy_rules) == 3

    def test_labels(self, happy):
        labels = [label for label, _ in happy.labelled()]
        assert labels[0] == "r1"
        assert labels[-1] == "r11"

    def test_extend(self, example1, example6):
        combined = example1.extend(example6)
        assert len(combined) == len(example1) + len(example6)
        assert set(combined.constants) == {"john", "a"}


class TestOpenInterpretation:
    """Test open interpretations."""

    def test_universe_must_not_be_empty(self):
        with pytest.raises(ValueError):
            OpenInterpretation(frozenset())

    def test_atoms_stay_in_universe(self):
        with pytest.raises(ValueError):
            OpenInterpretation(frozenset({"a"}), frozenset({GroundAtom("p", ("b",))}))

    def test_queries(self):
        model = OpenInterpretation(
            frozenset({"a", "b"}),
            frozenset({GroundAtom("p", ("b",)), GroundAtom("f", ("a", "b"))}),
        )
        assert model.holds("p", "b")
        assert not model.holds("p", "a")
        assert [str(a) for a in model.sorted_atoms()] == ["f(a,b)", "p(b)"]
        assert model.to_dict() == {"universe": ["a", "b"], "atoms": ["f(a,b)", "p(b)"]}


class TestSearchConfig:
    """Test engine configuration."""

    def test_defaults(self):
        config = SearchConfig()
        assert config.mode == SearchMode.AUTO
        assert config.depth_cap == 50
        assert config.seed == 0
        assert config.k_variant == KVariant.RULE9

    def test_from_dict_converts_and_ignores_unknown_keys(self):
        config = SearchConfig.from_dict({"mode": "simple", "k_variant": "appendix", "colour": "red"})
        assert config.mode == SearchMode.SIMPLE
        assert config.k_variant == KVariant.APPENDIX

    @pytest.mark.parametrize(
        "settings",
        [{"redundancy_k": 0}, {"depth_cap": -1}, {"seed": -3}, {"step_limit": 0}],
    )
    def test_invalid_values(self, settings):
        with pytest.raises(ValueError):
            SearchConfig.from_dict(settings)

    def test_to_dict_round_trip(self):
        config = SearchConfig(mode=SearchMode.FULL, depth_cap=None, seed=7)
        assert SearchConfig.from_dict(config.to_dict()) == config


class TestVerdict:
    """Test verdicts."""

    def test_sat_carries_model(self):
        with pytest.raises(ValueError):
            Verdict(VerdictStatus.SAT, "p")
        model = OpenInterpretation(frozenset({"a"}))
        with pytest.raises(ValueError):
            Verdict(VerdictStatus.UNSAT, "p", model)

    def test_str_and_dict(self):
        verdict = Verdict.unknown("p", "step limit 5 exceeded")
        assert verdict.is_unknown
        assert str(verdict) == "UNKNOWN p (step limit 5 exceeded)"
        data = verdict.to_dict()
        assert data["status"] == "UNKNOWN"
        assert data["model"] is None
        assert str(Verdict.unsat("q")) == "UNSAT q"


class TestFreshNames:
    """Test fresh name generation."""

    def test_fresh_name_prefers_base(self):
        assert fresh_name("x", ["a"]) == "x"
        assert fresh_name("x", ["x", "x1"]) == "x2"

    def test_fresh_names_avoid_taken(self):
        assert fresh_names("x", 3, ["x2"]) == ["x1", "x3", "x4"]
