"""
Tests for SHOQ knowledge bases: semantics, translation and f-hybrid checks.
"""

import pytest

from folp_reasoner.analysis import is_simple, validate_folp
from folp_reasoner.errors import InterpretationError, OracleScaleError, TranslationError
from folp_reasoner.models import GroundAtom, SearchConfig
from folp_reasoner.oracle import ground
from folp_reasoner.shoq import (
    AtLeast,
    AtMost,
    Atomic,
    DlInterpretation,
    Exists,
    FHybridKB,
    Forall,
    Nominal,
    Role,
    closure,
    concept_sat,
    eval_concept,
    fhybrid_bounded_check,
    fhybrid_sat,
    project,
    satisfies,
    translate,
    translate_simple,
)
from folp_reasoner.textio import parse_dl, print_program

HUMAN = Atomic("Human")


class TestSemantics:
    """Test concept extensions and axiom satisfaction."""

    def setup_method(self):
        self.interpretation = DlInterpretation(
            frozenset({"a", "b"}),
            {"Human": {"b"}, "Father": {"a"}},
            {"child": {("a", "b")}},
        )

    def test_eval_concept(self):
        assert eval_concept(Exists("child", HUMAN), self.interpretation) == {"a"}
        assert eval_concept(AtMost(0, "child", HUMAN), self.interpretation) == {"b"}
        assert eval_concept(AtLeast(2, "child", HUMAN), self.interpretation) == frozenset()
        assert eval_concept(Forall("child", HUMAN), self.interpretation) == {"a", "b"}
        assert eval_concept(Nominal("b"), self.interpretation) == {"b"}

    def test_nominal_outside_domain(self):
        with pytest.raises(InterpretationError):
            eval_concept(Nominal("john"), self.interpretation)

    def test_extensions_stay_in_domain(self):
        with pytest.raises(ValueError):
            DlInterpretation(frozenset({"a"}), {"Human": {"b"}})

    def test_satisfies(self):
        kb = parse_dl("Father <= exists child.Human and not Female")
        assert satisfies(kb, self.interpretation)
        wrong = DlInterpretation(frozenset({"a", "b"}), {"Father": {"b"}}, {})
        assert not satisfies(kb, wrong)

    def test_transitivity(self):
        kb = parse_dl("trans(r)")
        chain = DlInterpretation(frozenset({"a", "b", "c"}), {}, {"r": {("a", "b"), ("b", "c")}})
        assert not satisfies(kb, chain)
        closed = DlInterpretation(frozenset({"a", "b", "c"}), {}, {"r": {("a", "b"), ("b", "c"), ("a", "c")}})
        assert satisfies(kb, closed)


class TestClosure:
    """Test the closure of a knowledge base."""

    def test_father_closure(self, father_kb):
        members = closure(father_kb)
        assert members[0] == Atomic("Father")
        assert Role("child") in members
        assert AtLeast(3, "child", HUMAN) in members
        assert len(members) == len(set(members))

    def test_transitive_subrole(self):
        kb = parse_dl("A <= exists s.B\nr <= s\ntrans(r)")
        assert Exists("r", Atomic("B")) in closure(kb)


class TestTranslation:
    """Test the compilation to forest logic programs."""

    def test_father(self, father_kb):
        program = translate(father_kb)
        text = print_program(program)
        lines = text.splitlines()
        assert lines[0] == ':- Father(X), not "exists child.Human and not Female"(X).'
        assert lines[1] == ':- "{john}"(X), not "atmost 2 child.Human"(X).'
        for expected in (
            "Father(X) v not Father(X).",
            "child(X,Y) v not child(X,Y).",
            '"{john}"(john).',
            '"exists child.Human"(X) :- child(X,Y), Human(Y).',
            '"not Female"(X) :- not Female(X).',
            '"exists child.Human and not Female"(X) :- "exists child.Human"(X), "not Female"(X).',
            '"atmost 2 child.Human"(X) :- not "atleast 3 child.Human"(X).',
            '"atleast 3 child.Human"(X) :- child(X,Y1), child(X,Y2), child(X,Y3), '
            "Human(Y1), Human(Y2), Human(Y3), Y1 != Y2, Y1 != Y3, Y2 != Y3.",
        ):
            assert expected in lines
        assert not validate_folp(program)

    def test_father_is_simple(self, father_kb):
        assert is_simple(translate_simple(father_kb))

    def test_transitive_rules(self):
        kb = parse_dl("A <= exists s.B\nr <= s\ntrans(r)")
        lines = print_program(translate(kb)).splitlines()
        assert '"exists s.B"(X) :- "exists r.B"(X).' in lines
        assert '"exists r.B"(X) :- r(X,Y), "exists r.B"(Y).' in lines
        assert ":- r(X,Y), not s(X,Y)." in lines

    def test_simple_translation_rejects_transitivity(self):
        kb = parse_dl("A <= exists r.B\ntrans(r)")
        with pytest.raises(TranslationError, match="not ALCHOQ"):
            translate_simple(kb)

    def test_number_restriction_on_non_simple_role(self):
        kb = parse_dl("A <= atleast 2 s.B\nr <= s\ntrans(r)")
        with pytest.raises(TranslationError):
            translate(kb)

    def test_number_cap(self, father_kb):
        with pytest.raises(TranslationError):
            translate(father_kb, number_cap=2)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_translation_size_is_polynomial(self, n):
        kb = parse_dl(f"A <= atleast {n} r.B\nA <= atmost {n} r.C")
        program = translate(kb)
        assert not validate_folp(program)
        assert len(program.rules) <= 2 * len(closure(kb)) + 2
        size = sum(len(rule.body) + 1 for rule in program.rules)
        assert size <= 2 * (n + 1) ** 2 + 40
        name = f"atleast {n} r.B"
        (at_least,) = [r for r in program.rules if r.head is not None and r.head.predicate.name == name]
        assert len(at_least.literals) == 2 * n
        assert len(at_least.inequalities) == n * (n - 1) // 2


class TestHybrid:
    """Test f-hybrid knowledge bases."""

    def test_bounded_check(self, father_kb, father_rules):
        kb = FHybridKB(father_kb, father_rules)
        model = fhybrid_bounded_check(kb, "unhappy", max_domain=2)
        assert model is not None
        assert model.universe == frozenset({"john"})
        assert model.atoms == frozenset({GroundAtom("unhappy", ("john",))})

    def test_bounded_check_on_a_concept(self, father_kb, father_rules):
        kb = FHybridKB(father_kb, father_rules)
        model = fhybrid_bounded_check(kb, "Human", max_domain=2)
        assert model is not None
        assert model.interpretation.concept("Human") == {"john"}
        assert not model.interpretation.concept("Father")

    def test_project(self, father_kb, father_rules):
        kb = FHybridKB(father_kb, father_rules)
        gp = ground(father_rules, ["john"])
        nobody = DlInterpretation(frozenset({"john"}))
        assert [str(rule) for rule in project(gp, nobody, kb).rules] == ["unhappy(john)."]
        father = DlInterpretation(frozenset({"john"}), {"Father": {"john"}})
        assert project(gp, father, kb).rules == ()

    def test_bit_limit(self, father_kb, father_rules):
        kb = FHybridKB(father_kb, father_rules)
        with pytest.raises(OracleScaleError):
            fhybrid_bounded_check(kb, "unhappy", max_domain=3, domain_bit_limit=3)

    def test_unsatisfiable_concept(self):
        kb = FHybridKB(parse_dl("A <= not A"))
        assert concept_sat(kb, Atomic("A")).is_unsat

    def test_satisfiable_concept(self):
        kb = FHybridKB(parse_dl("A <= exists r.B"))
        verdict = concept_sat(kb, Atomic("A"), SearchConfig(depth_cap=4))
        assert verdict.is_sat
        assert verdict.model.atoms_of("r")

    def test_fhybrid_sat(self, father_kb, father_rules):
        verdict = fhybrid_sat(FHybridKB(father_kb, father_rules), "unhappy", SearchConfig(depth_cap=2))
        assert verdict.is_sat
        assert verdict.model.holds("unhappy", "john")
        assert not verdict.model.holds("Father", "john")
