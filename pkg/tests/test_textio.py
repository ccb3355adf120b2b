"""
Tests for the `.folp` and `.dl` syntax, the model format and DOT export.
"""

import pytest

from folp_reasoner.analysis import marked_dep_graph
from folp_reasoner.engine import init_completion
from folp_reasoner.errors import ParseError
from folp_reasoner.forest import DepGraph, NodeId
from folp_reasoner.models import (
    GroundAtom,
    OpenInterpretation,
    Verdict,
    VerdictStatus,
)
from folp_reasoner.shoq import And, AtMost, Atomic, Exists, Nominal, Not
from folp_reasoner.textio import (
    format_model,
    parse_dl,
    parse_model,
    parse_program,
    print_dl,
    print_program,
    to_dot,
)

CORPUS_PROGRAMS = (
    "happy.folp",
    "example1.folp",
    "example6.folp",
    "choice-inconsistent.folp",
    "marked-cycle.folp",
    "marked-cycle-simple.folp",
    "father-rules.folp",
)


class TestProgramParser:
    """Test parsing of `.folp` programs."""

    def test_rule_forms(self):
        program = parse_program(
            "r1: p(X) :- f(X,Y), not q(Y), f(X,Z), Y != Z.\n"
            "f(X,Y) v not f(X,Y).\n"
            ":- p(X), q(X).\n"
            "q(a).\n"
        )
        assert len(program) == 4
        first = program.rules[0]
        assert first.label == "r1"
        assert len(first.inequalities) == 1
        assert program.rules[1].free
        assert program.rules[2].is_constraint
        assert str(program.rules[3]) == "q(a)."
        assert program.constants == ("a",)

    def test_comments_are_ignored(self):
        program = parse_program("% a comment\np(X) v not p(X). % trailing\n")
        assert len(program) == 1

    def test_spans(self):
        program = parse_program("p(X) v not p(X).\n\n  q(X) :- p(X).", filename="t.folp")
        span = program.rules[1].span
        assert (span.file, span.line, span.column) == ("t.folp", 3, 3)

    def test_quoted_predicate(self):
        program = parse_program('"exists r.A"(X) :- r(X,Y), "A"(Y).')
        assert program.rules[0].head.predicate.name == "exists r.A"

    def test_diagnostics_attached(self):
        program = parse_program("p(X) :- f(X,X).")
        assert program.diagnostics
        assert not parse_program("p(X) :- f(X,X).", validate=False).diagnostics

    def test_missing_period(self):
        with pytest.raises(ParseError) as excinfo:
            parse_program("p(X) v not p(X)", filename="bad.folp")
        assert excinfo.value.span.file == "bad.folp"

    def test_error_position(self):
        with pytest.raises(ParseError) as excinfo:
            parse_program("p(X) v not p(X).\nq(X :- p(X).")
        assert excinfo.value.span.line == 2

    def test_free_rule_must_repeat_atom(self):
        with pytest.raises(ParseError):
            parse_program("p(X) v not q(X).")


class TestPrinter:
    """Printing a program gives text that parses back to the same program."""

    @pytest.mark.parametrize("name", CORPUS_PROGRAMS)
    def test_corpus_round_trip(self, load, name):
        program = load(name)
        assert parse_program(print_program(program)) == program

    def test_quoted_names_round_trip(self):
        program = parse_program('"atmost 2 child.Human"(X) :- not "atleast 3 child.Human"(X).')
        text = print_program(program)
        assert text == '"atmost 2 child.Human"(X) :- not "atleast 3 child.Human"(X).\n'
        assert parse_program(text) == program

    def test_empty_program(self):
        assert print_program(parse_program("")) == ""


class TestDlParser:
    """Test parsing of `.dl` knowledge bases."""

    def test_father(self, father_kb):
        first, second = father_kb.terminological
        assert first.sub == Atomic("Father")
        assert first.sup == And(Exists("child", Atomic("Human")), Not(Atomic("Female")))
        assert second.sub == Nominal("john")
        assert second.sup == AtMost(2, "child", Atomic("Human"))

    def test_role_axioms(self):
        kb = parse_dl("child <= descendant\ntrans(descendant)\n")
        assert [str(a) for a in kb.role_axioms] == ["child <= descendant"]
        assert kb.transitive == ("descendant",)

    def test_precedence(self):
        kb = parse_dl("A <= B or C and not D")
        assert str(kb.terminological[0].sup) == "(C and not D) or B"

    def test_canonical_order(self):
        """Conjunctions print the same whichever way round they were written."""
        left = parse_dl("A <= not Female and exists child.Human")
        right = parse_dl("A <= exists child.Human and not Female")
        assert left == right

    def test_print_round_trip(self, father_kb):
        assert parse_dl(print_dl(father_kb)) == father_kb

    def test_number_cap(self):
        with pytest.raises(ParseError):
            parse_dl("A <= atleast 9 r.B", number_cap=8)

    def test_syntax_error(self):
        with pytest.raises(ParseError):
            parse_dl("A <= exists .B")


class TestModelFormat:
    """Test the emitted model format."""

    def setup_method(self):
        self.model = OpenInterpretation(
            frozenset({"j", "j.1"}),
            frozenset({GroundAtom("happy", ("j",)), GroundAtom("friend", ("j", "j.1"))}),
        )

    def test_format(self):
        text = format_model(Verdict.sat("happy", self.model))
        assert text == "SAT\nuniverse j\nuniverse j.1\natom friend(j,j.1)\natom happy(j)\n"
        assert format_model(Verdict.sat("happy", self.model), emit_model=False) == "SAT\n"
        assert format_model(Verdict.unsat("happy")) == "UNSAT\n"

    def test_parse_back(self):
        status, model = parse_model(format_model(Verdict.sat("happy", self.model)))
        assert status == VerdictStatus.SAT
        assert model == self.model

    def test_parse_status_only(self):
        assert parse_model("\nUNKNOWN\n") == (VerdictStatus.UNKNOWN, None)

    def test_quoted_atoms(self):
        status, model = parse_model('SAT\nuniverse a\natom "exists r.A"(a)\n')
        assert model.holds("exists r.A", "a")

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "MAYBE\n",
            "SAT\nelement a\n",
            "SAT\natom p(a)\n",
            "SAT\nuniverse a\natom p(b)\n",
            "SAT\nuniverse a\natom p a\n",
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_model(text)


class TestDot:
    """Test Graphviz export."""

    def test_marked_graph(self, happy):
        text = to_dot(marked_dep_graph(happy))
        assert text.startswith("digraph marked {")
        assert '"happy" -> "happy" [style=bold, label="m"];' in text
        assert '"sees"' not in text

    def test_dependency_graph(self):
        a, b = GroundAtom("p", (NodeId("x"),)), GroundAtom("q", (NodeId("x", (1,)),))
        text = to_dot(DepGraph.from_arcs([(a, b)]))
        assert text.startswith("digraph dependencies {")
        assert '"p(x)" -> "q(x.1)";' in text

    def test_structure(self):
        program = parse_program("p(X) :- f(X,Y), q(Y).\nf(X,Y) v not f(X,Y).\nq(X) v not q(X).\nq(a).")
        p = program.predicate("p")
        cs = init_completion(p, program, anonymous_root=True)
        child = cs.add_child(NodeId("x"))
        cs.ensure_es(child, "a")
        text = to_dot(cs)
        assert '"x" [label="x\\n{p}"];' in text
        assert '"a" [label="a\\n{}", peripheries=2];' in text
        assert '"x" -> "x.1" [label="{}"];' in text
        assert '"x.1" -> "a" [style=dashed, label="{}"];' in text

    def test_structure_content_is_escaped(self):
        program = parse_program('"exists r.A"(X) :- r(X,Y), "A"(Y).\nr(X,Y) v not r(X,Y).\n"A"(X) v not "A"(X).')
        cs = init_completion(program.predicate("exists r.A"), program, anonymous_root=True)
        assert '{\\"exists r.A\\"}' in to_dot(cs)

    def test_unsupported(self):
        with pytest.raises(TypeError):
            to_dot("nothing")
