"""
Static analysis of forest logic programs.

Shape validation, degree and rank, constraint elimination, the marked
positive predicate dependency graph and the simple-program test.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Tuple, Union

from .errors import FreshNameError, UnknownPredicateError
from .models import (
    BinaryShape,
    Diagnostic,
    DiagnosticKind,
    Literal,
    Predicate,
    Program,
    Rule,
    RuleKind,
    SearchMode,
    UnaryShape,
)
from .utils import strongly_connected_components

logger = logging.getLogger(__name__)

CONSTRAINT_PREFIX = "__constr"


def validate_folp(program: Program) -> List[Diagnostic]:
    """
    Check every rule against the forest logic program shapes.

    Args:
        program: Parsed program

    Returns:
        One Diagnostic per violation; empty iff the program is a FoLP
    """
    diagnostics: List[Diagnostic] = []
    arities: Dict[str, int] = {}

    for index, rule in enumerate(program.rules):
        label = program.label_of(index)
        atoms = ([rule.head] if rule.head else []) + list(rule.literals)
        for lit in atoms:
            seen = arities.setdefault(lit.predicate.name, lit.predicate.arity)
            if seen != lit.predicate.arity:
                diagnostics.append(
                    Diagnostic(
                        index,
                        label,
                        DiagnosticKind.ARITY,
                        f"predicate {lit.predicate} used with arity {lit.predicate.arity} and {seen}",
                        rule.span,
                    )
                )
        for problem in rule.shape_problems:
            diagnostics.append(Diagnostic(index, label, problem.kind, problem.message, rule.span))

    return diagnostics


def degree_rule(rule: Rule) -> int:
    """Number of successor terms of a unary rule; 0 for every other variant."""
    if rule.kind == RuleKind.UNARY and rule.shape is not None:
        return rule.unary_shape.degree
    return 0


def degree_pred(predicate: Union[Predicate, str], program: Program) -> int:
    """Maximum degree over the rules defining a unary predicate."""
    pred = _resolve(predicate, program)
    if pred.arity != 1:
        raise UnknownPredicateError(f"degree is defined for unary predicates, {pred} is binary")
    return max((degree_rule(rule) for rule in program.rules_for(pred)), default=0)


def rank(program: Program) -> int:
    """Sum of the degrees of all unary predicates."""
    return sum(degree_pred(pred, program) for pred in program.unary_predicates)


def _resolve(predicate: Union[Predicate, str], program: Program) -> Predicate:
    if isinstance(predicate, Predicate):
        return predicate
    found = program.predicate(predicate)
    if found is None:
        raise UnknownPredicateError(f"unknown predicate {predicate}")
    return found


def eliminate_constraints(program: Program) -> Program:
    """
    Replace every constraint by a rule over a fresh predicate.

    ``:- body.`` rooted at term s becomes ``__constrN(s) :- not __constrN(s), body.``;
    a constraint over a single pair (s, t) becomes the binary
    ``__constrN(s,t) :- not __constrN(s,t), body.``.

    Raises:
        FreshNameError: a generated name is already a program predicate
    """
    if not program.constraints:
        return program

    rules: List[Rule] = []
    counter = 0
    for rule in program.rules:
        if not rule.is_constraint:
            rules.append(rule)
            continue
        counter += 1
        name = f"{CONSTRAINT_PREFIX}{counter}"
        if name in program.predicates:
            raise FreshNameError(f"constraint predicate name {name} is already used by the program")
        shape = rule.shape
        if isinstance(shape, BinaryShape):
            head = Literal(Predicate(name, 2), (shape.source, shape.target))
        else:
            head = Literal(Predicate(name, 1), (shape.term,))
        rules.append(Rule(head, (head.negate(),) + rule.body, label=rule.label, span=rule.span))

    logger.debug("Rewrote %d constraints", counter)
    return Program(tuple(rules), program.diagnostics, program.source)


def is_constraint_predicate(name: str) -> bool:
    return name.startswith(CONSTRAINT_PREFIX)


def redundancy_bound(p: int, variant: str = "rule9") -> int:
    """
    Redundancy threshold k for p unary predicates.

    ``rule9`` is 2^p(2^(p^2) - 1) + 2; ``appendix`` adds one more.
    """
    k = 2 ** p * (2 ** (p * p) - 1) + 2
    return k + 1 if variant == "appendix" else k


def depth_bound(p: int, k: int, mode: SearchMode) -> int:
    """
    Tree depth beyond which a depth cap can no longer prune anything.

    In full mode a branch longer than 2^p * k holds some content k+1 times and
    is cut by redundancy. In simple mode, anywhere blocking keeps the
    non-leaf contents of a branch pairwise distinct.
    """
    if mode == SearchMode.SIMPLE:
        return 2 ** p + 2
    return 2 ** p * k + 1


@dataclass(frozen=True)
class MarkedGraph:
    """The marked positive predicate dependency graph."""

    vertices: Tuple[str, ...] = ()
    arcs: FrozenSet[Tuple[str, str]] = frozenset()
    marked: FrozenSet[Tuple[str, str]] = frozenset()

    def successors(self) -> Dict[str, List[str]]:
        graph: Dict[str, List[str]] = {v: [] for v in self.vertices}
        for source, target in sorted(self.arcs):
            graph[source].append(target)
        return graph

    def to_dict(self) -> Dict[str, object]:
        return {
            "vertices": list(self.vertices),
            "arcs": [list(arc) for arc in sorted(self.arcs)],
            "marked": [list(arc) for arc in sorted(self.marked)],
        }


def marked_dep_graph(program: Program) -> MarkedGraph:
    """
    Build D(P).

    Vertices are the non-free predicates. An arc (p, q) exists when a rule
    with head predicate p has a positive body literal over q; it is marked
    when that literal sits in a delta set.
    """
    free = {pred.name for pred in program.free_predicates}
    vertices = tuple(name for name in program.predicates if name not in free)
    arcs = set()
    marked = set()

    for rule in program.rules:
        if rule.head is None or rule.free or rule.shape is None:
            continue
        head = rule.head.predicate.name
        if head in free:
            continue
        shape = rule.shape
        if isinstance(shape, UnaryShape):
            delta = {lit for succ in shape.successors for lit in succ.delta}
        else:
            delta = set(shape.delta)
        for lit in rule.literals:
            if not lit.positive or lit.predicate.name in free:
                continue
            arc = (head, lit.predicate.name)
            arcs.add(arc)
            if lit in delta:
                marked.add(arc)

    return MarkedGraph(vertices, frozenset(arcs), frozenset(marked))


def is_simple(program: Program) -> bool:
    """True iff no cycle of D(P) passes through a marked arc."""
    graph = marked_dep_graph(program)
    component_of: Dict[str, int] = {}
    for number, component in enumerate(strongly_connected_components(graph.successors())):
        for vertex in component:
            component_of[vertex] = number
    return not any(component_of[p] == component_of[q] for p, q in graph.marked)


@dataclass
class ProgramAnalysis:
    """Everything the ``analyze`` command reports about a program."""

    program: Program
    diagnostics: List[Diagnostic] = field(default_factory=list)
    degrees: Dict[str, int] = field(default_factory=dict)
    rank: int = 0
    simple: bool = True
    free_predicates: List[str] = field(default_factory=list)
    graph: MarkedGraph = field(default_factory=MarkedGraph)
    unary_count: int = 0
    redundancy_k: int = 0
    depth_bound: int = 0

    @property
    def valid(self) -> bool:
        return not self.diagnostics

    def to_dict(self) -> Dict[str, object]:
        return {
            "valid": self.valid,
            "diagnostics": [d.to_dict() for d in self.diagnostics],
            "constants": list(self.program.constants),
            "degrees": dict(self.degrees),
            "rank": self.rank,
            "simple": self.simple,
            "free_predicates": list(self.free_predicates),
            "marked_graph": self.graph.to_dict(),
            "unary_predicates_after_rewrite": self.unary_count,
            "redundancy_k": self.redundancy_k,
            "depth_bound": self.depth_bound,
        }


def analyze_program(program: Program) -> ProgramAnalysis:
    """Run every static check; structural measures are skipped for invalid programs."""
    diagnostics = validate_folp(program)
    result = ProgramAnalysis(program=program, diagnostics=diagnostics)
    result.free_predicates = sorted(pred.name for pred in program.free_predicates)
    if diagnostics:
        return result
    result.degrees = {pred.name: degree_pred(pred, program) for pred in program.unary_predicates}
    result.rank = rank(program)
    result.graph = marked_dep_graph(program)
    result.simple = is_simple(program)
    result.unary_count = len(eliminate_constraints(program).unary_predicates)
    result.redundancy_k = redundancy_bound(result.unary_count)
    mode = SearchMode.SIMPLE if result.simple else SearchMode.FULL
    result.depth_bound = depth_bound(result.unary_count, result.redundancy_k, mode)
    return result
