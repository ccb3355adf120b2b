"""
Data models for the FoLP reasoner.

Terms, predicates, literals and rules follow the forest logic program
syntax: unary and binary predicates only, rules that are tree-shaped around a
head term, free rules ``a(X) v not a(X).`` and constraints ``:- body.``.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import (
    TYPE_CHECKING,
    Any,
    ClassVar,
    Dict,
    FrozenSet,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Tuple,
    Union,
)

from .utils import format_predicate_name

if TYPE_CHECKING:
    from .engine.structure import CompletionStructure


# ---------------------------------------------------------------------------
# Source positions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SourceSpan:
    """A region of an input file (1-based lines and columns)."""

    file: str
    line: int
    column: int
    end_line: int
    end_column: int

    def __post_init__(self):
        if (self.end_line, self.end_column) < (self.line, self.column):
            raise ValueError("Span end lies before its start")

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.column}"


# ---------------------------------------------------------------------------
# Terms, predicates, literals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Constant:
    """A constant term (lowercase identifier)."""

    name: str
    is_variable: ClassVar[bool] = False

    def __post_init__(self):
        if not self.name or not self.name[0].islower():
            raise ValueError(f"Constant must start with a lowercase letter: {self.name!r}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Variable:
    """A variable term (uppercase identifier)."""

    name: str
    is_variable: ClassVar[bool] = True

    def __post_init__(self):
        if not self.name or not self.name[0].isupper():
            raise ValueError(f"Variable must start with an uppercase letter: {self.name!r}")

    def __str__(self) -> str:
        return self.name


Term = Union[Constant, Variable]


def make_term(name: str) -> Term:
    """Build a term, choosing constant or variable by the case of its first letter."""
    if name and name[0].isupper():
        return Variable(name)
    return Constant(name)


@dataclass(frozen=True)
class Predicate:
    """A predicate symbol with its arity."""

    name: str
    arity: int

    def __post_init__(self):
        if not self.name:
            raise ValueError("Predicate name cannot be empty")
        if self.arity < 1:
            raise ValueError(f"Predicate {self.name} must have a positive arity")

    @property
    def is_unary(self) -> bool:
        return self.arity == 1

    @property
    def is_binary(self) -> bool:
        return self.arity == 2

    def __str__(self) -> str:
        return format_predicate_name(self.name)


@dataclass(frozen=True)
class SignedPredicate:
    """``p`` or ``not p``."""

    predicate: Predicate
    positive: bool = True

    def negate(self) -> "SignedPredicate":
        return SignedPredicate(self.predicate, not self.positive)

    @property
    def sort_key(self) -> Tuple[str, bool]:
        return (self.predicate.name, not self.positive)

    def __str__(self) -> str:
        return str(self.predicate) if self.positive else f"not {self.predicate}"


@dataclass(frozen=True)
class Literal:
    """A possibly negated atom ``p(t1, ..., tn)``."""

    predicate: Predicate
    args: Tuple[Term, ...]
    positive: bool = True

    def __post_init__(self):
        if len(self.args) != self.predicate.arity:
            raise ValueError(
                f"Predicate {self.predicate.name} expects {self.predicate.arity} "
                f"arguments, got {len(self.args)}"
            )

    @property
    def signed(self) -> SignedPredicate:
        return SignedPredicate(self.predicate, self.positive)

    @property
    def atom(self) -> "Literal":
        return self if self.positive else Literal(self.predicate, self.args, True)

    def negate(self) -> "Literal":
        return Literal(self.predicate, self.args, not self.positive)

    def __str__(self) -> str:
        text = f"{self.predicate}({','.join(str(a) for a in self.args)})"
        return text if self.positive else f"not {text}"


@dataclass(frozen=True)
class Inequality:
    """``s != t`` between two terms."""

    left: Term
    right: Term

    def __str__(self) -> str:
        return f"{self.left} != {self.right}"


BodyItem = Union[Literal, Inequality]


# ---------------------------------------------------------------------------
# Rule shapes
# ---------------------------------------------------------------------------


class RuleKind(Enum):
    """The six rule variants of a forest logic program."""

    FREE_UNARY = "free_unary"
    FREE_BINARY = "free_binary"
    UNARY = "unary"
    BINARY = "binary"
    CONSTRAINT_UNARY = "constraint_unary"
    CONSTRAINT_BINARY = "constraint_binary"


class DiagnosticKind(Enum):
    """Ways a rule can fail the forest logic program shape."""

    ARITY = "arity"
    REPEATED_VARIABLE = "repeated_variable"
    GAMMA_POSITIVE_EMPTY = "gamma_positive_empty"
    DISCONNECTED_LITERAL = "disconnected_literal"
    INVALID_INEQUALITY = "invalid_inequality"


@dataclass(frozen=True)
class Successor:
    """One successor term of a unary rule with its gamma and delta literals."""

    term: Term
    gamma: Tuple[Literal, ...] = ()
    delta: Tuple[Literal, ...] = ()

    @property
    def has_positive_gamma(self) -> bool:
        return any(lit.positive for lit in self.gamma)


@dataclass(frozen=True)
class UnaryShape:
    """Body of a unary rule or unary-rooted constraint, grouped around its root term."""

    term: Term
    beta: Tuple[Literal, ...] = ()
    successors: Tuple[Successor, ...] = ()
    psi: Tuple[Tuple[int, int], ...] = ()

    @property
    def degree(self) -> int:
        return len(self.successors)


@dataclass(frozen=True)
class BinaryShape:
    """Body of a binary rule or binary constraint over the terms (source, target)."""

    source: Term
    target: Term
    beta: Tuple[Literal, ...] = ()
    gamma: Tuple[Literal, ...] = ()
    delta: Tuple[Literal, ...] = ()


Shape = Union[UnaryShape, BinaryShape]


@dataclass(frozen=True)
class ShapeProblem:
    kind: DiagnosticKind
    message: str


class _ShapeBuilder:
    """Groups body literals around a root term and records shape problems."""

    def __init__(self, root: Term):
        self.root = root
        self.beta: List[Literal] = []
        self.order: List[Term] = []
        self.gamma: Dict[Term, List[Literal]] = {}
        self.delta: Dict[Term, List[Literal]] = {}
        self.inequalities: List[Inequality] = []
        self.problems: List[ShapeProblem] = []

    def problem(self, kind: DiagnosticKind, message: str):
        self.problems.append(ShapeProblem(kind, message))

    def _successor(self, term: Term):
        if term not in self.gamma:
            self.order.append(term)
            self.gamma[term] = []
            self.delta[term] = []

    def add(self, item: BodyItem):
        if isinstance(item, Inequality):
            self.inequalities.append(item)
            return
        if item.predicate.arity > 2:
            self.problem(DiagnosticKind.ARITY, f"predicate {item.predicate} has arity {item.predicate.arity}")
            return
        if item.predicate.arity == 1:
            (term,) = item.args
            if term == self.root:
                self.beta.append(item)
            else:
                self._successor(term)
                self.delta[term].append(item)
            return
        source, target = item.args
        if source != self.root:
            self.problem(
                DiagnosticKind.DISCONNECTED_LITERAL,
                f"binary literal {item} does not start at head term {self.root}",
            )
            return
        if target == self.root and target.is_variable:
            self.problem(DiagnosticKind.REPEATED_VARIABLE, f"repeated variable term {target} in {item}")
            return
        self._successor(target)
        self.gamma[target].append(item)

    def check_successors(self):
        for term in self.order:
            if term.is_variable and not any(lit.positive for lit in self.gamma[term]):
                self.problem(
                    DiagnosticKind.GAMMA_POSITIVE_EMPTY,
                    f"gamma+ empty for variable successor {term}",
                )

    def unary_shape(self) -> UnaryShape:
        self.check_successors()
        position = {term: i for i, term in enumerate(self.order)}
        psi = []
        for ineq in self.inequalities:
            if ineq.left == ineq.right:
                self.problem(DiagnosticKind.INVALID_INEQUALITY, f"inequality {ineq} compares a term with itself")
            elif ineq.left not in position or ineq.right not in position:
                self.problem(
                    DiagnosticKind.INVALID_INEQUALITY,
                    f"inequality {ineq} must relate two successor terms",
                )
            else:
                pair = tuple(sorted((position[ineq.left], position[ineq.right])))
                if pair not in psi:
                    psi.append(pair)
        successors = tuple(
            Successor(term, tuple(self.gamma[term]), tuple(self.delta[term])) for term in self.order
        )
        return UnaryShape(self.root, tuple(self.beta), successors, tuple(psi))

    def binary_shape(self, target: Term) -> BinaryShape:
        for ineq in self.inequalities:
            self.problem(DiagnosticKind.INVALID_INEQUALITY, f"inequality {ineq} is not allowed in a binary rule body")
        for term in self.order:
            if term != target:
                self.problem(
                    DiagnosticKind.DISCONNECTED_LITERAL,
                    f"term {term} is neither the source nor the target of the binary head",
                )
        gamma = tuple(self.gamma.get(target, ()))
        if target.is_variable and not any(lit.positive for lit in gamma):
            self.problem(DiagnosticKind.GAMMA_POSITIVE_EMPTY, f"gamma+ empty for variable successor {target}")
        return BinaryShape(self.root, target, tuple(self.beta), gamma, tuple(self.delta.get(target, ())))


def _repeated_variables(args: Tuple[Term, ...]) -> List[Term]:
    seen, repeated = set(), []
    for term in args:
        if term.is_variable and term in seen and term not in repeated:
            repeated.append(term)
        seen.add(term)
    return repeated


def _constraint_root(body: Tuple[BodyItem, ...]) -> Optional[Term]:
    literals = [item for item in body if isinstance(item, Literal)]
    for lit in literals:
        if lit.predicate.arity == 2:
            return lit.args[0]
    terms: List[Term] = []
    for lit in literals:
        for term in lit.args:
            if term not in terms:
                terms.append(term)
    variables = [t for t in terms if t.is_variable]
    if variables:
        return variables[0]
    return terms[0] if terms else None


# ---------------------------------------------------------------------------
# Rules and programs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Rule:
    """
    A single rule.

    ``head`` is None for constraints; ``free`` marks ``a v not a`` rules,
    whose body is empty. The body keeps source order so that printing a
    parsed rule reproduces it.
    """

    head: Optional[Literal]
    body: Tuple[BodyItem, ...] = ()
    free: bool = False
    label: Optional[str] = None
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.head is None and not self.body:
            raise ValueError("A constraint needs a non-empty body")
        if self.head is not None and not self.head.positive:
            raise ValueError("Rule heads must be positive atoms")
        if self.free and (self.head is None or self.body):
            raise ValueError("A free rule has a head and no body")

    @property
    def is_constraint(self) -> bool:
        return self.head is None

    @property
    def literals(self) -> Tuple[Literal, ...]:
        return tuple(item for item in self.body if isinstance(item, Literal))

    @property
    def inequalities(self) -> Tuple[Inequality, ...]:
        return tuple(item for item in self.body if isinstance(item, Inequality))

    @property
    def terms(self) -> Tuple[Term, ...]:
        seen: List[Term] = []
        atoms = ([self.head] if self.head else []) + list(self.literals)
        for lit in atoms:
            for term in lit.args:
                if term not in seen:
                    seen.append(term)
        for ineq in self.inequalities:
            for term in (ineq.left, ineq.right):
                if term not in seen:
                    seen.append(term)
        return tuple(seen)

    @property
    def variables(self) -> Tuple[Variable, ...]:
        return tuple(t for t in self.terms if t.is_variable)

    @property
    def constants(self) -> Tuple[Constant, ...]:
        return tuple(t for t in self.terms if not t.is_variable)

    @cached_property
    def _analysis(self) -> Tuple[RuleKind, Optional[Shape], Tuple[ShapeProblem, ...]]:
        problems: List[ShapeProblem] = []
        if self.head is not None and self.head.predicate.arity > 2:
            problems.append(
                ShapeProblem(DiagnosticKind.ARITY, f"predicate {self.head.predicate} has arity {self.head.predicate.arity}")
            )
            return RuleKind.UNARY, None, tuple(problems)
        if self.head is not None:
            for term in _repeated_variables(self.head.args):
                problems.append(ShapeProblem(DiagnosticKind.REPEATED_VARIABLE, f"repeated variable term {term} in head"))
        for lit in self.literals:
            for term in _repeated_variables(lit.args):
                problems.append(ShapeProblem(DiagnosticKind.REPEATED_VARIABLE, f"repeated variable term {term} in {lit}"))

        if self.free:
            kind = RuleKind.FREE_UNARY if self.head.predicate.arity == 1 else RuleKind.FREE_BINARY
            return kind, None, tuple(problems)

        if self.head is not None:
            root = self.head.args[0]
            builder = _ShapeBuilder(root)
            for item in self.body:
                builder.add(item)
            if self.head.predicate.arity == 1:
                shape: Shape = builder.unary_shape()
                kind = RuleKind.UNARY
            else:
                shape = builder.binary_shape(self.head.args[1])
                kind = RuleKind.BINARY
            return kind, shape, tuple(problems + builder.problems)

        root = _constraint_root(self.body)
        builder = _ShapeBuilder(root)
        for item in self.body:
            builder.add(item)
        binary_literals = [lit for lit in self.literals if lit.predicate.arity == 2]
        if binary_literals and len(builder.order) == 1 and not builder.inequalities:
            shape = builder.binary_shape(builder.order[0])
            kind = RuleKind.CONSTRAINT_BINARY
        else:
            shape = builder.unary_shape()
            kind = RuleKind.CONSTRAINT_UNARY
        return kind, shape, tuple(problems + builder.problems)

    @property
    def kind(self) -> RuleKind:
        return self._analysis[0]

    @property
    def shape(self) -> Optional[Shape]:
        """The tree-shaped grouping of the body (None for free rules)."""
        return self._analysis[1]

    @property
    def shape_problems(self) -> Tuple[ShapeProblem, ...]:
        return self._analysis[2]

    @property
    def unary_shape(self) -> UnaryShape:
        shape = self.shape
        if not isinstance(shape, UnaryShape):
            raise TypeError(f"rule {self} is not unary-shaped")
        return shape

    @property
    def binary_shape(self) -> BinaryShape:
        shape = self.shape
        if not isinstance(shape, BinaryShape):
            raise TypeError(f"rule {self} is not binary-shaped")
        return shape

    def __str__(self) -> str:
        prefix = f"{self.label}: " if self.label else ""
        if self.free:
            return f"{prefix}{self.head} v not {self.head}."
        body = ", ".join(str(item) for item in self.body)
        if self.head is None:
            return f"{prefix}:- {body}."
        if not body:
            return f"{prefix}{self.head}."
        return f"{prefix}{self.head} :- {body}."


@dataclass(frozen=True)
class Diagnostic:
    """A violation of the forest logic program shape found by validation."""

    rule_index: int
    rule_label: str
    kind: DiagnosticKind
    message: str
    span: Optional[SourceSpan] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rule_index": self.rule_index,
            "rule_label": self.rule_label,
            "kind": self.kind.value,
            "message": self.message,
            "span": str(self.span) if self.span else None,
        }

    def __str__(self) -> str:
        where = f" ({self.span})" if self.span else ""
        return f"{self.rule_label}{where}: {self.message}"


@dataclass(frozen=True)
class Program:
    """
    A forest logic program with derived indexes.

    Indexes are computed lazily and cached; programs are immutable values.
    """

    rules: Tuple[Rule, ...] = ()
    diagnostics: Tuple[Diagnostic, ...] = field(default=(), compare=False)
    source: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.rules, tuple):
            object.__setattr__(self, "rules", tuple(self.rules))

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def label_of(self, index: int) -> str:
        return self.rules[index].label or f"r{index + 1}"

    def labelled(self) -> Iterator[Tuple[str, Rule]]:
        for index, rule in enumerate(self.rules):
            yield self.label_of(index), rule

    @cached_property
    def constants(self) -> Tuple[str, ...]:
        """cts(P), sorted."""
        names = {term.name for rule in self.rules for term in rule.constants}
        return tuple(sorted(names))

    @cached_property
    def predicates(self) -> Dict[str, Predicate]:
        """Predicate symbols in order of first appearance."""
        found: Dict[str, Predicate] = {}
        for rule in self.rules:
            atoms = ([rule.head] if rule.head else []) + list(rule.literals)
            for lit in atoms:
                found.setdefault(lit.predicate.name, lit.predicate)
        return found

    @cached_property
    def unary_predicates(self) -> Tuple[Predicate, ...]:
        return tuple(p for p in self.predicates.values() if p.arity == 1)

    @cached_property
    def binary_predicates(self) -> Tuple[Predicate, ...]:
        return tuple(p for p in self.predicates.values() if p.arity == 2)

    @cached_property
    def free_predicates(self) -> FrozenSet[Predicate]:
        """Predicates with a free rule over distinct variables only."""
        free = set()
        for rule in self.rules:
            if rule.free and all(t.is_variable for t in rule.head.args) and len(set(rule.head.args)) == len(rule.head.args):
                free.add(rule.head.predicate)
        return frozenset(free)

    @cached_property
    def free_rules(self) -> Dict[Predicate, Tuple[Rule, ...]]:
        grouped: Dict[Predicate, List[Rule]] = {}
        for rule in self.rules:
            if rule.free:
                grouped.setdefault(rule.head.predicate, []).append(rule)
        return {pred: tuple(rules) for pred, rules in grouped.items()}

    @cached_property
    def _rules_for(self) -> Dict[Predicate, Tuple[Rule, ...]]:
        grouped: Dict[Predicate, List[Rule]] = {}
        for rule in self.rules:
            if rule.head is not None and not rule.free:
                grouped.setdefault(rule.head.predicate, []).append(rule)
        return {pred: tuple(rules) for pred, rules in grouped.items()}

    def rules_for(self, predicate: Predicate) -> Tuple[Rule, ...]:
        """P_q: the non-free rules with head predicate q, in source order."""
        return self._rules_for.get(predicate, ())

    @cached_property
    def constraints(self) -> Tuple[Rule, ...]:
        return tuple(rule for rule in self.rules if rule.is_constraint)

    def predicate(self, name: str) -> Optional[Predicate]:
        return self.predicates.get(name)

    def extend(self, *others: "Program") -> "Program":
        """Union of programs, keeping rule order (self first)."""
        rules = list(self.rules)
        diagnostics = list(self.diagnostics)
        for other in others:
            rules.extend(other.rules)
            diagnostics.extend(other.diagnostics)
        return Program(tuple(rules), tuple(diagnostics), self.source)

    def __str__(self) -> str:
        return "\n".join(str(rule) for rule in self.rules)


# ---------------------------------------------------------------------------
# Interpretations
# ---------------------------------------------------------------------------


class GroundAtom(NamedTuple):
    """``p(e1, ..., en)`` over universe elements or forest nodes."""

    predicate: str
    args: Tuple[Any, ...]

    @property
    def sort_key(self) -> Tuple[str, Tuple[str, ...]]:
        return (self.predicate, tuple(str(a) for a in self.args))

    def __str__(self) -> str:
        return f"{format_predicate_name(self.predicate)}({','.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class OpenInterpretation:
    """An open interpretation (U, M): a universe and the atoms true over it."""

    universe: FrozenSet[str]
    atoms: FrozenSet[GroundAtom] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "universe", frozenset(self.universe))
        object.__setattr__(self, "atoms", frozenset(self.atoms))
        if not self.universe:
            raise ValueError("A universe must be non-empty")
        for atom in self.atoms:
            stray = [a for a in atom.args if a not in self.universe]
            if stray:
                raise ValueError(f"Atom {atom} mentions elements outside the universe: {stray}")

    def sorted_universe(self) -> List[str]:
        return sorted(self.universe)

    def sorted_atoms(self) -> List[GroundAtom]:
        return sorted(self.atoms, key=lambda atom: atom.sort_key)

    def atoms_of(self, predicate: str) -> List[GroundAtom]:
        return [atom for atom in self.sorted_atoms() if atom.predicate == predicate]

    def holds(self, predicate: str, *args: str) -> bool:
        return GroundAtom(predicate, tuple(args)) in self.atoms

    def to_dict(self) -> Dict[str, Any]:
        return {
            "universe": self.sorted_universe(),
            "atoms": [str(atom) for atom in self.sorted_atoms()],
        }

    def __str__(self) -> str:
        atoms = ", ".join(str(a) for a in self.sorted_atoms())
        return f"U={{{', '.join(self.sorted_universe())}}} M={{{atoms}}}"


# ---------------------------------------------------------------------------
# Search configuration and verdicts
# ---------------------------------------------------------------------------


class SearchMode(Enum):
    """Which blocking regime the engine runs."""

    AUTO = "auto"
    FULL = "full"
    SIMPLE = "simple"


class KVariant(Enum):
    """Which redundancy threshold to use when none is given explicitly."""

    RULE9 = "rule9"
    APPENDIX = "appendix"


@dataclass
class SearchConfig:
    """Engine configuration."""

    mode: SearchMode = SearchMode.AUTO
    redundancy_k: Optional[int] = None
    depth_cap: Optional[int] = 50
    seed: int = 0
    emit_trace: bool = False
    k_variant: KVariant = KVariant.RULE9
    deepening: bool = True
    step_limit: Optional[int] = 1_000_000
    check_invariants: bool = True
    verify_models: bool = False

    def __post_init__(self):
        if isinstance(self.mode, str):
            self.mode = SearchMode(self.mode)
        if isinstance(self.k_variant, str):
            self.k_variant = KVariant(self.k_variant)
        if self.redundancy_k is not None and self.redundancy_k < 1:
            raise ValueError("redundancy_k must be positive")
        if self.depth_cap is not None and self.depth_cap < 0:
            raise ValueError("depth_cap cannot be negative")
        if self.seed < 0:
            raise ValueError("seed cannot be negative")
        if self.step_limit is not None and self.step_limit < 1:
            raise ValueError("step_limit must be positive")

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]]) -> "SearchConfig":
        """Build a config from the ``engine`` section of the YAML configuration."""
        data = data or {}
        known = {name for name in cls.__dataclass_fields__}
        return cls(**{key: value for key, value in data.items() if key in known})

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mode": self.mode.value,
            "redundancy_k": self.redundancy_k,
            "depth_cap": self.depth_cap,
            "seed": self.seed,
            "emit_trace": self.emit_trace,
            "k_variant": self.k_variant.value,
            "deepening": self.deepening,
            "step_limit": self.step_limit,
            "check_invariants": self.check_invariants,
            "verify_models": self.verify_models,
        }


class VerdictStatus(Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    UNKNOWN = "UNKNOWN"


@dataclass
class SearchStats:
    """Counters collected while searching."""

    steps: int = 0
    branches: int = 0
    backtracks: int = 0
    iterations: int = 0
    depth_reached: int = 0
    pruned: bool = False
    duration: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "steps": self.steps,
            "branches": self.branches,
            "backtracks": self.backtracks,
            "iterations": self.iterations,
            "depth_reached": self.depth_reached,
            "pruned": self.pruned,
            "duration": round(self.duration, 4),
        }


@dataclass
class Verdict:
    """Outcome of a satisfiability check."""

    status: VerdictStatus
    predicate: str = ""
    model: Optional[OpenInterpretation] = None
    structure: Optional["CompletionStructure"] = None
    reason: str = ""
    mode: Optional[SearchMode] = None
    stats: SearchStats = field(default_factory=SearchStats)
    trace: List[str] = field(default_factory=list)

    def __post_init__(self):
        if self.status == VerdictStatus.SAT and self.model is None:
            raise ValueError("A SAT verdict carries a model")
        if self.status != VerdictStatus.SAT and self.model is not None:
            raise ValueError("Only SAT verdicts carry a model")

    @classmethod
    def sat(cls, predicate: str, model: OpenInterpretation, structure=None, **kwargs) -> "Verdict":
        return cls(VerdictStatus.SAT, predicate, model, structure, **kwargs)

    @classmethod
    def unsat(cls, predicate: str, **kwargs) -> "Verdict":
        return cls(VerdictStatus.UNSAT, predicate, **kwargs)

    @classmethod
    def unknown(cls, predicate: str, reason: str, **kwargs) -> "Verdict":
        return cls(VerdictStatus.UNKNOWN, predicate, reason=reason, **kwargs)

    @property
    def is_sat(self) -> bool:
        return self.status == VerdictStatus.SAT

    @property
    def is_unsat(self) -> bool:
        return self.status == VerdictStatus.UNSAT

    @property
    def is_unknown(self) -> bool:
        return self.status == VerdictStatus.UNKNOWN

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "predicate": self.predicate,
            "mode": self.mode.value if self.mode else None,
            "reason": self.reason,
            "model": self.model.to_dict() if self.model else None,
            "stats": self.stats.to_dict(),
        }

    def __str__(self) -> str:
        suffix = f" ({self.reason})" if self.reason else ""
        return f"{self.status.value} {self.predicate}{suffix}"
