"""
Base class and shared helpers for the tableau expansion rules.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from ...forest import NodeId
from ...models import Literal, Predicate, Program, Rule, RuleKind, SearchMode, SignedPredicate, Term
from ..structure import CompletionStructure, Target, format_target, update


@dataclass
class SearchContext:
    """
    Program-level facts the rules consult while expanding a structure.

    ``pruned`` is raised whenever a rule skips a fresh successor because of
    the depth limit; the solver reads it to tell Unsat from Unknown.
    """

    program: Program
    mode: SearchMode = SearchMode.FULL
    depth_limit: Optional[int] = None
    pruned: bool = False
    upreds: Tuple[Predicate, ...] = field(init=False)
    bpreds: Tuple[Predicate, ...] = field(init=False)
    free: FrozenSet[Predicate] = field(init=False)
    labels: Dict[Rule, str] = field(init=False, repr=False)

    def __post_init__(self):
        self.upreds = self.program.unary_predicates
        self.bpreds = self.program.binary_predicates
        self.free = self.program.free_predicates
        self.labels = {}
        for label, rule in self.program.labelled():
            self.labels.setdefault(rule, label)

    def label(self, rule: Rule) -> str:
        return self.labels.get(rule, "?")

    def allows_child_of(self, x: NodeId) -> bool:
        if self.depth_limit is not None and x.depth + 1 > self.depth_limit:
            self.pruned = True
            return False
        return True

    def free_covers(self, predicate: Predicate, nodes: Sequence[NodeId]) -> bool:
        """A free rule makes predicate(nodes) a free choice."""
        if predicate in self.free:
            return True
        for rule in self.program.free_rules.get(predicate, ()):
            if all(term_matches(term, node) for term, node in zip(rule.head.args, nodes)):
                return True
        return False

    def implicit_arc_targets(self, x: NodeId, cs: CompletionStructure) -> List[str]:
        """
        Constants c such that some binary rule f(s, c) applies to x without
        needing a positive binary literal, and x has no arc to c yet.
        """
        present = set(cs.successors(x))
        targets: List[str] = []
        for rule in self.program.rules:
            if rule.kind != RuleKind.BINARY:
                continue
            shape = rule.binary_shape
            if shape.target.is_variable or not term_matches(shape.source, x):
                continue
            if any(lit.positive for lit in shape.gamma):
                continue
            name = shape.target.name
            if NodeId(name) not in present and name not in targets:
                targets.append(name)
        return targets


def term_matches(term: Term, node: NodeId) -> bool:
    """A variable matches any node, a constant only its own tree root."""
    return term.is_variable or (node.is_root and node.root == term.name)


def head_matches(rule: Rule, nodes: Sequence[NodeId]) -> bool:
    return all(term_matches(term, node) for term, node in zip(rule.head.args, nodes))


@dataclass(frozen=True)
class Application:
    """A rule found applicable at a target, ready to branch."""

    rule_id: str
    node: NodeId
    target: Target
    signed: Optional[SignedPredicate] = None

    def describe(self) -> str:
        what = f" {self.signed}" if self.signed is not None else ""
        return f"{self.rule_id} {format_target(self.target)}{what}"


# One branch: the successor structure and a short description for the trace.
Branch = Tuple[CompletionStructure, str]


def literal_holds(cs: CompletionStructure, lit: Literal, target: Target) -> bool:
    return cs.has(target, lit.signed)


def literal_refuted(cs: CompletionStructure, lit: Literal, target: Target) -> bool:
    return cs.has(target, lit.signed.negate())


def refute(
    cs: CompletionStructure,
    obligations: Callable[[CompletionStructure], Optional[List[Tuple[Literal, Target]]]],
) -> Iterator[Branch]:
    """
    Satisfy every refutation obligation, one at a time.

    ``obligations`` returns the flip options of the first obligation still
    open in a structure, None when all are met, or an empty list when an
    open obligation cannot be met. Each option adds the complement of a
    literal at its target. Options are taken depth-first so later
    obligations see the effect of earlier flips.
    """
    stack: List[Tuple[CompletionStructure, List[str]]] = [(cs, [])]
    while stack:
        current, flips = stack.pop()
        options = obligations(current)
        if options is None:
            yield current, " ".join(flips) if flips else "refuted"
            continue
        branches = []
        for lit, target in options:
            branch = current.clone()
            flip_literal(branch, lit, target)
            if branch.dead:
                continue
            branches.append((branch, flips + [f"{lit.negate().signed}@{format_target(target)}"]))
        # reversed so the first option is explored first
        stack.extend(reversed(branches))


def flip_literal(cs: CompletionStructure, lit: Literal, target: Target):
    """Record the complement of ``lit`` at ``target``, creating a missing ES arc first."""
    if isinstance(target, tuple):
        x, y = target
        if y not in cs.successors(x):
            cs.ensure_es(x, y.root)
    update(cs, None, lit.signed.negate(), target)


class ExpansionRule(ABC):
    """
    Base class for all expansion rules.

    ``find`` locates an application at a node, ``expand`` turns it into
    branches. A rule that returns no branches closes the current branch.
    """

    rule_id: str = ""

    def __init__(self, context: SearchContext):
        """
        Initialize the rule.

        Args:
            context: Shared search context
        """
        self.context = context
        self.rule_name = self.__class__.__name__

    @abstractmethod
    def find(self, cs: CompletionStructure, x: NodeId) -> Optional[Application]:
        """
        Locate an application of this rule at node x.

        Args:
            cs: Completion structure
            x: Node under expansion

        Returns:
            The application, or None when the rule does not apply at x
        """

    @abstractmethod
    def expand(self, cs: CompletionStructure, application: Application) -> Iterator[Branch]:
        """
        Branches produced by an application found on ``cs``.

        ``cs`` itself is never modified.
        """

    def describe(self) -> Dict[str, str]:
        return {"rule": self.rule_id, "name": self.rule_name}
