"""
Ground open answer set semantics at desk scale.

Grounding over a finite universe, the GL-reduct, least models, answer set
checking and a bounded search for open answer sets. The engine is verified
against these functions.
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .errors import FolpError, OracleScaleError
from .models import (
    Constant,
    GroundAtom,
    Literal,
    OpenInterpretation,
    Predicate,
    Program,
    Rule,
    Term,
)
from .utils import fresh_names

logger = logging.getLogger(__name__)

DEFAULT_ATOM_LIMIT = 24
DEFAULT_NODE_LIMIT = 500_000


class GroundRuleKind(Enum):
    FREE = "free"
    DEFINITE = "definite"
    CONSTRAINT = "constraint"


@dataclass(frozen=True)
class GroundRule:
    """A variable-free rule ``head :- positive, not negative``."""

    kind: GroundRuleKind
    head: Optional[GroundAtom] = None
    positive: FrozenSet[GroundAtom] = frozenset()
    negative: FrozenSet[GroundAtom] = frozenset()
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "positive", frozenset(self.positive))
        object.__setattr__(self, "negative", frozenset(self.negative))
        if self.kind == GroundRuleKind.CONSTRAINT and self.head is not None:
            raise ValueError("A ground constraint has no head")
        if self.kind != GroundRuleKind.CONSTRAINT and self.head is None:
            raise ValueError("Only constraints lack a head")
        if self.kind == GroundRuleKind.FREE and (self.positive or self.negative):
            raise ValueError("A free rule has an empty body")

    @property
    def atoms(self) -> Set[GroundAtom]:
        found = set(self.positive) | set(self.negative)
        if self.head is not None:
            found.add(self.head)
        return found

    def __str__(self) -> str:
        if self.kind == GroundRuleKind.FREE:
            return f"{self.head} v not {self.head}."
        body = [str(a) for a in sorted(self.positive, key=lambda a: a.sort_key)]
        body += [f"not {a}" for a in sorted(self.negative, key=lambda a: a.sort_key)]
        text = ", ".join(body)
        if self.head is None:
            return f":- {text}."
        return f"{self.head} :- {text}." if text else f"{self.head}."


@dataclass(frozen=True)
class GroundProgram:
    """A ground program together with the universe it was grounded over."""

    rules: Tuple[GroundRule, ...] = ()
    universe: FrozenSet[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "universe", frozenset(self.universe))

    @property
    def atoms(self) -> FrozenSet[GroundAtom]:
        found: Set[GroundAtom] = set()
        for rule in self.rules:
            found |= rule.atoms
        return frozenset(found)

    @property
    def constraints(self) -> List[GroundRule]:
        return [r for r in self.rules if r.kind == GroundRuleKind.CONSTRAINT]

    @property
    def is_positive(self) -> bool:
        return all(not r.negative and r.kind != GroundRuleKind.FREE for r in self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __str__(self) -> str:
        return "\n".join(str(rule) for rule in self.rules)


def _ground_atom(literal: Literal, binding: Dict[Term, str]) -> GroundAtom:
    args = tuple(binding[t] if t.is_variable else t.name for t in literal.args)
    return GroundAtom(literal.predicate.name, args)


def _value(term: Term, binding: Dict[Term, str]) -> str:
    return binding[term] if term.is_variable else term.name


def ground_rule(rule: Rule, universe: Iterable[str], label: Optional[str] = None) -> List[GroundRule]:
    """All instances of one rule; instances with a false inequality are dropped."""
    elements = sorted(universe)
    variables = rule.variables
    instances: List[GroundRule] = []
    for values in itertools.product(elements, repeat=len(variables)):
        binding = dict(zip(variables, values))
        if any(_value(i.left, binding) == _value(i.right, binding) for i in rule.inequalities):
            continue
        head = _ground_atom(rule.head, binding) if rule.head is not None else None
        if rule.free:
            instances.append(GroundRule(GroundRuleKind.FREE, head, label=label))
            continue
        positive = {_ground_atom(lit, binding) for lit in rule.literals if lit.positive}
        negative = {_ground_atom(lit, binding) for lit in rule.literals if not lit.positive}
        kind = GroundRuleKind.CONSTRAINT if head is None else GroundRuleKind.DEFINITE
        instances.append(GroundRule(kind, head, frozenset(positive), frozenset(negative), label))
    return instances


def ground(program: Program, universe: Iterable[str]) -> GroundProgram:
    """
    Ground a program over a finite universe.

    Raises:
        FolpError: the universe misses a program constant or is empty
    """
    elements = frozenset(universe)
    if not elements:
        raise FolpError("a universe must be non-empty")
    missing = set(program.constants) - elements
    if missing:
        raise FolpError(f"universe misses program constants: {', '.join(sorted(missing))}")
    rules: List[GroundRule] = []
    for label, rule in program.labelled():
        rules.extend(ground_rule(rule, elements, label))
    return GroundProgram(tuple(rules), elements)


def gl_reduct(gp: GroundProgram, interpretation: Iterable[GroundAtom]) -> GroundProgram:
    """
    The GL-reduct with respect to an interpretation.

    Rules whose negative body meets the interpretation are dropped, the rest
    lose their negative body. A free rule becomes a fact exactly when its atom
    is in the interpretation.
    """
    model = frozenset(interpretation)
    rules: List[GroundRule] = []
    for rule in gp.rules:
        if rule.kind == GroundRuleKind.FREE:
            if rule.head in model:
                rules.append(GroundRule(GroundRuleKind.DEFINITE, rule.head, label=rule.label))
            continue
        if rule.negative & model:
            continue
        rules.append(GroundRule(rule.kind, rule.head, rule.positive, frozenset(), rule.label))
    return GroundProgram(tuple(rules), gp.universe)


def least_model(
    gp: GroundProgram,
    derivations: Optional[Dict[GroundAtom, GroundRule]] = None,
) -> FrozenSet[GroundAtom]:
    """
    Bottom-up fixpoint of a positive program; constraints are ignored.

    Args:
        gp: Ground program without negation or free rules
        derivations: If given, filled with the rule that first derived each atom

    Raises:
        ValueError: the program is not positive
    """
    if not gp.is_positive:
        raise ValueError("least_model needs a positive program")
    waiting: Dict[GroundAtom, List[int]] = {}
    missing: List[int] = []
    queue: List[GroundAtom] = []
    model: Set[GroundAtom] = set()
    rules = [r for r in gp.rules if r.kind == GroundRuleKind.DEFINITE]

    def derive(index: int):
        head = rules[index].head
        if head not in model:
            model.add(head)
            queue.append(head)
            if derivations is not None:
                derivations[head] = rules[index]

    for index, rule in enumerate(rules):
        missing.append(len(rule.positive))
        for atom in rule.positive:
            waiting.setdefault(atom, []).append(index)
        if not rule.positive:
            derive(index)
    while queue:
        atom = queue.pop()
        for index in waiting.get(atom, ()):
            missing[index] -= 1
            if missing[index] == 0:
                derive(index)
    return frozenset(model)


def violated_constraints(gp: GroundProgram, model: FrozenSet[GroundAtom]) -> List[GroundRule]:
    return [
        rule
        for rule in gp.constraints
        if rule.positive <= model and not (rule.negative & model)
    ]


def is_answer_set_ground(gp: GroundProgram, model: Iterable[GroundAtom]) -> bool:
    """True iff ``model`` is an answer set of the ground program."""
    candidate = frozenset(model)
    reduct = gl_reduct(gp, candidate)
    if least_model(reduct) != candidate:
        return False
    return not violated_constraints(reduct, candidate)


def is_answer_set(program: Program, universe: Iterable[str], model: Iterable[GroundAtom]) -> bool:
    """
    True iff (universe, model) is an open answer set of the program.

    Atom arguments are compared as strings.
    """
    elements = frozenset(str(e) for e in universe)
    atoms = frozenset(GroundAtom(a.predicate, tuple(str(x) for x in a.args)) for a in model)
    if any(not set(a.args) <= elements for a in atoms):
        return False
    try:
        gp = ground(program, elements)
    except FolpError:
        return False
    return is_answer_set_ground(gp, atoms)


class _AnswerSetSearch:
    """
    Guess-and-check over the atoms that can change a reduct.

    Only atoms under negation and heads of free rules are guessed; every
    complete guess fixes the reduct, whose least model is an answer set when
    it reproduces the guess. Partial guesses are pruned with a lower bound
    (rules certain to survive) and an upper bound (rules that may survive).
    """

    def __init__(self, gp: GroundProgram, predicate: Optional[str], node_limit: int):
        self.gp = gp
        self.predicate = predicate
        self.node_limit = node_limit
        self.nodes = 0
        open_atoms: Set[GroundAtom] = set()
        for rule in gp.rules:
            open_atoms |= rule.negative
            if rule.kind == GroundRuleKind.FREE:
                open_atoms.add(rule.head)
        self.open = sorted(open_atoms, key=lambda a: a.sort_key)
        self.definite = [r for r in gp.rules if r.kind == GroundRuleKind.DEFINITE]
        self.free = [r for r in gp.rules if r.kind == GroundRuleKind.FREE]

    def _closure(self, guess: Dict[GroundAtom, bool], optimistic: bool) -> FrozenSet[GroundAtom]:
        rules: List[GroundRule] = []
        for rule in self.free:
            value = guess.get(rule.head)
            if value or (optimistic and value is None):
                rules.append(GroundRule(GroundRuleKind.DEFINITE, rule.head))
        for rule in self.definite:
            values = [guess.get(a) for a in rule.negative]
            if any(v is True for v in values):
                continue
            if not optimistic and any(v is None for v in values):
                continue
            rules.append(GroundRule(GroundRuleKind.DEFINITE, rule.head, rule.positive))
        return least_model(GroundProgram(tuple(rules), self.gp.universe))

    def _propagate(self, guess: Dict[GroundAtom, bool]) -> Optional[Tuple[FrozenSet[GroundAtom], FrozenSet[GroundAtom]]]:
        while True:
            lower = self._closure(guess, optimistic=False)
            upper = self._closure(guess, optimistic=True)
            changed = False
            for atom in self.open:
                value = guess.get(atom)
                if value is True and atom not in upper:
                    return None
                if value is False and atom in lower:
                    return None
                if value is None:
                    if atom in lower:
                        guess[atom] = True
                        changed = True
                    elif atom not in upper:
                        guess[atom] = False
                        changed = True
            for rule in self.gp.constraints:
                if rule.positive <= lower and all(guess.get(a) is False for a in rule.negative):
                    return None
            if self.predicate is not None and not any(a.predicate == self.predicate for a in upper):
                return None
            if not changed:
                return lower, upper

    def run(self) -> Optional[FrozenSet[GroundAtom]]:
        stack: List[Dict[GroundAtom, bool]] = [{}]
        while stack:
            self.nodes += 1
            if self.nodes > self.node_limit:
                raise OracleScaleError(f"more than {self.node_limit} search nodes")
            guess = stack.pop()
            bounds = self._propagate(guess)
            if bounds is None:
                continue
            lower, upper = bounds
            pending = [a for a in self.open if a not in guess]
            if not pending:
                if lower == upper and self._accepts(lower):
                    return lower
                continue
            atom = pending[0]
            # Push True first so that False is explored first.
            stack.append({**guess, atom: True})
            stack.append({**guess, atom: False})
        return None

    def _accepts(self, model: FrozenSet[GroundAtom]) -> bool:
        if self.predicate is not None and not any(a.predicate == self.predicate for a in model):
            return False
        return is_answer_set_ground(self.gp, model)


def find_answer_set(
    gp: GroundProgram,
    predicate: Optional[str] = None,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> Optional[FrozenSet[GroundAtom]]:
    """
    Search an answer set of a ground program.

    Args:
        gp: Ground program
        predicate: If given, only answer sets with an atom over it qualify
        node_limit: Maximum number of search nodes

    Returns:
        The first answer set found, or None

    Raises:
        OracleScaleError: the node limit was hit
    """
    return _AnswerSetSearch(gp, predicate, node_limit).run()


def answer_set_in(
    program: Program,
    universe: Iterable[str],
    predicate: Optional[str] = None,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> Optional[OpenInterpretation]:
    """An open answer set of the program over exactly this universe, if any."""
    elements = frozenset(universe)
    found = find_answer_set(ground(program, elements), predicate, node_limit)
    if found is None:
        return None
    return OpenInterpretation(elements, found)


def bounded_sat(
    program: Program,
    predicate: Predicate,
    max_extra: int = 3,
    atom_limit: int = DEFAULT_ATOM_LIMIT,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> Optional[OpenInterpretation]:
    """
    Search open answer sets with a p-atom over cts(P) plus up to ``max_extra`` fresh elements.

    Universes are tried smallest first; the first hit is returned.

    Raises:
        OracleScaleError: a ground program has more than ``atom_limit`` atoms
    """
    constants = list(program.constants)
    for extra in range(max_extra + 1):
        if extra == 0 and not constants:
            continue
        universe = constants + fresh_names("x", extra, constants)
        gp = ground(program, universe)
        atoms = len(gp.atoms)
        if atoms > atom_limit:
            raise OracleScaleError(f"{atoms} ground atoms over {len(universe)} elements, limit {atom_limit}")
        logger.debug("bounded_sat: universe %s, %d ground atoms", universe, atoms)
        found = find_answer_set(gp, predicate.name, node_limit)
        if found is not None:
            return OpenInterpretation(frozenset(universe), found)
    return None


def build_pk(program: Program, k: int, predicate: Predicate) -> Program:
    """
    Add k fresh constants and the constraint that p holds somewhere.

    The constraint is ``:- not p(x1), ..., not p(xk), not p(c1), ..., not p(cm).``
    over the program constants c1..cm.
    """
    if k < 1:
        raise ValueError("build_pk needs k >= 1")
    constants = list(program.constants)
    fresh = fresh_names("x", k, constants)
    body = tuple(
        Literal(predicate, (Constant(name),), positive=False) for name in fresh + constants
    )
    return program.extend(Program((Rule(None, body),)))
