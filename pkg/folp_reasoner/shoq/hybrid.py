"""
f-hybrid knowledge bases: a SHOQ knowledge base paired with a forest logic program.

Satisfiability is decided by translation into a single program; the bounded
checker enumerates models directly and serves as an independent cross-check.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

from ..engine.solver import solve
from ..errors import OracleScaleError, UnknownPredicateError
from ..models import GroundAtom, Literal, OpenInterpretation, Predicate, Program, Rule, SearchConfig, Variable, Verdict
from ..oracle import DEFAULT_NODE_LIMIT, GroundProgram, GroundRule, GroundRuleKind, find_answer_set, ground
from ..utils import fresh_name, fresh_names
from .concepts import Concept, DlKnowledgeBase
from .semantics import DlInterpretation, satisfies
from .translate import DEFAULT_NUMBER_CAP, concept_predicate, translate

logger = logging.getLogger(__name__)

DEFAULT_DOMAIN_BIT_LIMIT = 16


@dataclass(frozen=True)
class FHybridKB:
    """A pair of a DL knowledge base and a forest logic program."""

    sigma: DlKnowledgeBase = field(default_factory=DlKnowledgeBase)
    program: Program = field(default_factory=Program)

    @property
    def dl_names(self) -> Set[Tuple[str, int]]:
        """Signature of the DL part as (name, arity) pairs."""
        names = {(name, 1) for name in self.sigma.concept_names}
        names |= {(name, 2) for name in self.sigma.role_names}
        return names

    def is_dl_atom(self, atom: GroundAtom) -> bool:
        return (atom.predicate, len(atom.args)) in self.dl_names


@dataclass(frozen=True)
class HybridModel:
    """A model (U, I, M) of an f-hybrid knowledge base."""

    universe: FrozenSet[str]
    interpretation: DlInterpretation
    atoms: FrozenSet[GroundAtom]

    def to_dict(self) -> Dict[str, object]:
        return {
            "universe": sorted(self.universe),
            "interpretation": self.interpretation.to_dict(),
            "atoms": [str(a) for a in sorted(self.atoms, key=lambda a: a.sort_key)],
        }


def _holds(atom: GroundAtom, interpretation: DlInterpretation) -> bool:
    if len(atom.args) == 1:
        return atom.args[0] in interpretation.concept(atom.predicate)
    return tuple(atom.args) in interpretation.role(atom.predicate)


def project(gp: GroundProgram, interpretation: DlInterpretation, kb: FHybridKB) -> GroundProgram:
    """
    Evaluate the DL literals of a ground program against a DL interpretation.

    A rule goes when a head DL literal agrees with the interpretation or a
    body DL literal disagrees with it; otherwise its DL literals are removed.
    A free rule over a DL atom always has an agreeing head literal.
    """
    rules: List[GroundRule] = []
    for rule in gp.rules:
        if rule.head is not None and kb.is_dl_atom(rule.head):
            if rule.kind == GroundRuleKind.FREE or _holds(rule.head, interpretation):
                continue
        if any(kb.is_dl_atom(a) and not _holds(a, interpretation) for a in rule.positive):
            continue
        if any(kb.is_dl_atom(a) and _holds(a, interpretation) for a in rule.negative):
            continue
        positive = frozenset(a for a in rule.positive if not kb.is_dl_atom(a))
        negative = frozenset(a for a in rule.negative if not kb.is_dl_atom(a))
        head = rule.head
        kind = rule.kind
        if head is not None and kb.is_dl_atom(head):
            head, kind = None, GroundRuleKind.CONSTRAINT
        rules.append(GroundRule(kind, head, positive, negative, rule.label))
    return GroundProgram(tuple(rules), gp.universe)


def hybrid_program(kb: FHybridKB, number_cap: Optional[int] = DEFAULT_NUMBER_CAP, extra_concepts=()) -> Program:
    """The single program translate(sigma) together with the rules of kb."""
    return translate(kb.sigma, number_cap, extra_concepts).extend(kb.program)


def fhybrid_sat(
    kb: FHybridKB,
    predicate: str,
    config: Optional[SearchConfig] = None,
    number_cap: Optional[int] = DEFAULT_NUMBER_CAP,
) -> Verdict:
    """Satisfiability of a predicate of the rules or a concept name of sigma."""
    program = hybrid_program(kb, number_cap)
    pred = program.predicate(predicate)
    if pred is None:
        raise UnknownPredicateError(f"unknown predicate {predicate}")
    return solve(program, pred, config or SearchConfig())


def concept_sat(
    kb: FHybridKB,
    concept: Concept,
    config: Optional[SearchConfig] = None,
    number_cap: Optional[int] = DEFAULT_NUMBER_CAP,
) -> Verdict:
    """Satisfiability of a concept expression through a fresh ``p_C(X) :- C(X).``"""
    program = hybrid_program(kb, number_cap, extra_concepts=(concept,))
    name = fresh_name("p_C", program.predicates)
    head = Literal(Predicate(name, 1), (Variable("X"),))
    query = Rule(head, (Literal(concept_predicate(concept), (Variable("X"),)),))
    program = program.extend(Program((query,)))
    return solve(program, head.predicate, config or SearchConfig())


def _interpretations(
    universe: List[str],
    concepts: List[str],
    roles: List[str],
) -> Iterator[DlInterpretation]:
    pairs = [(x, y) for x in universe for y in universe]
    slots: List[Tuple[str, object]] = [(c, e) for c in concepts for e in universe]
    slots += [(r, p) for r in roles for p in pairs]
    for bits in itertools.product((False, True), repeat=len(slots)):
        concept_ext: Dict[str, Set[str]] = {c: set() for c in concepts}
        role_ext: Dict[str, Set[Tuple[str, str]]] = {r: set() for r in roles}
        for (name, value), on in zip(slots, bits):
            if not on:
                continue
            if isinstance(value, tuple):
                role_ext[name].add(value)
            else:
                concept_ext[name].add(value)
        yield DlInterpretation(frozenset(universe), concept_ext, role_ext)


def fhybrid_bounded_check(
    kb: FHybridKB,
    predicate: str,
    max_domain: int = 3,
    domain_bit_limit: int = DEFAULT_DOMAIN_BIT_LIMIT,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> Optional[HybridModel]:
    """
    Enumerate models (U, I, M) over domains of at most ``max_domain`` elements.

    U holds the program constants and the individuals of sigma plus fresh
    names, all distinct. ``predicate`` may be a program predicate (some atom in
    M) or a concept name (non-empty extension).

    Raises:
        OracleScaleError: an interpretation needs more than ``domain_bit_limit`` bits
    """
    names = sorted(set(kb.program.constants) | kb.sigma.individuals)
    concepts = sorted(kb.sigma.concept_names)
    roles = sorted(kb.sigma.role_names)
    is_concept = predicate in kb.sigma.concept_names and kb.program.predicate(predicate) is None

    for size in range(max(1, len(names)), max_domain + 1):
        universe = names + fresh_names("x", size - len(names), names)
        bits = len(concepts) * size + len(roles) * size * size
        if bits > domain_bit_limit:
            raise OracleScaleError(f"{bits} interpretation bits over {size} elements, limit {domain_bit_limit}")
        gp = ground(kb.program, universe) if kb.program.rules else GroundProgram((), frozenset(universe))
        logger.debug("bounded hybrid check over %s (%d bits)", universe, bits)
        for interpretation in _interpretations(universe, concepts, roles):
            if not satisfies(kb.sigma, interpretation):
                continue
            if is_concept and not interpretation.concept(predicate):
                continue
            projected = project(gp, interpretation, kb)
            wanted = None if is_concept else predicate
            found = find_answer_set(projected, wanted, node_limit)
            if found is not None:
                return HybridModel(frozenset(universe), interpretation, found)
    return None


def as_open_interpretation(model: HybridModel) -> OpenInterpretation:
    """The rule part of a hybrid model as an open interpretation."""
    return OpenInterpretation(model.universe, model.atoms)
