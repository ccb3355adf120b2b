"""
The completion tableau driver: depth-first search over expansion choices.
"""

import logging
import random
import time
from typing import Iterator, List, Optional, Tuple, Union

from ..analysis import depth_bound, eliminate_constraints, is_simple, rank, redundancy_bound, validate_folp
from ..errors import EngineInvariantError, InvalidProgramError, UnknownPredicateError
from ..forest import NodeId
from ..models import Predicate, Program, SearchConfig, SearchMode, SearchStats, Verdict
from ..oracle import is_answer_set
from .applicability import blocking_still_holds, check_blocked, is_saturated
from .model import extract_model
from .rules import Application, ExpandUnaryNegative, ExpansionRule, SearchContext, build_rules
from .structure import CompletionStructure, init_completion, is_redundant

logger = logging.getLogger(__name__)

# A pending branch: the structure plus the trace text of the step producing it.
Pending = Iterator[Tuple[CompletionStructure, str]]


class _StepLimitReached(Exception):
    pass


class _Dead:
    """Marker for a branch closed by redundancy."""


DEAD = _Dead()


def _labelled(application: Application, branches: Pending) -> Pending:
    prefix = application.describe()
    for branch, detail in branches:
        yield branch, f"{prefix} {detail}"


class ForestSolver:
    """
    Satisfiability checker for unary predicates of a forest logic program.

    The program is validated and its constraints are rewritten once; each
    call to :meth:`solve` then runs a seeded depth-first search, optionally
    deepening the tree-depth limit one level at a time.
    """

    def __init__(self, program: Program, config: Optional[SearchConfig] = None):
        """
        Prepare a program for checking.

        Args:
            program: The forest logic program
            config: Search settings

        Raises:
            InvalidProgramError: the program is not a forest logic program
        """
        self.config = config or SearchConfig()
        diagnostics = validate_folp(program)
        if diagnostics:
            raise InvalidProgramError(diagnostics)
        self.source_program = program
        self.program = eliminate_constraints(program)
        self.mode = self._select_mode()
        p = len(self.program.unary_predicates)
        self.k = self.config.redundancy_k or redundancy_bound(p, self.config.k_variant.value)
        self.bound = depth_bound(p, self.k, self.mode)
        self.rank = rank(self.program)
        self.stats = SearchStats()
        self.trace: List[str] = []
        self._random = random.Random(self.config.seed)

    def _select_mode(self) -> SearchMode:
        if self.config.mode != SearchMode.AUTO:
            return self.config.mode
        return SearchMode.SIMPLE if is_simple(self.program) else SearchMode.FULL

    def resolve(self, predicate: Union[Predicate, str]) -> Predicate:
        """
        Raises:
            UnknownPredicateError: unknown name or not a unary predicate
        """
        name = predicate.name if isinstance(predicate, Predicate) else predicate
        found = self.source_program.predicate(name)
        if found is None:
            raise UnknownPredicateError(f"unknown predicate {name}")
        if found.arity != 1:
            raise UnknownPredicateError(f"{found} is not a unary predicate")
        return found

    # -- search --------------------------------------------------------------

    def solve(self, predicate: Union[Predicate, str]) -> Verdict:
        """Decide whether ``predicate`` holds for some element of some open answer set."""
        pred = self.resolve(predicate)
        self.stats = SearchStats()
        self.trace = []
        self._random = random.Random(self.config.seed)
        started = time.perf_counter()
        try:
            verdict = self._deepen(pred)
        finally:
            self.stats.duration = time.perf_counter() - started
        verdict.stats = self.stats
        verdict.mode = self.mode
        verdict.trace = list(self.trace)
        logger.info("%s in %d steps (%s mode)", verdict, self.stats.steps, self.mode.value)
        return verdict

    def _limits(self, floor: int = 0) -> List[Optional[int]]:
        cap = self.config.depth_cap
        if cap is None:
            return [None]
        if self.config.deepening:
            return list(range(min(floor, cap), cap + 1))
        return [cap]

    def _deepen(self, pred: Predicate) -> Verdict:
        """
        Run the search seed by seed.

        The first branching point under a seed splits the search into its
        alternatives (for a seed at a constant, the rules and successor
        mappings that justify the predicate there). Each alternative is
        deepened on its own, so the first alternative with a model at any
        depth up to the cap wins over later ones with shallower models.
        """
        context = SearchContext(self.program, self.mode, self.config.depth_cap)
        rules = build_rules(context)
        pruned = False
        try:
            for seed, text in self._ordered(self._initial(pred)):
                self.stats.branches += 1
                self._record(text)
                outcome = self._step(seed, context, rules)
                if outcome is None:
                    return self._sat(pred, seed)
                if outcome is DEAD:
                    continue
                application, branches = outcome
                for cs, detail in self._ordered(_labelled(application, branches)):
                    found, exhausted = self._deepen_branch(pred, cs, detail)
                    if found is not None:
                        return self._sat(pred, found)
                    pruned = pruned or not exhausted
                pruned = pruned or context.pruned
        except _StepLimitReached:
            return Verdict.unknown(pred.name, f"step limit {self.config.step_limit} exceeded")

        if pruned:
            self.stats.pruned = True
            if self.config.depth_cap is not None and self.config.depth_cap < self.bound:
                return Verdict.unknown(pred.name, f"depth cap {self.config.depth_cap} reached below bound {self.bound}")
        return Verdict.unsat(pred.name)

    def _deepen_branch(
        self, pred: Predicate, cs: CompletionStructure, text: str
    ) -> Tuple[Optional[CompletionStructure], bool]:
        """A complete structure below ``cs`` or None, and whether no limit cut the search."""
        floor = max(n.depth for n in cs.nodes())
        for limit in self._limits(floor):
            self.stats.iterations += 1
            context = SearchContext(self.program, self.mode, limit)
            rules = build_rules(context)
            logger.info("searching for %s below '%s' with depth limit %s", pred, text, limit)
            found = self._search(iter([(cs.clone(), text)]), context, rules)
            if found is not None:
                return found, True
            if not context.pruned:
                return None, True
        return None, False

    def _sat(self, pred: Predicate, cs: CompletionStructure) -> Verdict:
        model = extract_model(cs)
        if self.config.verify_models and not is_answer_set(self.source_program, model.universe, model.atoms):
            raise EngineInvariantError(f"extracted model for {pred} is not an open answer set")
        return Verdict.sat(pred.name, model, cs)

    def _initial(self, pred: Predicate) -> Pending:
        for constant in self.program.constants:
            yield init_completion(pred, self.program, False, constant), f"seed {pred} {constant}"
        yield init_completion(pred, self.program, True), f"seed {pred} anonymous"

    def _ordered(self, pending: Pending) -> Pending:
        if not self.config.seed:
            return pending
        branches = list(pending)
        self._random.shuffle(branches)
        return iter(branches)

    def _search(self, start: Pending, context: SearchContext, rules: List[ExpansionRule]) -> Optional[CompletionStructure]:
        stack: List[Pending] = [start]
        while stack:
            try:
                cs, text = next(stack[-1])
            except StopIteration:
                stack.pop()
                self.stats.backtracks += 1
                continue
            self.stats.branches += 1
            if cs.dead:
                continue
            self._record(text)
            outcome = self._step(cs, context, rules)
            if outcome is None:
                return cs
            if outcome is DEAD:
                continue
            application, branches = outcome
            stack.append(self._ordered(_labelled(application, branches)))
            self.stats.depth_reached = max(self.stats.depth_reached, max(n.depth for n in cs.nodes()))
        return None

    def _record(self, text: str):
        self.stats.steps += 1
        limit = self.config.step_limit
        if limit is not None and self.stats.steps > limit:
            raise _StepLimitReached()
        if self.config.emit_trace:
            self.trace.append(f"STEP {self.stats.steps} {text}")
        logger.debug("step %d: %s", self.stats.steps, text)

    def _eligible(self, cs: CompletionStructure, x: NodeId, context: SearchContext) -> bool:
        if cs.is_constant(x):
            return True
        return all(is_saturated(cs, y, context) for y in x.ancestors())

    def _step(self, cs: CompletionStructure, context: SearchContext, rules: List[ExpansionRule]):
        """
        Next application on ``cs``: None when complete, DEAD when a node is
        redundant, otherwise the application and its branches.
        """
        for pair in list(cs.bl):
            if not blocking_still_holds(cs, pair[0], pair[1], self.mode, context):
                cs.bl.discard(pair)

        blocked = cs.blocked
        for x in cs.nodes():
            if x in blocked or not self._eligible(cs, x, context):
                continue
            if is_saturated(cs, x, context):
                # redundancy applies to saturated, unblocked nodes only; simple mode has no such rule
                if self.mode == SearchMode.FULL and not cs.is_constant(x) and is_redundant(cs, x, self.k):
                    logger.debug("node %s is redundant", x)
                    return DEAD
                continue
            if x not in cs.touched and not cs.is_constant(x):
                blocker = check_blocked(cs, x, self.mode, context)
                if blocker is not None:
                    cs.bl.add((blocker, x))
                    blocked[x] = blocker
                    if self.config.emit_trace:
                        self.trace.append(f"BLOCK {blocker} {x}")
                    continue
            for rule in rules:
                application = rule.find(cs, x)
                if application is not None:
                    if self.config.check_invariants:
                        self._check_invariants(cs, x, rule, application, context)
                    return application, rule.expand(cs, application)
            raise EngineInvariantError(f"node {x} is neither saturated nor expandable")
        return None

    def _check_invariants(
        self,
        cs: CompletionStructure,
        x: NodeId,
        rule: ExpansionRule,
        application: Application,
        context: SearchContext,
    ):
        if x in cs.blocked:
            raise EngineInvariantError(f"expansion at blocked node {x}")
        if not cs.is_constant(x) and x.parent is not None and not is_saturated(cs, x.parent, context):
            raise EngineInvariantError(f"expansion at {x} before its predecessor is saturated")
        if len(cs.ef.children(x)) > self.rank:
            raise EngineInvariantError(f"node {x} has more than {self.rank} children")
        if isinstance(rule, ExpandUnaryNegative):
            if any(not expanded and sp.positive for sp, expanded in cs.content(x).items()):
                raise EngineInvariantError(f"{application.describe()} while a positive predicate is unexpanded")
            if any(not cs.decided(x, q) for q in context.upreds):
                raise EngineInvariantError(f"{application.describe()} while a unary predicate is undecided")


def solve(program: Program, predicate: Union[Predicate, str], config: Optional[SearchConfig] = None) -> Verdict:
    """
    Check satisfiability of a unary predicate.

    Args:
        program: A forest logic program, constraints allowed
        predicate: The unary predicate or its name
        config: Search settings

    Returns:
        A Sat verdict with a model, Unsat, or Unknown with a reason

    Raises:
        InvalidProgramError: the program is not a forest logic program
        UnknownPredicateError: the predicate is unknown or not unary
    """
    return ForestSolver(program, config).solve(predicate)
