"""
SHOQ concept expressions, axioms and knowledge bases.

Every concept prints to a canonical string. Conjunction and disjunction
operands are ordered alphabetically by their printed form, so structurally
equal concepts print, compare and hash alike; that string doubles as the
predicate name of the concept in translated programs.
"""

from dataclasses import dataclass
from typing import ClassVar, Dict, Iterable, List, Set, Tuple, Union

# Printing precedence: a lower number binds looser.
_OR, _AND, _UNARY = 1, 2, 3


class Concept:
    """Base class of concept expressions."""

    precedence: ClassVar[int] = _UNARY

    def render(self) -> str:
        raise NotImplementedError

    def at(self, level: int) -> str:
        text = self.render()
        return f"({text})" if self.precedence < level else text

    def children(self) -> Tuple["Concept", ...]:
        return ()

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True, eq=True)
class Atomic(Concept):
    name: str

    def __post_init__(self):
        if not self.name or not self.name[0].isupper():
            raise ValueError(f"Concept names start with an uppercase letter: {self.name!r}")

    def render(self) -> str:
        return self.name


@dataclass(frozen=True, eq=True)
class Nominal(Concept):
    individual: str

    def __post_init__(self):
        if not self.individual or not self.individual[0].islower():
            raise ValueError(f"Individuals start with a lowercase letter: {self.individual!r}")

    def render(self) -> str:
        return f"{{{self.individual}}}"


@dataclass(frozen=True, eq=True)
class Not(Concept):
    operand: Concept

    def render(self) -> str:
        return f"not {self.operand.at(_UNARY)}"

    def children(self):
        return (self.operand,)


def _ordered(left: Concept, right: Concept) -> Tuple[Concept, Concept]:
    if left.at(_UNARY) <= right.at(_UNARY):
        return left, right
    return right, left


@dataclass(frozen=True, eq=True)
class And(Concept):
    left: Concept
    right: Concept
    precedence: ClassVar[int] = _AND

    def __post_init__(self):
        left, right = _ordered(self.left, self.right)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def render(self) -> str:
        return f"{self.left.at(_UNARY)} and {self.right.at(_UNARY)}"

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, eq=True)
class Or(Concept):
    left: Concept
    right: Concept
    precedence: ClassVar[int] = _OR

    def __post_init__(self):
        left, right = _ordered(self.left, self.right)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def render(self) -> str:
        return f"{self.left.at(_UNARY)} or {self.right.at(_UNARY)}"

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, eq=True)
class Exists(Concept):
    role: str
    filler: Concept

    def render(self) -> str:
        return f"exists {self.role}.{self.filler.at(_UNARY)}"

    def children(self):
        return (self.filler,)


@dataclass(frozen=True, eq=True)
class Forall(Concept):
    role: str
    filler: Concept

    def render(self) -> str:
        return f"forall {self.role}.{self.filler.at(_UNARY)}"

    def children(self):
        return (self.filler,)


@dataclass(frozen=True, eq=True)
class AtLeast(Concept):
    n: int
    role: str
    filler: Concept

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("Number restrictions need n >= 0")

    def render(self) -> str:
        return f"atleast {self.n} {self.role}.{self.filler.at(_UNARY)}"

    def children(self):
        return (self.filler,)


@dataclass(frozen=True, eq=True)
class AtMost(Concept):
    n: int
    role: str
    filler: Concept

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("Number restrictions need n >= 0")

    def render(self) -> str:
        return f"atmost {self.n} {self.role}.{self.filler.at(_UNARY)}"

    def children(self):
        return (self.filler,)


@dataclass(frozen=True)
class Role:
    """A role name as a member of the closure."""

    name: str

    def __str__(self) -> str:
        return self.name


Expression = Union[Concept, Role]


def roles_in(concept: Concept) -> Set[str]:
    found: Set[str] = set()
    stack = [concept]
    while stack:
        current = stack.pop()
        role = getattr(current, "role", None)
        if role is not None:
            found.add(role)
        stack.extend(current.children())
    return found


def concept_names(concept: Concept) -> Set[str]:
    found: Set[str] = set()
    stack = [concept]
    while stack:
        current = stack.pop()
        if isinstance(current, Atomic):
            found.add(current.name)
        stack.extend(current.children())
    return found


def individuals_in(concept: Concept) -> Set[str]:
    found: Set[str] = set()
    stack = [concept]
    while stack:
        current = stack.pop()
        if isinstance(current, Nominal):
            found.add(current.individual)
        stack.extend(current.children())
    return found


# ---------------------------------------------------------------------------
# Axioms and knowledge bases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConceptInclusion:
    sub: Concept
    sup: Concept

    def __str__(self) -> str:
        return f"{self.sub} <= {self.sup}"


@dataclass(frozen=True)
class RoleInclusion:
    sub: str
    sup: str

    def __str__(self) -> str:
        return f"{self.sub} <= {self.sup}"


@dataclass(frozen=True)
class Transitivity:
    role: str

    def __str__(self) -> str:
        return f"trans({self.role})"


Axiom = Union[ConceptInclusion, RoleInclusion, Transitivity]


@dataclass(frozen=True)
class DlKnowledgeBase:
    """A SHOQ knowledge base: terminological, role and transitivity axioms."""

    terminological: Tuple[ConceptInclusion, ...] = ()
    role_axioms: Tuple[RoleInclusion, ...] = ()
    transitive: Tuple[str, ...] = ()

    @classmethod
    def from_axioms(cls, axioms: Iterable[Axiom]) -> "DlKnowledgeBase":
        terminological: List[ConceptInclusion] = []
        role_axioms: List[RoleInclusion] = []
        transitive: List[str] = []
        for axiom in axioms:
            if isinstance(axiom, ConceptInclusion):
                terminological.append(axiom)
            elif isinstance(axiom, RoleInclusion):
                role_axioms.append(axiom)
            elif isinstance(axiom, Transitivity):
                if axiom.role not in transitive:
                    transitive.append(axiom.role)
            else:
                raise TypeError(f"Not an axiom: {axiom!r}")
        return cls(tuple(terminological), tuple(role_axioms), tuple(transitive))

    @property
    def axioms(self) -> List[Axiom]:
        return list(self.terminological) + list(self.role_axioms) + [Transitivity(r) for r in self.transitive]

    @property
    def is_empty(self) -> bool:
        return not (self.terminological or self.role_axioms or self.transitive)

    def subroles(self, role: str) -> Set[str]:
        """All S with S included in ``role`` under the reflexive transitive closure."""
        below: Dict[str, Set[str]] = {}
        for axiom in self.role_axioms:
            below.setdefault(axiom.sup, set()).add(axiom.sub)
        found = {role}
        frontier = [role]
        while frontier:
            current = frontier.pop()
            for sub in below.get(current, ()):
                if sub not in found:
                    found.add(sub)
                    frontier.append(sub)
        return found

    def is_simple_role(self, role: str) -> bool:
        """Neither transitive nor with a transitive subrole."""
        return not (self.subroles(role) & set(self.transitive))

    @property
    def role_names(self) -> Set[str]:
        names: Set[str] = set(self.transitive)
        for axiom in self.role_axioms:
            names.update((axiom.sub, axiom.sup))
        for axiom in self.terminological:
            names |= roles_in(axiom.sub) | roles_in(axiom.sup)
        return names

    @property
    def concept_names(self) -> Set[str]:
        names: Set[str] = set()
        for axiom in self.terminological:
            names |= concept_names(axiom.sub) | concept_names(axiom.sup)
        return names

    @property
    def individuals(self) -> Set[str]:
        names: Set[str] = set()
        for axiom in self.terminological:
            names |= individuals_in(axiom.sub) | individuals_in(axiom.sup)
        return names

    def __str__(self) -> str:
        return "\n".join(str(axiom) for axiom in self.axioms)
