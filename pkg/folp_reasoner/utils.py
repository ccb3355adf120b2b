"""
Utility functions for the FoLP reasoner.
"""

import re
from typing import Dict, Hashable, Iterable, List, Mapping, Set, TypeVar

V = TypeVar("V", bound=Hashable)

IDENTIFIER_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

# Words the FoLP grammar reserves; a predicate with one of these names is quoted.
RESERVED_WORDS = frozenset({"v", "not"})


def is_identifier(name: str) -> bool:
    """Check whether a name can be written unquoted in the FoLP syntax."""
    return bool(IDENTIFIER_RE.match(name)) and name not in RESERVED_WORDS


def format_predicate_name(name: str) -> str:
    """
    Render a predicate name for the FoLP syntax.

    Identifiers are written as they are; anything else (canonical concept
    names such as ``exists child.Human``) is double-quoted with ``\\`` and
    ``"`` escaped.
    """
    if is_identifier(name):
        return name
    escaped = name.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def fresh_name(base: str, taken: Iterable[str]) -> str:
    """
    Return ``base`` or the first ``base<N>`` (N = 1, 2, ...) not in ``taken``.

    Args:
        base: Preferred name
        taken: Names already in use

    Returns:
        A name outside ``taken``
    """
    used = set(taken)
    if base not in used:
        return base
    index = 1
    while f"{base}{index}" in used:
        index += 1
    return f"{base}{index}"


def fresh_names(base: str, count: int, taken: Iterable[str]) -> List[str]:
    """Return ``count`` distinct names ``base1, base2, ...`` avoiding ``taken``."""
    used = set(taken)
    names = []
    index = 1
    while len(names) < count:
        candidate = f"{base}{index}"
        if candidate not in used:
            names.append(candidate)
            used.add(candidate)
        index += 1
    return names


def strongly_connected_components(graph: Mapping[V, Iterable[V]]) -> List[List[V]]:
    """
    Tarjan's algorithm without recursion.

    Args:
        graph: Mapping ``vertex -> successors``; successors missing from the
            mapping are treated as sinks

    Returns:
        The components in reverse topological order
    """
    index: Dict[V, int] = {}
    lowlink: Dict[V, int] = {}
    stack: List[V] = []
    on_stack: Set[V] = set()
    result: List[List[V]] = []

    for start in graph:
        if start in index:
            continue
        index[start] = lowlink[start] = len(index)
        stack.append(start)
        on_stack.add(start)
        work = [(start, iter(graph.get(start, ())))]
        while work:
            vertex, successors = work[-1]
            descended = False
            for successor in successors:
                if successor not in index:
                    index[successor] = lowlink[successor] = len(index)
                    stack.append(successor)
                    on_stack.add(successor)
                    work.append((successor, iter(graph.get(successor, ()))))
                    descended = True
                    break
                if successor in on_stack:
                    lowlink[vertex] = min(lowlink[vertex], index[successor])
            if descended:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[vertex])
            if lowlink[vertex] == index[vertex]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.append(member)
                    if member == vertex:
                        break
                result.append(component)
    return result


def reachable(graph: Mapping[V, Iterable[V]], start: V) -> Set[V]:
    """Vertices reachable from ``start`` by a path of length >= 1."""
    seen: Set[V] = set()
    frontier = list(graph.get(start, ()))
    while frontier:
        vertex = frontier.pop()
        if vertex in seen:
            continue
        seen.add(vertex)
        frontier.extend(graph.get(vertex, ()))
    return seen
