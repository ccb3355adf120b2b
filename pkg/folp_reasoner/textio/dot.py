"""
Graphviz export of completion structures and dependency graphs.
"""

from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Union

from jinja2 import Environment, FileSystemLoader, Template

from ..analysis import MarkedGraph
from ..engine.structure import CompletionStructure
from ..forest import DepGraph

TEMPLATE_DIR = Path(__file__).parent / "templates"


def dot_escape(value: object) -> str:
    return str(value).replace("\\", "\\\\").replace('"', '\\"')


@lru_cache(maxsize=None)
def _environment() -> Environment:
    environment = Environment(
        loader=FileSystemLoader(str(TEMPLATE_DIR)),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )
    environment.filters["dot_escape"] = dot_escape
    return environment


def _template(name: str) -> Template:
    return _environment().get_template(name)


def _content(cs: CompletionStructure, target) -> str:
    members = sorted(cs.content(target), key=lambda sp: sp.sort_key)
    return "{" + ", ".join(str(sp) for sp in members) + "}"


def _structure_dot(cs: CompletionStructure) -> str:
    blocked = cs.blocked
    nodes = [
        {
            "id": str(x),
            "content": _content(cs, x),
            "blocked": x in blocked,
            "constant": cs.is_constant(x),
        }
        for x in cs.nodes()
    ]
    tree_arcs = [
        {"source": str(x), "target": str(y), "content": _content(cs, (x, y))}
        for x, y in sorted(cs.ef.tree_arcs(), key=lambda arc: (arc[0].sort_key, arc[1].sort_key))
    ]
    es_arcs = [
        {"source": str(x), "target": str(y), "content": _content(cs, (x, y))}
        for x, y in sorted(cs.ef.es_arcs(), key=lambda arc: (arc[0].sort_key, arc[1].sort_key))
    ]
    blocking = [{"blocker": str(y), "blocked": str(x)} for x, y in sorted(blocked.items())]
    return _template("structure.dot.j2").render(nodes=nodes, tree_arcs=tree_arcs, es_arcs=es_arcs, blocking=blocking)


def _graph_dot(name: str, vertices: List[str], edges: List[Dict[str, object]]) -> str:
    return _template("graph.dot.j2").render(name=name, vertices=vertices, edges=edges)


def to_dot(subject: Union[CompletionStructure, MarkedGraph, DepGraph]) -> str:
    """
    Render a completion structure or a dependency graph as Graphviz DOT.

    Structures show each node with its signed content; tree arcs are
    solid, ES arcs dashed, and each blocking pair is a dotted ``blocks``
    edge from blocker to blocked node. Marked arcs of a predicate
    dependency graph are drawn bold.
    """
    if isinstance(subject, CompletionStructure):
        return _structure_dot(subject)
    if isinstance(subject, MarkedGraph):
        edges = [
            {"source": p, "target": q, "marked": (p, q) in subject.marked}
            for p, q in sorted(subject.arcs)
        ]
        return _graph_dot("marked", list(subject.vertices), edges)
    if isinstance(subject, DepGraph):
        vertices = sorted(str(atom) for atom in subject.vertices)
        edges = sorted(
            ({"source": str(s), "target": str(t), "marked": False} for s, t in subject.arcs),
            key=lambda edge: (edge["source"], edge["target"]),
        )
        return _graph_dot("dependencies", vertices, edges)
    raise TypeError(f"cannot render {type(subject).__name__} as DOT")
