"""
The line-oriented verdict format written by ``check --emit-model``.

::

    SAT
    universe j
    universe j.1
    atom happy(j)
    atom friend(j,j.1)

Universe and atom lines are sorted so the output is byte-stable.
"""

import re
from typing import List, Optional, Tuple

from ..errors import ParseError
from ..models import GroundAtom, OpenInterpretation, SourceSpan, Verdict, VerdictStatus

_ATOM_RE = re.compile(r'^(?P<name>[A-Za-z_][A-Za-z0-9_]*|"(?:\\.|[^"\\])*")\((?P<args>[^()]*)\)$')
_ESCAPE_RE = re.compile(r"\\(.)")


def format_model(verdict: Verdict, emit_model: bool = True) -> str:
    """
    Render a verdict: the status line, then for SAT (when ``emit_model``)
    the universe and the atoms, one per line.
    """
    lines = [verdict.status.value]
    if emit_model and verdict.model is not None:
        lines.extend(format_interpretation(verdict.model))
    return "\n".join(lines) + "\n"


def format_interpretation(model: OpenInterpretation) -> List[str]:
    lines = [f"universe {element}" for element in model.sorted_universe()]
    lines.extend(f"atom {atom}" for atom in model.sorted_atoms())
    return lines


def _parse_atom(text: str, span: SourceSpan) -> GroundAtom:
    match = _ATOM_RE.match(text)
    if not match:
        raise ParseError(f"malformed atom {text!r}", span)
    name = match.group("name")
    if name.startswith('"'):
        name = _ESCAPE_RE.sub(r"\1", name[1:-1])
    args = tuple(arg.strip() for arg in match.group("args").split(","))
    if any(not arg for arg in args):
        raise ParseError(f"empty argument in {text!r}", span)
    return GroundAtom(name, args)


def parse_model(text: str, filename: str = "<model>") -> Tuple[VerdictStatus, Optional[OpenInterpretation]]:
    """
    Read a verdict written by :func:`format_model`.

    Returns:
        The status and, when universe lines are present, the interpretation

    Raises:
        ParseError: unknown status, unknown line kind or malformed atom
    """
    status: Optional[VerdictStatus] = None
    universe: List[str] = []
    atoms: List[GroundAtom] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        span = SourceSpan(filename, number, 1, number, len(raw) + 1)
        if status is None:
            try:
                status = VerdictStatus(line)
            except ValueError:
                raise ParseError(f"expected SAT, UNSAT or UNKNOWN, got {line!r}", span) from None
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "universe" and rest:
            universe.append(rest)
        elif keyword == "atom" and rest:
            atoms.append(_parse_atom(rest, span))
        else:
            raise ParseError(f"unexpected line {line!r}", span)

    if status is None:
        raise ParseError("empty model file", SourceSpan(filename, 1, 1, 1, 1))
    if not universe:
        if atoms:
            raise ParseError("atoms given without a universe", SourceSpan(filename, 1, 1, 1, 1))
        return status, None
    try:
        return status, OpenInterpretation(frozenset(universe), frozenset(atoms))
    except ValueError as exc:
        raise ParseError(str(exc), SourceSpan(filename, 1, 1, 1, 1)) from None
