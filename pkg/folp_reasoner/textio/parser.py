"""
Parsers for `.folp` programs and `.dl` knowledge bases.
"""

import logging
import re
from typing import List, Optional, Tuple

from lark import Token, Transformer, Tree, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from ..analysis import validate_folp
from ..errors import FolpError, ParseError
from ..models import Inequality, Literal, Predicate, Program, Rule, SourceSpan, Term, make_term
from ..shoq.concepts import (
    And,
    AtLeast,
    AtMost,
    Atomic,
    ConceptInclusion,
    DlKnowledgeBase,
    Exists,
    Forall,
    Nominal,
    Not,
    Or,
    RoleInclusion,
    Transitivity,
)
from .grammar import dl_parser, folp_parser

logger = logging.getLogger(__name__)

_ESCAPE_RE = re.compile(r"\\(.)")


class _SpannedError(Exception):
    """Raised inside transformer callbacks; carries the offending position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column


def _span(filename: str, meta_or_token, text: str) -> SourceSpan:
    line = getattr(meta_or_token, "line", None) or 1
    column = getattr(meta_or_token, "column", None) or 1
    end_line = getattr(meta_or_token, "end_line", None) or line
    end_column = getattr(meta_or_token, "end_column", None) or column
    if (end_line, end_column) < (line, column):
        end_line, end_column = line, column
    return SourceSpan(filename, line, column, end_line, end_column)


def _error_span(filename: str, text: str, line: Optional[int], column: Optional[int]) -> SourceSpan:
    lines = text.splitlines() or [""]
    if not isinstance(line, int) or line < 1:
        line = len(lines)
        column = len(lines[-1]) + 1
    line = min(line, len(lines))
    column = column if isinstance(column, int) and column > 0 else 1
    return SourceSpan(filename, line, column, line, column)


def _unexpected_message(exc: UnexpectedInput) -> str:
    if isinstance(exc, UnexpectedEOF):
        return "unexpected end of input"
    if isinstance(exc, UnexpectedCharacters):
        return f"unexpected character {exc.char!r}"
    token = getattr(exc, "token", None)
    if token is not None and token.type == "$END":
        return "unexpected end of input"
    expected = sorted(getattr(exc, "expected", None) or getattr(exc, "accepts", None) or [])
    hint = f", expected one of {', '.join(expected[:6])}" if expected else ""
    return f"unexpected token {str(token)!r}{hint}"


class _ProgramBuilder(Transformer):
    """Turns a `.folp` parse tree into rules."""

    def __init__(self, filename: str, text: str):
        super().__init__()
        self.filename = filename
        self.text = text

    def NAME(self, token: Token) -> Token:
        return token

    def STRING(self, token: Token) -> Token:
        return Token("NAME", _ESCAPE_RE.sub(r"\1", token[1:-1]), token.start_pos, token.line, token.column)

    def pred(self, children) -> str:
        return str(children[0])

    def term(self, children) -> Term:
        (token,) = children
        name = str(token)
        if not name[0].isalpha():
            raise _SpannedError(f"term {name!r} must start with a letter", token.line, token.column)
        return make_term(name)

    def atom(self, children) -> Literal:
        name, *terms = children
        return Literal(Predicate(name, len(terms)), tuple(terms))

    def negated(self, children) -> Literal:
        return children[0].negate()

    def inequality(self, children) -> Inequality:
        return Inequality(children[0], children[1])

    def body(self, children) -> Tuple:
        return tuple(children)

    def label(self, children) -> str:
        return str(children[0])

    def free_rule(self, children) -> Rule:
        first, second = children
        if first != second:
            raise _SpannedError(f"free rule must repeat its atom: {first} v not {second}", 0, 0)
        return Rule(first, free=True)

    def constraint(self, children) -> Rule:
        return Rule(None, children[0])

    def definite(self, children) -> Rule:
        head, body = children
        return Rule(head, body or ())

    @v_args(meta=True)
    def statement(self, meta, children) -> Rule:
        label, rule = children
        span = _span(self.filename, meta, self.text)
        return Rule(rule.head, rule.body, rule.free, label, span)

    def start(self, children) -> List[Rule]:
        return list(children)


def parse_program(text: str, filename: str = "<string>", validate: bool = True) -> Program:
    """
    Parse FoLP source text.

    Args:
        text: Program source
        filename: Name used in spans and messages
        validate: Attach validate_folp diagnostics to the result

    Returns:
        Program, with diagnostics attached when validation is on

    Raises:
        ParseError: syntax error, located by its span
    """
    try:
        tree = folp_parser().parse(text)
        rules = _ProgramBuilder(filename, text).transform(tree)
    except UnexpectedInput as exc:
        span = _error_span(filename, text, getattr(exc, "line", None), getattr(exc, "column", None))
        raise ParseError(_unexpected_message(exc), span) from None
    except VisitError as exc:
        raise _wrap_visit_error(exc, filename, text) from None

    program = Program(tuple(rules), source=filename)
    if validate:
        diagnostics = validate_folp(program)
        if diagnostics:
            logger.debug("%s: %d diagnostics", filename, len(diagnostics))
        program = Program(program.rules, tuple(diagnostics), filename)
    return program


def _wrap_visit_error(exc: VisitError, filename: str, text: str) -> ParseError:
    original = exc.orig_exc
    tree = getattr(exc, "obj", None)
    meta = getattr(tree, "meta", None) if isinstance(tree, Tree) else None
    if isinstance(original, _SpannedError) and original.line:
        span = _error_span(filename, text, original.line, original.column)
    elif meta is not None and not getattr(meta, "empty", True):
        span = _span(filename, meta, text)
    else:
        span = _error_span(filename, text, 1, 1)
    message = original.message if isinstance(original, _SpannedError) else str(original)
    return ParseError(message, span)


def parse_program_file(path: str) -> Program:
    """Read and parse a `.folp` file."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_program(handle.read(), str(path))


class _KnowledgeBaseBuilder(Transformer):
    """Turns a `.dl` parse tree into axioms."""

    def __init__(self, number_cap: Optional[int] = None):
        super().__init__()
        self.number_cap = number_cap

    def atomic(self, children):
        return Atomic(str(children[0]))

    def nominal(self, children):
        return Nominal(str(children[0]))

    def not_(self, children):
        return Not(children[0])

    def and_(self, children):
        return And(children[0], children[1])

    def or_(self, children):
        return Or(children[0], children[1])

    def exists(self, children):
        return Exists(str(children[0]), children[1])

    def forall(self, children):
        return Forall(str(children[0]), children[1])

    def _number(self, token: Token) -> int:
        n = int(token)
        if self.number_cap is not None and n > self.number_cap:
            raise _SpannedError(f"number {n} exceeds the cap of {self.number_cap}", token.line, token.column)
        return n

    def atleast(self, children):
        return AtLeast(self._number(children[0]), str(children[1]), children[2])

    def atmost(self, children):
        return AtMost(self._number(children[0]), str(children[1]), children[2])

    def concept_inclusion(self, children):
        return ConceptInclusion(children[0], children[1])

    def role_inclusion(self, children):
        return RoleInclusion(str(children[0]), str(children[1]))

    def transitivity(self, children):
        return Transitivity(str(children[0]))

    def start(self, children):
        return DlKnowledgeBase.from_axioms(children)


def parse_dl(text: str, filename: str = "<string>", number_cap: Optional[int] = None):
    """
    Parse a `.dl` knowledge base.

    Raises:
        ParseError: syntax error or a number restriction above ``number_cap``
    """
    try:
        tree = dl_parser().parse(text)
        return _KnowledgeBaseBuilder(number_cap).transform(tree)
    except UnexpectedInput as exc:
        span = _error_span(filename, text, getattr(exc, "line", None), getattr(exc, "column", None))
        raise ParseError(_unexpected_message(exc), span) from None
    except VisitError as exc:
        if isinstance(exc.orig_exc, FolpError) and not isinstance(exc.orig_exc, ParseError):
            raise exc.orig_exc from None
        raise _wrap_visit_error(exc, filename, text) from None


def parse_dl_file(path: str, number_cap: Optional[int] = None):
    """Read and parse a `.dl` file."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_dl(handle.read(), str(path), number_cap)
