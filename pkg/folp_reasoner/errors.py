"""
Exception hierarchy for the FoLP reasoner.
"""

from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from .models import Diagnostic, SourceSpan


class FolpError(Exception):
    """Base class for all reasoner errors."""


class ParseError(FolpError):
    """Syntax error in a `.folp`, `.dl` or model file."""

    def __init__(self, message: str, span: "SourceSpan" = None):
        self.message = message
        self.span = span
        super().__init__(f"{span}: {message}" if span else message)


class InvalidProgramError(FolpError):
    """The program violates the FoLP rule shapes."""

    def __init__(self, diagnostics: Sequence["Diagnostic"]):
        self.diagnostics = list(diagnostics)
        lines = "; ".join(str(d) for d in self.diagnostics[:5])
        more = f" (+{len(self.diagnostics) - 5} more)" if len(self.diagnostics) > 5 else ""
        super().__init__(f"invalid forest logic program: {lines}{more}")


class FreshNameError(FolpError):
    """A generated predicate name collides with a program predicate."""


class UnknownPredicateError(FolpError):
    """A query names a predicate that is absent or has the wrong arity."""


class EngineInvariantError(FolpError):
    """The tableau scheduler broke one of its own ordering contracts."""


class ModelExtractionError(FolpError):
    """A model was requested from a structure that is not clash-free."""


class OracleScaleError(FolpError):
    """The ground search space exceeds the configured desk-scale guard."""

    def __init__(self, detail: str = ""):
        self.detail = detail
        super().__init__(f"oracle scale exceeded{': ' + detail if detail else ''}")


class TranslationError(FolpError):
    """The DL knowledge base cannot be compiled to a FoLP."""


class InterpretationError(FolpError):
    """A DL interpretation is inconsistent with the knowledge base signature."""


class ConfigError(FolpError):
    """A configuration file cannot be read or has the wrong shape."""
