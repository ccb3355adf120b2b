"""
FoLP Reasoner

Satisfiability checking for forest logic programs under the open answer
set semantics, with a ground oracle and a SHOQ front end.
"""

__version__ = "1.0.0"
__author__ = "FoLP Reasoner Team"

from .engine import ForestSolver, solve
from .models import OpenInterpretation, Program, SearchConfig, SearchMode, Verdict, VerdictStatus
from .reports import ReportGenerator
from .textio import parse_dl, parse_program, print_program

__all__ = [
    "ForestSolver",
    "OpenInterpretation",
    "Program",
    "ReportGenerator",
    "SearchConfig",
    "SearchMode",
    "Verdict",
    "VerdictStatus",
    "parse_dl",
    "parse_program",
    "print_program",
    "solve",
]
