"""
Concrete syntax: `.folp` and `.dl` parsing and printing, the emitted model
format, and Graphviz export.
"""

from .dot import to_dot
from .modelio import format_model, parse_model
from .parser import parse_dl, parse_dl_file, parse_program, parse_program_file
from .printer import print_dl, print_program

__all__ = [
    "format_model",
    "parse_dl",
    "parse_dl_file",
    "parse_model",
    "parse_program",
    "parse_program_file",
    "print_dl",
    "print_program",
    "to_dot",
]
