"""
Report generator for verdicts and program analyses.
"""

import json
import os
from datetime import datetime
from typing import Any, Dict, List, Optional

from rich.table import Table

from .analysis import ProgramAnalysis, analyze_program
from .models import Program, Verdict
from .shoq.hybrid import HybridModel
from .textio.modelio import format_model

FORMATS = ("txt", "json")


class ReportGenerator:
    """Render verdicts and analyses as text, JSON or rich tables."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Initialize the report generator.

        Args:
            config: The ``reports`` section of the configuration
        """
        self.config = config or {}
        self.emit_model = self.config.get("emit_model", True)
        self.indent = self.config.get("json_indent", 2)

    def render_verdict(self, verdict: Verdict, fmt: str = "txt", emit_model: Optional[bool] = None) -> str:
        """
        Render a verdict.

        Args:
            verdict: The result of a check
            fmt: ``txt`` for the line-oriented model format, ``json`` for the
                full record with search statistics
            emit_model: Override the configured model emission for ``txt``

        Returns:
            The report text, newline terminated
        """
        fmt = fmt.lower()
        if fmt == "txt":
            emit = self.emit_model if emit_model is None else emit_model
            return format_model(verdict, emit)
        if fmt == "json":
            data = verdict.to_dict()
            data["generated_at"] = datetime.now().isoformat()
            if verdict.trace:
                data["trace"] = list(verdict.trace)
            return json.dumps(data, indent=self.indent, ensure_ascii=False) + "\n"
        raise ValueError(f"Unsupported output format: {fmt}")

    def summary_lines(self, verdict: Verdict) -> List[str]:
        """A short human-readable account of a verdict, for stderr."""
        stats = verdict.stats
        lines = [str(verdict)]
        if verdict.mode is not None:
            lines.append(f"mode: {verdict.mode.value}")
        lines.append(
            f"steps: {stats.steps}, branches: {stats.branches}, "
            f"backtracks: {stats.backtracks}, iterations: {stats.iterations}"
        )
        lines.append(f"duration: {stats.duration:.2f}s")
        return lines

    def analysis_lines(self, analysis: ProgramAnalysis) -> List[str]:
        """``key: value`` lines for the plain ``analyze`` output."""
        lines = [f"valid: {str(analysis.valid).lower()}"]
        for diagnostic in analysis.diagnostics:
            lines.append(f"diagnostic: {diagnostic}")
        lines.append(f"constants: {', '.join(analysis.program.constants)}")
        lines.append(f"free: {', '.join(analysis.free_predicates)}")
        if not analysis.valid:
            return lines
        for name, degree in analysis.degrees.items():
            lines.append(f"degree {name}: {degree}")
        lines.append(f"rank: {analysis.rank}")
        lines.append(f"simple: {str(analysis.simple).lower()}")
        graph = analysis.graph
        lines.append(f"marked graph: {len(graph.vertices)} vertices, {len(graph.arcs)} arcs, {len(graph.marked)} marked")
        for source, target in sorted(graph.marked):
            lines.append(f"marked arc: {source} -> {target}")
        lines.append(f"redundancy k: {analysis.redundancy_k}")
        lines.append(f"depth bound: {analysis.depth_bound}")
        return lines

    def render_analysis(self, program: Program) -> Table:
        """The analysis of a program as a rich table."""
        analysis = analyze_program(program)
        table = Table(title=program.source or "program", show_header=True, header_style="bold")
        table.add_column("Property")
        table.add_column("Value")

        status = "[green]yes[/green]" if analysis.valid else "[red]no[/red]"
        table.add_row("Forest logic program", status)
        for diagnostic in analysis.diagnostics:
            table.add_row("Diagnostic", str(diagnostic))
        table.add_row("Rules", str(len(program)))
        table.add_row("Constants", ", ".join(program.constants) or "-")
        table.add_row("Free predicates", ", ".join(analysis.free_predicates) or "-")
        if analysis.valid:
            for name, degree in analysis.degrees.items():
                table.add_row(f"degree({name})", str(degree))
            table.add_row("Rank", str(analysis.rank))
            table.add_row("Simple", "yes" if analysis.simple else "no")
            marked = ", ".join(f"{p}->{q}" for p, q in sorted(analysis.graph.marked)) or "-"
            table.add_row("Marked arcs", marked)
            table.add_row("Redundancy k", str(analysis.redundancy_k))
            table.add_row("Depth bound", str(analysis.depth_bound))
        return table

    def write(self, text: str, path: str) -> str:
        """Write a rendered report, creating the parent directory; returns the path."""
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        return path

    def render_hybrid(self, model: Optional[HybridModel], emit_model: bool = True) -> str:
        """
        Render the outcome of a bounded hybrid check: ``SAT`` with the
        universe, the rule atoms and ``dl`` lines for the DL extensions, or
        ``UNKNOWN`` when no model exists within the bound.
        """
        if model is None:
            return "UNKNOWN\n"
        lines = ["SAT"]
        if emit_model:
            lines.extend(f"universe {element}" for element in sorted(model.universe))
            lines.extend(f"atom {atom}" for atom in sorted(model.atoms, key=lambda atom: atom.sort_key))
            interpretation = model.interpretation
            extensions = [
                f"dl {name}({element})"
                for name, members in sorted(interpretation.concepts.items())
                for element in sorted(members)
            ]
            extensions += [
                f"dl {name}({x},{y})"
                for name, pairs in sorted(interpretation.roles.items())
                for x, y in sorted(pairs)
            ]
            lines.extend(extensions)
        return "\n".join(lines) + "\n"
