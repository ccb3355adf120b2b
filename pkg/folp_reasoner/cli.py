"""
Command-line interface for the FoLP reasoner.

Exit codes: 0 satisfiable (or success), 1 unsatisfiable, 2 unknown,
3 usage, parse or program errors.
"""

import json
import logging
import os
import sys
from typing import Any, Dict, Iterable, Optional

import click
import yaml
from rich.console import Console
from rich.logging import RichHandler

from . import __version__
from .analysis import analyze_program
from .config import load_config
from .engine import solve
from .errors import FolpError, UnknownPredicateError
from .models import Program, SearchConfig, Verdict, VerdictStatus
from .oracle import bounded_sat, is_answer_set
from .reports import FORMATS, ReportGenerator
from .shoq import FHybridKB, fhybrid_bounded_check, fhybrid_sat, translate, translate_simple
from .textio import format_model, parse_dl_file, parse_model, parse_program_file, print_program, to_dot

logger = logging.getLogger(__name__)

EXIT_SAT = 0
EXIT_UNSAT = 1
EXIT_UNKNOWN = 2
EXIT_ERROR = 3

EXIT_CODES = {
    VerdictStatus.SAT: EXIT_SAT,
    VerdictStatus.UNSAT: EXIT_UNSAT,
    VerdictStatus.UNKNOWN: EXIT_UNKNOWN,
}

SEED_ENV = "FOLP_SEED"

error_console = Console(stderr=True)


class FolpGroup(click.Group):
    """A command group whose commands return exit codes and whose errors exit with 3."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            code = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.ClickException as exc:
            exc.show()
            code = EXIT_ERROR
        except click.Abort:
            error_console.print("Aborted!")
            code = EXIT_ERROR
        except FolpError as exc:
            error_console.print(f"[red]error:[/red] {exc}", markup=True, highlight=False)
            code = EXIT_ERROR
        code = code if isinstance(code, int) else 0
        if standalone_mode:
            sys.exit(code)
        return code


def setup_logging(level: str):
    """Send library logging to stderr through rich."""
    numeric = logging.getLevelName(str(level).upper())
    if not isinstance(numeric, int):
        raise click.BadParameter(f"unknown log level {level}", param_hint="--log-level")
    root = logging.getLogger()
    root.setLevel(numeric)
    if not any(isinstance(handler, RichHandler) for handler in root.handlers):
        root.addHandler(RichHandler(console=error_console, show_path=False))


def _program(path: str) -> Program:
    return parse_program_file(path)


def _unary(program: Program, name: str):
    found = program.predicate(name)
    if found is None:
        raise UnknownPredicateError(f"unknown predicate {name}")
    if found.arity != 1:
        raise UnknownPredicateError(f"{found} is not a unary predicate")
    return found


def _seed_override() -> Optional[int]:
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise click.BadParameter(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def search_config(engine: Dict[str, Any], **overrides) -> SearchConfig:
    """Engine settings: the YAML section, then flags that were given, then ``FOLP_SEED``."""
    settings = dict(engine)
    settings.update({key: value for key, value in overrides.items() if value is not None})
    seed = _seed_override()
    if seed is not None:
        settings["seed"] = seed
    try:
        return SearchConfig.from_dict(settings)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None


def _write_or_echo(text: str, output: Optional[str]):
    if output:
        ReportGenerator().write(text, output)
    else:
        click.echo(text, nl=False)


def _echo_trace(lines: Iterable[str]):
    for line in lines:
        click.echo(line, err=True)


@click.group(cls=FolpGroup)
@click.version_option(version=__version__)
@click.option("--config", "-c", "config_path", type=click.Path(dir_okay=False), help="Configuration file path")
@click.option("--log-level", default=None, help="Logging level (DEBUG, INFO, WARNING, ...)")
@click.pass_context
def main(ctx, config_path, log_level):
    """FoLP reasoner - satisfiability checking for forest logic programs."""
    config = load_config(config_path)
    setup_logging(log_level or config["logging"]["level"])
    ctx.obj = config


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--pred", "-p", required=True, help="Unary predicate to check")
@click.option("--mode", type=click.Choice(["auto", "full", "simple"]), default=None, help="Blocking regime")
@click.option("--depth-cap", type=int, default=None, help="Largest tree depth explored")
@click.option("--no-depth-cap", is_flag=True, help="Search without a depth cap")
@click.option("--k-variant", type=click.Choice(["rule9", "appendix"]), default=None, help="Redundancy threshold variant")
@click.option("--k", "redundancy_k", type=int, default=None, help="Explicit redundancy threshold")
@click.option("--seed", type=int, default=None, help="Branch-order seed (0 keeps source order)")
@click.option("--step-limit", type=int, default=None, help="Give up with UNKNOWN after this many steps")
@click.option("--emit-model", is_flag=True, help="List the universe and atoms of a model")
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), default=None, help="Write the final structure as DOT")
@click.option("--trace", is_flag=True, help="Print the applied rules to stderr")
@click.option("--verify", is_flag=True, help="Re-check models with the ground oracle")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="txt", help="Output format")
@click.pass_obj
def check(config, file, pred, mode, depth_cap, no_depth_cap, k_variant, redundancy_k, seed, step_limit,
          emit_model, dot_path, trace, verify, fmt):
    """Check whether PRED is satisfiable with respect to the program in FILE."""
    program = _program(file)
    settings = search_config(
        config["engine"],
        mode=mode,
        depth_cap=depth_cap,
        k_variant=k_variant,
        redundancy_k=redundancy_k,
        seed=seed,
        step_limit=step_limit,
        emit_trace=True if trace else None,
        verify_models=True if verify else None,
    )
    if no_depth_cap:
        settings.depth_cap = None
    verdict = solve(program, pred, settings)
    _report(verdict, config, fmt, emit_model, trace)

    if dot_path:
        if verdict.structure is not None:
            ReportGenerator().write(to_dot(verdict.structure), dot_path)
        else:
            error_console.print(f"no structure to draw for a {verdict.status.value} verdict")
    return EXIT_CODES[verdict.status]


def _report(verdict: Verdict, config: Dict[str, Any], fmt: str, emit_model: bool, trace: bool):
    reporter = ReportGenerator(config.get("reports"))
    emit = True if emit_model else None
    click.echo(reporter.render_verdict(verdict, fmt, emit), nl=False)
    if trace:
        _echo_trace(verdict.trace)
    if verdict.is_unknown:
        logger.warning("%s", verdict.reason)
    for line in reporter.summary_lines(verdict):
        logger.info("%s", line)


@main.command("translate")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None, help="Write the program here")
@click.option("--with-rules", type=click.Path(exists=True, dir_okay=False), default=None, help="Append the rules of a .folp file")
@click.option("--simple", is_flag=True, help="Reject transitivity and produce a simple program")
@click.option("--number-cap", type=int, default=None, help="Largest number in a number restriction")
@click.pass_obj
def translate_command(config, file, output, with_rules, simple, number_cap):
    """Translate the SHOQ knowledge base in FILE to a forest logic program."""
    cap = number_cap if number_cap is not None else config["shoq"]["number_cap"]
    kb = parse_dl_file(file, cap)
    program = translate_simple(kb, cap) if simple else translate(kb, cap)
    if with_rules:
        program = program.extend(_program(with_rules))
    _write_or_echo(print_program(program), output)
    return EXIT_SAT


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--pretty", is_flag=True, help="Show a table instead of key: value lines")
@click.option("--json", "as_json", is_flag=True, help="Emit the analysis as JSON")
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), default=None, help="Write the marked dependency graph as DOT")
def analyze(file, pretty, as_json, dot_path):
    """Report shape diagnostics, degrees, rank and simplicity of a program."""
    program = parse_program_file(file)
    analysis = analyze_program(program)
    reporter = ReportGenerator()
    if as_json:
        click.echo(json.dumps(analysis.to_dict(), indent=2))
    elif pretty:
        Console().print(reporter.render_analysis(program))
    else:
        for line in reporter.analysis_lines(analysis):
            click.echo(line)
    if dot_path and analysis.valid:
        reporter.write(to_dot(analysis.graph), dot_path)
    return EXIT_SAT if analysis.valid else EXIT_UNSAT


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--pred", "-p", default=None, help="Unary predicate that must hold somewhere")
@click.option("--max-extra", type=int, default=None, help="Largest number of anonymous elements")
@click.option("--verify-model", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Check a model written by check --emit-model instead of searching")
@click.option("--emit-model", is_flag=True, help="List the universe and atoms of a model")
@click.pass_obj
def oracle(config, file, pred, max_extra, verify_model, emit_model):
    """Search or verify open answer sets of FILE by grounding."""
    program = _program(file)
    settings = config["oracle"]

    if verify_model:
        with open(verify_model, "r", encoding="utf-8") as handle:
            _, model = parse_model(handle.read(), verify_model)
        if model is None:
            raise click.UsageError(f"{verify_model} holds no model")
        valid = is_answer_set(program, model.universe, model.atoms)
        if valid and pred:
            valid = bool(model.atoms_of(_unary(program, pred).name))
        click.echo("VALID" if valid else "INVALID")
        return EXIT_SAT if valid else EXIT_UNSAT

    if pred is None:
        raise click.UsageError("--pred is required unless --verify-model is given")
    extra = max_extra if max_extra is not None else settings["max_extra"]
    found = bounded_sat(program, _unary(program, pred), extra, settings["atom_limit"], settings["node_limit"])
    if found is None:
        click.echo(format_model(Verdict.unknown(pred, f"no answer set with at most {extra} extra elements")), nl=False)
        return EXIT_UNKNOWN
    click.echo(format_model(Verdict.sat(pred, found), emit_model), nl=False)
    return EXIT_SAT


@main.command()
@click.option("--dl", "dl_path", required=True, type=click.Path(exists=True, dir_okay=False), help="SHOQ knowledge base")
@click.option("--rules", "rules_path", required=True, type=click.Path(exists=True, dir_okay=False), help="Forest logic program")
@click.option("--pred", "-p", required=True, help="Rule predicate or concept name to check")
@click.option("--bounded", is_flag=True, help="Enumerate small models instead of running the tableau")
@click.option("--max-domain", type=int, default=None, help="Largest domain for --bounded")
@click.option("--mode", type=click.Choice(["auto", "full", "simple"]), default=None, help="Blocking regime")
@click.option("--depth-cap", type=int, default=None, help="Largest tree depth explored")
@click.option("--seed", type=int, default=None, help="Branch-order seed")
@click.option("--emit-model", is_flag=True, help="List the universe and atoms of a model")
@click.pass_obj
def fhybrid(config, dl_path, rules_path, pred, bounded, max_domain, mode, depth_cap, seed, emit_model):
    """Check satisfiability of PRED in an f-hybrid knowledge base."""
    shoq_settings = config["shoq"]
    kb = FHybridKB(parse_dl_file(dl_path, shoq_settings["number_cap"]), _program(rules_path))

    if bounded:
        domain = max_domain if max_domain is not None else shoq_settings["max_domain"]
        model = fhybrid_bounded_check(
            kb, pred, domain, shoq_settings["domain_bit_limit"], config["oracle"]["node_limit"]
        )
        click.echo(ReportGenerator().render_hybrid(model, emit_model), nl=False)
        return EXIT_SAT if model is not None else EXIT_UNKNOWN

    settings = search_config(config["engine"], mode=mode, depth_cap=depth_cap, seed=seed)
    verdict = fhybrid_sat(kb, pred, settings, shoq_settings["number_cap"])
    _report(verdict, config, "txt", emit_model, False)
    return EXIT_CODES[verdict.status]


@main.command("config")
@click.pass_obj
def show_config(config):
    """Show the effective configuration."""
    click.echo(yaml.safe_dump(config, default_flow_style=False, sort_keys=False), nl=False)
    return EXIT_SAT


def run(argv: Iterable[str]) -> int:
    """Run the command line on ``argv`` and return the exit code."""
    return main.main(args=list(argv), prog_name="folp-reasoner", standalone_mode=False)


if __name__ == "__main__":
    main()
