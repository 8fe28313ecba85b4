"""
Command-line entry point for the ZAMO toolkit.

Subcommands:
1. parse: round-trip a Turtle file
2. query: evaluate a SELECT query, optionally after saturation
3. validate / pitfalls: check instance data and the shipped vocabularies
4. align: validate or export the SKOS alignment tables
5. samod: replay the SAMOD scenario suites
"""

import sys
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

import click

from . import __version__
from .alignment.exporter import export_alignment_table
from .alignment.mappings import alignment_graph, load_mappings, validate_mappings
from .config import Config, set_config
from .exceptions import SchemaConflict, SuiteError, SyntaxDiagnosticsError
from .inference.pitfalls import scan_pitfalls
from .inference.reasoner import Reasoner, RuleSet
from .inference.validator import validate_instances
from .models.enums import ExitStatus, ReportFormat, ZamoModule
from .models.schemas import Diagnostic, Pitfall, TestReport, Violation
from .ontology.schema import OntologySchema, extract_schema
from .ontology.vocabulary import default_prefixes, full_vocabulary
from .query.evaluator import evaluate
from .query.parser import parse_query
from .query.results import ResultTable
from .rdf.graph import Graph
from .samod.report import render_report
from .samod.runner import SamodRunner
from .samod.suite import load_suite
from .serialization.parser import parse_turtle_file
from .serialization.serializer import serialize_turtle
from .utils.helpers import read_text
from .utils.logger import get_logger, setup_logger

logger = get_logger(__name__)

DEFAULT_CONFIG = Path("config/config.yaml")
MODULE_NAMES = [m.value for m in ZamoModule]


class ZamoToolkit:
    """
    Orchestrates the toolkit operations behind the CLI.

    Every method returns results and findings; printing and exit codes are
    left to the click commands.
    """

    def __init__(self, config: Config):
        """
        Args:
            config: System configuration
        """
        self.config = config
        self.rules = RuleSet.of(config.rules)

    # Schema

    @staticmethod
    def modules(selected: Iterable[str]) -> List[ZamoModule]:
        """Selected modules, all three when none are given."""
        chosen = [ZamoModule(name) for name in selected]
        return chosen or list(ZamoModule)

    def schema(self, selected: Iterable[str] = ()) -> Tuple[OntologySchema, List[Diagnostic]]:
        """Schema of the shipped vocabularies of the selected modules."""
        modules = self.modules(selected)
        logger.debug(f"Loading schema of {[m.value for m in modules]}")
        return extract_schema(full_vocabulary(modules, include_controlled=True))

    def saturate(self, data: Graph, schema: OntologySchema) -> Graph:
        """Entailment closure of a data graph under the configured rules."""
        return Reasoner(schema, self.rules).saturate(data)

    # Operations

    def parse(self, path: Path) -> str:
        """Parse a Turtle file and serialize it back with its own prefixes."""
        graph, prefixes = parse_turtle_file(path)
        logger.info(f"Parsed {len(graph)} triples from {path}")
        return serialize_turtle(graph, prefixes)

    def query(
        self,
        data_path: Path,
        query_path: Path,
        reason: bool = False,
        selected: Iterable[str] = ()
    ) -> ResultTable:
        """
        Evaluate a query file over a data file.

        Args:
            data_path: Turtle data
            query_path: SELECT query; the data's and the ZAMO prefixes are predeclared
            reason: Saturate the data against the selected schema first
            selected: Schema modules used when reasoning

        Returns:
            ResultTable
        """
        data, prefixes = parse_turtle_file(data_path)
        query = parse_query(read_text(query_path), default_prefixes().merged(prefixes))
        if reason:
            schema, _ = self.schema(selected)
            data = self.saturate(data, schema)
        return evaluate(query, data)

    def validate(self, data_path: Path, selected: Iterable[str] = ()) -> List[Violation]:
        """Violations of the saturated data against the selected schema."""
        data, _ = parse_turtle_file(data_path)
        schema, _ = self.schema(selected)
        violations = validate_instances(self.saturate(data, schema), schema)
        logger.info(f"{data_path}: {len(violations)} violations")
        return violations

    def pitfalls(self, selected: Iterable[str] = ()) -> Tuple[List[Diagnostic], List[Pitfall]]:
        """Schema diagnostics and pitfalls of the selected vocabularies."""
        schema, diagnostics = self.schema(selected)
        return diagnostics, scan_pitfalls(schema)

    def align_validate(self, selected: Iterable[str] = ()) -> Tuple[List[Diagnostic], List[Violation]]:
        """Loader diagnostics and violations of the shipped alignments."""
        schema, _ = self.schema()
        diagnostics: List[Diagnostic] = []
        violations: List[Violation] = []
        for module in self.modules(selected):
            mappings, loaded = load_mappings(alignment_graph(module))
            diagnostics.extend(loaded)
            violations.extend(validate_mappings(mappings, schema))
        return diagnostics, violations

    def align_export(self, module: str) -> str:
        """
        Export one module's alignment table as CSV.

        Args:
            module: Module name (agents, events or sources)

        Returns:
            CSV text with a header row
        """
        mappings, _ = load_mappings(alignment_graph(ZamoModule(module)))
        return export_alignment_table(mappings, ZamoModule(module), self.config.csv_line_terminator)

    def samod(self, manifest: Path, iteration: Optional[int] = None, regression: bool = False) -> TestReport:
        """
        Replay a SAMOD suite.

        Args:
            manifest: Suite manifest
            iteration: Single iteration to run; with ``regression``, the last one included
            regression: Cumulative regression instead of standalone runs

        Returns:
            TestReport

        Raises:
            SuiteError: if the suite cannot be loaded or has no such iteration
        """
        suite = load_suite(manifest)
        runner = SamodRunner(suite, rules=self.rules, max_workers=self.config.max_workers)
        if iteration is not None and iteration not in suite.ids:
            raise SuiteError(f"{suite.module.value} suite has no iteration {iteration}")
        if regression:
            return runner.run_regression(iteration if iteration is not None else suite.ids[-1])
        if iteration is not None:
            return TestReport(module=suite.module, iterations=[runner.run_iteration(iteration)])
        return runner.run_suite()


def _emit_findings(findings: Sequence) -> ExitStatus:
    """Print findings to stderr; CHECKS_FAILED when any is an error."""
    for finding in findings:
        click.echo(str(finding), err=True)
    if any(f.is_error for f in findings):
        return ExitStatus.CHECKS_FAILED
    return ExitStatus.SUCCESS


# Command group

@click.group()
@click.option("--config", "config_path", type=click.Path(dir_okay=False, path_type=Path),
              default=DEFAULT_CONFIG, show_default=True, help="Configuration file.")
@click.option("--verbose", is_flag=True, help="Log at INFO level to stderr.")
@click.version_option(version=__version__, prog_name="zamo")
@click.pass_context
def cli(ctx: click.Context, config_path: Path, verbose: bool) -> None:
    """In-memory knowledge-graph engine and SAMOD harness for ZAMO."""
    config = Config.from_yaml(config_path)
    set_config(config)
    setup_logger(level="INFO" if verbose else config.log_level)
    ctx.obj = ZamoToolkit(config)


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False, path_type=Path))
@click.pass_obj
def parse(toolkit: ZamoToolkit, file: Path) -> None:
    """Parse a Turtle file and print it back as Turtle."""
    click.echo(toolkit.parse(file), nl=False)


@cli.command()
@click.argument("data", type=click.Path(dir_okay=False, path_type=Path))
@click.argument("query_file", metavar="QUERY", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--reason", is_flag=True, help="Saturate the data before evaluating.")
@click.option("--schema", "schema_modules", multiple=True, type=click.Choice(MODULE_NAMES),
              help="Schema module used for reasoning (repeatable; all by default).")
@click.option("--format", "output_format", type=click.Choice(["table", "csv"]), default="table",
              show_default=True, help="Output format.")
@click.pass_obj
def query(
    toolkit: ZamoToolkit,
    data: Path,
    query_file: Path,
    reason: bool,
    schema_modules: Tuple[str, ...],
    output_format: str
) -> None:
    """Evaluate a SELECT query over a Turtle file."""
    table = toolkit.query(data, query_file, reason, schema_modules)
    if output_format == "csv":
        click.echo(table.to_csv(toolkit.config.csv_line_terminator), nl=False)
    else:
        click.echo(table.to_text(), nl=False)


@cli.command()
@click.argument("data", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--schema", "schema_modules", multiple=True, type=click.Choice(MODULE_NAMES),
              help="Schema module to validate against (repeatable; all by default).")
@click.pass_context
def validate(ctx: click.Context, data: Path, schema_modules: Tuple[str, ...]) -> None:
    """Saturate instance data and validate it against the schema."""
    violations = ctx.obj.validate(data, schema_modules)
    click.echo(f"{len(violations)} violations")
    ctx.exit(int(_emit_findings(violations)))


@cli.command()
@click.option("--schema", "schema_modules", multiple=True, type=click.Choice(MODULE_NAMES),
              help="Vocabulary to scan (repeatable; all by default).")
@click.pass_context
def pitfalls(ctx: click.Context, schema_modules: Tuple[str, ...]) -> None:
    """Scan the shipped vocabularies for modelling pitfalls."""
    diagnostics, found = ctx.obj.pitfalls(schema_modules)
    click.echo(f"{len(found)} pitfalls")
    status = _emit_findings([*diagnostics, *found])
    ctx.exit(int(status))


@cli.group()
def align() -> None:
    """Validate or export the SKOS alignments."""


@align.command("validate")
@click.argument("module", required=False, type=click.Choice(MODULE_NAMES))
@click.pass_context
def align_validate(ctx: click.Context, module: Optional[str]) -> None:
    """Validate the alignment of one module (all when omitted)."""
    diagnostics, violations = ctx.obj.align_validate([module] if module else [])
    click.echo(f"{len(violations)} violations")
    ctx.exit(int(_emit_findings([*diagnostics, *violations])))


@align.command("export")
@click.argument("module", type=click.Choice(MODULE_NAMES))
@click.pass_obj
def align_export(toolkit: ZamoToolkit, module: str) -> None:
    """Print a module's alignment table as CSV."""
    click.echo(toolkit.align_export(module), nl=False)


@cli.group()
def samod() -> None:
    """Replay SAMOD scenario suites."""


@samod.command("run")
@click.argument("manifest", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--iteration", type=click.IntRange(min=1), help="Run one iteration (or regress up to it).")
@click.option("--regression", is_flag=True, help="Cumulative regression of iterations 1..N.")
@click.option("--report", "report_format", type=click.Choice([f.value for f in ReportFormat]),
              default=None, help="Report format (configuration default when omitted).")
@click.pass_context
def samod_run(
    ctx: click.Context,
    manifest: Path,
    iteration: Optional[int],
    regression: bool,
    report_format: Optional[str]
) -> None:
    """Run the model, data and query tests of a suite."""
    toolkit: ZamoToolkit = ctx.obj
    report = toolkit.samod(manifest, iteration, regression)
    fmt = ReportFormat(report_format) if report_format else toolkit.config.report_format
    click.echo(render_report(report, fmt), nl=False)
    if not report.passed:
        failed = sorted({it.iteration for it in [*report.iterations, *report.standalone] if not it.passed})
        click.echo(f"SAMOD checks failed in iteration(s) {', '.join(map(str, failed))}", err=True)
    ctx.exit(int(ExitStatus.SUCCESS if report.passed else ExitStatus.CHECKS_FAILED))


# Entry points

def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the CLI without exiting the interpreter.

    Args:
        argv: Arguments after the program name

    Returns:
        0 on success, 1 when checks fail, 2 on usage or input errors
    """
    try:
        result = cli.main(args=list(argv or []), prog_name="zamo", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return int(ExitStatus.USAGE_ERROR)
    except click.Abort:
        click.echo("Aborted!", err=True)
        return int(ExitStatus.USAGE_ERROR)
    except (SyntaxDiagnosticsError, SuiteError, SchemaConflict) as e:
        click.echo(f"error: {e}", err=True)
        return int(ExitStatus.USAGE_ERROR)
    except OSError as e:
        click.echo(f"error: {e.filename or ''}: {e.strerror or e}", err=True)
        return int(ExitStatus.USAGE_ERROR)
    return int(result or 0)


def main():
    """Console-script entry point."""
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
