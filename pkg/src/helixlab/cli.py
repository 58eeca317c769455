"""Command-line interface for Helix Lab.

Helix Lab checks the formulae of helix submanifolds, their offsets and the
projection method numerically, and writes a JSON report of every check.

Environment Variables:
    HELIXLAB_SEED            RNG seed; overrides --seed when set
    HELIXLAB_SAMPLES         Default sample count when --samples is not given
    HELIXLAB_ERROR_HANDLING  strict (abort on the first suite error) or lenient
    HELIXLAB_LOG_LEVEL       Logging level: DEBUG, INFO, WARNING, ERROR
    HELIXLAB_LOG_FILE        Log file path (optional, logs to stderr if not set)
"""

import os
from collections.abc import Callable
from pathlib import Path
from typing import Any

import click
from pydantic import ValidationError
from rich.console import Console

from helixlab import __version__
from helixlab.checks.orchestrator import CheckOrchestrator
from helixlab.config.logging import configure_logging
from helixlab.config.settings import Settings, get_settings
from helixlab.immersions.catalog import BUILTIN_NAMES
from helixlab.report.models import Command, Report, RunConfig, TGrid
from helixlab.report.render import render_table
from helixlab.utils.exceptions import ConfigurationError, HelixLabError

console = Console()
err_console = Console(stderr=True)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG_ERROR = 2


# =============================================================================
# Help text constants
# =============================================================================

MAIN_HELP = f"""
Helix Lab - Numerical verification of helix submanifold and offset formulae.

Every command evaluates a family of geometric identities on seeded sample
points, compares each computed quantity with an independent counterpart and
reports the residual. The exit status is 0 when every check passes, 1 when
some check fails (the report is still written) and 2 on configuration errors.

EXAMPLES:
  # Helix analysis of a tilted plane against e3
  helixlab analyze --chart tilted_plane:theta=0.7 --direction 0,0,1

  # A polynomial chart from a spec file
  helixlab analyze --spec surface.json --direction 0,0,1

  # Offset formulae on the seeded corpus, report to a file
  helixlab offsets --out offsets.json

  # Trace identity property run with k <= 4 and 200 trials
  helixlab lemma-la --max-k 4 --trials 200

  # Every acceptance family
  helixlab suite --seed 7 --json

CHARTS:
  {", ".join(BUILTIN_NAMES)}
  Parameters follow a colon: cone:k=2, graph:base=flat,field=radial

CONFIGURATION:
  Settings are read from HELIXLAB_* environment variables or a .env file.
  HELIXLAB_SEED overrides --seed.
"""


def load_settings(verbose: bool = False) -> Settings:
    """Load settings and configure logging.

    Returns:
        Validated Settings object.
    """
    if verbose:
        os.environ["HELIXLAB_LOG_LEVEL"] = "DEBUG"
    get_settings.cache_clear()
    try:
        settings = get_settings()
    except ValidationError as e:
        err_console.print(f"[red]Configuration error:[/red] {e}")
        raise SystemExit(EXIT_CONFIG_ERROR) from None
    configure_logging(settings)
    return settings


def parse_direction(value: str | None) -> list[float] | None:
    """Parse ``x,y,z,...``."""
    if not value:
        return None
    try:
        return [float(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise ConfigurationError(f"invalid direction '{value}', use comma-separated numbers") from None


def build_config(command: Command, settings: Settings, **options: Any) -> RunConfig:
    """Validate the command-line options into a RunConfig.

    Raises:
        ConfigurationError: On any invalid option.
    """
    t_grid = options.pop("t_grid", None)
    direction = options.pop("direction", None)
    seed = options.pop("seed", 0)
    if options.get("samples") is None:
        options["samples"] = settings.samples
    if options.get("tol") is None:
        options["tol"] = settings.residual_tol
    try:
        return RunConfig(
            command=command,
            direction=parse_direction(direction),
            t_grid=TGrid.parse(t_grid) if t_grid else None,
            seed=settings.seed if settings.seed is not None else seed,
            fd_step=settings.fd_step,
            eq_tol=settings.eq_tol,
            error_handling=settings.error_handling,
            **{key: value for key, value in options.items() if value is not None},
        )
    except (ValidationError, ValueError) as e:
        raise ConfigurationError(str(e)) from e


def emit(report: Report, out: Path | None, as_json: bool) -> None:
    """Write the report file and print the JSON or the table."""
    text = report.to_json()
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text + "\n", encoding="utf-8")
    if as_json:
        click.echo(text)
    else:
        render_table(report, console)
        if out is not None:
            console.print(f"Report written to {out}")


def execute(ctx: click.Context, command: Command, **options: Any) -> None:
    """Build the config, run the orchestrator and exit with the report status."""
    settings = load_settings(ctx.obj.get("verbose", False))
    as_json = bool(options.pop("as_json", False))
    try:
        config = build_config(command, settings, **options)
        orchestrator = CheckOrchestrator(config, settings)
        orchestrator.preflight()
    except ConfigurationError as e:
        err_console.print(f"[red]Configuration error:[/red] {e}")
        raise SystemExit(EXIT_CONFIG_ERROR) from None

    try:
        report = orchestrator.run()
    except HelixLabError as e:
        err_console.print(f"[red]Run aborted:[/red] {type(e).__name__}: {e}")
        raise SystemExit(EXIT_CHECK_FAILED) from None

    emit(report, config.out, as_json)
    if ctx.obj.get("verbose", False) and orchestrator.summary is not None:
        err_console.print(orchestrator.summary.format_text_summary(), markup=False)
    raise SystemExit(EXIT_OK if report.passed else EXIT_CHECK_FAILED)


def run_options(*, chart: bool = True, t_grid: bool = False) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    """Options shared by the commands."""

    def decorate(func: Callable[..., Any]) -> Callable[..., Any]:
        options = [
            click.option("--samples", type=click.IntRange(min=1), default=None, help="Sample points per check (default 100, or HELIXLAB_SAMPLES)."),
            click.option("--tol", type=float, default=None, help="Residual tolerance (default 1e-6)."),
            click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True, help="RNG seed."),
            click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Report file."),
            click.option("--json", "as_json", is_flag=True, help="Print the JSON report instead of the table."),
        ]
        if chart:
            options.append(click.option("--chart", default=None, help="Catalog chart, e.g. cone:k=2."))
        if t_grid:
            options.append(click.option("--t-grid", "t_grid", default=None, help="Offset grid a:b:n (n >= 5)."))
        for option in reversed(options):
            func = option(func)
        return func

    return decorate


@click.group(help=MAIN_HELP)
@click.option(
    "--verbose",
    "-v",
    is_flag=True,
    help="Enable verbose output (sets log level to DEBUG).",
)
@click.version_option(version=__version__, prog_name="helixlab")
@click.pass_context
def cli(ctx: click.Context, verbose: bool) -> None:
    """Helix Lab - numerical verification of helix geometry."""
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose


@cli.command(help="""
Extrinsic and helix analysis of a chart against a direction d.

Reports minimality, the helix angle and its spread, the cylinder and ruled
classification, and checks the Laplacian of the height function, the Gauss
equation and (on helices) the structure equation of T, Ric(T, T) = 0 on
hypersurfaces, the Gauss image and the complex-helix identities.

EXAMPLES:
  helixlab analyze --chart tilted_plane:theta=0.7 --direction 0,0,1
  helixlab analyze --chart cone:k=2
  helixlab analyze --spec surface.json --direction 1,0,1
""")
@run_options()
@click.option("--spec", type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None,
              help="Polynomial chart spec file (JSON).")
@click.option("--direction", default=None, help="Direction d as x,y,z,... (last axis by default).")
@click.pass_context
def analyze(ctx: click.Context, **options: Any) -> None:
    execute(ctx, "analyze", **options)


@cli.command(help="""
Offset formulae against brute force on the offset charts.

For each normal field (the seeded corpus, or --chart with a field name) the
offset metric, tangent and normal frames and the shape-operator trace are
compared with the offset chart's own geometry over the t grid, and the
certificate "all offsets minimal implies η parallel" is evaluated.

FIELDS:
  sphere_outward, sphere_inward, circle_vertical, circle_inward,
  circle_rotating, strip_rotating, catenoid_gauss, tilted_plane_normal,
  complex_line_normal
""")
@run_options(t_grid=True)
@click.pass_context
def offsets(ctx: click.Context, **options: Any) -> None:
    execute(ctx, "offsets", **options)


@cli.command("lemma-la", help="""
Randomized property run of the trace identity.

φ(s) = Tr((D - sH)(𝟏 - 2sD + s²H)^-1) with H = D² + N vanishes on the grid
only for D = N = 0. Also checks the closed forms, the substitution
s = 1/t, rationality of φ and ker H ⊆ ker D ∩ ker N.
""")
@run_options(chart=False)
@click.option("--trials", type=click.IntRange(min=1), default=None, help="Random triples (default 500).")
@click.option("--max-k", "max_k", type=click.IntRange(1, 12), default=None, help="Largest dimension (default 6).")
@click.pass_context
def lemma_la(ctx: click.Context, **options: Any) -> None:
    execute(ctx, "lemma-la", **options)


@cli.command(help="""
The Sol geometry e^{2z}dx² + e^{-2z}dy² + dz²: connection, curvature and
Ricci tables, and the height f = z (harmonic, eikonal, not parallel).
""")
@run_options(chart=False)
@click.pass_context
def sol(ctx: click.Context, **options: Any) -> None:
    execute(ctx, "sol", **options)


@cli.command(help="""
The projection method: minimality of graph charts against the conditions
on the base, the graph normal and φ_*(Ẽ₁) = T, and the relations between
g and h = g + df ⊗ df for eikonal f.

--chart adds a graph chart (e.g. graph:field=radial) to the corpus.
""")
@run_options()
@click.pass_context
def project(ctx: click.Context, **options: Any) -> None:
    execute(ctx, "project", **options)


@cli.command(help="""
Run every acceptance family: Sol, offsets, the trace identity, the
projection method, the cone and tilted-plane helix identities and the
ruled-minimal-helix harness.
""")
@run_options(chart=False)
@click.pass_context
def suite(ctx: click.Context, **options: Any) -> None:
    execute(ctx, "suite", **options)


if __name__ == "__main__":
    cli()
