"""Console rendering of reports with rich."""

from rich.console import Console
from rich.table import Table

from helixlab.report.models import Report


def _fmt(value: float | None) -> str:
    return "-" if value is None else f"{value:.3e}"


def render_table(report: Report, console: Console | None = None, failures_only: bool = False) -> Table:
    """Render the record list of ``report`` as a table and print it.

    The table is built from the same records as the JSON output.
    """
    table = Table(title=f"helixlab {report.command}")
    table.add_column("Suite", style="cyan")
    table.add_column("Check", style="green")
    table.add_column("Anchor")
    table.add_column("LHS", justify="right")
    table.add_column("RHS", justify="right")
    table.add_column("Residual", justify="right")
    table.add_column("Tol", justify="right")
    table.add_column("Status")

    records = report.failed_records() if failures_only else report.records
    for record in records:
        table.add_row(
            record.suite,
            record.name,
            record.anchor,
            _fmt(record.lhs),
            _fmt(record.rhs),
            _fmt(record.residual),
            f"{record.tol:.0e}",
            "[green]pass[/green]" if record.passed else "[red]FAIL[/red]",
        )

    out = console if console is not None else Console()
    out.print(table)
    status = "[green]PASSED[/green]" if report.passed else "[red]FAILED[/red]"
    out.print(
        f"{status}: {report.summary.total - report.summary.failed}/{report.summary.total} checks passed"
        f" in {report.wall_time:.2f}s"
    )
    for error in report.summary.errors:
        out.print(f"  [red]![/red] {error}")
    return table
