from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from upblab.commands.context import cli_session
from upblab.commands.output import cli_result
from upblab.core.base.errors import print_diagnostic_report
from upblab.core.analysis.splits import qubit_name
from upblab.core.uom.lint import lint


def _print_table(console, title, rows):
    table = Table(title=title)
    table.add_column("")
    for j in range(len(rows)):
        table.add_column(qubit_name(j), justify="right")
    for i, row in enumerate(rows):
        table.add_row(qubit_name(i), *[str(x) for x in row])
    console.print(table)


def invariants(
    ctx: typer.Context,
    uom: str = typer.Option(..., "--uom", "-u", help="Catalog name or UOM JSON file"),
    against: Optional[str] = typer.Option(None, "--against", "-a", help="Compare with this UOM"),
    as_json: bool = typer.Option(False, "--json", help="Output as JSON"),
    out: Optional[Path] = typer.Option(None, "--out", help="Also write the JSON document to this file"),
    timing: bool = typer.Option(False, "--timing", help="Record elapsed seconds in the certificate"),
):
    """
    Invariants of a UOM under local unitaries and allowed relabelings.

    Prints the independent-variable count per column, the coincidence table
    (row pairs equal on two columns) and the orthogonality table (row pairs
    orthogonal on two columns), plus the lint report. With --against, the
    two UOMs are compared under the eight column symmetries; a pair no
    invariant separates is reported Undistinguished, which is not a proof
    of equivalence.

    Examples:
        upb-lab invariants --uom F1
        upb-lab invariants --uom F3 --against F6
    """
    with cli_session(ctx, as_json=as_json, out=out, timing=timing) as session:
        svc = session.lab.catalog
        spec = svc.resolve(uom)
        data = svc.invariants(spec)
        comparison = None
        if against:
            comparison = svc.compare(spec, svc.resolve(against))
            data["comparison"] = comparison.to_dict()

        cert = session.certificate("invariants", seed=None, uom=spec.name, verdicts=data)

        def print_human(_):
            console = session.display_console
            console.print(f"[bold]{spec.name}[/bold] independent variables per column: {data['counts']}")
            if "coincidence" in data:
                _print_table(console, "Coincidence", data["coincidence"])
                _print_table(console, "Orthogonality", data["orthogonality"])
            if data["lint"]:
                print_diagnostic_report(console, lint(spec))
            if comparison is not None:
                if comparison.distinguished:
                    console.print(
                        f"[green]{comparison.left} vs {comparison.right}: distinguished by "
                        f"{', '.join(comparison.features)}[/green]"
                    )
                else:
                    console.print(f"[yellow]{comparison.left} vs {comparison.right}: undistinguished[/yellow]")

        cli_result(session, cert, print_human)
