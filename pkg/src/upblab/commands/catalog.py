from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from upblab.commands.context import cli_session
from upblab.commands.output import cli_result
from upblab.core.base.errors import print_diagnostic_report
from upblab.core.uom.codec import spec_to_dict


def catalog(
    ctx: typer.Context,
    name: Optional[str] = typer.Option(None, "--name", "-n", help="Show one entry in full"),
    run_lint: bool = typer.Option(False, "--lint", help="Lint the entry (or every entry)"),
    as_json: bool = typer.Option(False, "--json", help="Output as JSON"),
    out: Optional[Path] = typer.Option(None, "--out", help="Also write the JSON document to this file"),
    timing: bool = typer.Option(False, "--timing", help="Record elapsed seconds in the certificate"),
):
    """
    List the embedded UOM catalog.

    The catalog holds the four-qubit families F1-F6, their constrained
    special cases such as F6(i2=i3), and the three-qubit SHIFTS3 set.

    Examples:
        upb-lab catalog                     # One line per entry
        upb-lab catalog --name F1           # Grid and constraints of F1
        upb-lab catalog --lint              # Constraint warnings for every entry
        upb-lab catalog --name F6 --json    # Machine-readable entry
    """
    with cli_session(ctx, as_json=as_json, out=out, timing=timing) as session:
        svc = session.lab.catalog
        specs = [svc.resolve(name)] if name else list(svc.specs.values())
        reports = svc.lint([s.name for s in specs]) if run_lint else {}

        cert = session.certificate(
            "catalog",
            seed=None,
            uom=name,
            verdicts={
                "entries": [spec_to_dict(s) for s in specs],
                "lint": {k: r.to_dict_list() for k, r in reports.items()},
            },
        )

        def print_human(_):
            console = session.display_console
            if name:
                spec = specs[0]
                table = Table(title=spec.name, show_header=False)
                for row in spec.grid:
                    table.add_row(*[str(label) for label in row])
                console.print(table)
                for c in spec.constraints:
                    console.print(f"  {c}")
            else:
                table = Table(title="UOM catalog")
                table.add_column("Name")
                table.add_column("Shape")
                table.add_column("Variables")
                table.add_column("Constraints", justify="right")
                for spec in specs:
                    table.add_row(spec.name, f"{spec.rows}x{spec.cols}", " ".join(spec.variables()), str(len(spec.constraints)))
                console.print(table)
            for entry, report in reports.items():
                if len(report):
                    console.print(f"[bold]{entry}[/bold]")
                    print_diagnostic_report(console, report)
            if run_lint and not any(len(r) for r in reports.values()):
                console.print("[green]✓ No lint warnings[/green]")

        cli_result(session, cert, print_human)
