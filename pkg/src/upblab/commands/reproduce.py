from pathlib import Path
from typing import List, Optional

import typer
from rich.table import Table

from upblab.commands.context import EXIT_USAGE, cli_session
from upblab.commands.output import cli_error, cli_result, write_out
from upblab.commands.utils import parse_seeds
from upblab.core.services.certificate import ClaimResult
from upblab.core.services.reproduce_service import CLAIMS


def reproduce(
    ctx: typer.Context,
    seeds: Optional[str] = typer.Option(None, "--seeds", help='Seeds, e.g. "1-20" or "1,4,9" (default from config)'),
    only: Optional[List[str]] = typer.Option(None, "--only", help=f"Run only these claims: {', '.join(CLAIMS)}"),
    catalog_path: Optional[Path] = typer.Option(None, "--catalog", help="Catalog JSON replacing the embedded one"),
    report_path: Optional[Path] = typer.Option(None, "--report", help="Report file (default from config: report.json)"),
    fuzz: Optional[int] = typer.Option(None, "--fuzz", help="Size of the predicate soundness corpus"),
    as_json: bool = typer.Option(False, "--json", help="Output as JSON"),
):
    """
    Run the full reproduction suite and write report.json.

    Claims, in order:
        orthogonality      every family's rows pairwise orthogonal
        upb                F1-F6 unextendible under A:B:C:D, A:B:CD, AB:CD
        table1             independent variable counts per column
        inequivalence      all 15 family pairs distinguished
        drop_one_counts    product vectors orthogonal to drop-one subsets
        ppt_states         rank-8 PPT states, rank-9 PPT entangled states
        almost_ge          F6 unextendible across every 4x4 cut
        shifts3            three-qubit UPB, extendible across A:BC
        tensor             SHIFTS3 tensored with itself is a 4x4x4 UPB
        structure          maxsum closed form, o-number bound, predicate fuzz
        negative_controls  relaxing any F1 constraint breaks the UPB
        classification     clause patterns per family (reported, not asserted)

    Exit 0 iff every asserted claim passes; otherwise exit 1 naming the
    first failing claim.

    Examples:
        upb-lab reproduce                         # seeds 1-20
        upb-lab reproduce --seeds 1-3 --fuzz 50
        upb-lab reproduce --only table1
        upb-lab reproduce --catalog broken.json   # negative control
    """
    seed_list = parse_seeds(seeds)

    with cli_session(ctx, catalog_path=catalog_path, as_json=as_json) as session:
        if fuzz is not None:
            session.config.reproduce.fuzz = fuzz
        target = report_path or session.config.reproduce.report

        def show(claim: ClaimResult):
            if session.as_json:
                return
            mark = "[green]✓[/green]" if claim.passed else ("[red]✗[/red]" if claim.asserted else "[yellow]-[/yellow]")
            session.display_console.print(f"{mark} {claim.name}: {claim.summary}")

        try:
            report = session.lab.reproduce.run(seed_list, only, on_claim=show)
        except ValueError as e:
            cli_error(str(e), session, exit_code=EXIT_USAGE)

        write_out(target, report)

        def print_human(r):
            table = Table(title=f"Reproduction (seeds {', '.join(map(str, r.seeds))})")
            table.add_column("Claim")
            table.add_column("Result")
            for c in r.claims:
                result = "pass" if c.passed else ("FAIL" if c.asserted else "reported")
                table.add_row(c.name, result)
            session.display_console.print(table)
            session.display_console.print(f"Report written to {target}")
            if not r.passed:
                session.display_console.print(f"[red]First failing claim: {r.first_failure.name}: {r.first_failure.summary}[/red]")

        cli_result(session, report, print_human, success_indicator=report.passed)
