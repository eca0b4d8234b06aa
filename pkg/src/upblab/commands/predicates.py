from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from upblab.commands.context import EXIT_USAGE, cli_session, global_options
from upblab.commands.output import cli_error, cli_result
from upblab.core.base.errors import WrongShape
from upblab.core.analysis.splits import qubit_name
from upblab.core.structure.onumbers import bound_check, o_numbers


def predicates(
    ctx: typer.Context,
    uom: Optional[str] = typer.Option(None, "--uom", "-u", help="Catalog name or UOM JSON file"),
    fuzz: Optional[int] = typer.Option(None, "--fuzz", help="Check soundness on this many random orthogonal sets"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for the variable values (default 1)"),
    as_json: bool = typer.Option(False, "--json", help="Output as JSON"),
    out: Optional[Path] = typer.Option(None, "--out", help="Also write the JSON document to this file"),
    timing: bool = typer.Option(False, "--timing", help="Record elapsed seconds in the certificate"),
):
    """
    Structural checks on eight-row four-qubit sets.

    For one set: the o-number of each qubit column, the bound
    sum >= m(m-1)/2 that every UOM satisfies, and each exclusion condition
    that fires (any firing rules out a UPB across AB:CD). With --fuzz, the
    conditions are checked against the search on random sets; the global
    --seed seeds the corpus.

    Examples:
        upb-lab predicates --uom F1
        upb-lab predicates --uom F2 --seed 3 --fuzz 200
    """
    if uom is None and fuzz is None:
        cli_error("give --uom or --fuzz", exit_code=EXIT_USAGE, as_json=global_options(ctx).as_json)

    with cli_session(ctx, seed=seed, as_json=as_json, out=out, timing=timing) as session:
        verdicts = {}
        fired = []
        profiles = []
        bound = None
        spec = None
        if uom is not None:
            spec, inst, vectors = session.lab.catalog.vectors(uom, session.seed)
            try:
                fired, bound, profiles = session.lab.analysis.structure(vectors)
                verdicts["fired"] = [f.to_dict() for f in fired]
            except WrongShape:
                # Conditions need 8x4; o-numbers and the bound do not.
                bound, profiles = bound_check(vectors), o_numbers(vectors)
                verdicts["fired"] = None
            verdicts["oNumbers"] = [p.to_dict() for p in profiles]
            verdicts["bound"] = bound.to_dict()
            verdicts["instantiation"] = inst.to_json()
        report = None
        if fuzz is not None:
            report = session.lab.analysis.fuzz(fuzz, session.seed)
            verdicts["fuzz"] = report.to_dict()

        cert = session.certificate("predicates", uom=spec.name if spec else None, verdicts=verdicts)

        def print_human(_):
            console = session.display_console
            if spec is not None:
                table = Table(title=f"{spec.name} columns (seed {session.seed})")
                table.add_column("Qubit")
                table.add_column("o-number", justify="right")
                for p in profiles:
                    table.add_row(qubit_name(p.column), str(p.o_number))
                console.print(table)
                colour = "green" if bound.holds else "red"
                console.print(f"[{colour}]o-number sum {bound.sum} vs threshold {bound.threshold}[/{colour}]")
                if verdicts["fired"] is None:
                    console.print("[dim]Exclusion conditions apply to 8x4 sets only[/dim]")
                elif fired:
                    for f in fired:
                        qubits = "".join(qubit_name(q) for q in f.qubits)
                        rows = ", ".join(str(r + 1) for r in f.rows)
                        console.print(f"[yellow]fires: {f.name} on qubits {qubits}, rows {rows}[/yellow]")
                else:
                    console.print("[green]No exclusion condition fires[/green]")
            if report is not None:
                colour = "green" if report.sound else "red"
                console.print(
                    f"[{colour}]Fuzz: {report.total} sets, {report.upbs} UPBs across AB:CD, "
                    f"{len(report.unsound)} unsound firing(s)[/{colour}]"
                )

        cli_result(session, cert, print_human, success_indicator=report.sound if report else None)
