from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from upblab.commands.context import cli_session
from upblab.commands.output import cli_result
from upblab.commands.utils import format_parties
from upblab.core.analysis.genuine import CutStatus


def ge(
    ctx: typer.Context,
    uom: str = typer.Option(..., "--uom", "-u", help="Catalog name or UOM JSON file"),
    drop: Optional[int] = typer.Option(None, "--drop", "-d", help="Remove this row (1-indexed) first"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for the variable values (default 1)"),
    as_json: bool = typer.Option(False, "--json", help="Output as JSON"),
    out: Optional[Path] = typer.Option(None, "--out", help="Also write the JSON document to this file"),
    timing: bool = typer.Option(False, "--timing", help="Record elapsed seconds in the certificate"),
):
    """
    Check a set across every bipartition of its qubits.

    Cuts with a qubit on one side get a direct 2xN witness when one exists;
    the others are searched. isGeupb needs every cut unextendible;
    isAlmostGe only needs the cuts whose sides both have dimension four or
    more (vacuously true with three qubits).

    Examples:
        upb-lab ge --uom F6        # almost GE: AB|CD, AC|BD, AD|BC all UPB
        upb-lab ge --uom SHIFTS3   # not GE: extendible across A|BC
    """
    with cli_session(ctx, seed=seed, as_json=as_json, out=out, timing=timing) as session:
        spec, inst, vectors = session.lab.catalog.vectors(uom, session.seed, drop)
        verdict = session.lab.analysis.ge(vectors)
        data = verdict.to_dict()

        cert = session.certificate(
            "ge",
            uom=spec.name,
            verdicts={**data, "drop": drop, "instantiation": inst.to_json()},
            solutions=[c.witness.to_dict() for c in verdict.cuts.values() if c.witness],
        )

        def print_human(_):
            console = session.display_console
            table = Table(title=f"{spec.name} across bipartitions (seed {session.seed})")
            table.add_column("Cut")
            table.add_column("Verdict")
            table.add_column("Witness")
            for label, cut in verdict.cuts.items():
                colour = "green" if cut.status is CutStatus.UPB else "yellow"
                witness = format_parties(cut.witness.parties, cut.witness.split) if cut.witness else ""
                table.add_row(label, f"[{colour}]{cut.status.value}[/{colour}]", witness)
            console.print(table)
            console.print(f"isGeupb: {verdict.is_geupb}   isAlmostGe: {verdict.is_almost_ge}")

        cli_result(session, cert, print_human)
