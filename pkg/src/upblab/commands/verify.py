from pathlib import Path
from typing import List, Optional

import typer

from upblab.commands.context import cli_session
from upblab.commands.output import cli_result
from upblab.commands.utils import FOUR_QUBIT_DEFAULTS, format_parties, splits_for, vectors_table


def verify(
    ctx: typer.Context,
    uom: str = typer.Option(..., "--uom", "-u", help="Catalog name or UOM JSON file"),
    split: Optional[List[str]] = typer.Option(None, "--split", "-s", help="Party split, e.g. AB:CD (repeatable)"),
    drop: Optional[int] = typer.Option(None, "--drop", "-d", help="Remove this row (1-indexed) first"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for the variable values (default 1)"),
    as_json: bool = typer.Option(False, "--json", help="Output as JSON"),
    out: Optional[Path] = typer.Option(None, "--out", help="Also write the JSON document to this file"),
    timing: bool = typer.Option(False, "--timing", help="Record elapsed seconds in the certificate"),
):
    """
    Instantiate a UOM and decide whether it is a UPB under each split.

    Rows are first checked for pairwise orthogonality; a failure exits 1.
    Under each split the verdict is UPB or an explicit extension witness.
    Four-qubit sets default to A:B:C:D, A:B:CD and AB:CD.

    Examples:
        upb-lab verify --uom F1
        upb-lab verify --uom F1 --seed 7 --split AB:CD --json
        upb-lab verify --uom SHIFTS3 --split A:BC
        upb-lab --seed 7 verify --uom F6 --split AC:BD --split AD:BC
    """
    with cli_session(ctx, seed=seed, as_json=as_json, out=out, timing=timing) as session:
        spec, inst, vectors = session.lab.catalog.vectors(uom, session.seed, drop)
        orthogonality = session.lab.analysis.orthogonality(vectors)
        verdicts = {"orthogonality": orthogonality.to_dict(), "splits": {}}
        solutions = []
        witnesses = {}
        if orthogonality.ok:
            for s in splits_for(vectors, split, FOUR_QUBIT_DEFAULTS):
                witness = session.lab.analysis.extension(vectors, s)
                witnesses[s.label] = witness
                verdicts["splits"][s.label] = {
                    "verdict": "UPB" if witness is None else "ExtendibleWith",
                    "witness": witness.to_dict() if witness else None,
                }
                if witness is not None:
                    solutions.append(witness.to_dict())

        cert = session.certificate(
            "verify",
            uom=spec.name,
            split=",".join(verdicts["splits"]) or None,
            verdicts={**verdicts, "drop": drop, "instantiation": inst.to_json()},
            solutions=solutions,
        )

        def print_human(_):
            console = session.display_console
            console.print(vectors_table(vectors, f"{spec.name} (seed {session.seed})"))
            if not orthogonality.ok:
                i, j = orthogonality.pair
                console.print(f"[red]✗ Rows {i} and {j} are not orthogonal[/red]")
                return
            for label, witness in witnesses.items():
                if witness is None:
                    console.print(f"[green]✓ {label}: UPB[/green]")
                else:
                    console.print(f"[yellow]{label}: extendible by {format_parties(witness.parties, witness.split)}[/yellow]")

        cli_result(session, cert, print_human, success_indicator=orthogonality.ok)
