from pathlib import Path
from typing import List, Optional

import typer
from rich.table import Table

from upblab.commands.context import cli_session
from upblab.commands.output import cli_result
from upblab.commands.utils import FOUR_QUBIT_DEFAULTS, splits_for


def state(
    ctx: typer.Context,
    uom: str = typer.Option(..., "--uom", "-u", help="Catalog name or UOM JSON file"),
    drop: Optional[int] = typer.Option(None, "--drop", "-d", help="Remove this row (1-indexed) first"),
    run_certify: bool = typer.Option(False, "--certify", help="Apply the range criterion under each split"),
    split: Optional[List[str]] = typer.Option(None, "--split", "-s", help="Split for --certify (repeatable)"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for the variable values (default 1)"),
    as_json: bool = typer.Option(False, "--json", help="Output as JSON"),
    out: Optional[Path] = typer.Option(None, "--out", help="Also write the JSON document to this file"),
    timing: bool = typer.Option(False, "--timing", help="Record elapsed seconds in the certificate"),
):
    """
    Build the normalized projector onto the complement of a set.

    Reports the exact rank and whether the partial transpose across every
    bipartition of the qubits is positive semidefinite. With --certify, the
    product vectors in the range are enumerated: if they span fewer than
    rank dimensions the state is entangled; otherwise the criterion is
    inconclusive.

    Examples:
        upb-lab state --uom F1                      # rank 8, PPT
        upb-lab state --uom F1 --drop 1 --certify   # rank 9, PPT entangled
        upb-lab state --uom F1 --seed 7 --drop 1 --certify --json
    """
    with cli_session(ctx, seed=seed, as_json=as_json, out=out, timing=timing) as session:
        spec, inst, vectors = session.lab.catalog.vectors(uom, session.seed, drop)
        summary = session.lab.analysis.state(vectors)
        certificates = []
        if run_certify:
            for s in splits_for(vectors, split, FOUR_QUBIT_DEFAULTS):
                certificates.append(session.lab.analysis.certify(vectors, s, ppt_verdicts=summary["ppt"]))

        cert = session.certificate(
            "state",
            uom=spec.name,
            split=",".join(c.split.label for c in certificates) or None,
            verdicts={
                **summary,
                "drop": drop,
                "certificates": [c.to_dict() for c in certificates],
                "instantiation": inst.to_json(),
            },
        )

        def print_human(_):
            console = session.display_console
            console.print(f"[bold]{spec.name}[/bold]: rank {summary['rank']} in dimension {summary['dim']}, trace 1")
            table = Table(title="Partial transposes")
            table.add_column("Cut")
            table.add_column("PSD")
            for cut, ok in summary["ppt"].items():
                table.add_row(cut, "[green]yes[/green]" if ok else "[red]no[/red]")
            console.print(table)
            for c in certificates:
                style = "green" if c.entangled else "yellow"
                console.print(
                    f"[{style}]{c.split.label}: {c.reason}[/{style}] "
                    f"(range product span {c.range_product_span_rank}, threshold {c.threshold})"
                )

        cli_result(session, cert, print_human)
