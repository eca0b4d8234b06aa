from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from upblab.commands.context import EXIT_USAGE, cli_session, global_options
from upblab.commands.output import cli_error, cli_result
from upblab.commands.utils import format_parties, splits_for
from upblab.core.analysis.splits import AB_CD
from upblab.core.uom.catalog import FAMILIES


def enumerate_cmd(
    ctx: typer.Context,
    uom: Optional[str] = typer.Option(None, "--uom", "-u", help="Catalog name or UOM JSON file"),
    drop: Optional[int] = typer.Option(None, "--drop", "-d", help="Remove this row (1-indexed) first"),
    split: Optional[str] = typer.Option(None, "--split", "-s", help="Party split (default AB:CD for four qubits)"),
    sweep: bool = typer.Option(False, "--sweep", help="Every drop-one subset; all of F1-F6 without --uom"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for the variable values (default 1)"),
    as_json: bool = typer.Option(False, "--json", help="Output as JSON"),
    out: Optional[Path] = typer.Option(None, "--out", help="Also write the JSON document to this file"),
    timing: bool = typer.Option(False, "--timing", help="Record elapsed seconds in the certificate"),
):
    """
    List every product vector orthogonal to an instantiated set.

    The result is Finite (canonical vectors, first nonzero coordinate 1 per
    party) or Infinite (families of product vectors with their party
    subspaces). With --sweep, subsets with more than nine solutions or
    infinitely many are flagged.

    Examples:
        upb-lab enumerate --uom F1 --drop 1
        upb-lab enumerate --uom "F2(i2=i3,i4=0)" --drop 1 --split AB:CD
        upb-lab enumerate --uom F3 --sweep
        upb-lab enumerate --sweep              # 48 subsets of F1-F6
    """
    if not uom and not sweep:
        cli_error("--uom is required unless --sweep is given", exit_code=EXIT_USAGE, as_json=global_options(ctx).as_json)

    with cli_session(ctx, seed=seed, as_json=as_json, out=out, timing=timing) as session:
        svc = session.lab.catalog
        if sweep:
            names = [uom] if uom else list(FAMILIES)
            rows = []
            for name in names:
                spec, _, vectors = svc.vectors(name, session.seed)
                s = splits_for(vectors, [split] if split else None, (AB_CD,))[0]
                for entry in session.lab.analysis.sweep(vectors, s):
                    rows.append({
                        "uom": spec.name,
                        "split": s.label,
                        "row": entry.row,
                        "classification": entry.solutions.kind,
                        "count": entry.solutions.count,
                        "notable": entry.notable,
                    })
            cert = session.certificate(
                "enumerate",
                uom=uom,
                verdicts={"sweep": rows, "notable": [r for r in rows if r["notable"]]},
            )

            def print_sweep(_):
                table = Table(title=f"Drop-one sweep (seed {session.seed})")
                for col in ("UOM", "Split", "Dropped row", "Solutions"):
                    table.add_column(col)
                for r in rows:
                    count = str(r["count"]) if r["count"] is not None else "infinite"
                    style = "yellow" if r["notable"] else None
                    table.add_row(r["uom"], r["split"], str(r["row"]), count, style=style)
                session.display_console.print(table)

            cli_result(session, cert, print_sweep)
            return

        spec, inst, vectors = svc.vectors(uom, session.seed, drop)
        s = splits_for(vectors, [split] if split else None, (AB_CD,))[0]
        result = session.lab.analysis.enumerate(vectors, s)
        data = result.to_dict()
        cert = session.certificate(
            "enumerate",
            uom=spec.name,
            split=s.label,
            verdicts={
                "classification": result.kind,
                "count": result.count,
                "families": data["families"],
                "nodes": result.nodes,
                "drop": drop,
                "instantiation": inst.to_json(),
            },
            solutions=data["solutions"],
        )

        def print_human(_):
            console = session.display_console
            if result.finite:
                console.print(f"[bold]{spec.name}[/bold] under {s.label}: {result.count} orthogonal product vector(s)")
                for parties in result.solutions:
                    console.print(f"  {format_parties(parties, s)}")
            else:
                console.print(f"[bold]{spec.name}[/bold] under {s.label}: [yellow]infinitely many[/yellow]")
                for family in result.families:
                    console.print(f"  family with party subspace dimensions {list(family.dims)}")

        cli_result(session, cert, print_human)
