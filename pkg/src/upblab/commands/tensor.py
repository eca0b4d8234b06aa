from pathlib import Path
from typing import Optional

import typer

from upblab.commands.context import cli_session
from upblab.commands.output import cli_result
from upblab.commands.utils import format_parties


def tensor(
    ctx: typer.Context,
    left: str = typer.Option(..., "--left", "-l", help="Catalog name or UOM JSON file"),
    right: Optional[str] = typer.Option(None, "--right", "-r", help="Second factor (default: same as --left)"),
    parties: Optional[int] = typer.Option(None, "--parties", "-m", help="Number of parties (default: one per qubit of --left)"),
    run_verify: bool = typer.Option(False, "--verify", help="Decide unextendibility under the party split"),
    triple: bool = typer.Option(False, "--triple", help="Left tensored with its two cyclic relabelings"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for the variable values (default 1)"),
    as_json: bool = typer.Option(False, "--json", help="Output as JSON"),
    out: Optional[Path] = typer.Option(None, "--out", help="Also write the JSON document to this file"),
    timing: bool = typer.Option(False, "--timing", help="Record elapsed seconds in the certificate"),
):
    """
    Tensor two multipartite sets party by party.

    Party k of each output row is party k of the left row followed by party
    k of the right row, so two m-party sets give an m-party set of arity
    a + b. Rows are always checked for orthogonality. --verify runs the
    unextendibility search under the output's party split; large outputs
    need --force.

    Examples:
        upb-lab tensor --left SHIFTS3 --verify              # 16 rows in 4x4x4
        upb-lab tensor --left SHIFTS3 --triple              # 64 rows, orthogonality only
        upb-lab --force tensor --left SHIFTS3 --triple --verify
    """
    with cli_session(ctx, seed=seed, as_json=as_json, out=out, timing=timing) as session:
        svc = session.lab.catalog
        left_spec, _, s = svc.vectors(left, session.seed)
        m = parties or s.n_qubits
        if triple:
            product, split = session.lab.analysis.triple(s, m)
            name = f"{left_spec.name}^3"
        else:
            right_spec, _, t = svc.vectors(right or left, session.seed)
            product, split = session.lab.analysis.tensor(s, t, m)
            name = f"{left_spec.name}x{right_spec.name}"

        witness = None
        verdicts = {
            "rows": len(product),
            "dims": list(split.dims),
            "orthogonal": True,
        }
        if run_verify:
            witness = session.lab.analysis.extension(product, split)
            verdicts["verdict"] = "UPB" if witness is None else "ExtendibleWith"
            verdicts["witness"] = witness.to_dict() if witness else None

        cert = session.certificate(
            "tensor",
            uom=name,
            split=split.label,
            verdicts=verdicts,
            solutions=product.to_json(),
        )

        def print_human(_):
            console = session.display_console
            dims = "x".join(str(d) for d in split.dims)
            console.print(f"[bold]{name}[/bold]: {len(product)} orthogonal rows in {dims} ({split.label})")
            if run_verify:
                if witness is None:
                    console.print("[green]✓ UPB under the party split[/green]")
                else:
                    console.print(f"[yellow]Extendible by {format_parties(witness.parties, split)}[/yellow]")

        cli_result(session, cert, print_human)
