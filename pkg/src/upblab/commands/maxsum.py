from pathlib import Path
from typing import Optional

import typer

from upblab.commands.context import cli_session
from upblab.commands.output import cli_result
from upblab.core.structure.maxsum import maxsum as maxsum_closed, maxsum_oracle


def maxsum(
    ctx: typer.Context,
    p: int = typer.Option(..., "--p", help="Sum of the composition"),
    n: int = typer.Option(..., "--n", help="Number of pairs"),
    oracle: bool = typer.Option(False, "--oracle", help="Also search every composition (p <= 24, n <= 6)"),
    as_json: bool = typer.Option(False, "--json", help="Output as JSON"),
    out: Optional[Path] = typer.Option(None, "--out", help="Also write the JSON document to this file"),
    timing: bool = typer.Option(False, "--timing", help="Record elapsed seconds in the certificate"),
):
    """
    Maximum of a1*a2 + a3*a4 + ... + a(2n-1)*a(2n) over positive a with sum p.

    The closed form puts all slack into one pair; --oracle confirms it by
    exhaustive search and exits 1 on disagreement.

    Examples:
        upb-lab maxsum --p 8 --n 2            # 10
        upb-lab maxsum --p 8 --n 1 --oracle   # 16, a = (4, 4)
    """
    with cli_session(ctx, as_json=as_json, out=out, timing=timing) as session:
        result = maxsum_closed(p, n)
        verdicts = result.to_dict()
        agrees = None
        if oracle:
            verdicts["oracle"] = maxsum_oracle(p, n)
            agrees = verdicts["oracle"] == result.value
            verdicts["agrees"] = agrees

        cert = session.certificate("maxsum", seed=None, verdicts=verdicts)

        def print_human(_):
            console = session.display_console
            console.print(f"maxsum(p={p}, n={n}) = [bold]{result.value}[/bold] at a = {tuple(result.extremal)}")
            if oracle:
                colour = "green" if agrees else "red"
                console.print(f"[{colour}]exhaustive search: {verdicts['oracle']}[/{colour}]")

        cli_result(session, cert, print_human, success_indicator=agrees)
