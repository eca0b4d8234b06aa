import logging
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from rich.logging import RichHandler

from upblab.commands.context import GlobalOptions


def version_callback(value: bool):
    if value:
        import importlib.metadata
        try:
            version = importlib.metadata.version("upb-lab")
        except importlib.metadata.PackageNotFoundError:
            version = "0.1.0"  # Fallback for development
        typer.echo(f"upb-lab version: {version}")
        raise typer.Exit()


def setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


app = typer.Typer(no_args_is_help=True)


@app.callback()
def main(
    ctx: typer.Context,
    version: bool = typer.Option(None, "--version", callback=version_callback, is_eager=True, help="Show version and exit."),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log search statistics and claim verdicts."),
    config: Optional[Path] = typer.Option(None, "--config", help="upblab.toml to use instead of searching upwards."),
    seed: int = typer.Option(1, "--seed", help="Seed for instantiating vector variables."),
    as_json: bool = typer.Option(False, "--json", help="Output as JSON."),
    out: Optional[Path] = typer.Option(None, "--out", help="Also write the JSON document to this file."),
    force: bool = typer.Option(False, "--force", help="Run searches beyond the assignment budget."),
    timing: bool = typer.Option(False, "--timing", help="Record elapsed seconds in certificates."),
):
    """
    upb-lab - Exact verification of unextendible product bases.

    Core concepts:

    1. UOMs:
       - A UOM is a grid of labels 0, 1, x, x' (one row per product vector,
         one column per qubit) with inequality constraints on the variables
       - The catalog holds the four-qubit families F1-F6, special cases
         such as F6(i2=i3), and the three-qubit SHIFTS3 set
       - --seed picks the exact rational values of the variables

    2. Splits:
       - Qubits are grouped into parties with ':' (A:B:C:D, A:B:CD, AB:CD)
       - A set is a UPB under a split when no product vector across those
         parties is orthogonal to all of its rows

    3. Exactness:
       - All arithmetic is over Gaussian rationals; there are no tolerances
       - JSON certificates carry rationals as "num/den" strings

    Commands:
        catalog      List UOMs and lint them
        verify       UPB verdicts per split
        enumerate    Orthogonal product vectors, drop-one sweeps
        state        Complement states, PPT checks, range criterion
        ge           Verdicts across every bipartition
        tensor       Tensor products of multipartite sets
        predicates   Structural checks and their soundness fuzz
        maxsum       Pair-product maximum and its oracle
        invariants   Inequivalence invariants of UOMs
        reproduce    Run every claim and write report.json

    Exit codes: 0 ok, 1 claim failure, 2 usage error, 3 budget exceeded.
    """
    setup_logging(verbose)
    ctx.obj = GlobalOptions(
        config_path=config,
        seed=seed,
        as_json=as_json,
        out=out,
        force=force,
        timing=timing,
    )


from upblab.commands.catalog import catalog as catalog_cmd  # noqa: E402
app.command(name="catalog")(catalog_cmd)

from upblab.commands.verify import verify as verify_cmd  # noqa: E402
app.command(name="verify")(verify_cmd)

from upblab.commands.enumerate import enumerate_cmd  # noqa: E402
app.command(name="enumerate")(enumerate_cmd)

from upblab.commands.state import state as state_cmd  # noqa: E402
app.command(name="state")(state_cmd)

from upblab.commands.ge import ge as ge_cmd  # noqa: E402
app.command(name="ge")(ge_cmd)

from upblab.commands.tensor import tensor as tensor_cmd  # noqa: E402
app.command(name="tensor")(tensor_cmd)

from upblab.commands.predicates import predicates as predicates_cmd  # noqa: E402
app.command(name="predicates")(predicates_cmd)

from upblab.commands.maxsum import maxsum as maxsum_cmd  # noqa: E402
app.command(name="maxsum")(maxsum_cmd)

from upblab.commands.invariants import invariants as invariants_cmd  # noqa: E402
app.command(name="invariants")(invariants_cmd)

from upblab.commands.reproduce import reproduce as reproduce_cmd  # noqa: E402
app.command(name="reproduce")(reproduce_cmd)


if __name__ == "__main__":
    app()
