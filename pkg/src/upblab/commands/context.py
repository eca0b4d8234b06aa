"""
CLI context management - Shared tools for command initialization and session handling.

This module provides a unified context manager for CLI commands, handling:
- Global options (--seed, --json, --out, --timing) given on the command or before it
- Config discovery and Lab initialization
- JSON/Console output mode switching
- Mapping of library errors to exit codes
"""

import time
from contextlib import contextmanager
from dataclasses import dataclass
from io import StringIO
from pathlib import Path
from typing import Generator, Optional

import typer
from rich.console import Console

from upblab.core.base.config import LabConfig
from upblab.core.base.errors import (
    BadArity,
    BadSplit,
    BadSubset,
    BudgetExceeded,
    IndexOutOfRange,
    ParseError,
    TooLarge,
    UnknownCatalogEntry,
    UnknownVariable,
    UpbLabError,
)
from upblab.core.base.utils import find_config
from upblab.core.lab import Lab
from upblab.core.services.certificate import Certificate

EXIT_CLAIM = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

USAGE_ERRORS = (
    ParseError,
    UnknownVariable,
    UnknownCatalogEntry,
    BadSplit,
    BadSubset,
    IndexOutOfRange,
    BadArity,
    TooLarge,
)


@dataclass
class GlobalOptions:
    """Options given before the command name; the same flags on a command override them."""

    config_path: Optional[Path] = None
    seed: int = 1
    as_json: bool = False
    out: Optional[Path] = None
    force: bool = False
    timing: bool = False


@dataclass
class CLIContext:
    """Container for CLI session context."""

    lab: Lab
    """Initialized Lab facade."""

    console: Console
    """Console for human-readable output (may be quiet mode for JSON)."""

    display_console: Console
    """Console always available for display output (not redirected)."""

    config: LabConfig
    """Loaded configuration (defaults when no upblab.toml was found)."""

    config_path: Optional[Path]
    """upblab.toml in use, if any."""

    as_json: bool
    """Whether JSON output mode is enabled."""

    seed: int
    """Seed for instantiating vector variables."""

    out: Optional[Path]
    """File that receives the JSON document as well."""

    timing: bool
    """Whether certificates record elapsed seconds."""

    started: float
    """perf_counter() at session start."""

    def certificate(self, command: str, **fields) -> Certificate:
        """Certificate stamped with the session seed and, on request, timing."""
        fields.setdefault("seed", self.seed)
        if self.timing:
            fields["timing"] = round(time.perf_counter() - self.started, 3)
        return Certificate(command=command, **fields)


def global_options(ctx: typer.Context) -> GlobalOptions:
    root = ctx.find_root()
    return root.obj if isinstance(root.obj, GlobalOptions) else GlobalOptions()


@contextmanager
def cli_session(
    ctx: typer.Context,
    catalog_path: Optional[Path] = None,
    seed: Optional[int] = None,
    as_json: bool = False,
    out: Optional[Path] = None,
    timing: bool = False,
) -> Generator[CLIContext, None, None]:
    """
    Context manager for CLI command sessions.

    Loads configuration, builds the Lab facade and converts library errors
    raised inside the block into the documented exit codes.

    Args:
        ctx: Typer context of the running command
        catalog_path: Optional catalog file replacing the embedded one
        seed, as_json, out, timing: Command-level flags; unset ones fall back
            to the flags given before the command name

    Yields:
        CLIContext: Initialized context with lab, consoles and config

    Raises:
        typer.Exit: 2 for usage errors, 3 when a search exceeds its budget,
            1 for any other upb-lab error

    Example:
        def verify(ctx: typer.Context, uom: str = typer.Option(..., "--uom"), as_json: bool = False):
            with cli_session(ctx, as_json=as_json) as session:
                _, _, vectors = session.lab.catalog.vectors(uom, session.seed)
                cli_result(session, session.certificate("verify", uom=uom))
    """
    from upblab.commands.output import cli_error

    opts = global_options(ctx)
    as_json = as_json or opts.as_json
    seed = opts.seed if seed is None else seed
    out = out or opts.out
    timing = timing or opts.timing
    display_console = Console()

    # For JSON mode, create a quiet console that captures output
    if as_json:
        active_console = Console(file=StringIO(), stderr=False)
    else:
        active_console = display_console

    config_path = opts.config_path or find_config(Path.cwd())
    try:
        config = LabConfig.load(config_path)
    except ValueError as e:
        cli_error(str(e), exit_code=EXIT_USAGE, as_json=as_json)

    try:
        lab = Lab(config, catalog_path=catalog_path, force=opts.force, console=active_console)
    except UpbLabError as e:
        cli_error(e.message, exit_code=EXIT_USAGE, details=e.to_dict(), as_json=as_json)
    except OSError as e:
        cli_error(f"Cannot read catalog: {e}", exit_code=EXIT_USAGE, as_json=as_json)

    session = CLIContext(
        lab=lab,
        console=active_console,
        display_console=display_console,
        config=config,
        config_path=config_path,
        as_json=as_json,
        seed=seed,
        out=out,
        timing=timing,
        started=time.perf_counter(),
    )
    try:
        yield session
    except BudgetExceeded as e:
        cli_error(e.message, session, exit_code=EXIT_BUDGET, details=e.to_dict())
    except USAGE_ERRORS as e:
        cli_error(e.message, session, exit_code=EXIT_USAGE, details=e.to_dict())
    except UpbLabError as e:
        cli_error(e.message, session, exit_code=EXIT_CLAIM, details=e.to_dict())
