"""
Certificate output for every command: JSON or rich text, the optional
--out copy, and exit codes.
"""

import dataclasses
import json
from pathlib import Path
from typing import Any, Callable, Optional

import typer
from pydantic import BaseModel
from rich.console import Console
from sympy.polys.domains import QQ, QQ_I

from upblab.core.base.errors import DiagnosticReport, UpbLabError
from upblab.core.linalg.scalars import ProjQubit, gauss_to_json, rat_str
from upblab.core.analysis.splits import PartySplit
from upblab.commands.context import CLIContext


def json_serializer(obj: Any) -> Any:
    """
    Convert a verdict tree to plain JSON values.

    Rationals become "num/den", Gaussian rationals {"re", "im"}, qubit rays
    their label form and splits their "AB:CD" label. Sets are sorted so the
    output does not depend on hash order.
    """
    if obj is None:
        return None
    if isinstance(obj, (str, int, float, bool)):
        return obj
    if isinstance(obj, dict):
        return {k: json_serializer(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [json_serializer(v) for v in obj]
    if isinstance(obj, Path):
        return str(obj)
    if isinstance(obj, UpbLabError):
        return obj.to_dict()
    if isinstance(obj, DiagnosticReport):
        return obj.to_dict_list()
    if isinstance(obj, QQ_I.dtype):
        return gauss_to_json(obj)
    if isinstance(obj, QQ.dtype):
        return rat_str(obj)
    if isinstance(obj, ProjQubit):
        return obj.to_json()
    if isinstance(obj, PartySplit):
        return obj.label
    if isinstance(obj, BaseModel):
        return json_serializer(obj.to_dict() if hasattr(obj, "to_dict") else obj.model_dump(mode="json", by_alias=True))
    if hasattr(obj, "to_dict"):
        return json_serializer(obj.to_dict())
    if isinstance(obj, (set, frozenset)):
        return sorted(json_serializer(v) for v in obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return json_serializer(dataclasses.asdict(obj))
    return str(obj)


def to_json(data: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent."""
    return json.dumps(json_serializer(data), sort_keys=True, indent=2, ensure_ascii=False)


def write_out(path: Path, data: Any) -> None:
    Path(path).write_text(to_json(data) + "\n", encoding="utf-8")


def cli_result(
    ctx: CLIContext,
    data: Any,
    human_printer: Optional[Callable[[Any], None]] = None,
    exit_on_error: bool = True,
    success_indicator: Optional[bool] = None,
) -> None:
    """
    Emit a certificate as JSON or through `human_printer`, copy it to --out,
    and exit 1 when `success_indicator` is False.

    Example:
        with cli_session(ctx) as session:
            cert = session.certificate("verify", verdicts={"upb": True})
            cli_result(session, cert, lambda c: session.display_console.print("UPB"))
    """
    if ctx.as_json:
        typer.echo(to_json(data))
    elif human_printer:
        human_printer(data)

    if ctx.out is not None:
        write_out(ctx.out, data)

    # Handle exit codes
    if exit_on_error and success_indicator is not None and not success_indicator:
        raise typer.Exit(code=1)


def cli_error(
    message: str,
    ctx: Optional[CLIContext] = None,
    exit_code: int = 1,
    details: Optional[dict] = None,
    raise_exit: bool = True,
    as_json: Optional[bool] = None,
) -> None:
    """
    Report an error as {"error": ...} JSON or a red console line, then exit.

    `as_json` picks the mode when no session exists yet (config failures).

    Example:
        cli_error("Unknown claim", session, exit_code=2, details={"claim": name})
    """
    is_json_mode = ctx.as_json if ctx else bool(as_json)

    if is_json_mode:
        error_data = {
            "error": message,
            **(details or {}),
        }
        typer.echo(to_json(error_data))
    else:
        console = ctx.display_console if ctx else Console()
        console.print(f"[red]Error: {message}[/red]")

    if raise_exit:
        raise typer.Exit(code=exit_code)

