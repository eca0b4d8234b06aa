"""
Certificate and report models.

Every command's JSON output is a Certificate; `reproduce` writes a
ReproductionReport. Both serialize with sorted keys and a trailing newline,
so the same command and seed give the same bytes.
"""

import importlib.metadata
import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


def tool_version() -> str:
    try:
        return importlib.metadata.version("upb-lab")
    except importlib.metadata.PackageNotFoundError:
        return "0.1.0"  # Fallback for development


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


class _Document(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True)

    def dumps(self) -> str:
        return dumps(self.to_dict())

    def write(self, path: Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")


class Certificate(_Document):
    """
    Echo of one command with its exact verdicts.

    Solutions hold canonical projective coordinates; rationals are "num/den"
    strings and Gaussian rationals {"re", "im"} objects. `timing` stays null
    unless requested.
    """
    command: str
    seed: Optional[int] = None
    uom: Optional[str] = None
    split: Optional[str] = None
    verdicts: Dict[str, Any] = Field(default_factory=dict)
    solutions: List[Any] = Field(default_factory=list)
    timing: Optional[float] = None
    tool_version: str = Field(default_factory=tool_version, alias="toolVersion")


class ClaimResult(_Document):
    """
    One reproduction claim.

    Claims with asserted=False are computed and reported but never fail
    the run.
    """
    name: str
    passed: bool
    asserted: bool = True
    summary: str = ""
    detail: Dict[str, Any] = Field(default_factory=dict)


class ReproductionReport(_Document):
    seeds: List[int] = Field(default_factory=list)
    claims: List[ClaimResult] = Field(default_factory=list)
    tool_version: str = Field(default_factory=tool_version, alias="toolVersion")

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims if c.asserted)

    @property
    def first_failure(self) -> Optional[ClaimResult]:
        return next((c for c in self.claims if c.asserted and not c.passed), None)

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["passed"] = self.passed
        failure = self.first_failure
        data["firstFailure"] = failure.name if failure else None
        return data
