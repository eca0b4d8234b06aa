"""
UOM JSON format.

    {"name": "F1", "rows": 8, "cols": 4,
     "grid": [["0", "0", "0", "0"], ...],
     "constraints": [{"subject": "i3", "forbidden": ["0", "1", "i4"]}, ...]}

`rows` and `cols` are optional; when present they must match the grid.
"""

import json
from pathlib import Path
from typing import Any, Dict, List

from upblab.core.base.errors import ParseError
from upblab.core.uom.labels import Constraint, Label
from upblab.core.uom.spec import UomSpec


def _label(text: Any, field: str) -> Label:
    if not isinstance(text, str):
        raise ParseError(f"label must be a string, got {text!r}", field=field)
    try:
        return Label.parse(text)
    except ValueError as e:
        raise ParseError(str(e), field=field)


def spec_from_dict(data: Dict[str, Any]) -> UomSpec:
    if not isinstance(data, dict):
        raise ParseError("UOM document must be an object")
    name = data.get("name")
    if not isinstance(name, str) or not name:
        raise ParseError("missing 'name'", field="name")
    grid_data = data.get("grid")
    if not isinstance(grid_data, list) or not grid_data:
        raise ParseError("'grid' must be a non-empty list of rows", field="grid")

    cols = data.get("cols", len(grid_data[0]) if isinstance(grid_data[0], list) else None)
    grid = []
    for i, row in enumerate(grid_data):
        if not isinstance(row, list):
            raise ParseError(f"row {i + 1} is not a list", field=f"grid[{i}]")
        if len(row) != cols:
            raise ParseError(f"row {i + 1} has {len(row)} entries, expected {cols}", field=f"grid[{i}]")
        grid.append(tuple(_label(x, f"grid[{i}][{j}]") for j, x in enumerate(row)))
    if "rows" in data and data["rows"] != len(grid):
        raise ParseError(f"'rows' is {data['rows']} but the grid has {len(grid)} rows", field="rows")

    constraints = []
    for k, c in enumerate(data.get("constraints", [])):
        where = f"constraints[{k}]"
        if not isinstance(c, dict) or "subject" not in c:
            raise ParseError("constraint needs a 'subject'", field=where)
        forbidden = c.get("forbidden", [])
        if not isinstance(forbidden, list) or not forbidden:
            raise ParseError("constraint needs a non-empty 'forbidden' list", field=f"{where}.forbidden")
        constraints.append(Constraint(
            _label(c["subject"], f"{where}.subject"),
            tuple(_label(f, f"{where}.forbidden") for f in forbidden),
        ))
    return UomSpec(name, tuple(grid), tuple(constraints))


def spec_to_dict(spec: UomSpec) -> Dict[str, Any]:
    return {
        "name": spec.name,
        "rows": spec.rows,
        "cols": spec.cols,
        "grid": [[str(l) for l in row] for row in spec.grid],
        "constraints": [
            {"subject": str(c.subject), "forbidden": [str(f) for f in c.forbidden]}
            for c in spec.constraints
        ],
    }


def parse_uom(text: str) -> UomSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno)
    return spec_from_dict(data)


def parse_uom_file(path: Path) -> UomSpec:
    """Read one UOM document from disk."""
    return parse_uom(Path(path).read_text(encoding="utf-8"))


def parse_spec_list(text: str) -> List[UomSpec]:
    """A bare spec, a list of specs, or a catalog document {"specs": [...]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno)
    if isinstance(data, dict) and "specs" in data:
        data = data["specs"]
    if isinstance(data, dict):
        return [spec_from_dict(data)]
    if not isinstance(data, list):
        raise ParseError("expected a UOM object or a list of them")
    return [spec_from_dict(d) for d in data]


def dump_uom(spec: UomSpec) -> str:
    return json.dumps(spec_to_dict(spec), indent=2) + "\n"
