"""
The embedded catalog of four-qubit UOM families F1-F6, their constrained
special cases, and the three-qubit SHIFTS3 set.
"""

from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Dict, Optional

from upblab.core.base.errors import UnknownCatalogEntry
from upblab.core.uom.codec import parse_spec_list
from upblab.core.uom.spec import UomSpec

FAMILIES = ("F1", "F2", "F3", "F4", "F5", "F6")


@lru_cache(maxsize=1)
def _embedded() -> Dict[str, UomSpec]:
    text = resources.files("upblab.core.uom").joinpath("data/catalog.json").read_text(encoding="utf-8")
    return {s.name: s for s in parse_spec_list(text)}


def load_catalog(path: Optional[Path] = None) -> Dict[str, UomSpec]:
    """Catalog in file order; `path` replaces the embedded one."""
    if path is None:
        return dict(_embedded())
    return {s.name: s for s in parse_spec_list(Path(path).read_text(encoding="utf-8"))}


def catalog() -> Dict[str, UomSpec]:
    return load_catalog()


def get_spec(name: str, specs: Optional[Dict[str, UomSpec]] = None) -> UomSpec:
    specs = specs if specs is not None else _embedded()
    try:
        return specs[name]
    except KeyError:
        raise UnknownCatalogEntry(name=name)
