"""
CatalogService: UOM lookup, instantiation and model-level reports.

Responsibilities:
- Resolve a UOM by catalog name or JSON file path
- Instantiate specs with seeded sampling
- Lint and invariant reports
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from upblab.core.base.config import LabConfig
from upblab.core.base.errors import DiagnosticReport
from upblab.core.analysis.sets import drop_row
from upblab.core.uom.catalog import get_spec, load_catalog
from upblab.core.uom.codec import parse_uom_file
from upblab.core.uom.invariants import (
    InequivalenceVerdict,
    coincidence_table,
    independent_variable_counts,
    inequivalence_report,
    orthogonality_table,
)
from upblab.core.uom.lint import lint
from upblab.core.uom.sampling import instantiate
from upblab.core.uom.spec import Instantiation, ProductVectorSet, UomSpec

logger = logging.getLogger(__name__)


class CatalogService:
    """
    Service for everything that starts from a UomSpec.

    A `catalog_path` replaces the embedded catalog for the whole session.
    """

    def __init__(self, config: LabConfig, catalog_path: Optional[Path] = None):
        self.config = config
        self.catalog_path = catalog_path
        self.specs: Dict[str, UomSpec] = load_catalog(catalog_path)

    def resolve(self, uom: str) -> UomSpec:
        """Catalog entry by name, else a UOM JSON file."""
        if uom in self.specs:
            return self.specs[uom]
        path = Path(uom)
        if path.suffix == ".json" or path.exists():
            return parse_uom_file(path)
        return get_spec(uom, self.specs)

    def instantiate(self, spec: UomSpec, seed: int) -> Tuple[Instantiation, ProductVectorSet]:
        return instantiate(spec, seed, self.config.sampling)

    def vectors(self, uom: str, seed: int, drop: Optional[int] = None) -> Tuple[UomSpec, Instantiation, ProductVectorSet]:
        """Instantiate `uom`; `drop` removes one row (1-indexed) afterwards."""
        spec = self.resolve(uom)
        inst, vectors = self.instantiate(spec, seed)
        if drop is not None:
            vectors = drop_row(vectors, drop)
        return spec, inst, vectors

    def lint(self, names: Optional[List[str]] = None) -> Dict[str, DiagnosticReport]:
        names = names or list(self.specs)
        return {name: lint(self.resolve(name)) for name in names}

    def invariants(self, spec: UomSpec) -> dict:
        data = {
            "uom": spec.name,
            "counts": independent_variable_counts(spec),
            "lint": lint(spec).to_dict_list(),
        }
        if spec.cols == 4:
            data["coincidence"] = coincidence_table(spec)
            data["orthogonality"] = orthogonality_table(spec)
        return data

    def compare(self, a: UomSpec, b: UomSpec) -> InequivalenceVerdict:
        verdict = inequivalence_report(a, b)
        logger.info("%s vs %s: %s %s", a.name, b.name, verdict.kind, verdict.feature or "")
        return verdict
