"""
Lab: Facade/Coordinator for the upb-lab services.

    Lab (Facade)
    ├── CatalogService      # UOM lookup, instantiation, lint, invariants
    ├── AnalysisService     # Searches, states, bipartitions, structure
    └── ReproduceService    # The reproduction claim suite
"""

from pathlib import Path
from typing import Optional

from rich.console import Console

from upblab.core.base.config import LabConfig
from upblab.core.services import AnalysisService, CatalogService, ReproduceService


class Lab:
    """Facade for the upb-lab services."""

    def __init__(
        self,
        config: Optional[LabConfig] = None,
        catalog_path: Optional[Path] = None,
        force: bool = False,
        console: Optional[Console] = None,
    ):
        self.config = config or LabConfig()
        self.console = console or Console()
        self.force = force

        # Services
        self.catalog = CatalogService(self.config, catalog_path)
        self.analysis = AnalysisService(self.config, force=force)
        self._reproduce_svc: Optional[ReproduceService] = None

    @property
    def reproduce(self) -> ReproduceService:
        """Lazy init: the claim suite caches instantiations per session."""
        if self._reproduce_svc is None:
            self._reproduce_svc = ReproduceService(self.config, self.catalog, self.analysis)
        return self._reproduce_svc
