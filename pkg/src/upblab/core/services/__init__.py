"""
Services: The operations behind each upb-lab command.

Architecture:
    Lab (Facade/Coordinator)
    ├── CatalogService      # UOM lookup, instantiation, lint, invariants
    ├── AnalysisService     # Searches, states, bipartitions, structure
    ├── ReproduceService    # The reproduction claim suite
    └── certificate         # Certificate and report models
"""

from .catalog_service import CatalogService
from .analysis_service import AnalysisService
from .reproduce_service import ReproduceService
from .certificate import Certificate, ClaimResult, ReproductionReport

__all__ = [
    "CatalogService",
    "AnalysisService",
    "ReproduceService",
    "Certificate",
    "ClaimResult",
    "ReproductionReport",
]
