"""
upb-lab Core Analysis Module

Unextendibility of product vector sets:
- splits: Party splits and bipartitions
- sets: Orthogonality and row/qubit operations
- engine: Assignment search, extension witnesses, orthogonal product vectors
- genuine: Per-bipartition verdicts and tensor constructions
"""

from upblab.core.analysis.splits import PartySplit
from upblab.core.analysis.engine import enumerate_orthogonal, find_extension, is_upb
from upblab.core.analysis.genuine import ge_check

__all__ = [
    "PartySplit",
    "enumerate_orthogonal",
    "find_extension",
    "is_upb",
    "ge_check",
]
