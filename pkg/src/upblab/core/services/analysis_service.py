"""
AnalysisService: Searches and certificates on instantiated sets.

Responsibilities:
- Orthogonality and UPB verdicts under a split
- Orthogonal product vector enumeration and drop-one sweeps
- Complement states and entanglement certificates
- Bipartition (GE) checks and tensor constructions
- Structural exclusion predicates and their fuzz
"""

from typing import Dict, List, Optional, Tuple

from upblab.core.base.config import LabConfig
from upblab.core.analysis.engine import (
    ExtensionWitness,
    OrthogonalSolutionSet,
    SweepEntry,
    drop_one_sweep,
    enumerate_orthogonal,
    find_extension,
    group,
)
from upblab.core.analysis.genuine import GeVerdict, ge_check, tensor_split, tensor_upb, triple_tensor
from upblab.core.analysis.sets import OrthogonalityResult, check_orthogonality
from upblab.core.analysis.splits import PartySplit
from upblab.core.states.certify import EntanglementCertificate, certify
from upblab.core.states.density import build_complement_state, is_ppt_all_cuts
from upblab.core.structure.onumbers import BoundCheck, bound_check, o_numbers
from upblab.core.structure.predicates import FiredCondition, FuzzReport, exclusion_predicates, predicate_fuzz
from upblab.core.uom.spec import ProductVectorSet


class AnalysisService:
    """
    Service for the exact searches.

    Search limits come from the [search] section; `force` lifts the
    assignment budget for the whole session.
    """

    def __init__(self, config: LabConfig, force: bool = False):
        self.config = config
        self.force = force

    @property
    def search_options(self) -> dict:
        return {
            "budget": self.config.search.budget,
            "dominance": self.config.search.dominance,
            "force": self.force,
        }

    # ==================== Unextendibility ====================

    def orthogonality(self, vectors: ProductVectorSet) -> OrthogonalityResult:
        return check_orthogonality(vectors)

    def extension(self, vectors: ProductVectorSet, split: PartySplit) -> Optional[ExtensionWitness]:
        return find_extension(group(vectors, split), **self.search_options)

    def verify(self, vectors: ProductVectorSet, splits: List[PartySplit]) -> Dict[str, Optional[ExtensionWitness]]:
        """Extension witness (None for UPB) per split label."""
        return {split.label: self.extension(vectors, split) for split in splits}

    def enumerate(self, vectors: ProductVectorSet, split: PartySplit) -> OrthogonalSolutionSet:
        return enumerate_orthogonal(vectors, split, **self.search_options)

    def sweep(self, vectors: ProductVectorSet, split: PartySplit) -> List[SweepEntry]:
        return drop_one_sweep(vectors, split, **self.search_options)

    # ==================== States ====================

    def state(self, vectors: ProductVectorSet) -> dict:
        rho = build_complement_state(vectors)
        return {
            "dim": rho.dim,
            "rank": rho.rank(),
            "declaredRank": rho.declared_rank,
            "trace": "1",
            "ppt": is_ppt_all_cuts(rho, vectors.n_qubits),
        }

    def certify(
        self,
        vectors: ProductVectorSet,
        split: PartySplit,
        ppt_verdicts: Optional[Dict[str, bool]] = None,
    ) -> EntanglementCertificate:
        return certify(vectors, split, ppt_verdicts=ppt_verdicts, **self.search_options)

    # ==================== Bipartitions and tensors ====================

    def ge(self, vectors: ProductVectorSet) -> GeVerdict:
        return ge_check(vectors, **self.search_options)

    def tensor(self, s: ProductVectorSet, t: ProductVectorSet, m: int) -> Tuple[ProductVectorSet, PartySplit]:
        return tensor_upb(s, t, m), tensor_split(s, t, m)

    def triple(self, s: ProductVectorSet, m: int) -> Tuple[ProductVectorSet, PartySplit]:
        return triple_tensor(s, m)

    # ==================== Structure ====================

    def structure(self, vectors: ProductVectorSet) -> Tuple[List[FiredCondition], BoundCheck, list]:
        return exclusion_predicates(vectors), bound_check(vectors), o_numbers(vectors)

    def fuzz(self, n: int, seed: int) -> FuzzReport:
        return predicate_fuzz(n, seed, self.config.sampling)
