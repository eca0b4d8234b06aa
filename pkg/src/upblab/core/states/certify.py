"""
Range-criterion certificates.

The range of the complement state is the orthogonal complement of the set,
so the product vectors in the range are exactly the product vectors
orthogonal to the set. If they span at most d - m - 1 dimensions they cannot
span the rank-(d - m) range, and the state is entangled. The criterion is
one-directional: a larger span is reported as inconclusive, never separable.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Union

from upblab.core.analysis.engine import DEFAULT_BUDGET, enumerate_orthogonal, solution_span_rank
from upblab.core.analysis.splits import PartySplit
from upblab.core.states.density import build_complement_state, is_ppt_all_cuts
from upblab.core.uom.spec import ProductVectorSet

logger = logging.getLogger(__name__)

INCONCLUSIVE = "criterion inconclusive"


@dataclass
class EntanglementCertificate:
    split: PartySplit
    rank: int
    ppt_verdicts: Dict[str, bool] = field(default_factory=dict)
    range_product_count: Union[int, str, None] = None
    range_product_span_rank: int = 0
    threshold: int = 0
    entangled: bool = False
    reason: str = ""

    @property
    def ppt(self) -> bool:
        return all(self.ppt_verdicts.values())

    @property
    def ppt_entangled(self) -> bool:
        return self.entangled and self.ppt

    def to_dict(self) -> dict:
        return {
            "split": self.split.label,
            "rank": self.rank,
            "trace": "1",
            "ppt": dict(self.ppt_verdicts),
            "rangeProductCount": self.range_product_count,
            "rangeProductSpanRank": self.range_product_span_rank,
            "threshold": self.threshold,
            "entangled": self.entangled,
            "pptEntangled": self.ppt_entangled,
            "reason": self.reason,
        }


def certify(
    vectors: ProductVectorSet,
    split: PartySplit,
    budget: int = DEFAULT_BUDGET,
    dominance: bool = True,
    force: bool = False,
    ppt_verdicts: Optional[Dict[str, bool]] = None,
) -> EntanglementCertificate:
    """
    Certificate for the complement state of `vectors` under `split`.

    PPT is always evaluated across every bipartition of the individual qubits;
    pass `ppt_verdicts` to reuse a previous evaluation of the same state.
    """
    rho = build_complement_state(vectors)
    if ppt_verdicts is None:
        ppt_verdicts = is_ppt_all_cuts(rho, vectors.n_qubits)
    solutions = enumerate_orthogonal(vectors, split, budget=budget, dominance=dominance, force=force)
    span = solution_span_rank(solutions)
    threshold = rho.dim - len(vectors) - 1
    entangled = span <= threshold

    cert = EntanglementCertificate(
        split=split,
        rank=rho.rank(),
        ppt_verdicts=ppt_verdicts,
        range_product_count=solutions.count if solutions.finite else "infinite",
        range_product_span_rank=span,
        threshold=threshold,
        entangled=entangled,
    )
    if not entangled:
        cert.reason = INCONCLUSIVE
    elif cert.ppt:
        cert.reason = f"PPT entangled, rank {cert.rank}"
    else:
        failing = ", ".join(k for k, ok in ppt_verdicts.items() if not ok)
        cert.reason = f"entangled, rank {cert.rank}, not PPT across {failing}"
    logger.info("certificate under %s: %s", split.label, cert.reason)
    return cert


def count_equivalence_check(a: ProductVectorSet, b: ProductVectorSet, split: PartySplit, **search) -> bool:
    """Same number of orthogonal product vectors, or both infinitely many."""
    sa = enumerate_orthogonal(a, split, **search)
    sb = enumerate_orthogonal(b, split, **search)
    if not sa.finite or not sb.finite:
        return sa.finite == sb.finite
    return sa.count == sb.count
