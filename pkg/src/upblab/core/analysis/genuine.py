"""
Genuinely entangled complements: UPB checks across every bipartition, the
almost-GE test for 4x4 cuts, and tensor constructions of multipartite UPBs.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from upblab.core.base.errors import ArityMismatch, SetTooLarge
from upblab.core.linalg.matrix import orthogonal_complement
from upblab.core.linalg.scalars import canonical, orthogonal
from upblab.core.analysis.engine import (
    DEFAULT_BUDGET,
    ExtensionWitness,
    KillCount,
    find_extension,
    group,
    kill_statistic,
)
from upblab.core.analysis.sets import require_orthogonal
from upblab.core.analysis.splits import PartySplit, bipartitions
from upblab.core.uom.spec import ProductVectorSet

logger = logging.getLogger(__name__)


class CutStatus(str, Enum):
    UPB = "UPB"
    EXTENDIBLE = "ExtendibleWith"
    TWO_BY_N = "TwoByN_AutoFail"


@dataclass(frozen=True)
class CutVerdict:
    split: PartySplit
    status: CutStatus
    witness: Optional[ExtensionWitness] = None

    @property
    def both_sides_at_least_four(self) -> bool:
        return all(d >= 4 for d in self.split.dims)

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "witness": self.witness.to_dict() if self.witness else None,
        }


@dataclass
class GeVerdict:
    """
    Per-bipartition UPB verdicts.

    is_almost_ge only looks at cuts whose sides both have dimension four or
    more; with no such cut (three qubits) it holds vacuously.
    """
    cuts: Dict[str, CutVerdict] = field(default_factory=dict)
    kill_statistics: List[KillCount] = field(default_factory=list)

    @property
    def is_geupb(self) -> bool:
        return all(v.status is CutStatus.UPB for v in self.cuts.values())

    @property
    def is_almost_ge(self) -> bool:
        return all(v.status is CutStatus.UPB for v in self.cuts.values() if v.both_sides_at_least_four)

    def to_dict(self) -> dict:
        return {
            "perBipartition": {label: v.to_dict() for label, v in self.cuts.items()},
            "isGeupb": self.is_geupb,
            "isAlmostGe": self.is_almost_ge,
            "killStatistics": [{"split": k.split, "counts": k.counts} for k in self.kill_statistics],
        }


def two_by_n_witness(vectors: ProductVectorSet, cut: PartySplit) -> Optional[ExtensionWitness]:
    """
    Kill row 1 on the single-qubit side and rows 2..m on the other side.

    Returns None when rows 2..m already span the large side.
    """
    qubit_side = next((k for k, p in enumerate(cut.parties) if len(p) == 1), None)
    if qubit_side is None or len(cut) != 2:
        return None
    other = 1 - qubit_side
    q = cut.parties[qubit_side][0]
    g = group(vectors, cut)
    complement = orthogonal_complement([row[other] for row in g.rows[1:]], cut.dims[other])
    if not complement:
        return None
    parties = [None, None]
    parties[qubit_side] = orthogonal(vectors[0][q]).vector
    parties[other] = canonical(complement[0])
    assignment = (qubit_side,) + (other,) * (len(vectors) - 1)
    witness = ExtensionWitness(cut, tuple(parties), assignment)
    if not witness.is_orthogonal_to(g):
        raise ArithmeticError("2xN witness is not orthogonal to the set")
    return witness


def ge_check(
    vectors: ProductVectorSet,
    budget: int = DEFAULT_BUDGET,
    dominance: bool = True,
    force: bool = False,
) -> GeVerdict:
    if len(vectors) >= vectors.dim:
        raise SetTooLarge(rows=len(vectors), dim=vectors.dim)
    require_orthogonal(vectors)

    verdict = GeVerdict()
    for cut in bipartitions(vectors.n_qubits):
        witness = None
        status = None
        if min(cut.dims) == 2:
            witness = two_by_n_witness(vectors, cut)
            if witness is not None:
                status = CutStatus.TWO_BY_N
        if status is None:
            witness = find_extension(group(vectors, cut), budget=budget, dominance=dominance, force=force)
            status = CutStatus.UPB if witness is None else CutStatus.EXTENDIBLE
        verdict.cuts[cut.cut_label] = CutVerdict(cut, status, witness)
        if all(d >= 4 for d in cut.dims):
            stat = kill_statistic(vectors, cut)
            verdict.kill_statistics.append(stat)
            logger.debug("kill counts under %s: %s", cut.label, stat.counts)

    logger.info(
        "ge_check on %d rows: geupb=%s almost_ge=%s",
        len(vectors), verdict.is_geupb, verdict.is_almost_ge,
    )
    return verdict


def _party_arity(vectors: ProductVectorSet, m: int) -> int:
    if m < 1 or vectors.n_qubits % m:
        raise ArityMismatch(details=f"{vectors.n_qubits} qubits cannot form {m} equal parties")
    return vectors.n_qubits // m


def tensor_upb(s: ProductVectorSet, t: ProductVectorSet, m: int) -> ProductVectorSet:
    """
    All |S|*|T| rows s (x) t, party by party.

    Party k of an output row holds party k of the S row followed by party k of
    the T row, so the output is m-party shaped with arity a + b.
    """
    a, b = _party_arity(s, m), _party_arity(t, m)
    rows = []
    for u in s:
        for v in t:
            row = []
            for k in range(m):
                row.extend(u[k * a:(k + 1) * a])
                row.extend(v[k * b:(k + 1) * b])
            rows.append(tuple(row))
    out = ProductVectorSet(tuple(rows))
    require_orthogonal(out)
    return out


def tensor_split(s: ProductVectorSet, t: ProductVectorSet, m: int) -> PartySplit:
    return PartySplit.uniform(m, _party_arity(s, m) + _party_arity(t, m))


def cyclic_relabel(vectors: ProductVectorSet, m: int, shift: int = 1) -> ProductVectorSet:
    """Rotate parties: with shift 1, (A, B, C) becomes (B, C, A)."""
    a = _party_arity(vectors, m)
    rows = []
    for row in vectors:
        parties = [row[k * a:(k + 1) * a] for k in range(m)]
        rows.append(tuple(q for k in range(m) for q in parties[(k + shift) % m]))
    return ProductVectorSet(tuple(rows))


def triple_tensor(s: ProductVectorSet, m: int) -> Tuple[ProductVectorSet, PartySplit]:
    """S (x) S rotated once (x) S rotated twice, with its m-party split."""
    first = tensor_upb(s, cyclic_relabel(s, m, 1), m)
    out = tensor_upb(first, cyclic_relabel(s, m, 2), m)
    return out, PartySplit.uniform(m, out.n_qubits // m)
