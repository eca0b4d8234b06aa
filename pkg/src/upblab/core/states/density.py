"""
Complement states rho = (I - sum_j P_j) / (d - m) of orthogonal product sets,
and exact partial transposes.

Basis index bits follow qubit order with qubit A as the most significant bit.
Each projector is |psi><psi| / <psi|psi> on the unnormalized ket, so every
entry stays a Gaussian rational.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, QQ_I

from upblab.core.base.errors import BadSubset, SetTooLarge
from upblab.core.linalg.matrix import CMatrix, is_psd, kron_vectors, rank
from upblab.core.linalg.scalars import ONE, ZERO, abs2, conj
from upblab.core.analysis.sets import require_orthogonal
from upblab.core.analysis.splits import PartySplit, qubit_name
from upblab.core.uom.spec import ProductVectorSet


@dataclass(frozen=True)
class DensityMatrix:
    n_qubits: int
    matrix: CMatrix
    declared_rank: int

    def __post_init__(self):
        if self.matrix.shape != (self.dim, self.dim):
            raise ValueError(f"{self.matrix.shape} matrix for {self.n_qubits} qubits")
        if self.matrix.trace() != ONE:
            raise ValueError("density matrix trace must be exactly 1")
        if not self.matrix.is_hermitian():
            raise ValueError("density matrix must be Hermitian")
        if not is_psd(self.matrix):
            raise ValueError("density matrix must be positive semidefinite")
        actual = self.rank()
        if actual != self.declared_rank:
            raise ValueError(f"declared rank {self.declared_rank}, actual rank {actual}")

    @property
    def dim(self) -> int:
        return 2 ** self.n_qubits

    def rank(self) -> int:
        return rank(self.matrix)


def build_complement_state(vectors: ProductVectorSet) -> DensityMatrix:
    require_orthogonal(vectors)
    d, m = vectors.dim, len(vectors)
    if m >= d:
        raise SetTooLarge(rows=m, dim=d)

    acc: List[List] = [[ONE if i == j else ZERO for j in range(d)] for i in range(d)]
    for row in vectors:
        psi = kron_vectors([q.vector for q in row])
        norm = QQ_I(sum((abs2(z) for z in psi), QQ(0)), 0)
        support = [(i, z) for i, z in enumerate(psi) if z]
        for i, a in support:
            for j, b in support:
                acc[i][j] -= a * conj(b) / norm
    scale = QQ_I(1, 0) / QQ_I(d - m, 0)
    matrix = CMatrix(tuple(tuple(x * scale for x in r) for r in acc))
    return DensityMatrix(vectors.n_qubits, matrix, d - m)


def _side_mask(n_qubits: int, side: Sequence[int]) -> int:
    mask = 0
    for q in side:
        mask |= 1 << (n_qubits - 1 - q)
    return mask


def partial_transpose(rho: DensityMatrix, split: PartySplit, side: Sequence[int]) -> CMatrix:
    """Transpose the tensor factors of the qubits in `side`, a union of parties."""
    if not split.is_union_of_parties(tuple(side)):
        raise BadSubset(side="".join(qubit_name(q) for q in side), split=split.label)
    mask = _side_mask(rho.n_qubits, side)
    keep = ~mask
    a = rho.matrix.entries
    d = rho.dim
    return CMatrix(tuple(
        tuple(a[(i & keep) | (j & mask)][(j & keep) | (i & mask)] for j in range(d))
        for i in range(d)
    ))


def party_bipartitions(split: PartySplit) -> List[Tuple[Tuple[int, ...], PartySplit]]:
    """
    Bipartitions of the parties of `split`, as (first side qubits, two-party split).

    The side holding the first party comes first.
    """
    k = len(split)
    out = []
    for size in range(0, k - 1):
        for extra in combinations(range(1, k), size):
            chosen = (0,) + extra
            side = tuple(sorted(q for p in chosen for q in split.parties[p]))
            other = tuple(sorted(q for p in range(k) if p not in chosen for q in split.parties[p]))
            out.append((side, PartySplit(split.n_qubits, (side, other))))
    return out


def is_ppt_all_cuts(rho: DensityMatrix, n_qubits: int, split: Optional[PartySplit] = None) -> Dict[str, bool]:
    """PSD verdict of the partial transpose for every bipartition of the parties (qubits by default)."""
    split = split or PartySplit.singletons(n_qubits)
    return {
        cut.cut_label: is_psd(partial_transpose(rho, cut, side))
        for side, cut in party_bipartitions(split)
    }
