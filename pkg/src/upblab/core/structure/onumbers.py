from collections import Counter
from dataclasses import dataclass
from typing import Dict, List

from upblab.core.linalg.scalars import ProjQubit, orthogonal
from upblab.core.uom.spec import ProductVectorSet


@dataclass(frozen=True)
class ColumnProfile:
    """Multiplicity of each state in one qubit column and the column's o-number."""
    column: int
    multiplicities: Dict[ProjQubit, int]
    o_number: int

    def to_dict(self) -> dict:
        return {
            "column": self.column + 1,
            "multiplicities": [[str(q), n] for q, n in self.multiplicities.items()],
            "oNumber": self.o_number,
        }


def column_profile(vectors: ProductVectorSet, j: int) -> ColumnProfile:
    mu = Counter(vectors.column(j))
    # Each orthogonal pair {x, x'} is seen from both ends.
    twice = sum(n * mu.get(orthogonal(x), 0) for x, n in mu.items())
    return ColumnProfile(j, dict(mu), twice // 2)


def o_numbers(vectors: ProductVectorSet) -> List[ColumnProfile]:
    return [column_profile(vectors, j) for j in range(vectors.n_qubits)]


@dataclass(frozen=True)
class BoundCheck:
    """
    Sum of o-numbers against m(m-1)/2.

    Every pair of rows of a UOM is orthogonal on some column, so a UOM needs
    sum >= threshold; holds=False rules the set out, holds=True proves nothing.
    """
    holds: bool
    sum: int
    threshold: int

    def to_dict(self) -> dict:
        return {"holds": self.holds, "sum": self.sum, "threshold": self.threshold}


def bound_check(vectors: ProductVectorSet) -> BoundCheck:
    total = sum(p.o_number for p in o_numbers(vectors))
    m = len(vectors)
    threshold = m * (m - 1) // 2
    return BoundCheck(total >= threshold, total, threshold)
