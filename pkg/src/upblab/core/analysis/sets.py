"""Operations on instantiated product vector sets."""

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Tuple

from upblab.core.base.errors import ArityMismatch, IndexOutOfRange, NotOrthogonal
from upblab.core.linalg.scalars import LOCAL_UNITARIES, ZERO, apply_unitary, inner2
from upblab.core.uom.spec import ProductVectorSet


@dataclass(frozen=True)
class OrthogonalityResult:
    """OK, or the first violating pair (1-indexed rows)."""
    pair: Optional[Tuple[int, int]] = None

    @property
    def ok(self) -> bool:
        return self.pair is None

    def to_dict(self) -> dict:
        return {"ok": self.ok, "pair": list(self.pair) if self.pair else None}


def rows_orthogonal(u, v) -> bool:
    # The global inner product is the product over qubits, so one zero factor suffices.
    return any(not inner2(p, q) for p, q in zip(u, v))


def check_orthogonality(vectors: ProductVectorSet) -> OrthogonalityResult:
    for (i, u), (j, v) in combinations(enumerate(vectors, start=1), 2):
        if not rows_orthogonal(u, v):
            return OrthogonalityResult((i, j))
    return OrthogonalityResult()


def require_orthogonal(vectors: ProductVectorSet) -> None:
    result = check_orthogonality(vectors)
    if not result.ok:
        raise NotOrthogonal(i=result.pair[0], j=result.pair[1])


def drop_row(vectors: ProductVectorSet, i: int) -> ProductVectorSet:
    """Remove row i (1-indexed), keeping the others in order."""
    if not 1 <= i <= len(vectors):
        raise IndexOutOfRange(index=i, rows=len(vectors))
    return ProductVectorSet(vectors.vectors[: i - 1] + vectors.vectors[i:])


def permute_rows(vectors: ProductVectorSet, order: Sequence[int]) -> ProductVectorSet:
    """Rows in the given 0-indexed order."""
    if sorted(order) != list(range(len(vectors))):
        raise ArityMismatch(details=f"{list(order)} is not a permutation of the rows")
    return ProductVectorSet(tuple(vectors[k] for k in order))


def permute_qubits(vectors: ProductVectorSet, perm: Sequence[int]) -> ProductVectorSet:
    """Move qubit q to position perm[q]."""
    n = vectors.n_qubits
    if sorted(perm) != list(range(n)):
        raise ArityMismatch(details=f"{list(perm)} is not a permutation of {n} qubits")
    out = []
    for row in vectors:
        new = [row[0]] * n
        for q, target in enumerate(perm):
            new[target] = row[q]
        out.append(tuple(new))
    return ProductVectorSet(tuple(out))


def apply_local_unitary(vectors: ProductVectorSet, qubit: int, name: str) -> ProductVectorSet:
    """Apply one of LOCAL_UNITARIES to a single qubit of every row."""
    if not 0 <= qubit < vectors.n_qubits:
        raise IndexOutOfRange(index=qubit + 1, rows=vectors.n_qubits)
    u = LOCAL_UNITARIES[name]
    return ProductVectorSet(tuple(
        tuple(apply_unitary(u, q) if k == qubit else q for k, q in enumerate(row))
        for row in vectors
    ))


def global_inner(u, v):
    acc = None
    for p, q in zip(u, v):
        z = inner2(p, q)
        acc = z if acc is None else acc * z
    return acc if acc is not None else ZERO
