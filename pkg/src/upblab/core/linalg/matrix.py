"""
Dense exact linear algebra over the Gaussian rationals.

Elimination follows the dense domain-matrix routines: rank is computed with
fraction-free (Bareiss) elimination after clearing row denominators, the
nullspace is read off the reduced row echelon form, and the characteristic
polynomial comes from the Faddeev-LeVerrier recurrence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from sympy.polys.domains import QQ, QQ_I

from upblab.core.base.errors import NonHermitianInput, ShapeMismatch
from upblab.core.linalg.scalars import ONE, ZERO, GaussRat, Rat, Vector, conj

Rows = List[List[GaussRat]]


@dataclass(frozen=True)
class CMatrix:
    """Immutable dense matrix of Gaussian rationals, stored row-major."""
    entries: Tuple[Tuple[GaussRat, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise ShapeMismatch(details="matrix must have positive dimensions")
        width = len(self.entries[0])
        if any(len(r) != width for r in self.entries):
            raise ShapeMismatch(details="ragged rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence]) -> "CMatrix":
        return cls(tuple(tuple(QQ_I.convert(x) for x in r) for r in rows))

    @classmethod
    def column(cls, v: Sequence[GaussRat]) -> "CMatrix":
        return cls(tuple((x,) for x in v))

    @classmethod
    def identity(cls, n: int) -> "CMatrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "CMatrix":
        return cls(tuple(tuple(ZERO for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def diag(cls, values: Sequence[GaussRat]) -> "CMatrix":
        n = len(values)
        return cls(tuple(tuple(QQ_I.convert(values[i]) if i == j else ZERO for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: Tuple[int, int]) -> GaussRat:
        i, j = ij
        return self.entries[i][j]

    def as_vector(self) -> Vector:
        if self.cols != 1:
            raise ShapeMismatch(details=f"{self.rows}x{self.cols} is not a column")
        return tuple(r[0] for r in self.entries)

    def __add__(self, other: "CMatrix") -> "CMatrix":
        self._same_shape(other)
        return CMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: "CMatrix") -> "CMatrix":
        self._same_shape(other)
        return CMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __matmul__(self, other: "CMatrix") -> "CMatrix":
        if self.cols != other.rows:
            raise ShapeMismatch(details=f"{self.shape} @ {other.shape}")
        return CMatrix(_matmul(self.entries, other.entries))

    def scale(self, z) -> "CMatrix":
        z = QQ_I.convert(z)
        return CMatrix(tuple(tuple(a * z for a in r) for r in self.entries))

    def transpose(self) -> "CMatrix":
        return CMatrix(tuple(zip(*self.entries)))

    def conj_transpose(self) -> "CMatrix":
        return CMatrix(tuple(tuple(conj(a) for a in col) for col in zip(*self.entries)))

    def trace(self) -> GaussRat:
        return _trace(self.entries)

    def is_hermitian(self) -> bool:
        if self.rows != self.cols:
            return False
        n = self.rows
        return all(self.entries[i][j] == conj(self.entries[j][i]) for i in range(n) for j in range(i, n))

    def _same_shape(self, other: "CMatrix") -> None:
        if self.shape != other.shape:
            raise ShapeMismatch(details=f"{self.shape} vs {other.shape}")


def _matmul(a: Sequence[Sequence[GaussRat]], b: Sequence[Sequence[GaussRat]]) -> Tuple[Tuple[GaussRat, ...], ...]:
    n = len(b[0])
    out = []
    for row in a:
        acc = [ZERO] * n
        for k, x in enumerate(row):
            if not x:
                continue
            brow = b[k]
            for j in range(n):
                y = brow[j]
                if y:
                    acc[j] += x * y
        out.append(tuple(acc))
    return tuple(out)


def _trace(a: Sequence[Sequence[GaussRat]]) -> GaussRat:
    acc = ZERO
    for i in range(len(a)):
        acc += a[i][i]
    return acc


def kron(a: CMatrix, b: CMatrix) -> CMatrix:
    """Kronecker product; dimensions multiply."""
    rows = []
    for ra in a.entries:
        for rb in b.entries:
            rows.append(tuple(x * y for x in ra for y in rb))
    return CMatrix(tuple(rows))


def kron_vectors(vectors: Sequence[Vector]) -> Vector:
    out: Vector = (ONE,)
    for v in vectors:
        out = tuple(x * y for x in out for y in v)
    return out


# Elimination


def _clear_denominators(row: Sequence[GaussRat]) -> List[GaussRat]:
    lcm = 1
    for z in row:
        if z:
            lcm = math.lcm(lcm, int(z.x.denominator), int(z.y.denominator))
    if lcm == 1:
        return list(row)
    scale = QQ_I(lcm, 0)
    return [z * scale for z in row]


def bareiss_rank(rows: Sequence[Sequence[GaussRat]], ncols: int) -> int:
    """
    Rank by fraction-free elimination.

    Each row is first scaled to Gaussian integers; every update
    (pivot * a_ik - a_ij * a_rk) / previous_pivot then divides exactly.
    """
    a = [_clear_denominators(r) for r in rows]
    m = len(a)
    rank = 0
    prev = ONE
    for j in range(ncols):
        pivot_row = next((i for i in range(rank, m) if a[i][j]), None)
        if pivot_row is None:
            continue
        if pivot_row != rank:
            a[rank], a[pivot_row] = a[pivot_row], a[rank]
        pivot = a[rank][j]
        for i in range(rank + 1, m):
            multiplier = a[i][j]
            ai, ar = a[i], a[rank]
            for k in range(j + 1, ncols):
                ai[k] = (pivot * ai[k] - multiplier * ar[k]) / prev
            ai[j] = ZERO
        prev = pivot
        rank += 1
        if rank == m:
            break
    return rank


def rref(rows: Sequence[Sequence[GaussRat]], ncols: int) -> Tuple[Rows, List[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    a = [list(r) for r in rows]
    pivots: List[int] = []
    i = 0
    for j in range(ncols):
        if i == len(a):
            break
        pivot_row = next((r for r in range(i, len(a)) if a[r][j]), None)
        if pivot_row is None:
            continue
        a[i], a[pivot_row] = a[pivot_row], a[i]
        inv = ONE / a[i][j]
        a[i] = [x * inv for x in a[i]]
        ai = a[i]
        for r in range(len(a)):
            if r != i and a[r][j]:
                f = a[r][j]
                a[r] = [x - f * y for x, y in zip(a[r], ai)]
        pivots.append(j)
        i += 1
    return a[:i], pivots


def nullspace_vectors(rows: Sequence[Sequence[GaussRat]], ncols: int) -> List[Vector]:
    """Basis of {v : M v = 0} for the matrix with the given rows."""
    if not rows:
        return [tuple(ONE if i == j else ZERO for j in range(ncols)) for i in range(ncols)]
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][free]
        basis.append(tuple(v))
    return basis


def orthogonal_complement(vectors: Sequence[Vector], dim: int) -> List[Vector]:
    """Basis of all w with <v, w> = 0 for every given v."""
    return nullspace_vectors([[conj(x) for x in v] for v in vectors], dim)


def span_rank(vectors: Sequence[Vector], dim: int) -> int:
    if not vectors:
        return 0
    return bareiss_rank(vectors, dim)


class SpanTracker:
    """
    Incremental echelon basis with undo, used by the assignment search.

    `push` reports whether the vector raised the rank; `pop` undoes the last push.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self._basis: List[Tuple[int, Vector]] = []
        self._added: List[bool] = []

    @property
    def rank(self) -> int:
        return len(self._basis)

    @property
    def full(self) -> bool:
        return len(self._basis) == self.dim

    def _reduce(self, v: Vector) -> List[GaussRat]:
        w = list(v)
        for p, b in self._basis:
            f = w[p]
            if f:
                w = [x - f * y if y else x for x, y in zip(w, b)]
        return w

    def contains(self, v: Vector) -> bool:
        return not any(self._reduce(v))

    def push(self, v: Vector) -> bool:
        w = self._reduce(v)
        p = next((i for i, x in enumerate(w) if x), None)
        if p is None:
            self._added.append(False)
            return False
        inv = ONE / w[p]
        self._basis.append((p, tuple(x * inv for x in w)))
        self._added.append(True)
        return True

    def pop(self) -> None:
        if self._added.pop():
            self._basis.pop()


# Public operations


def rank(m: CMatrix) -> int:
    """Exact rank via fraction-free elimination."""
    return bareiss_rank(m.entries, m.cols)


def nullspace(m: CMatrix) -> List[CMatrix]:
    """Exact basis of {v : M v = 0} as column matrices."""
    return [CMatrix.column(v) for v in nullspace_vectors(m.entries, m.cols)]


def char_poly(h: CMatrix) -> List[Rat]:
    """
    Coefficients e_0..e_n with det(xI - H) = sum_k (-1)^k e_k x^(n-k).

    Faddeev-LeVerrier: M_1 = I, c_(n-k) = -tr(H M_k) / k, M_(k+1) = H M_k + c_(n-k) I.
    """
    if not h.is_hermitian():
        raise NonHermitianInput(details=f"{h.rows}x{h.cols} matrix")
    n = h.rows
    a = h.entries
    coeffs: List[Rat] = [QQ(1)]
    m = CMatrix.identity(n).entries
    for k in range(1, n + 1):
        am = _matmul(a, m)
        c = -_trace(am) / k
        if c.y:
            raise ArithmeticError("imaginary characteristic coefficient of a Hermitian matrix")
        coeffs.append(c.x if k % 2 == 0 else -c.x)
        m = tuple(tuple(x + c if i == j else x for j, x in enumerate(row)) for i, row in enumerate(am))
    return coeffs


def is_psd(h: CMatrix) -> bool:
    """Exact PSD test: a Hermitian spectrum is nonnegative iff every e_k >= 0."""
    return all(e >= 0 for e in char_poly(h))
