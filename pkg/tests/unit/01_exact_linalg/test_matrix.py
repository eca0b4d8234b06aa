"""
Test: Dense Exact Matrices
Rank by fraction-free elimination, nullspaces, span tracking and the
characteristic-polynomial PSD test.
"""

import random
from itertools import combinations, permutations

import pytest

from upblab.core.base.errors import NonHermitianInput, ShapeMismatch
from upblab.core.linalg.matrix import (
    CMatrix,
    SpanTracker,
    char_poly,
    is_psd,
    kron,
    nullspace,
    nullspace_vectors,
    orthogonal_complement,
    rank,
    rref,
    span_rank,
)
from upblab.core.linalg.scalars import I, ZERO, gauss, rat, vector_inner


def m(*rows):
    return CMatrix.from_rows(rows)


def random_entry(rng: random.Random):
    if rng.random() < 0.3:
        return ZERO
    return gauss(rat(rng.randint(-3, 3), rng.randint(1, 3)), rat(rng.randint(-2, 2), rng.randint(1, 2)))


def random_matrix(rng: random.Random, rows: int, cols: int, inner: int = 0) -> CMatrix:
    """Random matrix; with `inner` > 0 a product of two factors, so its rank is at most `inner`."""
    if inner:
        left = CMatrix.from_rows([[random_entry(rng) for _ in range(inner)] for _ in range(rows)])
        right = CMatrix.from_rows([[random_entry(rng) for _ in range(cols)] for _ in range(inner)])
        return left @ right
    return CMatrix.from_rows([[random_entry(rng) for _ in range(cols)] for _ in range(rows)])


def random_hermitian(rng: random.Random, n: int) -> CMatrix:
    if rng.random() < 0.5:
        b = random_matrix(rng, n, rng.randint(1, n))
        return b @ b.conj_transpose()
    a = random_matrix(rng, n, n)
    return a + a.conj_transpose()


def det(a) -> object:
    n = len(a)
    total = ZERO
    for perm in permutations(range(n)):
        inversions = sum(1 for i, j in combinations(range(n), 2) if perm[i] > perm[j])
        term = gauss(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term *= a[i][j]
        total += term
    return total


def psd_by_minors(h: CMatrix) -> bool:
    n = h.rows
    for size in range(1, n + 1):
        for idx in combinations(range(n), size):
            minor = det([[h[i, j] for j in idx] for i in idx])
            assert minor.y == 0
            if minor.x < 0:
                return False
    return True


class TestConstruction:

    def test_shape(self):
        assert m([1, 2, 3], [4, 5, 6]).shape == (2, 3)

    def test_ragged_rows(self):
        with pytest.raises(ShapeMismatch):
            CMatrix.from_rows([[1, 2], [3]])

    def test_matmul_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            m([1, 2]) @ m([1, 2])

    def test_conj_transpose(self):
        a = m([1, I], [0, 2])
        assert a.conj_transpose() == m([1, 0], [-I, 2])

    def test_hermitian(self):
        assert m([1, I], [-I, 3]).is_hermitian()
        assert not m([1, I], [I, 3]).is_hermitian()


class TestKron:

    def test_dimensions_multiply(self):
        assert kron(CMatrix.identity(2), CMatrix.identity(4)).shape == (8, 8)

    def test_block_structure(self):
        out = kron(CMatrix.identity(2), CMatrix.diag([1, 2]))
        assert out == CMatrix.diag([1, 2, 1, 2])


class TestRank:
    """Rank is exact; no tolerance is involved."""

    def test_dependent_rows(self):
        assert rank(m([1, 2], [2, 4])) == 1

    def test_complex_dependence(self):
        assert rank(m([1, I], [I, -1])) == 1

    def test_rational_entries(self):
        a = CMatrix.from_rows([[rat(1, 2), rat(1, 3)], [gauss(1), rat(2, 3)]])
        assert rank(a) == 1

    def test_full_rank(self):
        assert rank(CMatrix.identity(5)) == 5

    def test_rref_pivots(self):
        reduced, pivots = rref([[gauss(0), gauss(2), gauss(4)], [gauss(1), gauss(1), gauss(1)]], 3)
        assert pivots == [0, 1]
        assert reduced[1] == [gauss(0), gauss(1), gauss(2)]


class TestRankNullity:
    """rank + nullity equals the number of columns."""

    @pytest.mark.parametrize("seed", range(20))
    def test_random_matrices(self, seed):
        rng = random.Random(seed)
        rows, cols = rng.randint(1, 5), rng.randint(1, 6)
        a = random_matrix(rng, rows, cols, inner=rng.choice([0, 1, 2]))
        kernel = nullspace_vectors(a.entries, cols)
        assert rank(a) + len(kernel) == cols
        for v in kernel:
            assert all(not x for x in (a @ CMatrix.column(v)).as_vector())

    def test_zero_matrix(self):
        assert len(nullspace_vectors(CMatrix.zeros(2, 3).entries, 3)) == 3


class TestNullspace:

    def test_kernel_vector(self):
        a = m([1, I], [I, -1])
        basis = nullspace(a)
        assert len(basis) == 1
        product = a @ basis[0]
        assert all(not x for x in product.as_vector())

    def test_orthogonal_complement(self):
        u = (gauss(1), I)
        (w,) = orthogonal_complement([u], 2)
        assert not vector_inner(u, w)

    def test_complement_of_nothing_is_everything(self):
        assert len(orthogonal_complement([], 4)) == 4

    def test_span_rank(self):
        vs = [(gauss(1), gauss(0), gauss(1)), (gauss(0), gauss(1), gauss(0)), (gauss(1), gauss(1), gauss(1))]
        assert span_rank(vs, 3) == 2
        assert span_rank([], 3) == 0


class TestSpanTracker:
    """push reports whether the rank grew; pop undoes exactly one push."""

    def test_push_and_pop(self):
        t = SpanTracker(2)
        assert t.push((gauss(1), gauss(0)))
        assert not t.push((gauss(2), gauss(0)))
        assert t.contains((gauss(3), gauss(0)))
        assert t.push((gauss(0), gauss(1)))
        assert t.full

        t.pop()
        assert t.rank == 1
        assert not t.full
        t.pop()
        assert t.rank == 1
        t.pop()
        assert t.rank == 0

    def test_contains_complex_multiple(self):
        t = SpanTracker(2)
        t.push((gauss(1), I))
        assert t.contains((I, gauss(-1)))
        assert not t.contains((gauss(1), gauss(0)))


class TestCharPoly:

    def test_diagonal(self):
        assert char_poly(CMatrix.diag([1, 2])) == [rat(1), rat(3), rat(2)]

    def test_complex_hermitian(self):
        # eigenvalues 1 and 3
        assert char_poly(m([2, I], [-I, 2])) == [rat(1), rat(4), rat(3)]

    def test_complex_hermitian_three_by_three(self):
        h = m([1, gauss(1, 1), 0], [gauss(1, -1), 2, I], [0, -I, 1])
        assert char_poly(h) == [rat(1), rat(4), rat(2), rat(-1)]
        assert not is_psd(h)

    @pytest.mark.parametrize("seed", range(10))
    def test_leading_coefficients(self, seed):
        rng = random.Random(seed)
        h = random_hermitian(rng, rng.randint(1, 5))
        coeffs = char_poly(h)
        assert coeffs[1] == h.trace().x
        assert coeffs[-1] == det(h.entries).x

    def test_non_hermitian(self):
        with pytest.raises(NonHermitianInput):
            char_poly(m([1, 1], [0, 1]))


class TestIsPsd:

    def test_psd_with_zero_eigenvalue(self):
        assert is_psd(CMatrix.diag([1, 0]))
        assert is_psd(m([1, I], [-I, 1]))

    def test_negative_eigenvalue(self):
        assert not is_psd(CMatrix.diag([1, -1]))
        assert not is_psd(m([1, 2], [2, 1]))

    @pytest.mark.parametrize("seed", range(30))
    def test_agrees_with_principal_minors(self, seed):
        rng = random.Random(seed)
        h = random_hermitian(rng, rng.randint(1, 5))
        assert h.is_hermitian()
        assert is_psd(h) == psd_by_minors(h)

    def test_rational_projector(self):
        half = rat(1, 2)
        assert is_psd(CMatrix.from_rows([[half, half], [half, half]]))
