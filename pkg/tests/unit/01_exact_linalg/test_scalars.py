"""
Test: Exact Scalars and Qubit Rays
Gaussian rationals, their lossless text forms, and states of one qubit as
points of the projective line.
"""

import pytest

from upblab.core.linalg.scalars import (
    INFINITY,
    KET0,
    LOCAL_UNITARIES,
    ProjQubit,
    apply_unitary,
    canonical,
    conj,
    gauss,
    gauss_from_json,
    gauss_str,
    gauss_to_json,
    inner2,
    orthogonal,
    parse_rat,
    rat,
    rat_str,
)


class TestRationalText:
    """Rationals print as 'num/den' and read back exactly."""

    def test_reduced_form(self):
        assert rat_str(rat(-4, 6)) == "-2/3"

    def test_integer_has_no_denominator(self):
        assert rat_str(rat(6, 3)) == "2"

    def test_parse(self):
        assert parse_rat("3/4") == rat(3, 4)
        assert parse_rat(" -5 ") == rat(-5)

    def test_gauss_json(self):
        z = gauss(rat(1, 2), rat(-7, 3))
        assert gauss_to_json(z) == {"re": "1/2", "im": "-7/3"}
        assert gauss_from_json(gauss_to_json(z)) == z


class TestGaussStr:

    def test_real(self):
        assert gauss_str(gauss(2)) == "2"

    def test_pure_imaginary(self):
        assert gauss_str(gauss(0, -3)) == "-3i"
        assert gauss_str(gauss(0, 1)) == "i"

    def test_mixed(self):
        assert gauss_str(gauss(rat(1, 2), -1)) == "1/2-i"


class TestProjQubit:
    """Finite(c) is the ket (1, c); Infinity is (0, 1)."""

    # === Success Cases ===

    def test_constants(self):
        assert KET0.vector == (gauss(1), gauss(0))
        assert INFINITY.vector == (gauss(0), gauss(1))
        assert INFINITY.is_infinity

    def test_constants_orthogonal(self):
        assert orthogonal(KET0) == INFINITY
        assert orthogonal(INFINITY) == KET0
        assert not inner2(KET0, INFINITY)

    def test_orthogonal_of_finite(self):
        q = ProjQubit.finite(gauss(1, 1))
        assert orthogonal(q) == ProjQubit.finite(gauss(rat(-1, 2), rat(-1, 2)))
        assert not inner2(q, orthogonal(q))

    def test_orthogonal_is_involution(self):
        q = ProjQubit.finite(gauss(rat(2, 3), -5))
        assert orthogonal(orthogonal(q)) == q

    def test_from_vector_is_projective(self):
        assert ProjQubit.from_vector(gauss(2), gauss(0, 4)) == ProjQubit.finite(gauss(0, 2))
        assert ProjQubit.from_vector(gauss(0), gauss(3)) == INFINITY

    def test_json(self):
        assert INFINITY.to_json() == "inf"
        q = ProjQubit.finite(gauss(1, -1))
        assert ProjQubit.from_json(q.to_json()) == q

    # === Failure Cases ===

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError):
            ProjQubit.from_vector(gauss(0), gauss(0))


class TestLocalUnitaries:

    def test_x_swaps_basis(self):
        assert apply_unitary(LOCAL_UNITARIES["X"], KET0) == INFINITY
        assert apply_unitary(LOCAL_UNITARIES["X"], INFINITY) == KET0

    def test_hadamard(self):
        assert apply_unitary(LOCAL_UNITARIES["H"], KET0) == ProjQubit.finite(gauss(1))
        assert apply_unitary(LOCAL_UNITARIES["H"], INFINITY) == ProjQubit.finite(gauss(-1))

    def test_unitaries_preserve_orthogonality(self):
        q = ProjQubit.finite(gauss(rat(1, 3), 2))
        for u in LOCAL_UNITARIES.values():
            assert not inner2(apply_unitary(u, q), apply_unitary(u, orthogonal(q)))


class TestVectors:

    def test_canonical_scales_first_nonzero(self):
        v = (gauss(0), gauss(0, 2), gauss(4))
        assert canonical(v) == (gauss(0), gauss(1), gauss(0, -2))

    def test_conj(self):
        assert conj(gauss(1, 2)) == gauss(1, -2)
