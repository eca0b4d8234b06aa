"""
Test: o-Numbers and the Pair Bound
"""

from upblab.core.linalg.scalars import KET0, ProjQubit, gauss, orthogonal
from upblab.core.structure.onumbers import bound_check, column_profile, o_numbers
from upblab.core.uom.catalog import FAMILIES, get_spec
from upblab.core.uom.sampling import instantiate
from upblab.core.uom.spec import ProductVectorSet
from tests.conftest import family_vectors


class TestONumbers:

    def test_f1_columns(self):
        inst, vectors = instantiate(get_spec("F1"), 1)
        degenerate = inst.assignment["i3"] == orthogonal(inst.assignment["i4"])
        assert [p.o_number for p in o_numbers(vectors)] == [8, 8, 8, 8 if degenerate else 6]

    def test_multiplicities(self):
        profile = column_profile(family_vectors("F1"), 0)
        assert sorted(profile.multiplicities.values()) == [2, 2, 2, 2]
        assert profile.to_dict()["column"] == 1

    def test_no_orthogonal_pairs(self):
        vectors = ProductVectorSet.of([[ProjQubit.finite(gauss(k))] for k in range(1, 5)])
        assert column_profile(vectors, 0).o_number == 0


class TestBoundCheck:

    def test_families_satisfy_bound(self):
        for name in FAMILIES:
            check = bound_check(family_vectors(name))
            assert check.threshold == 28
            assert check.holds, name

    def test_bound_rules_out(self):
        rows = [[ProjQubit.finite(gauss(k)), KET0, KET0, KET0] for k in range(1, 9)]
        check = bound_check(ProductVectorSet.of(rows))
        assert check.sum == 0
        assert not check.holds
        assert check.to_dict() == {"holds": False, "sum": 0, "threshold": 28}
