"""
Test: Exclusion Conditions
A condition that fires proves the set is not a UPB across AB:CD; the fuzz
checks that no condition fires on a set the search finds unextendible.
"""

import random

import pytest

from upblab.core.base.errors import WrongShape
from upblab.core.linalg.scalars import INFINITY, KET0, ProjQubit, gauss
from upblab.core.structure.predicates import (
    CONDITIONS,
    ColumnPattern,
    exclusion_predicates,
    four_identical,
    predicate_fuzz,
    random_label_grid,
)
from upblab.core.uom.catalog import FAMILIES
from upblab.core.uom.spec import ProductVectorSet
from tests.conftest import family_vectors


def four_equal_set() -> ProductVectorSet:
    rows = [[KET0 if k < 4 else INFINITY, ProjQubit.finite(gauss(k + 1)), KET0, KET0] for k in range(8)]
    return ProductVectorSet.of(rows)


class TestConditions:

    @pytest.mark.parametrize("name", FAMILIES)
    def test_silent_on_families(self, name):
        for seed in (1, 2):
            assert exclusion_predicates(family_vectors(name, seed)) == []

    def test_four_identical_fires(self):
        hit = four_identical(ColumnPattern(four_equal_set()))
        assert hit.name == "four_identical"
        assert hit.qubits == (0,)
        assert hit.rows == (0, 1, 2, 3)
        assert hit.to_dict() == {"condition": "four_identical", "qubits": ["A"], "rows": [1, 2, 3, 4]}

    def test_fired_in_registry_order(self):
        fired = [f.name for f in exclusion_predicates(four_equal_set())]
        assert fired[0] == "four_identical"
        assert fired == [name for name in CONDITIONS if name in fired]

    def test_wrong_shape(self):
        with pytest.raises(WrongShape):
            exclusion_predicates(family_vectors("SHIFTS3"))


class TestRandomLabelGrid:

    def test_rows_pairwise_orthogonal(self):
        rng = random.Random(4)
        for _ in range(5):
            grid = random_label_grid(rng)
            if grid is None:
                continue
            assert len(grid) == 8
            for i in range(8):
                for j in range(i + 1, 8):
                    assert any(grid[i][q] ^ 1 == grid[j][q] for q in range(4))


class TestFuzz:

    def test_small_corpus_sound(self):
        report = predicate_fuzz(20, seed=0)
        assert report.total == 20
        assert report.sound
        assert report.to_dict()["sound"] is True

    def test_deterministic(self):
        assert predicate_fuzz(10, seed=3).to_dict() == predicate_fuzz(10, seed=3).to_dict()
