"""
Test: Classification Clause Membership
Each clause names the families that should show its pattern; only the
membership direction is checked.
"""

import pytest

from upblab.core.structure.classification import CLAUSES, classification_witnesses, match_clause
from upblab.core.structure.predicates import ColumnPattern
from tests.conftest import family_vectors


@pytest.fixture(scope="module")
def witnesses():
    return {(w.clause, w.family): w for w in classification_witnesses(seed=1)}


class TestClassification:

    def test_one_witness_per_clause_and_family(self, witnesses):
        assert len(witnesses) == sum(len(c.families) for c in CLAUSES)

    def test_f1_equal_orthogonal_alternating(self, witnesses):
        w = witnesses[("equal_orthogonal_alternating", "F1")]
        assert w.holds
        assert len(w.rows) == 2

    @pytest.mark.parametrize("family", ["F2", "F3", "F4", "F5"])
    def test_pair_equal_on_cross_qubits(self, witnesses, family):
        assert witnesses[("pair_equal_on_cross_qubits", family)].holds

    @pytest.mark.parametrize("family", ["F2", "F3", "F4", "F5", "F6"])
    def test_pair_on_qubit(self, witnesses, family):
        assert witnesses[("pair_on_qubit", family)].holds

    def test_absent_patterns_reported(self, witnesses):
        for key in (("triple_then_triple", "F2"), ("triple_on_qubit", "F2")):
            data = witnesses[key].to_dict()
            assert set(data) == {"clause", "family", "holds", "roles", "rows"}
            if not data["holds"]:
                assert data["rows"] is None

    def test_f6_lacks_alternating_pattern(self):
        clause = next(c for c in CLAUSES if c.name == "equal_orthogonal_alternating")
        assert not match_clause(ColumnPattern(family_vectors("F6")), clause).holds
