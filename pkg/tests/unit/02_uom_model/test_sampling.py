"""
Test: Seeded Instantiation
Variables are drawn as Gaussian rationals and rejected until every
constraint holds.
"""

import pytest

from upblab.core.base.config import SamplingConfig
from upblab.core.base.errors import ConstraintUnsatisfiable
from upblab.core.analysis.sets import check_orthogonality
from upblab.core.uom.catalog import FAMILIES, catalog, get_spec
from upblab.core.uom.codec import parse_uom
from upblab.core.uom.sampling import instantiate


class TestInstantiate:

    # === Success Cases ===

    def test_deterministic(self):
        a, va = instantiate(get_spec("F3"), 7)
        b, vb = instantiate(get_spec("F3"), 7)
        assert a == b
        assert va == vb

    @pytest.mark.parametrize("name", FAMILIES)
    def test_constraints_hold(self, name):
        spec = get_spec(name)
        for seed in (1, 2, 3):
            inst, _ = instantiate(spec, seed)
            assert inst.satisfies(spec)
            assert set(inst.assignment) == set(spec.variables())

    def test_every_catalog_entry_is_orthogonal(self):
        for name, spec in catalog().items():
            _, vectors = instantiate(spec, 1)
            assert check_orthogonality(vectors).ok, name

    def test_values_within_sampling_range(self):
        cfg = SamplingConfig(numerator_min=1, numerator_max=2, denominators=[1])
        inst, _ = instantiate(get_spec("SHIFTS3"), 5, cfg)
        for q in inst.assignment.values():
            assert q.coord.x in (1, 2)
            assert q.coord.y in (1, 2)

    # === Failure Cases ===

    def test_unsatisfiable(self):
        spec = parse_uom('{"name": "U", "grid": [["x"], ["x\'"]], "constraints": [{"subject": "x", "forbidden": ["x"]}]}')
        with pytest.raises(ConstraintUnsatisfiable):
            instantiate(spec, 1, SamplingConfig(max_rounds=5))

    def test_bad_sampling_range(self):
        with pytest.raises(ValueError):
            SamplingConfig(numerator_min=3, numerator_max=1)
