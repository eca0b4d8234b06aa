"""
Test: Labels and Symbolic Specs
A UOM is a grid of labels with inequality constraints on its variables.
"""

import pytest

from upblab.core.base.errors import ParseError, UnknownVariable
from upblab.core.uom.catalog import get_spec
from upblab.core.uom.labels import ONE, ZERO, Constraint, Label, LabelKind
from upblab.core.uom.spec import UomSpec


def grid(*rows):
    return tuple(tuple(Label.parse(x) for x in row.split()) for row in rows)


class TestLabelParse:

    def test_constants(self):
        assert Label.parse("0") == ZERO
        assert Label.parse("1") == ONE

    def test_primed_constants_normalize(self):
        assert Label.parse("0'") == ONE
        assert Label.parse("1'") == ZERO

    def test_variable_and_prime(self):
        assert Label.parse("g3") == Label(LabelKind.VAR, "g3")
        assert Label.parse("g3'") == Label(LabelKind.PRIME, "g3")
        assert Label.parse("g3''") == Label(LabelKind.VAR, "g3")

    def test_orthogonal_pairs_share_key(self):
        x = Label.parse("h3")
        assert x.orthogonal().pair_key() == x.pair_key() == "h3"
        assert ZERO.pair_key() == ONE.pair_key()

    def test_str(self):
        assert str(Label.parse("f5'")) == "f5'"

    def test_bad_label(self):
        with pytest.raises(ValueError):
            Label.parse("a-b")
        with pytest.raises(ValueError):
            Label.parse("'")


class TestUomSpec:

    # === Success Cases ===

    def test_shape_and_variables(self):
        spec = get_spec("F1")
        assert (spec.rows, spec.cols) == (8, 4)
        assert spec.variables() == ("f5", "g3", "h3", "i3", "i4")

    def test_column(self):
        spec = get_spec("F1")
        assert [str(l) for l in spec.column(0)] == ["0", "0", "1", "1", "f5", "f5", "f5'", "f5'"]

    # === Failure Cases ===

    def test_ragged_grid(self):
        with pytest.raises(ParseError) as exc:
            UomSpec("bad", grid("0 0", "1"))
        assert exc.value.field == "grid[1]"

    def test_constraint_on_undeclared_variable(self):
        with pytest.raises(UnknownVariable):
            UomSpec("bad", grid("0 x", "1 x'"), (Constraint(Label.parse("y"), (ZERO,)),))


class TestForceEqual:
    """force_equal substitutes a label for a variable and its orthogonal."""

    def test_matches_catalog_special_case(self):
        forced = get_spec("F1").force_equal("i4", "i3'")
        assert forced.grid == get_spec("F1(i3=i4')").grid
        assert "i4" not in forced.variables()

    def test_constant_subject_constraint_dropped(self):
        forced = get_spec("F1").force_equal("h3", "0")
        assert all(c.subject.variable != "h3" for c in forced.constraints)
        assert str(forced.grid[6][2]) == "1"

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariable):
            get_spec("F1").force_equal("zz", "0")


class TestWithoutConstraint:

    def test_removes_one_forbidden_label(self):
        relaxed = get_spec("F1").without_constraint("i3", "i4")
        (i3,) = [c for c in relaxed.constraints if c.subject.variable == "i3"]
        assert i3.forbidden == (ZERO, ONE)

    def test_empty_constraint_removed(self):
        spec = UomSpec("s", grid("0 x", "1 x'"), (Constraint(Label.parse("x"), (ZERO,)),))
        assert spec.without_constraint("x", "0").constraints == ()

    def test_missing_constraint(self):
        with pytest.raises(UnknownVariable):
            get_spec("F1").without_constraint("g3", "i4")
