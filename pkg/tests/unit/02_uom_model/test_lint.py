"""
Test: Lint Warnings
E0251 asymmetric 0/1 constraint, E0252 unconstrained variable,
E0253 primed label without its unprimed form.
"""

import pytest

from upblab.core.base.errors import ErrorCode, ErrorLevel
from upblab.core.uom.catalog import get_spec
from upblab.core.uom.codec import parse_uom
from upblab.core.uom.lint import lint
from tests.conftest import assert_error_count, assert_error_exists, assert_no_errors


class TestCatalogLint:

    @pytest.mark.parametrize("name", ["F1", "F3", "F4", "F5", "F1(i3=i4')", "F6(i2=i3)", "SHIFTS3"])
    def test_clean_entries(self, name):
        assert_no_errors(lint(get_spec(name)))

    def test_f2_unconstrained_i4(self):
        report = lint(get_spec("F2"))
        assert_error_count(report, ErrorCode.E0252, 1)
        assert_error_exists(report, ErrorCode.E0252, "i4")

    def test_f6_asymmetric_constraints(self):
        report = lint(get_spec("F6"))
        assert_error_count(report, ErrorCode.E0251, 2)
        assert {e.details["variable"] for e in report.by_code(ErrorCode.E0251)} == {"i2", "i3"}

    def test_f6_special_cases(self):
        assert_error_exists(lint(get_spec("F6(i2=i3')")), ErrorCode.E0251, "i4")
        assert_error_exists(lint(get_spec("F6(i2=i4')")), ErrorCode.E0251, "i3")

    def test_lint_is_warning_level(self):
        report = lint(get_spec("F6"))
        assert not report.has_errors()
        assert all(e.level == ErrorLevel.WARNING for e in report)


class TestSyntheticLint:

    def test_primed_only_variable(self):
        spec = parse_uom('{"name": "P", "grid": [["0", "y\'"], ["1", "0"]], "constraints": [{"subject": "y", "forbidden": ["0", "1"]}]}')
        report = lint(spec)
        assert_error_count(report, ErrorCode.E0253, 1)
        assert_error_exists(report, ErrorCode.E0253, "y")
