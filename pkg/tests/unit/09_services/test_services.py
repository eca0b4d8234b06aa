"""
Test: Lab facade and its services.

Reproduction runs are restricted to the cheap claims; the expensive ones
are covered by their own unit tests.
"""

import json

import pytest

from upblab.core.analysis.splits import AB_CD, PartySplit
from upblab.core.base.config import LabConfig
from upblab.core.base.errors import UnknownCatalogEntry
from upblab.core.lab import Lab
from upblab.core.services import ReproduceService
from upblab.core.services.certificate import Certificate, ClaimResult, ReproductionReport


class TestLab:
    """Facade wiring."""

    # === Success Cases ===

    def test_reproduce_is_lazy_and_cached(self, lab):
        assert lab._reproduce_svc is None
        svc = lab.reproduce
        assert isinstance(svc, ReproduceService)
        assert lab.reproduce is svc

    def test_force_reaches_analysis(self, console):
        lab = Lab(config=LabConfig(), force=True, console=console)
        assert lab.analysis.search_options["force"] is True
        assert lab.analysis.search_options["budget"] == lab.config.search.budget


class TestCatalogService:
    """Resolution and model-level reports."""

    # === Success Cases ===

    def test_resolve_by_name(self, lab):
        assert lab.catalog.resolve("F1").name == "F1"

    def test_resolve_by_file(self, lab, files):
        path = files.add_uom("PAIR", [["0", "0"], ["1", "1"]])
        spec = lab.catalog.resolve(str(path))
        assert spec.name == "PAIR"
        assert spec.cols == 2

    def test_vectors_with_drop(self, lab):
        spec, inst, full = lab.catalog.vectors("F1", seed=1)
        _, _, dropped = lab.catalog.vectors("F1", seed=1, drop=1)
        assert spec.name == "F1"
        assert len(dropped) == len(full) - 1

    def test_same_seed_same_instance(self, lab):
        _, a, _ = lab.catalog.vectors("F6", seed=4)
        _, b, _ = lab.catalog.vectors("F6", seed=4)
        assert a.to_json() == b.to_json()

    def test_lint_all_entries(self, lab):
        reports = lab.catalog.lint()
        assert set(reports) == set(lab.catalog.specs)

    def test_invariants_four_columns(self, lab):
        data = lab.catalog.invariants(lab.catalog.resolve("F1"))
        assert data["counts"] == [2, 2, 2, 3]
        assert "coincidence" in data
        assert "orthogonality" in data

    def test_invariants_three_columns(self, lab):
        data = lab.catalog.invariants(lab.catalog.resolve("SHIFTS3"))
        assert "coincidence" not in data
        assert len(data["counts"]) == 3

    def test_compare_distinguishes_families(self, lab):
        verdict = lab.catalog.compare(lab.catalog.resolve("F3"), lab.catalog.resolve("F6"))
        assert verdict.distinguished
        assert "coincidence" in verdict.features

    def test_compare_with_itself(self, lab):
        spec = lab.catalog.resolve("F2")
        assert not lab.catalog.compare(spec, spec).distinguished

    # === Error Cases ===

    def test_unknown_name(self, lab):
        with pytest.raises(UnknownCatalogEntry):
            lab.catalog.resolve("F9")

    def test_custom_catalog_replaces_embedded(self, files, console):
        path = files.add_catalog([{"name": "ONLY", "grid": [["0", "0"], ["1", "1"]]}])
        lab = Lab(config=LabConfig(), catalog_path=path, console=console)
        assert list(lab.catalog.specs) == ["ONLY"]
        with pytest.raises(UnknownCatalogEntry):
            lab.catalog.resolve("F1")


class TestAnalysisService:
    """Searches through the service layer."""

    # === Success Cases ===

    def test_verify_family(self, lab):
        _, _, vectors = lab.catalog.vectors("F1", seed=1)
        verdicts = lab.analysis.verify(vectors, [AB_CD])
        assert verdicts == {"AB:CD": None}

    def test_verify_shifts3(self, lab):
        _, _, vectors = lab.catalog.vectors("SHIFTS3", seed=1)
        verdicts = lab.analysis.verify(vectors, [PartySplit.singletons(3), PartySplit.parse("A:BC")])
        assert verdicts["A:B:C"] is None
        witness = verdicts["A:BC"]
        assert witness is not None
        assert witness.to_dict()["split"] == "A:BC"

    def test_state_of_shifts3(self, lab):
        _, _, vectors = lab.catalog.vectors("SHIFTS3", seed=1)
        summary = lab.analysis.state(vectors)
        assert summary["dim"] == 8
        assert summary["rank"] == 4
        assert summary["declaredRank"] == 4
        assert len(summary["ppt"]) == 3
        assert all(summary["ppt"].values())

    def test_structure_on_family(self, lab):
        _, _, vectors = lab.catalog.vectors("F1", seed=1)
        fired, bound, profiles = lab.analysis.structure(vectors)
        assert fired == []
        assert bound.holds
        assert len(profiles) == 4

    def test_fuzz_counts_sets(self, lab):
        report = lab.analysis.fuzz(6, seed=3)
        assert report.total == 6
        assert report.sound


class TestReproduceService:
    """Claim selection and reporting."""

    # === Success Cases ===

    def test_cheap_claims_pass(self, lab):
        report = lab.reproduce.run(seeds=[1], only=["table1", "inequivalence"])
        assert [c.name for c in report.claims] == ["table1", "inequivalence"]
        assert report.passed
        assert report.first_failure is None
        assert report.claims[0].detail["counts"]["F4"] == [2, 3, 2, 3]

    def test_on_claim_callback(self, lab):
        seen = []
        lab.reproduce.run(seeds=[1], only=["table1"], on_claim=seen.append)
        assert [c.name for c in seen] == ["table1"]

    def test_seeds_default_from_config(self, console):
        config = LabConfig()
        config.reproduce.seeds = [5]
        lab = Lab(config=config, console=console)
        report = lab.reproduce.run(only=["table1"])
        assert report.seeds == [5]

    # === Error Cases ===

    def test_unknown_claim(self, lab):
        with pytest.raises(ValueError, match="unknown claim"):
            lab.reproduce.run(seeds=[1], only=["table2"])

    def test_broken_catalog_fails_orthogonality(self, files, console):
        path = files.add_catalog([
            {"name": "F1", "grid": [["0", "0", "0", "0"], ["x", "0", "0", "0"]]},
        ])
        lab = Lab(config=LabConfig(), catalog_path=path, console=console)
        report = lab.reproduce.run(seeds=[1], only=["orthogonality", "table1"])
        assert not report.passed
        assert report.first_failure.name == "orthogonality"
        assert all(not c.passed for c in report.claims)

    def test_unexpected_exception_recorded_and_run_continues(self, lab, monkeypatch):
        def broken(seeds):
            raise ZeroDivisionError("division by zero")

        monkeypatch.setattr(lab.reproduce, "claim_table1", broken)
        report = lab.reproduce.run(seeds=[1], only=["table1", "inequivalence"])
        assert [c.name for c in report.claims] == ["table1", "inequivalence"]
        failed, after = report.claims
        assert not failed.passed
        assert failed.detail["error"] == {"type": "ZeroDivisionError", "message": "division by zero"}
        assert failed.summary == "ZeroDivisionError: division by zero"
        assert after.passed
        assert report.first_failure.name == "table1"

    def test_missing_entry_recorded_as_error(self, files, console):
        path = files.add_catalog([{"name": "ONLY", "grid": [["0", "0"], ["1", "1"]]}])
        lab = Lab(config=LabConfig(), catalog_path=path, console=console)
        report = lab.reproduce.run(seeds=[1], only=["table1"])
        claim = report.claims[0]
        assert not claim.passed
        assert "error" in claim.detail


class TestDocuments:
    """Certificate and report serialization."""

    # === Success Cases ===

    def test_certificate_alias_and_defaults(self):
        data = Certificate(command="verify", seed=1, uom="F1").to_dict()
        assert data["command"] == "verify"
        assert "toolVersion" in data
        assert data["timing"] is None
        assert data["solutions"] == []

    def test_dumps_sorted_with_newline(self):
        text = Certificate(command="maxsum", verdicts={"b": 1, "a": 2}).dumps()
        assert text.endswith("\n")
        assert text.index('"a"') < text.index('"b"')
        assert json.loads(text)["verdicts"] == {"a": 2, "b": 1}

    def test_report_passed_ignores_unasserted(self):
        report = ReproductionReport(
            seeds=[1],
            claims=[
                ClaimResult(name="table1", passed=True),
                ClaimResult(name="classification", passed=False, asserted=False),
            ],
        )
        data = report.to_dict()
        assert data["passed"] is True
        assert data["firstFailure"] is None

    def test_report_first_failure(self):
        report = ReproductionReport(
            seeds=[1],
            claims=[
                ClaimResult(name="upb", passed=True),
                ClaimResult(name="tensor", passed=False),
                ClaimResult(name="structure", passed=False),
            ],
        )
        assert report.to_dict()["firstFailure"] == "tensor"

    def test_write(self, files):
        path = files.get_path() / "report.json"
        ReproductionReport(seeds=[1, 2]).write(path)
        assert json.loads(path.read_text(encoding="utf-8"))["seeds"] == [1, 2]
