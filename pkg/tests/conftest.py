"""
Pytest configuration and shared fixtures for the upb-lab test suite.
"""

import json
import shutil
import tempfile
from itertools import product
from pathlib import Path
from typing import Any, Dict, List, Optional

import pytest
from rich.console import Console

from upblab.core.base.config import LabConfig
from upblab.core.base.errors import DiagnosticReport, ErrorCode
from upblab.core.analysis.engine import group
from upblab.core.analysis.splits import PartySplit
from upblab.core.lab import Lab
from upblab.core.linalg.matrix import orthogonal_complement
from upblab.core.uom.catalog import get_spec
from upblab.core.uom.sampling import instantiate
from upblab.core.uom.spec import ProductVectorSet


class UomFileBuilder:
    """Helper to write UOM and catalog JSON files into a temporary directory."""

    def __init__(self):
        self.temp_dir = Path(tempfile.mkdtemp(prefix="upblab_test_"))

    def add_file(self, path: str, content: str) -> Path:
        file_path = self.temp_dir / path
        file_path.parent.mkdir(parents=True, exist_ok=True)
        file_path.write_text(content, encoding="utf-8")
        return file_path

    def add_uom(
        self,
        name: str,
        grid: List[List[str]],
        constraints: Optional[List[Dict[str, Any]]] = None,
        filename: Optional[str] = None,
    ) -> Path:
        """Write one UOM document; returns its path."""
        doc = {"name": name, "grid": grid, "constraints": constraints or []}
        return self.add_file(filename or f"{name.lower()}.json", json.dumps(doc))

    def add_catalog(self, specs: List[Dict[str, Any]], filename: str = "catalog.json") -> Path:
        return self.add_file(filename, json.dumps({"format": 1, "specs": specs}))

    def add_config(self, content: str) -> Path:
        return self.add_file("upblab.toml", content)

    def get_path(self) -> Path:
        return self.temp_dir

    def cleanup(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)


@pytest.fixture
def files():
    """Fixture providing a UomFileBuilder."""
    builder = UomFileBuilder()
    yield builder
    builder.cleanup()


@pytest.fixture
def console():
    """Fixture providing a quiet console for testing."""
    return Console(quiet=True)


@pytest.fixture
def lab(console):
    """Fixture providing a Lab on the embedded catalog with default config."""
    return Lab(config=LabConfig(), console=console)


def family_vectors(name: str, seed: int = 1) -> ProductVectorSet:
    """Instantiate a catalog entry with the default sampling."""
    _, vectors = instantiate(get_spec(name), seed)
    return vectors


def brute_force_extendible(vectors: ProductVectorSet, split: PartySplit) -> bool:
    """
    Try every row-to-party assignment without pruning.

    Independent of the search engine except for the shared grouping and
    complement routines.
    """
    g = group(vectors, split)
    for assignment in product(range(len(split)), repeat=len(g)):
        assigned = [[] for _ in split.parties]
        for row, party in zip(g.rows, assignment):
            assigned[party].append(row[party])
        if all(orthogonal_complement(a, d) for a, d in zip(assigned, split.dims)):
            return True
    return False


def assert_error_exists(diagnostics: DiagnosticReport, code: ErrorCode, message_contains: Optional[str] = None):
    """Assert that a specific error code exists in diagnostics."""
    matching = [e for e in diagnostics.errors if e.code == code]
    assert len(matching) > 0, f"Expected error {code} not found. Got: {[e.code for e in diagnostics.errors]}"

    if message_contains:
        found = any(message_contains.lower() in e.message.lower() for e in matching)
        assert found, f"Error {code} found but message doesn't contain '{message_contains}'. Messages: {[e.message for e in matching]}"


def assert_no_errors(diagnostics: DiagnosticReport):
    """Assert that the report is empty, warnings included."""
    assert len(diagnostics) == 0, f"Expected no diagnostics, got: {[(e.code, e.message) for e in diagnostics.errors]}"


def assert_error_count(diagnostics: DiagnosticReport, code: ErrorCode, expected_count: int):
    """Assert exact count of a specific error code."""
    matching = [e for e in diagnostics.errors if e.code == code]
    assert len(matching) == expected_count, f"Expected {expected_count} occurrences of {code}, got {len(matching)}"
