"""
Test: upblab.toml Loading
"""

from pathlib import Path

import pytest

from upblab.core.base.config import CONFIG_FILENAME, LabConfig
from upblab.core.base.utils import find_config


class TestDefaults:

    def test_default_sections(self):
        config = LabConfig()
        assert config.search.budget == 10**9
        assert config.search.dominance is True
        assert config.sampling.denominators == [1, 2, 3]
        assert config.reproduce.seeds == list(range(1, 21))
        assert config.reproduce.report == Path("report.json")

    def test_no_path(self):
        assert LabConfig.load(None) == LabConfig()

    def test_missing_file(self, files):
        assert LabConfig.load(files.get_path() / "absent.toml") == LabConfig()


class TestLoad:

    # === Success Cases ===

    def test_sections(self, files):
        path = files.add_config("""
[search]
budget = 5000
dominance = false

[sampling]
numerator_min = -2
numerator_max = 2

[reproduce]
seeds = [1, 2]
fuzz = 10
""")
        config = LabConfig.load(path)
        assert config.search.budget == 5000
        assert config.search.dominance is False
        assert config.sampling.numerator_min == -2
        assert config.reproduce.seeds == [1, 2]
        assert config.reproduce.fuzz == 10
        assert config.sampling.max_rounds == 10_000

    # === Failure Cases ===

    def test_invalid_value(self, files):
        path = files.add_config("[search]\nbudget = 0\n")
        with pytest.raises(ValueError, match="upblab.toml"):
            LabConfig.load(path)

    def test_invalid_toml(self, files):
        path = files.add_config("[search\nbudget = ")
        with pytest.raises(ValueError):
            LabConfig.load(path)

    def test_inconsistent_sampling(self, files):
        path = files.add_config("[sampling]\nnumerator_min = 4\nnumerator_max = 1\n")
        with pytest.raises(ValueError):
            LabConfig.load(path)


class TestFindConfig:

    def test_found_in_parent(self, files):
        files.add_config("")
        nested = files.get_path() / "a" / "b"
        nested.mkdir(parents=True)
        assert find_config(nested) == (files.get_path() / CONFIG_FILENAME).resolve()

    def test_stops_at_repository_root(self, files):
        files.add_config("")
        repo = files.get_path() / "repo"
        (repo / ".git").mkdir(parents=True)
        (repo / "src").mkdir()
        assert find_config(repo / "src") is None

    def test_file_argument_uses_its_directory(self, files):
        config = files.add_config("")
        data = files.add_file("data.json", "{}")
        assert find_config(data) == config.resolve()
