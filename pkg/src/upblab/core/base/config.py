from pathlib import Path
from typing import List, Optional
from pydantic import BaseModel, Field, ValidationError, model_validator
import sys

# Compat for TOML parsing
if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

CONFIG_FILENAME = "upblab.toml"


class SearchConfig(BaseModel):
    """
    [search] section: Limits for the assignment search.
    """
    budget: int = Field(default=10**9, ge=1, description="Refuse searches with more than this many row-to-party assignments.")
    dominance: bool = Field(default=True, description="Assign rows already in a party's span without branching.")


class SamplingConfig(BaseModel):
    """
    [sampling] section: Distribution of instantiated vector variables.
    """
    numerator_min: int = -6
    numerator_max: int = 6
    denominators: List[int] = Field(default_factory=lambda: [1, 2, 3])
    max_rounds: int = Field(default=10_000, ge=1, description="Rejection rounds before a spec is declared unsatisfiable.")

    @model_validator(mode="after")
    def _check_range(self) -> "SamplingConfig":
        if self.numerator_min > self.numerator_max:
            raise ValueError("numerator_min must not exceed numerator_max")
        if not self.denominators or any(d <= 0 for d in self.denominators):
            raise ValueError("denominators must be positive integers")
        return self


class ReproduceConfig(BaseModel):
    """
    [reproduce] section: Defaults for `upb-lab reproduce`.
    """
    seeds: List[int] = Field(default_factory=lambda: list(range(1, 21)))
    report: Path = Path("report.json")
    fuzz: int = Field(default=500, ge=0, description="Size of the predicate soundness corpus.")
    fuzz_seed: int = 0


class LabConfig(BaseModel):
    """
    Root of upblab.toml
    """
    search: SearchConfig = Field(default_factory=SearchConfig)
    sampling: SamplingConfig = Field(default_factory=SamplingConfig)
    reproduce: ReproduceConfig = Field(default_factory=ReproduceConfig)

    @classmethod
    def load(cls, path: Optional[Path]) -> "LabConfig":
        """
        Load and parse an upblab.toml file.
        """
        if path is None or not path.exists():
            return cls()

        try:
            with open(path, "rb") as f:
                data = tomllib.load(f)
            return cls(**data)
        except ValidationError as e:
            raise ValueError(f"Invalid {path.name} format: {e}")
        except Exception as e:
            raise ValueError(f"Failed to parse {path.name}: {e}")
