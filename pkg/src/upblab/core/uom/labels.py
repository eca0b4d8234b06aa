from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple


class LabelKind(str, Enum):
    ZERO = "0"
    ONE = "1"
    VAR = "var"
    PRIME = "prime"


@dataclass(frozen=True)
class Label:
    """
    One UOM cell: the constants 0 and 1, a vector variable x, or its orthogonal x'.

    0' is normalized to 1 and 1' to 0.
    """
    kind: LabelKind
    name: Optional[str] = None

    def __post_init__(self):
        if self.kind in (LabelKind.VAR, LabelKind.PRIME) and not self.name:
            raise ValueError("variable labels need a name")

    @classmethod
    def parse(cls, text: str) -> "Label":
        text = text.strip()
        primes = len(text) - len(text.rstrip("'"))
        base = text.rstrip("'")
        if not base:
            raise ValueError(f"empty label '{text}'")
        if base == "0":
            label = ZERO
        elif base == "1":
            label = ONE
        elif base.replace("_", "").isalnum():
            label = cls(LabelKind.VAR, base)
        else:
            raise ValueError(f"bad label '{text}'")
        for _ in range(primes):
            label = label.orthogonal()
        return label

    def orthogonal(self) -> "Label":
        if self.kind is LabelKind.ZERO:
            return ONE
        if self.kind is LabelKind.ONE:
            return ZERO
        if self.kind is LabelKind.VAR:
            return Label(LabelKind.PRIME, self.name)
        return Label(LabelKind.VAR, self.name)

    @property
    def is_constant(self) -> bool:
        return self.kind in (LabelKind.ZERO, LabelKind.ONE)

    @property
    def variable(self) -> Optional[str]:
        return self.name

    def pair_key(self) -> str:
        """Shared by a label and its orthogonal: '01' or the variable name."""
        return "01" if self.is_constant else self.name

    def __str__(self) -> str:
        if self.kind is LabelKind.ZERO:
            return "0"
        if self.kind is LabelKind.ONE:
            return "1"
        return self.name if self.kind is LabelKind.VAR else f"{self.name}'"


ZERO = Label(LabelKind.ZERO)
ONE = Label(LabelKind.ONE)


@dataclass(frozen=True)
class Constraint:
    """value(subject) differs, as a ray, from every forbidden label's value."""
    subject: Label
    forbidden: Tuple[Label, ...]

    def labels(self) -> Tuple[Label, ...]:
        return (self.subject,) + self.forbidden

    def __str__(self) -> str:
        return f"{self.subject} != {', '.join(str(f) for f in self.forbidden)}"
