"""
Party splits: groupings of qubits into parties.

Qubits are named A, B, C, ... in order. A split is written with ':' between
parties ("AB:CD", "A:B:CD"); '|' is accepted as a separator as well. A word
with no separator ("ABCD") means one party per qubit.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Tuple

from upblab.core.base.errors import BadSplit

MAX_PARTY_QUBITS = 4


def qubit_name(q: int) -> str:
    return string.ascii_uppercase[q]


@dataclass(frozen=True)
class PartySplit:
    """Ordered, disjoint cover of the qubits 0..n_qubits-1 by parties."""
    n_qubits: int
    parties: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        seen = sorted(q for p in self.parties for q in p)
        if seen != list(range(self.n_qubits)):
            raise BadSplit(details=f"parties {self.parties} do not cover qubits 0..{self.n_qubits - 1} exactly once")
        if any(not p for p in self.parties):
            raise BadSplit(details="empty party")
        if any(len(p) > MAX_PARTY_QUBITS for p in self.parties):
            raise BadSplit(details=f"parties are limited to {MAX_PARTY_QUBITS} qubits (dimension 16)")

    @classmethod
    def parse(cls, text: str, n_qubits: int | None = None) -> "PartySplit":
        text = text.strip().upper().replace("|", ":").replace("_", ":")
        if not text:
            raise BadSplit(details="empty split")
        words = text.split(":") if ":" in text else list(text)
        try:
            parties = tuple(tuple(string.ascii_uppercase.index(ch) for ch in w) for w in words)
        except ValueError:
            raise BadSplit(details=f"'{text}' contains a character that is not a qubit letter")
        n = n_qubits if n_qubits is not None else sum(len(p) for p in parties)
        return cls(n, parties)

    @classmethod
    def singletons(cls, n_qubits: int) -> "PartySplit":
        return cls(n_qubits, tuple((q,) for q in range(n_qubits)))

    @classmethod
    def uniform(cls, n_parties: int, arity: int) -> "PartySplit":
        """n_parties consecutive blocks of `arity` qubits each."""
        return cls(n_parties * arity, tuple(tuple(range(k * arity, (k + 1) * arity)) for k in range(n_parties)))

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(2 ** len(p) for p in self.parties)

    @property
    def dim(self) -> int:
        return 2 ** self.n_qubits

    def __len__(self) -> int:
        return len(self.parties)

    def party_names(self) -> List[str]:
        return ["".join(qubit_name(q) for q in p) for p in self.parties]

    @property
    def label(self) -> str:
        return ":".join(self.party_names())

    @property
    def cut_label(self) -> str:
        """'|'-separated form used for bipartitions."""
        return "|".join(self.party_names())

    def is_union_of_parties(self, side: Tuple[int, ...]) -> bool:
        s = set(side)
        return all(set(p) <= s or not (set(p) & s) for p in self.parties)

    def permuted(self, perm: Tuple[int, ...]) -> "PartySplit":
        """Split for a set whose qubit q moved to position perm[q]."""
        return PartySplit(self.n_qubits, tuple(tuple(sorted(perm[q] for q in p)) for p in self.parties))

    def __str__(self) -> str:
        return self.label


def bipartitions(n_qubits: int) -> List[PartySplit]:
    """
    Every split into two nonempty sides, the side holding qubit A first.

    Ordered by the size of that side, then lexicographically; for four qubits
    A|BCD, AB|CD, AC|BD, AD|BC, ABC|D, ABD|C, ACD|B.
    """
    out = []
    rest = range(1, n_qubits)
    for size in range(0, n_qubits - 1):
        for extra in combinations(rest, size):
            side = (0,) + extra
            other = tuple(q for q in range(n_qubits) if q not in side)
            out.append(PartySplit(n_qubits, (side, other)))
    return out


FOURQUBIT = PartySplit.parse("A:B:C:D")
AB_CD = PartySplit.parse("AB:CD")
AC_BD = PartySplit.parse("AC:BD")
AD_BC = PartySplit.parse("AD:BC")
A_B_CD = PartySplit.parse("A:B:CD")
A_BCD = PartySplit.parse("A:BCD")
B_ACD = PartySplit(4, ((1,), (0, 2, 3)))
C_ABD = PartySplit(4, ((2,), (0, 1, 3)))
D_ABC = PartySplit(4, ((3,), (0, 1, 2)))

PRESETS: Dict[str, PartySplit] = {
    "FOURQUBIT": FOURQUBIT,
    "AB_CD": AB_CD,
    "AC_BD": AC_BD,
    "AD_BC": AD_BC,
    "A_B_CD": A_B_CD,
    "A_BCD": A_BCD,
    "B_ACD": B_ACD,
    "C_ABD": C_ABD,
    "D_ABC": D_ABC,
}


def resolve_split(text: str, n_qubits: int | None = None) -> PartySplit:
    """Preset name or split notation."""
    preset = PRESETS.get(text.strip().upper())
    if preset is not None and (n_qubits is None or preset.n_qubits == n_qubits):
        return preset
    return PartySplit.parse(text, n_qubits)
