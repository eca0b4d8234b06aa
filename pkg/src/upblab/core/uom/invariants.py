"""
Local-unitary invariants of symbolic UOMs, used to show that two families
are inequivalent.

All features depend only on the label-equality and label-orthogonality
structure of the grid, so they are unchanged by renaming variables, by local
unitaries on any column and by row permutations. Column permutations are
handled by comparing under every allowed column symmetry.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, List, Optional, Sequence, Tuple

from upblab.core.base.errors import WrongShape
from upblab.core.uom.spec import UomSpec

Table = Tuple[Tuple[int, ...], ...]
Permutation = Tuple[int, ...]

FEATURES = ("counts", "coincidence", "orthogonality")


def independent_variable_counts(spec: UomSpec) -> List[int]:
    """
    Per column, the number of distinct label classes.

    A variable and its orthogonal form one class, and the constants 0 and 1
    form one class together.
    """
    return [len({label.pair_key() for label in spec.column(j)}) for j in range(spec.cols)]


def coincidence_profile(spec: UomSpec, col_a: int, col_b: int) -> int:
    """Unordered row pairs whose labels agree on both columns (0-indexed)."""
    return sum(
        1
        for r, s in combinations(spec.grid, 2)
        if r[col_a] == s[col_a] and r[col_b] == s[col_b]
    )


def orthogonality_profile(spec: UomSpec, col_a: int, col_b: int) -> int:
    """Unordered row pairs orthogonal on both columns (0-indexed)."""
    return sum(
        1
        for r, s in combinations(spec.grid, 2)
        if r[col_a].orthogonal() == s[col_a] and r[col_b].orthogonal() == s[col_b]
    )


def _table(spec: UomSpec, profile: Callable[[UomSpec, int, int], int]) -> Table:
    n = spec.cols
    return tuple(tuple(profile(spec, a, b) for b in range(n)) for a in range(n))


def coincidence_table(spec: UomSpec) -> Table:
    return _table(spec, coincidence_profile)


def orthogonality_table(spec: UomSpec) -> Table:
    return _table(spec, orthogonality_profile)


def _compose(p: Permutation, q: Permutation) -> Permutation:
    return tuple(p[q[i]] for i in range(len(q)))


def allowed_column_symmetries() -> List[Permutation]:
    """
    The group generated by swapping columns 1,2, swapping columns 3,4, and
    exchanging the pairs (1,2) and (3,4). Returned 0-indexed and sorted.
    """
    generators = [(1, 0, 2, 3), (0, 1, 3, 2), (2, 3, 0, 1)]
    group = {(0, 1, 2, 3)}
    frontier = list(group)
    while frontier:
        p = frontier.pop()
        for g in generators:
            q = _compose(g, p)
            if q not in group:
                group.add(q)
                frontier.append(q)
    return sorted(group)


def _counts_match(a: Sequence[int], b: Sequence[int], perm: Permutation) -> bool:
    return all(b[j] == a[perm[j]] for j in range(len(perm)))


def _table_match(a: Table, b: Table, perm: Permutation) -> bool:
    n = len(perm)
    return all(b[i][j] == a[perm[i]][perm[j]] for i in range(n) for j in range(n))


@dataclass(frozen=True)
class InequivalenceVerdict:
    """
    DistinguishedBy(feature) or Undistinguished.

    Undistinguished means no invariant separates the pair; it does not assert
    equivalence.
    """
    left: str
    right: str
    feature: Optional[str] = None
    features: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def distinguished(self) -> bool:
        return self.feature is not None

    @property
    def kind(self) -> str:
        return "DistinguishedBy" if self.distinguished else "Undistinguished"

    def to_dict(self) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "verdict": self.kind,
            "feature": self.feature,
            "features": list(self.features),
        }


def inequivalence_report(a: UomSpec, b: UomSpec) -> InequivalenceVerdict:
    for spec in (a, b):
        if spec.cols != 4:
            raise WrongShape(f"inequivalence needs 4-column UOMs, '{spec.name}' has {spec.cols}")
    symmetries = allowed_column_symmetries()
    distinguishing = []

    if a.rows != b.rows or not any(
        _counts_match(independent_variable_counts(a), independent_variable_counts(b), p) for p in symmetries
    ):
        distinguishing.append("counts")
    for name, build in (("coincidence", coincidence_table), ("orthogonality", orthogonality_table)):
        ta, tb = build(a), build(b)
        if not any(_table_match(ta, tb, p) for p in symmetries):
            distinguishing.append(name)

    return InequivalenceVerdict(
        left=a.name,
        right=b.name,
        feature=distinguishing[0] if distinguishing else None,
        features=tuple(distinguishing),
    )
