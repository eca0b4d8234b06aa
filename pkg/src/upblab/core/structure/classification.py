"""
Membership checks for the classification clauses that name catalog families.

Only the membership direction is checked: each named family, instantiated,
is tested for the clause's literal pattern under the eight column
symmetries. Whether the named families are the only ones is not checked.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple

from upblab.core.base.config import SamplingConfig
from upblab.core.analysis.splits import qubit_name
from upblab.core.structure.predicates import ColumnPattern
from upblab.core.uom.catalog import get_spec
from upblab.core.uom.invariants import allowed_column_symmetries
from upblab.core.uom.sampling import instantiate

logger = logging.getLogger(__name__)

Roles = Tuple[int, ...]
Clause = Callable[[ColumnPattern, Roles], Optional[Tuple[int, ...]]]


def equal_orthogonal_alternating(s: ColumnPattern, r: Roles) -> Optional[Tuple[int, ...]]:
    """Two rows equal on f and h, orthogonal on g and i."""
    f, g, h, i = r
    for a, b in combinations(s.rows, 2):
        if s.eq(a, b, f) and s.orth(a, b, g) and s.eq(a, b, h) and s.orth(a, b, i):
            return (a, b)
    return None


def pair_equal_on_cross_qubits(s: ColumnPattern, r: Roles) -> Optional[Tuple[int, ...]]:
    """Two rows equal on f and on h."""
    f, _, h, _ = r
    for a, b in combinations(s.rows, 2):
        if s.eq(a, b, f) and s.eq(a, b, h):
            return (a, b)
    return None


def triple_then_triple(s: ColumnPattern, r: Roles) -> Optional[Tuple[int, ...]]:
    """A triple on f and a triple on h sharing exactly one row, five rows in all."""
    f, _, h, _ = r
    for t in s.triples(f):
        for u in s.triples(h):
            if len(set(t) & set(u)) == 1:
                return tuple(sorted(set(t) | set(u)))
    return None


def triple_on_qubit(s: ColumnPattern, r: Roles) -> Optional[Tuple[int, ...]]:
    t = s.triples(r[0])
    return t[0] if t else None


def pair_on_qubit(s: ColumnPattern, r: Roles) -> Optional[Tuple[int, ...]]:
    p = s.pairs(r[0])
    return p[0] if p else None


@dataclass(frozen=True)
class ClauseSpec:
    name: str
    check: Clause
    families: Tuple[str, ...]


CLAUSES: Tuple[ClauseSpec, ...] = (
    ClauseSpec("equal_orthogonal_alternating", equal_orthogonal_alternating, ("F1",)),
    ClauseSpec("pair_equal_on_cross_qubits", pair_equal_on_cross_qubits, ("F2", "F3", "F4", "F5")),
    ClauseSpec("triple_then_triple", triple_then_triple, ("F2", "F3", "F4", "F5")),
    ClauseSpec("triple_on_qubit", triple_on_qubit, ("F2", "F3", "F4", "F5")),
    ClauseSpec("pair_on_qubit", pair_on_qubit, ("F2", "F3", "F4", "F5", "F6")),
)


@dataclass(frozen=True)
class ClauseWitness:
    clause: str
    family: str
    holds: bool
    roles: Optional[Roles] = None
    rows: Optional[Tuple[int, ...]] = None

    def to_dict(self) -> dict:
        return {
            "clause": self.clause,
            "family": self.family,
            "holds": self.holds,
            "roles": [qubit_name(q) for q in self.roles] if self.roles else None,
            "rows": [r + 1 for r in self.rows] if self.rows else None,
        }


def match_clause(pattern: ColumnPattern, clause: ClauseSpec) -> ClauseWitness:
    for perm in allowed_column_symmetries():
        rows = clause.check(pattern, perm)
        if rows is not None:
            return ClauseWitness(clause.name, "", True, perm, rows)
    return ClauseWitness(clause.name, "", False)


def classification_witnesses(seed: int = 1, sampling: Optional[SamplingConfig] = None) -> List[ClauseWitness]:
    """Clause-by-family membership on one instantiation of each named family."""
    out = []
    patterns: Dict[str, ColumnPattern] = {}
    for clause in CLAUSES:
        for family in clause.families:
            if family not in patterns:
                _, vectors = instantiate(get_spec(family), seed, sampling)
                patterns[family] = ColumnPattern(vectors)
            hit = match_clause(patterns[family], clause)
            witness = ClauseWitness(clause.name, family, hit.holds, hit.roles, hit.rows)
            if not witness.holds:
                logger.info("clause %s: pattern absent from %s", clause.name, family)
            out.append(witness)
    return out
