"""
Structural exclusion conditions for eight-row four-qubit sets.

Each condition is an exact pattern on state equality and orthogonality
within qubit columns. A set on which any condition fires is not a UPB across
AB:CD. Conditions are closed under the symmetries of that split (swap A and
B, swap C and D, exchange the parties): every pattern quantifies over all
qubit roles that respect the party structure.
"""

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from upblab.core.base.config import SamplingConfig
from upblab.core.base.errors import WrongShape
from upblab.core.linalg.scalars import INFINITY, KET0, inner2, orthogonal
from upblab.core.analysis.engine import find_extension, group
from upblab.core.analysis.sets import permute_qubits
from upblab.core.analysis.splits import AB_CD, qubit_name
from upblab.core.uom.catalog import catalog
from upblab.core.uom.sampling import draw_qubit, instantiate
from upblab.core.uom.spec import ProductVectorSet

logger = logging.getLogger(__name__)

ROWS = 8
QUBITS = 4
PARTIES = ((0, 1), (2, 3))
SAME_PARTY = ((0, 1), (1, 0), (2, 3), (3, 2))
CROSS_PARTY = tuple((x, y) for x in range(QUBITS) for y in range(QUBITS) if x != y and (x, y) not in SAME_PARTY)


def _other_party(q: int) -> Tuple[int, int]:
    return PARTIES[1] if q < 2 else PARTIES[0]


@dataclass(frozen=True)
class FiredCondition:
    name: str
    qubits: Tuple[int, ...]
    rows: Tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "condition": self.name,
            "qubits": [qubit_name(q) for q in self.qubits],
            "rows": [r + 1 for r in self.rows],
        }


class ColumnPattern:
    """Equality and orthogonality lookups for one set."""

    def __init__(self, vectors: ProductVectorSet):
        if len(vectors) != ROWS or vectors.n_qubits != QUBITS:
            raise WrongShape(rows=len(vectors), qubits=vectors.n_qubits)
        self.v = vectors
        self.rows = range(ROWS)

    def eq(self, a: int, b: int, q: int) -> bool:
        return self.v[a][q] == self.v[b][q]

    def orth(self, a: int, b: int, q: int) -> bool:
        return not inner2(self.v[a][q], self.v[b][q])

    def triples(self, q: int) -> List[Tuple[int, int, int]]:
        return [t for t in combinations(self.rows, 3) if self.eq(t[0], t[1], q) and self.eq(t[0], t[2], q)]

    def pairs(self, q: int) -> List[Tuple[int, int]]:
        return [p for p in combinations(self.rows, 2) if self.eq(p[0], p[1], q)]

    def has_duplicate(self, rows: Sequence[int], q: int) -> bool:
        return any(self.eq(a, b, q) for a, b in combinations(rows, 2))


Check = Callable[[ColumnPattern], Optional[FiredCondition]]


def four_identical(s: ColumnPattern) -> Optional[FiredCondition]:
    for q in range(QUBITS):
        for a in s.rows:
            same = tuple(b for b in s.rows if s.eq(a, b, q))
            if len(same) >= 4:
                return FiredCondition("four_identical", (q,), same)
    return None


def triple_equal_on_party(s: ColumnPattern) -> Optional[FiredCondition]:
    for x, y in SAME_PARTY:
        for t in s.triples(x):
            if s.eq(t[0], t[1], y) and s.eq(t[0], t[2], y):
                return FiredCondition("triple_equal_on_party", (x, y), t)
    return None


def triple_and_disjoint_pair(s: ColumnPattern) -> Optional[FiredCondition]:
    for x, y in SAME_PARTY:
        for t in s.triples(x):
            for p in s.pairs(y):
                if p[0] not in t and p[1] not in t:
                    return FiredCondition("triple_and_disjoint_pair", (x, y), t + p)
    return None


def triples_on_both_qubits_of_party(s: ColumnPattern) -> Optional[FiredCondition]:
    for x, y in PARTIES:
        tx, ty = s.triples(x), s.triples(y)
        if tx and ty:
            return FiredCondition("triples_on_both_qubits_of_party", (x, y), tx[0] + ty[0])
    return None


def shared_triple_across_parties(s: ColumnPattern) -> Optional[FiredCondition]:
    for x, y in CROSS_PARTY:
        for t in s.triples(x):
            if s.eq(t[0], t[1], y) and s.eq(t[0], t[2], y):
                return FiredCondition("shared_triple_across_parties", (x, y), t)
    return None


def triple_with_double_pair(s: ColumnPattern) -> Optional[FiredCondition]:
    for x, y in SAME_PARTY:
        for z in _other_party(x):
            for t in s.triples(x):
                for a, b in combinations(t, 2):
                    if s.eq(a, b, y) and s.eq(a, b, z):
                        return FiredCondition("triple_with_double_pair", (x, y, z), t)
    return None


def double_pair_with_triple(s: ColumnPattern) -> Optional[FiredCondition]:
    for x, y in SAME_PARTY:
        for z in _other_party(x):
            for t in s.triples(z):
                for a, b in combinations(t, 2):
                    if s.eq(a, b, x) and s.eq(a, b, y):
                        return FiredCondition("double_pair_with_triple", (x, y, z), t)
    return None


def pair_equal_on_three_qubits(s: ColumnPattern) -> Optional[FiredCondition]:
    for qs in combinations(range(QUBITS), 3):
        for a, b in combinations(s.rows, 2):
            if all(s.eq(a, b, q) for q in qs):
                return FiredCondition("pair_equal_on_three_qubits", qs, (a, b))
    return None


def pair_equal_on_party_orthogonal_on_other(s: ColumnPattern) -> Optional[FiredCondition]:
    for x, y in PARTIES:
        z, w = _other_party(x)
        for a, b in combinations(s.rows, 2):
            if s.eq(a, b, x) and s.eq(a, b, y) and s.orth(a, b, z) and s.orth(a, b, w):
                return FiredCondition("pair_equal_on_party_orthogonal_on_other", (x, y, z, w), (a, b))
    return None


def pair_equal_on_party(s: ColumnPattern) -> Optional[FiredCondition]:
    for x, y in PARTIES:
        for a, b in combinations(s.rows, 2):
            if s.eq(a, b, x) and s.eq(a, b, y):
                return FiredCondition("pair_equal_on_party", (x, y), (a, b))
    return None


def pairwise_independence(s: ColumnPattern) -> Optional[FiredCondition]:
    """
    A triple t on X and a triple u on its partner Y sharing exactly two rows
    force the X states outside t, and the Y states outside u, to be pairwise
    distinct. Fires when they are not.
    """
    for x, y in SAME_PARTY:
        for t in s.triples(x):
            for u in s.triples(y):
                if len(set(t) & set(u)) != 2:
                    continue
                outside_t = [r for r in s.rows if r not in t]
                outside_u = [r for r in s.rows if r not in u]
                if s.has_duplicate(outside_t, x) or s.has_duplicate(outside_u, y):
                    return FiredCondition("pairwise_independence", (x, y), tuple(sorted(set(t) | set(u))))
    return None


CONDITIONS: Dict[str, Check] = {
    "four_identical": four_identical,
    "triple_equal_on_party": triple_equal_on_party,
    "triple_and_disjoint_pair": triple_and_disjoint_pair,
    "triples_on_both_qubits_of_party": triples_on_both_qubits_of_party,
    "shared_triple_across_parties": shared_triple_across_parties,
    "triple_with_double_pair": triple_with_double_pair,
    "double_pair_with_triple": double_pair_with_triple,
    "pair_equal_on_three_qubits": pair_equal_on_three_qubits,
    "pair_equal_on_party_orthogonal_on_other": pair_equal_on_party_orthogonal_on_other,
    "pair_equal_on_party": pair_equal_on_party,
    "pairwise_independence": pairwise_independence,
}


def exclusion_predicates(vectors: ProductVectorSet) -> List[FiredCondition]:
    """Every condition that fires, in CONDITIONS order, with its first match."""
    pattern = ColumnPattern(vectors)
    fired = []
    for check in CONDITIONS.values():
        hit = check(pattern)
        if hit is not None:
            fired.append(hit)
    return fired


# Soundness fuzzing


def random_label_grid(rng: random.Random) -> Optional[List[List[int]]]:
    """
    Eight rows of four symbol indices, pairwise orthogonal.

    Symbols per column are 0, 1, x, x', y, y' (indices 0..5); k and k ^ 1 are
    orthogonal. Rows are built one at a time with retries; None when stuck.
    """
    pool = 2 * (1 + rng.randrange(3))
    for _ in range(500):
        rows: List[List[int]] = []
        for _ in range(ROWS):
            for _ in range(400):
                row = [rng.randrange(pool) for _ in range(QUBITS)]
                if all(any(o[j] ^ 1 == row[j] for j in range(QUBITS)) for o in rows):
                    rows.append(row)
                    break
            else:
                break
        if len(rows) == ROWS:
            return rows
    return None


def _grid_set(rng: random.Random, sampling: SamplingConfig) -> Optional[ProductVectorSet]:
    grid = random_label_grid(rng)
    if grid is None:
        return None
    pools = []
    for _ in range(QUBITS):
        x, y = draw_qubit(rng, sampling), draw_qubit(rng, sampling)
        pools.append([KET0, INFINITY, x, orthogonal(x), y, orthogonal(y)])
    try:
        return ProductVectorSet(tuple(tuple(pools[j][k] for j, k in enumerate(row)) for row in grid))
    except WrongShape:
        return None


def _catalog_set(rng: random.Random, sampling: SamplingConfig) -> ProductVectorSet:
    names = [name for name, spec in catalog().items() if spec.cols == QUBITS]
    spec = catalog()[rng.choice(names)]
    _, vectors = instantiate(spec, rng.randrange(1 << 30), sampling)
    return permute_qubits(vectors, rng.choice(list(permutations(range(QUBITS)))))


@dataclass
class FuzzReport:
    total: int = 0
    upbs: int = 0
    fired: Dict[str, int] = field(default_factory=dict)
    unsound: List[dict] = field(default_factory=list)

    @property
    def sound(self) -> bool:
        return not self.unsound

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "upbAcrossABCD": self.upbs,
            "fired": dict(self.fired),
            "unsound": list(self.unsound),
            "sound": self.sound,
        }


def predicate_fuzz(n: int, seed: int = 0, sampling: Optional[SamplingConfig] = None) -> FuzzReport:
    """
    Check fired conditions against the search on n random orthogonal sets.

    The corpus alternates random label grids with catalog families under a
    random qubit permutation, so it holds both extendible sets and UPBs.
    """
    sampling = sampling or SamplingConfig()
    rng = random.Random(seed)
    report = FuzzReport()
    while report.total < n:
        vectors = _grid_set(rng, sampling) if report.total % 2 == 0 else _catalog_set(rng, sampling)
        if vectors is None:
            continue
        report.total += 1
        witness = find_extension(group(vectors, AB_CD))
        if witness is None:
            report.upbs += 1
        for hit in exclusion_predicates(vectors):
            report.fired[hit.name] = report.fired.get(hit.name, 0) + 1
            if witness is None:
                report.unsound.append({"index": report.total, **hit.to_dict()})
    logger.info(
        "predicate fuzz: %d sets, %d UPBs across AB:CD, %d unsound firings",
        report.total, report.upbs, len(report.unsound),
    )
    return report
