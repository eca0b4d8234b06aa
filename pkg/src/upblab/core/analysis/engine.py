"""
Unextendibility engine.

A product vector orthogonal to every row must, for each row, be orthogonal to
that row on at least one party. The search assigns every row to one such
"killing" party, depth first, rows in order and parties in split order. A
branch dies as soon as the components assigned to a party span the whole
party space, since the party vector would then have to be zero. Every
surviving assignment yields the product vectors whose party factors lie in
the orthogonal complements of the assigned components.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from upblab.core.base.errors import ArityMismatch, BadSplit, BudgetExceeded, NotOrthogonal
from upblab.core.linalg.matrix import CMatrix, SpanTracker, kron_vectors, orthogonal_complement, rref, span_rank
from upblab.core.linalg.scalars import Vector, canonical, gauss_to_json, vector_inner
from upblab.core.analysis.sets import drop_row
from upblab.core.analysis.splits import PartySplit
from upblab.core.uom.spec import ProductVectorSet

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**9


def _vector_json(v: Vector) -> List[dict]:
    return [gauss_to_json(z) for z in v]


def _sort_key(parties: Sequence[Vector]) -> str:
    return repr([_vector_json(v) for v in parties])


@dataclass(frozen=True)
class GroupedSet:
    """Rows of a product set regrouped into per-party Kronecker components."""
    split: PartySplit
    rows: Tuple[Tuple[Vector, ...], ...]

    def __len__(self) -> int:
        return len(self.rows)

    def as_matrices(self) -> List[List[CMatrix]]:
        return [[CMatrix.column(v) for v in row] for row in self.rows]

    def full_vector(self, i: int) -> Vector:
        return kron_vectors(self.rows[i])


def group(vectors: ProductVectorSet, split: PartySplit) -> GroupedSet:
    if vectors.n_qubits != split.n_qubits:
        raise ArityMismatch(details=f"set has {vectors.n_qubits} qubits, split {split.label} has {split.n_qubits}")
    rows = tuple(
        tuple(kron_vectors([row[q].vector for q in party]) for party in split.parties)
        for row in vectors
    )
    return GroupedSet(split, rows)


def _rows_orthogonal(u: Sequence[Vector], v: Sequence[Vector]) -> bool:
    return any(not vector_inner(a, b) for a, b in zip(u, v))


def require_grouped_orthogonal(g: GroupedSet) -> None:
    for i, j in combinations(range(len(g)), 2):
        if not _rows_orthogonal(g.rows[i], g.rows[j]):
            raise NotOrthogonal(i=i + 1, j=j + 1)


@dataclass(frozen=True)
class ExtensionWitness:
    """A product vector orthogonal to every row, and the kill assignment that produced it."""
    split: PartySplit
    parties: Tuple[Vector, ...]
    assignment: Tuple[int, ...]

    def vector(self) -> Vector:
        return kron_vectors(self.parties)

    def is_orthogonal_to(self, g: GroupedSet) -> bool:
        return all(_rows_orthogonal(self.parties, row) for row in g.rows)

    def to_dict(self) -> dict:
        names = self.split.party_names()
        return {
            "split": self.split.label,
            "parties": {names[p]: _vector_json(v) for p, v in enumerate(self.parties)},
            "assignment": [names[p] for p in self.assignment],
        }


@dataclass(frozen=True)
class FamilyDescriptor:
    """A surviving assignment whose party complements are not all one-dimensional."""
    split: PartySplit
    assignment: Tuple[int, ...]
    bases: Tuple[Tuple[Vector, ...], ...]

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(len(b) for b in self.bases)

    def product_vectors(self) -> List[Vector]:
        """Every tensor product of basis vectors; spans the family's linear hull."""
        return [kron_vectors(choice) for choice in product(*self.bases)]

    def to_dict(self) -> dict:
        names = self.split.party_names()
        return {
            "assignment": [names[p] for p in self.assignment],
            "dims": list(self.dims),
            "bases": {names[p]: [_vector_json(v) for v in b] for p, b in enumerate(self.bases)},
        }


@dataclass(frozen=True)
class OrthogonalSolutionSet:
    """Finite(list of product vectors) or Infinite(list of families)."""
    split: PartySplit
    solutions: Tuple[Tuple[Vector, ...], ...]
    families: Tuple[FamilyDescriptor, ...] = ()
    nodes: int = 0

    @property
    def finite(self) -> bool:
        return not self.families

    @property
    def kind(self) -> str:
        return "Finite" if self.finite else "Infinite"

    @property
    def count(self) -> Optional[int]:
        return len(self.solutions) if self.finite else None

    def vectors(self) -> List[Vector]:
        return [kron_vectors(s) for s in self.solutions]

    def to_dict(self) -> dict:
        names = self.split.party_names()
        return {
            "split": self.split.label,
            "classification": self.kind,
            "count": self.count,
            "solutions": [
                {names[p]: _vector_json(v) for p, v in enumerate(s)} for s in self.solutions
            ],
            "families": [f.to_dict() for f in self.families],
        }


@dataclass
class SearchStats:
    nodes: int = 0
    pruned: int = 0
    dominated: int = 0
    leaves: int = 0


class AssignmentSearch:
    """
    Depth-first assignment of rows to killing parties with rank pruning.

    With `dominance`, a row whose component on some already-used party lies in
    that party's current span is assigned there without branching; the first
    such party in split order wins.
    """

    def __init__(
        self,
        grouped: GroupedSet,
        budget: int = DEFAULT_BUDGET,
        dominance: bool = True,
        force: bool = False,
    ):
        if len(grouped.split) < 2:
            raise BadSplit(details=f"'{grouped.split.label}' has a single party")
        self.grouped = grouped
        self.split = grouped.split
        self.dims = grouped.split.dims
        self.dominance = dominance
        self.stats = SearchStats()

        assignments = len(self.split) ** len(grouped)
        if assignments > budget and not force:
            raise BudgetExceeded(assignments=assignments, budget=budget)

    def run(self, on_leaf: Callable[[Tuple[int, ...], List[List[Vector]]], bool]) -> SearchStats:
        """
        Visit every surviving total assignment.

        `on_leaf(assignment, assigned_components)` returns True to stop the search.
        """
        rows = self.grouped.rows
        m, k = len(rows), len(self.split)
        trackers = [SpanTracker(d) for d in self.dims]
        assigned: List[List[Vector]] = [[] for _ in range(k)]
        choice: List[int] = []
        stats = self.stats

        def place(i: int, p: int) -> bool:
            component = rows[i][p]
            trackers[p].push(component)
            if trackers[p].full:
                stats.pruned += 1
                trackers[p].pop()
                return False
            assigned[p].append(component)
            choice.append(p)
            stop = visit(i + 1)
            choice.pop()
            assigned[p].pop()
            trackers[p].pop()
            return stop

        def visit(i: int) -> bool:
            stats.nodes += 1
            if i == m:
                stats.leaves += 1
                return on_leaf(tuple(choice), assigned)
            if self.dominance:
                for p in range(k):
                    if trackers[p].rank and trackers[p].contains(rows[i][p]):
                        stats.dominated += 1
                        return place(i, p)
            for p in range(k):
                if place(i, p):
                    return True
            return False

        visit(0)
        logger.debug(
            "search over %d rows, split %s: %d nodes, %d pruned, %d dominated, %d leaves",
            m, self.split.label, stats.nodes, stats.pruned, stats.dominated, stats.leaves,
        )
        return stats

    def complements(self, assigned: List[List[Vector]]) -> List[List[Vector]]:
        return [orthogonal_complement(a, d) for a, d in zip(assigned, self.dims)]


def find_extension(
    g: GroupedSet,
    budget: int = DEFAULT_BUDGET,
    dominance: bool = True,
    force: bool = False,
) -> Optional[ExtensionWitness]:
    """A product vector orthogonal to every row, or None when the set is unextendible."""
    require_grouped_orthogonal(g)
    search = AssignmentSearch(g, budget=budget, dominance=dominance, force=force)
    found: List[ExtensionWitness] = []

    def on_leaf(assignment, assigned):
        bases = search.complements(assigned)
        if any(not b for b in bases):
            return False
        found.append(ExtensionWitness(g.split, tuple(canonical(b[0]) for b in bases), assignment))
        return True

    search.run(on_leaf)
    return found[0] if found else None


def is_upb(
    vectors: ProductVectorSet,
    split: PartySplit,
    budget: int = DEFAULT_BUDGET,
    dominance: bool = True,
    force: bool = False,
) -> bool:
    g = group(vectors, split)
    result = find_extension(g, budget=budget, dominance=dominance, force=force) is None
    logger.info("%d rows under %s: %s", len(vectors), split.label, "UPB" if result else "extendible")
    return result


def _subspace_key(basis: Sequence[Vector], dim: int) -> Tuple[Tuple, ...]:
    reduced, _ = rref(basis, dim)
    return tuple(tuple(r) for r in reduced)


def enumerate_orthogonal(
    vectors: ProductVectorSet,
    split: PartySplit,
    budget: int = DEFAULT_BUDGET,
    dominance: bool = True,
    force: bool = False,
) -> OrthogonalSolutionSet:
    """
    All product vectors orthogonal to the set under `split`.

    Finite solutions are canonical (first nonzero coordinate 1 per party),
    deduplicated and sorted. Any surviving assignment with a party complement
    of dimension two or more makes the result Infinite.
    """
    g = group(vectors, split)
    require_grouped_orthogonal(g)
    search = AssignmentSearch(g, budget=budget, dominance=dominance, force=force)
    solutions: Dict[Tuple[Vector, ...], None] = {}
    families: Dict[Tuple, FamilyDescriptor] = {}

    def on_leaf(assignment, assigned):
        bases = search.complements(assigned)
        if any(not b for b in bases):
            return False
        if all(len(b) == 1 for b in bases):
            solutions[tuple(canonical(b[0]) for b in bases)] = None
            return False
        key = tuple(_subspace_key(b, d) for b, d in zip(bases, search.dims))
        if key not in families:
            families[key] = FamilyDescriptor(split, assignment, tuple(tuple(b) for b in bases))
        return False

    stats = search.run(on_leaf)
    result = OrthogonalSolutionSet(
        split=split,
        solutions=tuple(sorted(solutions, key=_sort_key)),
        families=tuple(families.values()),
        nodes=stats.nodes,
    )
    logger.info(
        "%d rows under %s: %s%s",
        len(vectors), split.label, result.kind,
        f", {result.count} product vector(s)" if result.finite else f", {len(result.families)} family(ies)",
    )
    return result


def solution_span_rank(sol: OrthogonalSolutionSet) -> int:
    """Rank of the span of all solutions; families contribute every basis tensor product."""
    vectors = sol.vectors()
    for family in sol.families:
        vectors.extend(family.product_vectors())
    return span_rank(vectors, sol.split.dim)


@dataclass(frozen=True)
class SweepEntry:
    row: int
    solutions: OrthogonalSolutionSet

    @property
    def notable(self) -> bool:
        """More than nine product vectors, or infinitely many."""
        return not self.solutions.finite or self.solutions.count > 9


def drop_one_sweep(
    vectors: ProductVectorSet,
    split: PartySplit,
    budget: int = DEFAULT_BUDGET,
    dominance: bool = True,
    force: bool = False,
) -> List[SweepEntry]:
    """enumerate_orthogonal on every subset missing exactly one row (1-indexed rows)."""
    return [
        SweepEntry(i, enumerate_orthogonal(drop_row(vectors, i), split, budget=budget, dominance=dominance, force=force))
        for i in range(1, len(vectors) + 1)
    ]


@dataclass
class KillCount:
    """Per row, how many other rows are orthogonal to it on each party."""
    split: str
    counts: List[List[int]] = field(default_factory=list)


def kill_statistic(vectors: ProductVectorSet, split: PartySplit) -> KillCount:
    g = group(vectors, split)
    counts = []
    for i, row in enumerate(g.rows):
        counts.append([
            sum(1 for j, other in enumerate(g.rows) if j != i and not vector_inner(row[p], other[p]))
            for p in range(len(split))
        ])
    return KillCount(split.label, counts)
