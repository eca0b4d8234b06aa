from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Tuple

from upblab.core.base.errors import ParseError, UnknownVariable, WrongShape
from upblab.core.linalg.scalars import INFINITY, KET0, ProjQubit, orthogonal
from upblab.core.uom.labels import Constraint, Label, LabelKind

Grid = Tuple[Tuple[Label, ...], ...]


@dataclass(frozen=True)
class UomSpec:
    """Symbolic m x n grid of labels plus inequality constraints."""
    name: str
    grid: Grid
    constraints: Tuple[Constraint, ...] = ()

    def __post_init__(self):
        if not self.grid or not self.grid[0]:
            raise ParseError(f"UOM '{self.name}' has an empty grid", field="grid")
        width = len(self.grid[0])
        for i, row in enumerate(self.grid):
            if len(row) != width:
                raise ParseError(
                    f"UOM '{self.name}' row {i + 1} has {len(row)} entries, expected {width}",
                    field=f"grid[{i}]",
                )
        declared = set(self.variables())
        for c in self.constraints:
            for label in c.labels():
                if label.variable is not None and label.variable not in declared:
                    raise UnknownVariable(variable=label.variable, spec=self.name)

    @property
    def rows(self) -> int:
        return len(self.grid)

    @property
    def cols(self) -> int:
        return len(self.grid[0])

    def variables(self) -> Tuple[str, ...]:
        names = {label.variable for row in self.grid for label in row if label.variable}
        return tuple(sorted(names))

    def column(self, j: int) -> Tuple[Label, ...]:
        return tuple(row[j] for row in self.grid)

    def renamed(self, name: str) -> "UomSpec":
        return UomSpec(name, self.grid, self.constraints)

    def with_label(self, i: int, j: int, label: Label) -> "UomSpec":
        """Copy with cell (i, j), 0-indexed, replaced."""
        grid = [list(row) for row in self.grid]
        grid[i][j] = label
        return UomSpec(self.name, tuple(tuple(r) for r in grid), self.constraints)

    def without_constraint(self, subject: str, forbidden: str) -> "UomSpec":
        """Copy with one forbidden label removed from the subject's constraint."""
        subject_label, forbidden_label = Label.parse(subject), Label.parse(forbidden)
        constraints = []
        removed = False
        for c in self.constraints:
            if c.subject == subject_label and forbidden_label in c.forbidden:
                kept = tuple(f for f in c.forbidden if f != forbidden_label)
                removed = True
                if kept:
                    constraints.append(Constraint(c.subject, kept))
            else:
                constraints.append(c)
        if not removed:
            raise UnknownVariable(f"'{subject} != {forbidden}' is not a constraint of {self.name}", variable=subject)
        return UomSpec(f"{self.name}[-{subject}!={forbidden}]", self.grid, tuple(constraints))

    def force_equal(self, variable: str, label: str) -> "UomSpec":
        """
        Copy with `variable` replaced by `label` (and `variable'` by its orthogonal).

        Constraints whose subject becomes a constant are dropped.
        """
        if variable not in self.variables():
            raise UnknownVariable(variable=variable, spec=self.name)
        target = Label.parse(label)

        def sub(l: Label) -> Label:
            if l.variable != variable:
                return l
            return target if l.kind is LabelKind.VAR else target.orthogonal()

        grid = tuple(tuple(sub(l) for l in row) for row in self.grid)
        constraints = []
        for c in self.constraints:
            subject = sub(c.subject)
            if subject.is_constant:
                continue
            constraints.append(Constraint(subject, tuple(sub(f) for f in c.forbidden)))
        return UomSpec(f"{self.name}[{variable}={label}]", grid, tuple(constraints))


@dataclass(frozen=True)
class Instantiation:
    """Concrete value for every variable of a spec."""
    assignment: Mapping[str, ProjQubit] = field(default_factory=dict)

    def resolve(self, label: Label) -> ProjQubit:
        if label.kind is LabelKind.ZERO:
            return KET0
        if label.kind is LabelKind.ONE:
            return INFINITY
        try:
            value = self.assignment[label.name]
        except KeyError:
            raise UnknownVariable(variable=label.name)
        return value if label.kind is LabelKind.VAR else orthogonal(value)

    def violated(self, spec: UomSpec) -> List[Constraint]:
        out = []
        for c in spec.constraints:
            value = self.resolve(c.subject)
            if any(self.resolve(f) == value for f in c.forbidden):
                out.append(c)
        return out

    def satisfies(self, spec: UomSpec) -> bool:
        return not self.violated(spec)

    def to_json(self) -> Dict[str, object]:
        return {name: q.to_json() for name, q in sorted(self.assignment.items())}


@dataclass(frozen=True)
class ProductVectorSet:
    """Instantiated product vectors, one tuple of qubit rays per row."""
    vectors: Tuple[Tuple[ProjQubit, ...], ...]

    def __post_init__(self):
        if not self.vectors:
            raise WrongShape("a product vector set needs at least one row")
        n = len(self.vectors[0])
        if n == 0 or any(len(v) != n for v in self.vectors):
            raise WrongShape("rows must all have the same positive number of qubits")
        if len(set(self.vectors)) != len(self.vectors):
            raise WrongShape("product vector set has repeated rows")

    @classmethod
    def of(cls, rows) -> "ProductVectorSet":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n_qubits(self) -> int:
        return len(self.vectors[0])

    @property
    def dim(self) -> int:
        return 2 ** self.n_qubits

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self) -> Iterator[Tuple[ProjQubit, ...]]:
        return iter(self.vectors)

    def __getitem__(self, i: int) -> Tuple[ProjQubit, ...]:
        return self.vectors[i]

    def column(self, j: int) -> Tuple[ProjQubit, ...]:
        return tuple(v[j] for v in self.vectors)

    def to_json(self) -> List[List[object]]:
        return [[q.to_json() for q in row] for row in self.vectors]


def resolve_grid(spec: UomSpec, inst: Instantiation) -> ProductVectorSet:
    return ProductVectorSet(tuple(tuple(inst.resolve(l) for l in row) for row in spec.grid))
