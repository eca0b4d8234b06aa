from typing import List, Optional, Sequence

import typer
from rich.table import Table

from upblab.core.analysis.splits import A_B_CD, AB_CD, FOURQUBIT, PartySplit, qubit_name, resolve_split
from upblab.core.linalg.scalars import gauss_str
from upblab.core.uom.spec import ProductVectorSet

FOUR_QUBIT_DEFAULTS = (FOURQUBIT, A_B_CD, AB_CD)


def parse_seeds(text: Optional[str]) -> Optional[List[int]]:
    """
    Seeds from "1-20", "1..20", "3,5,8" or a mix such as "1-3,7".
    """
    if text is None:
        return None
    seeds: List[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            sep = ".." if ".." in part else ("-" if "-" in part.lstrip("-") else None)
            if sep:
                lo, hi = part.split(sep, 1) if sep == ".." else part.rsplit("-", 1)
                seeds.extend(range(int(lo), int(hi) + 1))
            else:
                seeds.append(int(part))
    except ValueError:
        raise typer.BadParameter(f"cannot read seeds from '{text}'")
    if not seeds:
        raise typer.BadParameter("no seeds given")
    return seeds


def splits_for(vectors: ProductVectorSet, texts: Optional[Sequence[str]], defaults: Sequence[PartySplit] = ()) -> List[PartySplit]:
    """--split values, else `defaults` (four-qubit sets) or one party per qubit."""
    if texts:
        return [resolve_split(t, vectors.n_qubits) for t in texts]
    if vectors.n_qubits == 4 and defaults:
        return list(defaults)
    return [PartySplit.singletons(vectors.n_qubits)]


def vectors_table(vectors: ProductVectorSet, title: str) -> Table:
    table = Table(title=title)
    table.add_column("#", justify="right")
    for q in range(vectors.n_qubits):
        table.add_column(qubit_name(q))
    for i, row in enumerate(vectors, start=1):
        table.add_row(str(i), *[str(x) for x in row])
    return table


def format_vector(v: Sequence) -> str:
    return "(" + ", ".join(gauss_str(z) for z in v) + ")"


def format_parties(parties: Sequence[Sequence], split: PartySplit) -> str:
    """Party-by-party product vector, e.g. AB(1, 0, 0, 0) ⊗ CD(1, 0, 0, 0)."""
    return " ⊗ ".join(f"{name}{format_vector(v)}" for name, v in zip(split.party_names(), parties))
