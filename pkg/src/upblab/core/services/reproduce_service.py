"""
ReproduceService: The claim suite behind `upb-lab reproduce`.

Responsibilities:
- Run every claim on the configured seeds
- Collect per-claim verdicts into one ReproductionReport

Claims run in a fixed order; a claim that raises is recorded as failed with
the error attached and the run continues.
"""

import logging
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from upblab.core.base.config import LabConfig
from upblab.core.base.errors import UpbLabError
from upblab.core.linalg.matrix import kron_vectors
from upblab.core.linalg.scalars import Vector, canonical, orthogonal
from upblab.core.analysis.sets import drop_row
from upblab.core.analysis.splits import A_B_CD, AB_CD, FOURQUBIT, PartySplit
from upblab.core.services.analysis_service import AnalysisService
from upblab.core.services.catalog_service import CatalogService
from upblab.core.services.certificate import ClaimResult, ReproductionReport
from upblab.core.states.density import build_complement_state, is_ppt_all_cuts
from upblab.core.structure.classification import classification_witnesses
from upblab.core.structure.maxsum import ORACLE_MAX_P, maxsum, maxsum_oracle
from upblab.core.structure.onumbers import bound_check
from upblab.core.structure.predicates import exclusion_predicates
from upblab.core.uom.catalog import FAMILIES
from upblab.core.uom.invariants import independent_variable_counts
from upblab.core.uom.spec import Instantiation, ProductVectorSet, UomSpec

logger = logging.getLogger(__name__)

UPB_SPLITS = (FOURQUBIT, A_B_CD, AB_CD)

VARIABLE_COUNTS = {
    "F1": [2, 2, 2, 3],
    "F2": [2, 2, 2, 4],
    "F3": [2, 2, 3, 2],
    "F4": [2, 3, 2, 3],
    "F5": [3, 2, 2, 2],
    "F6": [2, 2, 2, 4],
}

# Drop-one subsets: (label, catalog entry, expected count under AB:CD).
DROP_ONE_SUBSETS = (
    ("S11(i3=i4')", "F1(i3=i4')", 6),
    ("S21", "F2(i2=i3,i4=0)", 6),
    ("S41", "F4", 4),
    ("S61", "F6(i2=i3)", 6),
)

# Subsets whose complement states must be rank-nine PPT entangled.
STATE_SUBSETS = (
    ("S11", "F1"),
    ("S21", "F2(i2=i3,i4=0)"),
    ("S31", "F3"),
    ("S41", "F4"),
    ("S51", "F5"),
    ("S61", "F6(i2=i3)"),
)

# Condition readings for S31 and S51: (label, family, proof reading as (variable, label), allowed counts).
READINGS = (
    ("S31", "F3", ("h4", "h3'"), (4, 5)),
    ("S51", "F5", ("f6", "f5'"), (4, 6)),
)

CLAIMS = (
    "orthogonality",
    "upb",
    "table1",
    "inequivalence",
    "drop_one_counts",
    "ppt_states",
    "almost_ge",
    "shifts3",
    "tensor",
    "structure",
    "negative_controls",
    "classification",
)


def _product_key(qubits: Sequence, split: PartySplit) -> Tuple[Vector, ...]:
    return tuple(canonical(kron_vectors([qubits[q].vector for q in party])) for party in split.parties)


class ReproduceService:
    """Runs the reproduction claims against one catalog."""

    def __init__(self, config: LabConfig, catalog: CatalogService, analysis: AnalysisService):
        self.config = config
        self.catalog = catalog
        self.analysis = analysis
        self._sets: Dict[Tuple[str, int], Tuple[Instantiation, ProductVectorSet]] = {}

    def _instance(self, name: str, seed: int) -> Tuple[Instantiation, ProductVectorSet]:
        key = (name, seed)
        if key not in self._sets:
            self._sets[key] = self.catalog.instantiate(self.catalog.resolve(name), seed)
        return self._sets[key]

    def _spec_instance(self, spec: UomSpec, seed: int) -> Tuple[Instantiation, ProductVectorSet]:
        key = (spec.name, seed)
        if key not in self._sets:
            self._sets[key] = self.catalog.instantiate(spec, seed)
        return self._sets[key]

    def _count(self, vectors: ProductVectorSet) -> Optional[int]:
        return self.analysis.enumerate(vectors, AB_CD).count

    # ==================== Driver ====================

    def run(
        self,
        seeds: Optional[List[int]] = None,
        only: Optional[List[str]] = None,
        on_claim: Optional[Callable[[ClaimResult], None]] = None,
    ) -> ReproductionReport:
        seeds = list(seeds if seeds is not None else self.config.reproduce.seeds)
        names = list(only) if only else list(CLAIMS)
        unknown = [n for n in names if n not in CLAIMS]
        if unknown:
            raise ValueError(f"unknown claim(s): {', '.join(unknown)}")

        report = ReproductionReport(seeds=seeds)
        for name in names:
            check = getattr(self, f"claim_{name}")
            try:
                claim = check(seeds)
            except UpbLabError as e:
                claim = ClaimResult(name=name, passed=False, summary=e.message, detail={"error": e.to_dict()})
            except Exception as e:
                logger.exception("claim %s raised", name)
                claim = ClaimResult(
                    name=name,
                    passed=False,
                    summary=f"{type(e).__name__}: {e}",
                    detail={"error": {"type": type(e).__name__, "message": str(e)}},
                )
            logger.info("claim %s: %s", name, "pass" if claim.passed else "FAIL")
            report.claims.append(claim)
            if on_claim:
                on_claim(claim)
        return report

    # ==================== Claims ====================

    def claim_orthogonality(self, seeds: List[int]) -> ClaimResult:
        failures = []
        for name in FAMILIES:
            for seed in seeds:
                result = self.analysis.orthogonality(self._instance(name, seed)[1])
                if not result.ok:
                    failures.append({"uom": name, "seed": seed, "rows": list(result.pair)})
        summary = "all rows pairwise orthogonal"
        if failures:
            f = failures[0]
            summary = f"{f['uom']} seed {f['seed']}: rows {f['rows'][0]} and {f['rows'][1]} are not orthogonal"
        return ClaimResult(name="orthogonality", passed=not failures, summary=summary, detail={"failures": failures})

    def claim_upb(self, seeds: List[int]) -> ClaimResult:
        failures = []
        for name in FAMILIES:
            for seed in seeds:
                vectors = self._instance(name, seed)[1]
                for split, witness in self.analysis.verify(vectors, list(UPB_SPLITS)).items():
                    if witness is not None:
                        failures.append({"uom": name, "seed": seed, "split": split, "witness": witness.to_dict()})
        return ClaimResult(
            name="upb",
            passed=not failures,
            summary=f"F1-F6 unextendible under {', '.join(s.label for s in UPB_SPLITS)}",
            detail={"failures": failures},
        )

    def claim_table1(self, seeds: List[int]) -> ClaimResult:
        counts = {name: independent_variable_counts(self.catalog.resolve(name)) for name in FAMILIES}
        mismatched = [name for name in FAMILIES if counts[name] != VARIABLE_COUNTS[name]]
        return ClaimResult(
            name="table1",
            passed=not mismatched,
            summary="independent variable counts match" if not mismatched else f"mismatch for {', '.join(mismatched)}",
            detail={"counts": counts},
        )

    def claim_inequivalence(self, seeds: List[int]) -> ClaimResult:
        pairs = []
        for a, b in combinations(FAMILIES, 2):
            pairs.append(self.catalog.compare(self.catalog.resolve(a), self.catalog.resolve(b)))
        undistinguished = [f"{v.left}/{v.right}" for v in pairs if not v.distinguished]
        f3_f6 = next(v for v in pairs if (v.left, v.right) == ("F3", "F6"))
        passed = not undistinguished and "coincidence" in f3_f6.features
        return ClaimResult(
            name="inequivalence",
            passed=passed,
            summary=f"{len(pairs) - len(undistinguished)} of {len(pairs)} pairs distinguished",
            detail={"pairs": [v.to_dict() for v in pairs]},
        )

    def claim_drop_one_counts(self, seeds: List[int]) -> ClaimResult:
        failures = []
        rows = []
        for seed in seeds:
            inst, vectors = self._instance("F1", seed)
            subset = drop_row(vectors, 1)
            degenerate = inst.assignment["i3"] == orthogonal(inst.assignment["i4"])
            expected = 6 if degenerate else 4
            solutions = self.analysis.enumerate(subset, AB_CD)
            # |0000> and |f5', 0, h3', 0> are always among the solutions.
            named = {
                _product_key(row, AB_CD)
                for row in (
                    vectors[0],
                    (vectors[6][0], vectors[0][1], vectors[6][2], vectors[0][3]),
                )
            }
            present = named <= set(solutions.solutions)
            entry = {"subset": "S11", "seed": seed, "count": solutions.count, "expected": expected, "namedVectorsPresent": present}
            rows.append(entry)
            if solutions.count != expected or not present:
                failures.append(entry)

            for label, name, want in DROP_ONE_SUBSETS:
                count = self._count(drop_row(self._instance(name, seed)[1], 1))
                entry = {"subset": label, "seed": seed, "count": count, "expected": want}
                rows.append(entry)
                if count != want:
                    failures.append(entry)

            for label, name, (variable, value), allowed in READINGS:
                spec = self.catalog.resolve(name)
                generic = self._count(drop_row(self._instance(name, seed)[1], 1))
                proof = self._count(drop_row(self._spec_instance(spec.force_equal(variable, value), seed)[1], 1))
                entry = {
                    "subset": label,
                    "seed": seed,
                    "generic": generic,
                    "statementReading": "not applicable",
                    "proofReading": proof,
                    "allowed": list(allowed),
                }
                logger.info("%s seed %d: generic %s, proof reading %s", label, seed, generic, proof)
                rows.append(entry)
                if generic not in allowed and proof not in allowed:
                    failures.append(entry)
        return ClaimResult(
            name="drop_one_counts",
            passed=not failures,
            summary="drop-one solution counts under AB:CD as expected" if not failures else f"{len(failures)} count mismatch(es)",
            detail={"rows": rows, "failures": failures},
        )

    def claim_ppt_states(self, seeds: List[int]) -> ClaimResult:
        failures = []
        rows = []
        for seed in seeds:
            for name in FAMILIES:
                vectors = self._instance(name, seed)[1]
                rho = build_complement_state(vectors)
                rank = rho.rank()
                ppt = is_ppt_all_cuts(rho, vectors.n_qubits)
                entry = {"state": f"alpha({name})", "seed": seed, "rank": rank, "ppt": all(ppt.values())}
                rows.append(entry)
                if rank != 8 or not entry["ppt"]:
                    failures.append(entry)
            for label, name in STATE_SUBSETS:
                subset = drop_row(self._instance(name, seed)[1], 1)
                rho = build_complement_state(subset)
                rank = rho.rank()
                ppt = is_ppt_all_cuts(rho, subset.n_qubits)
                spans = {}
                for split in UPB_SPLITS:
                    cert = self.analysis.certify(subset, split, ppt_verdicts=ppt)
                    spans[split.label] = cert.range_product_span_rank
                entry = {
                    "state": f"beta({label})",
                    "seed": seed,
                    "rank": rank,
                    "ppt": all(ppt.values()),
                    "spanRanks": spans,
                }
                rows.append(entry)
                if rank != 9 or not entry["ppt"] or any(s > 8 for s in spans.values()):
                    failures.append(entry)
        return ClaimResult(
            name="ppt_states",
            passed=not failures,
            summary="rank-8 PPT states and rank-9 PPT entangled states" if not failures else f"{len(failures)} state(s) failed",
            detail={"rows": rows, "failures": failures},
        )

    def claim_almost_ge(self, seeds: List[int]) -> ClaimResult:
        failures = []
        for seed in seeds:
            vectors = self._instance("F6", seed)[1]
            verdict = self.analysis.ge(vectors)
            cuts = {label: cut.status.value for label, cut in verdict.cuts.items()}
            entry = {
                "seed": seed,
                "isAlmostGe": verdict.is_almost_ge,
                "isGeupb": verdict.is_geupb,
                "cuts": cuts,
            }
            if not verdict.is_almost_ge or verdict.is_geupb or cuts.get("AC|BD") != "UPB" or cuts.get("AD|BC") != "UPB":
                failures.append(entry)
        return ClaimResult(
            name="almost_ge",
            passed=not failures,
            summary="F6 unextendible across every 4x4 cut" if not failures else f"{len(failures)} seed(s) failed",
            detail={"failures": failures},
        )

    def claim_shifts3(self, seeds: List[int]) -> ClaimResult:
        vectors = self._instance("SHIFTS3", seeds[0] if seeds else 1)[1]
        upb = self.analysis.extension(vectors, PartySplit.singletons(3)) is None
        witness = self.analysis.extension(vectors, PartySplit.parse("A:BC"))
        return ClaimResult(
            name="shifts3",
            passed=upb and witness is not None,
            summary="three-qubit UPB, extendible across A:BC",
            detail={"upb": upb, "witness": witness.to_dict() if witness else None},
        )

    def claim_tensor(self, seeds: List[int]) -> ClaimResult:
        shifts = self._instance("SHIFTS3", seeds[0] if seeds else 1)[1]
        product, split = self.analysis.tensor(shifts, shifts, 3)
        orthogonal_rows = self.analysis.orthogonality(product).ok
        upb = self.analysis.extension(product, split) is None
        return ClaimResult(
            name="tensor",
            passed=orthogonal_rows and upb and len(product) == 16,
            summary=f"{len(product)} rows in {'x'.join(map(str, split.dims))}, UPB={upb}",
            detail={"rows": len(product), "split": split.label, "orthogonal": orthogonal_rows, "upb": upb},
        )

    def claim_structure(self, seeds: List[int]) -> ClaimResult:
        mismatches = []
        for p in range(2, ORACLE_MAX_P + 1):
            for n in range(1, p // 2 + 1):
                closed = maxsum(p, n).value
                if closed != maxsum_oracle(p, n):
                    mismatches.append({"p": p, "n": n, "closedForm": closed})
        bound_failures = []
        fired = []
        for name in FAMILIES:
            for seed in seeds:
                vectors = self._instance(name, seed)[1]
                if not bound_check(vectors).holds:
                    bound_failures.append({"uom": name, "seed": seed})
                for hit in exclusion_predicates(vectors):
                    fired.append({"uom": name, "seed": seed, **hit.to_dict()})
        fuzz = self.analysis.fuzz(self.config.reproduce.fuzz, self.config.reproduce.fuzz_seed)
        passed = not mismatches and not bound_failures and not fired and fuzz.sound
        return ClaimResult(
            name="structure",
            passed=passed,
            summary=f"maxsum closed form exact; fuzz over {fuzz.total} sets sound={fuzz.sound}",
            detail={
                "maxsumMismatches": mismatches,
                "boundFailures": bound_failures,
                "firedOnCatalog": fired,
                "fuzz": fuzz.to_dict(),
            },
        )

    def claim_negative_controls(self, seeds: List[int]) -> ClaimResult:
        f1 = self.catalog.resolve("F1")
        controls = []
        for c in f1.constraints:
            for forbidden in c.forbidden:
                subject, label = str(c.subject), str(forbidden)
                spec = f1.without_constraint(subject, label).force_equal(subject, label)
                outcome = None
                for seed in seeds:
                    vectors = self._spec_instance(spec, seed)[1]
                    result = self.analysis.orthogonality(vectors)
                    if not result.ok:
                        outcome = {"seed": seed, "kind": "not orthogonal", "rows": list(result.pair)}
                        break
                    witness = self.analysis.extension(vectors, AB_CD)
                    if witness is not None:
                        outcome = {"seed": seed, "kind": "extendible", "witness": witness.to_dict()}
                        break
                controls.append({"constraint": f"{subject} != {label}", "uom": spec.name, "detected": outcome})
        missed = [c["constraint"] for c in controls if c["detected"] is None]
        return ClaimResult(
            name="negative_controls",
            passed=not missed,
            summary=f"{len(controls) - len(missed)} of {len(controls)} relaxed sets fail",
            detail={"controls": controls},
        )

    def claim_classification(self, seeds: List[int]) -> ClaimResult:
        witnesses = classification_witnesses(seeds[0] if seeds else 1, self.config.sampling)
        absent = [f"{w.clause}/{w.family}" for w in witnesses if not w.holds]
        return ClaimResult(
            name="classification",
            passed=not absent,
            asserted=False,
            summary="all clause patterns present" if not absent else f"absent: {', '.join(absent)}",
            detail={"witnesses": [w.to_dict() for w in witnesses]},
        )
