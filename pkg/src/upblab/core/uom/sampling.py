import logging
import random
from typing import Optional, Tuple

from sympy.polys.domains import QQ, QQ_I

from upblab.core.base.config import SamplingConfig
from upblab.core.base.errors import ConstraintUnsatisfiable, WrongShape
from upblab.core.linalg.scalars import ProjQubit
from upblab.core.uom.spec import Instantiation, ProductVectorSet, UomSpec, resolve_grid

logger = logging.getLogger(__name__)


def draw_qubit(rng: random.Random, cfg: SamplingConfig) -> ProjQubit:
    re = QQ(rng.randint(cfg.numerator_min, cfg.numerator_max), rng.choice(cfg.denominators))
    im = QQ(rng.randint(cfg.numerator_min, cfg.numerator_max), rng.choice(cfg.denominators))
    return ProjQubit.finite(QQ_I(re, im))


def instantiate(
    spec: UomSpec,
    seed: int,
    sampling: Optional[SamplingConfig] = None,
) -> Tuple[Instantiation, ProductVectorSet]:
    """
    Draw every variable as Finite(a + bi) and reject until all constraints hold.

    Variables are drawn in sorted name order from `random.Random(seed)`, so the
    result depends only on (spec, seed, sampling).
    """
    cfg = sampling or SamplingConfig()
    rng = random.Random(seed)
    names = spec.variables()
    for rounds in range(1, cfg.max_rounds + 1):
        inst = Instantiation({name: draw_qubit(rng, cfg) for name in names})
        if not inst.satisfies(spec):
            continue
        try:
            vectors = resolve_grid(spec, inst)
        except WrongShape:
            continue
        logger.debug("instantiated %s with seed %d after %d round(s)", spec.name, seed, rounds)
        return inst, vectors
    raise ConstraintUnsatisfiable(spec=spec.name, rounds=cfg.max_rounds)
