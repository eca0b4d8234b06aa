from dataclasses import dataclass
from functools import lru_cache
from typing import List

from upblab.core.base.errors import BadArity, TooLarge

ORACLE_MAX_P = 24
ORACLE_MAX_N = 6


@dataclass(frozen=True)
class MaxSum:
    """Maximum of a1*a2 + ... + a(2n-1)*a(2n) over positive compositions of p."""
    p: int
    n: int
    value: int
    extremal: List[int]

    def to_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "value": self.value, "extremal": list(self.extremal)}


def _check_arity(p: int, n: int) -> None:
    if not (n >= 1 and p >= 2 * n):
        raise BadArity(p=p, n=n)


def maxsum(p: int, n: int) -> MaxSum:
    """
    Closed form: put everything spare into the first pair, split evenly.

    With s = p - 2n + 2 the maximum is ceil(s/2) * floor(s/2) + n - 1, attained
    at a = (ceil(s/2), floor(s/2), 1, ..., 1).
    """
    _check_arity(p, n)
    s = p - 2 * n + 2
    hi, lo = (s + 1) // 2, s // 2
    return MaxSum(p, n, hi * lo + n - 1, [hi, lo] + [1] * (2 * n - 2))


@lru_cache(maxsize=None)
def _best(remaining: int, pairs: int) -> int:
    if pairs == 0:
        return 0 if remaining == 0 else -1
    best = -1
    # Every later pair needs at least two units.
    budget = remaining - 2 * (pairs - 1)
    for a in range(1, budget):
        for b in range(1, budget - a + 1):
            rest = _best(remaining - a - b, pairs - 1)
            if rest >= 0 and a * b + rest > best:
                best = a * b + rest
    return best


def maxsum_oracle(p: int, n: int) -> int:
    """Exhaustive search over every composition of p into 2n positive parts."""
    if p > ORACLE_MAX_P or n > ORACLE_MAX_N:
        raise TooLarge(p=p, n=n)
    _check_arity(p, n)
    return _best(p, n)
