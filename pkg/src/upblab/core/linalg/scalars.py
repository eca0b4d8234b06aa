"""
Exact scalars: rationals, Gaussian rationals and qubit states as points of
the projective line.

Rationals and Gaussian rationals are the sympy polynomial-domain element types
(`QQ.dtype`, `QQ_I.dtype`), so every value is exact and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from sympy.polys.domains import QQ, QQ_I

Rat = QQ.dtype
GaussRat = QQ_I.dtype

Vector = Tuple[GaussRat, ...]

ZERO = QQ_I(0, 0)
ONE = QQ_I(1, 0)
I = QQ_I(0, 1)


def rat(num: int, den: int = 1) -> Rat:
    return QQ(num, den)


def gauss(re: Union[int, Rat] = 0, im: Union[int, Rat] = 0) -> GaussRat:
    return QQ_I(re, im)


def conj(z: GaussRat) -> GaussRat:
    return QQ_I(z.x, -z.y)


def abs2(z: GaussRat) -> Rat:
    """|z|^2 as a rational."""
    return z.x * z.x + z.y * z.y


def is_real(z: GaussRat) -> bool:
    return not z.y


def rat_str(q: Rat) -> str:
    """Lossless text form: 'num/den', or 'num' when the denominator is 1."""
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def parse_rat(text: str) -> Rat:
    num, _, den = text.strip().partition("/")
    return QQ(int(num), int(den) if den else 1)


def gauss_to_json(z: GaussRat) -> dict:
    return {"re": rat_str(z.x), "im": rat_str(z.y)}


def gauss_from_json(data: dict) -> GaussRat:
    return QQ_I(parse_rat(str(data["re"])), parse_rat(str(data["im"])))


def gauss_str(z: GaussRat) -> str:
    re, im = z.x, z.y
    if not im:
        return rat_str(re)
    im_part = ("" if abs(im) == 1 else rat_str(abs(im))) + "i"
    if not re:
        return ("-" if im < 0 else "") + im_part
    return f"{rat_str(re)}{'-' if im < 0 else '+'}{im_part}"


def vector_inner(u: Vector, v: Vector) -> GaussRat:
    """<u, v>, conjugate-linear in u."""
    acc = ZERO
    for a, b in zip(u, v):
        if a and b:
            acc += conj(a) * b
    return acc


def canonical(v: Vector) -> Vector:
    """Scale v so its first nonzero coordinate is 1."""
    for a in v:
        if a:
            return tuple(b / a for b in v)
    raise ValueError("zero vector has no projective form")


@dataclass(frozen=True)
class ProjQubit:
    """
    A qubit ray. `coord=c` is the ket (1, c); `coord=None` is (0, 1).

    Label "0" is Finite(0) and label "1" is Infinity.
    """
    coord: Optional[GaussRat]

    @classmethod
    def finite(cls, c: GaussRat) -> "ProjQubit":
        return cls(c)

    @classmethod
    def from_vector(cls, a: GaussRat, b: GaussRat) -> "ProjQubit":
        if not a:
            if not b:
                raise ValueError("zero vector has no projective form")
            return INFINITY
        return cls(b / a)

    @property
    def is_infinity(self) -> bool:
        return self.coord is None

    @property
    def vector(self) -> Vector:
        return (ZERO, ONE) if self.coord is None else (ONE, self.coord)

    def __str__(self) -> str:
        if self.coord is None:
            return "1"
        if not self.coord:
            return "0"
        return f"({gauss_str(self.coord)})"

    def to_json(self):
        return "inf" if self.coord is None else gauss_to_json(self.coord)

    @classmethod
    def from_json(cls, data) -> "ProjQubit":
        return INFINITY if data == "inf" else cls(gauss_from_json(data))


INFINITY = ProjQubit(None)
KET0 = ProjQubit(ZERO)


def orthogonal(q: ProjQubit) -> ProjQubit:
    """The unique ray orthogonal to q."""
    if q.coord is None:
        return KET0
    if not q.coord:
        return INFINITY
    return ProjQubit(-ONE / conj(q.coord))


def inner2(p: ProjQubit, q: ProjQubit) -> GaussRat:
    """Inner product of the unnormalized representatives, conjugating p."""
    return vector_inner(p.vector, q.vector)


def apply_unitary(u: Tuple[Tuple[GaussRat, GaussRat], Tuple[GaussRat, GaussRat]], q: ProjQubit) -> ProjQubit:
    """Projective action of a 2x2 matrix; a global scale of `u` is irrelevant."""
    a, b = q.vector
    return ProjQubit.from_vector(u[0][0] * a + u[0][1] * b, u[1][0] * a + u[1][1] * b)


# Exact local unitaries, up to a global scale.
LOCAL_UNITARIES = {
    "X": ((ZERO, ONE), (ONE, ZERO)),
    "Z": ((ONE, ZERO), (ZERO, -ONE)),
    "S": ((ONE, ZERO), (ZERO, I)),
    "H": ((ONE, ONE), (ONE, -ONE)),
}
