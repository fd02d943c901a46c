"""Exact arithmetic in the noncommutative grading group of half-integer quadruples.

An element (a; b, c; d) multiplies by

    (a1; b1, c1; d1) * (a2; b2, c2; d2)
        = (a1 + a2 + b1*c2 - c1*b2;  b1 + b2,  c1 + c2;  d1 + d2),

with identity (0; 0, 0; 0).  Every value appearing in practice is a
half-integer, so elements store *doubled* integers and all computation is
exact.  Gradings of tensor generators live in double cosets: multiplying by
powers of a fixed g on the left and h on the right zeroes the two middle
slots, and the surviving first/fourth entries are the normalized pair
(N, A').
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class GradingError(ValueError):
    """Raised when a double-coset normalization does not land on integers."""


@dataclass(frozen=True)
class GradingElement:
    """Quadruple (a; b, c; d) of half-integers, stored as doubled ints.

    The two middle slots always share their half-part (b + c is an integer
    for every algebra and module grading), which keeps the determinant term
    of the product half-integral; multiplying elements from outside that
    subgroup raises ArithmeticError.
    """

    a2: int
    b2: int
    c2: int
    d2: int

    @classmethod
    def of(cls, a, b, c, d) -> "GradingElement":
        """Build from half-integer values given as ints or Fractions."""
        doubled = []
        for value in (a, b, c, d):
            twice = Fraction(value) * 2
            if twice.denominator != 1:
                raise ValueError(f"{value} is not a half-integer")
            doubled.append(int(twice))
        return cls(*doubled)

    @classmethod
    def identity(cls) -> "GradingElement":
        return cls(0, 0, 0, 0)

    def halves(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(v, 2) for v in (self.a2, self.b2, self.c2, self.d2))

    def __mul__(self, other: "GradingElement") -> "GradingElement":
        # doubled determinant (b1*c2 - c1*b2)/2 stays doubled after one halving
        det_quadrupled = self.b2 * other.c2 - self.c2 * other.b2
        if det_quadrupled % 2:
            raise ArithmeticError("determinant term is not a half-integer")
        return GradingElement(
            self.a2 + other.a2 + det_quadrupled // 2,
            self.b2 + other.b2,
            self.c2 + other.c2,
            self.d2 + other.d2,
        )

    def inverse(self) -> "GradingElement":
        return GradingElement(-self.a2, -self.b2, -self.c2, -self.d2)

    def __pow__(self, k: int) -> "GradingElement":
        if k < 0:
            return (self ** (-k)).inverse()
        out = GradingElement.identity()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __str__(self) -> str:
        a, b, c, d = self.halves()
        return f"({a}; {b}, {c}; {d})"


#: Central element; commutes with everything since its middle slots vanish.
LAMBDA = GradingElement(2, 0, 0, 0)

_RHO_SINGLE = {
    "1": GradingElement(-1, 1, -1, 0),
    "2": GradingElement(-1, 1, 1, 0),
    "3": GradingElement(-1, -1, 1, 0),
}


def gmul(x: GradingElement, y: GradingElement) -> GradingElement:
    return x * y


def ginv(x: GradingElement) -> GradingElement:
    return x.inverse()


def gpow(x: GradingElement, k: int) -> GradingElement:
    return x**k


def rho_grading(label: str) -> GradingElement:
    """Grading of an algebra chord element; composites multiply left to right."""
    if label not in ("1", "2", "3", "12", "23", "123"):
        raise ValueError(f"unknown chord label {label!r}")
    out = GradingElement.identity()
    for ch in label:
        out = out * _RHO_SINGLE[ch]
    return out


@dataclass(frozen=True)
class NormalizedGrading:
    """Double-coset representative with zeroed middle slots: the pair (N, A')."""

    N: int
    Aprime: int


def normalize_double_coset(
    x: GradingElement, g: GradingElement, h: GradingElement
) -> NormalizedGrading:
    """Reduce x to its (N, A') double-coset coordinates.

    Requires middle slots (0, 1) for g and (-1, *) for h.  The right power
    of h is folded in first (it is the unique one zeroing the b slot); the
    left power of g then zeroes the c slot.  Because the first-slot
    determinant corrections depend on order, this order is part of the
    contract; the result is still a well-defined function on double cosets.
    """
    if (g.b2, g.c2) != (0, 2):
        raise GradingError(f"left normalizer must have middle slots (0, 1), got {g}")
    if h.b2 != -2:
        raise GradingError(f"right normalizer must have -1 in the b slot, got {h}")
    if x.b2 % 2:
        raise GradingError(f"b slot of {x} admits no integral right power")
    beta = x.b2 // 2
    y = x * h**beta
    if y.c2 % 2:
        raise GradingError(f"c slot of {y} admits no integral left power")
    alpha = -(y.c2 // 2)
    z = g**alpha * y
    if z.a2 % 2 or z.d2 % 2:
        raise GradingError(f"normalized entries of {z} are not integers")
    return NormalizedGrading(N=z.a2 // 2, Aprime=z.d2 // 2)
