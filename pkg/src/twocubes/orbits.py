"""Rational points on X^3 + Y^3 = A.

Points are exact pairs of Fractions; the only rational point at infinity is
(1 : -1 : 0), the identity.  The group law is the one of :mod:`curve`
restricted to Q, where the twisted degenerate cases cannot occur.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .curve import Finite, Infinity, Solution
from .forms import RationalFunction

__all__ = [
    "Affine",
    "InfinityQ",
    "RationalPoint",
    "OrbitContext",
    "viete_step",
    "add_points",
    "neg_point",
    "double_point",
    "orbit",
    "specialize",
    "euler_binet",
    "VieteUndefined",
    "SpecializationPole",
    "NonRationalSpecialization",
]


class VieteUndefined(ArithmeticError):
    """X^3 = Y^3, so the Viete map has a zero denominator."""


class SpecializationPole(ArithmeticError):
    """r vanishes at the specialization point."""


class NonRationalSpecialization(ArithmeticError):
    """The specialized point has a nonzero w-part."""


@dataclass(frozen=True)
class Affine:
    X: Fraction
    Y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "X", Fraction(self.X))
        object.__setattr__(self, "Y", Fraction(self.Y))

    def __str__(self):
        return f"{self.X}\t{self.Y}"


@dataclass(frozen=True)
class InfinityQ:
    j: int = 0

    def __post_init__(self):
        if self.j != 0:
            raise ValueError("only (1 : -1 : 0) is a rational point at infinity")

    def __str__(self):
        return "inf"


RationalPoint = Union[Affine, InfinityQ]


@dataclass(frozen=True)
class OrbitContext:
    A: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", Fraction(self.A))
        if self.A == 0:
            raise ValueError("A must be nonzero")

    def contains(self, pt: RationalPoint) -> bool:
        return isinstance(pt, InfinityQ) or pt.X**3 + pt.Y**3 == self.A

    def check(self, pt: RationalPoint) -> RationalPoint:
        if not self.contains(pt):
            raise ValueError(f"({pt.X}, {pt.Y}) is not on X^3 + Y^3 = {self.A}")
        return pt


def viete_step(ctx: OrbitContext, pt: RationalPoint) -> Affine:
    """(X(X^3 + 2Y^3), -Y(Y^3 + 2X^3)) / (X^3 - Y^3), which is -2 pt."""
    if isinstance(pt, InfinityQ):
        raise VieteUndefined("the Viete map needs an affine point")
    ctx.check(pt)
    x3, y3 = pt.X**3, pt.Y**3
    den = x3 - y3
    if den == 0:
        raise VieteUndefined(f"X^3 = Y^3 at ({pt.X}, {pt.Y})")
    return ctx.check(Affine(pt.X * (x3 + 2 * y3) / den, -pt.Y * (y3 + 2 * x3) / den))


def neg_point(pt: RationalPoint) -> RationalPoint:
    return pt if isinstance(pt, InfinityQ) else Affine(pt.Y, pt.X)


def double_point(ctx: OrbitContext, pt: RationalPoint) -> RationalPoint:
    if isinstance(pt, InfinityQ):
        return pt
    x3, y3 = pt.X**3, pt.Y**3
    den = x3 - y3
    if den == 0:  # X = Y: the point is its own negative
        return InfinityQ()
    return ctx.check(Affine(-pt.Y * (2 * x3 + y3) / den, pt.X * (x3 + 2 * y3) / den))


def add_points(ctx: OrbitContext, p1: RationalPoint, p2: RationalPoint) -> RationalPoint:
    """Group sum on X^3 + Y^3 = A with identity (1 : -1 : 0)."""
    if isinstance(p1, InfinityQ):
        return ctx.check(p2)
    if isinstance(p2, InfinityQ):
        return ctx.check(p1)
    ctx.check(p1)
    ctx.check(p2)
    if p2 == neg_point(p1):
        return InfinityQ()
    if p1 == p2:
        return double_point(ctx, p1)
    x1, y1, x2, y2 = p1.X, p1.Y, p2.X, p2.Y
    a = ctx.A
    d = (x1 * x1 * x2 + y1 * y1 * y2) - (x1 * x2 * x2 + y1 * y2 * y2)
    if d == 0:  # pragma: no cover - only the mirror pair meets infinity over Q
        raise ArithmeticError("chord met infinity")
    cross = x1 * y2 - x2 * y1
    z = (a * (y1 - y2) + x1 * x2 * cross) / d
    w = (a * (x1 - x2) - y1 * y2 * cross) / d
    return ctx.check(Affine(z, w))


def orbit(ctx: OrbitContext, start: RationalPoint, steps: int) -> list:
    """The points after 1..steps Viete steps from start."""
    out = []
    pt = ctx.check(start)
    for _ in range(steps):
        pt = viete_step(ctx, pt)
        out.append(pt)
    return out


def _rational(v, what: str) -> Fraction:
    if not v.is_rational():
        raise NonRationalSpecialization(f"{what} has w-part {v.b}")
    return v.a


def specialize(s: Solution, x0, y0) -> Affine:
    """(p(x0, y0) / r(x0, y0), q(x0, y0) / r(x0, y0)), on A = x0^3 + y0^3."""
    x0, y0 = Fraction(x0), Fraction(y0)
    if isinstance(s, Infinity):
        if s.j == 0:
            return InfinityQ()
        raise NonRationalSpecialization(f"(1 : -w^{s.j} : 0) is not rational")
    p, q, r = (f.evaluate(x0, y0) for f in s.components)
    if r == 0:
        raise SpecializationPole(f"r vanishes at ({x0}, {y0})")
    pt = Affine(_rational(p / r, "X"), _rational(q / r, "Y"))
    OrbitContext(x0**3 + y0**3).check(pt)
    return pt


def euler_binet(a, b, lam):
    """(X, Y, U, V) with X^3 + Y^3 = U^3 + V^3 for any a, b, lam.

    X = lam(1 - (a - 3b)(a^2 + 3b^2)),   Y = lam((a + 3b)(a^2 + 3b^2) - 1),
    U = lam((a + 3b) - (a^2 + 3b^2)^2),  V = lam((a^2 + 3b^2)^2 - (a - 3b)).
    """
    a, b, lam = (v if isinstance(v, RationalFunction) else RationalFunction(v) for v in (a, b, lam))
    s = a * a + 3 * b * b
    plus, minus = a + 3 * b, a - 3 * b
    return (
        lam * (1 - minus * s),
        lam * (plus * s - 1),
        lam * (plus - s * s),
        lam * (s * s - minus),
    )
