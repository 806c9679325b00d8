"""Solutions of p^3 + q^3 = (x^3 + y^3) r^3 in forms, and their group law.

A finite solution is a projective triple (p : q : r) of pairwise coprime
forms, stored scaled so that the first nonzero coefficient of p is 1.  The
three points with r = 0 are ``Infinity(j)`` = (1 : -w^j : 0); Infinity(0)
is the identity and Infinity(1) = h0 has order 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .eisenstein import OMEGA, OMEGA2, QOmega
from .forms import ONE, X, Y, BinaryForm, NotDivisible, exact_div, gcd, scale

__all__ = [
    "Finite",
    "Infinity",
    "Solution",
    "AffiliateClass",
    "IDENTITY",
    "H0",
    "H1",
    "H2",
    "CUBIC",
    "verify",
    "diagnose",
    "neg",
    "add",
    "double",
    "translate",
    "smul",
    "affiliates",
    "same_affiliate_class",
    "conjugate",
    "strip_common_factor",
    "solution_to_json",
    "solution_from_json",
    "NotApplicable",
]

CUBIC = X**3 + Y**3
_OMEGA_POW = (QOmega(1), OMEGA, OMEGA2)


class NotApplicable(ValueError):
    """Operation needs a finite solution."""


def _pivot(p: BinaryForm, q: BinaryForm, r: BinaryForm) -> QOmega:
    for f in (p, q, r):
        if not f.is_zero():
            return f[f.y_power()]
    raise ValueError("(0 : 0 : 0) is not a projective point")


@dataclass(frozen=True)
class Finite:
    """(p : q : r) with r != 0, canonically scaled on construction."""

    p: BinaryForm
    q: BinaryForm
    r: BinaryForm

    def __post_init__(self):
        c = _pivot(self.p, self.q, self.r)
        if c != 1:
            inv = c.inverse()
            object.__setattr__(self, "p", scale(inv, self.p))
            object.__setattr__(self, "q", scale(inv, self.q))
            object.__setattr__(self, "r", scale(inv, self.r))

    @property
    def degree(self):
        return self.p.degree

    @property
    def components(self):
        return self.p, self.q, self.r

    def __repr__(self):
        return f"Finite(p={self.p}, q={self.q}, r={self.r})"


@dataclass(frozen=True)
class Infinity:
    """The point (1 : -w^j : 0)."""

    j: int

    def __post_init__(self):
        if self.j not in (0, 1, 2):
            raise ValueError(f"infinity index must be 0, 1 or 2, not {self.j}")

    @property
    def degree(self):
        return None


Solution = Union[Finite, Infinity]

IDENTITY = Infinity(0)
H0 = Infinity(1)
H1 = Finite(X, Y, ONE)
H2 = Finite(scale(OMEGA, X), scale(OMEGA, Y), ONE)


def diagnose(s: Solution):
    """None if s is a valid solution, else 'degrees-bad', 'identity-fails' or 'not-coprime'."""
    if isinstance(s, Infinity):
        return None
    p, q, r = s.components
    if r.is_zero() or p.is_zero() or q.is_zero():
        return "degrees-bad"
    if not (p.degree == q.degree == r.degree + 1):
        return "degrees-bad"
    if p**3 + q**3 != CUBIC * r**3:
        return "identity-fails"
    if not r.is_constant():
        if not (gcd(p, r).is_constant() and gcd(q, r).is_constant()):
            return "not-coprime"
    if not gcd(p, q).is_constant():
        return "not-coprime"
    return None


def verify(s: Solution) -> bool:
    return diagnose(s) is None


def neg(s: Solution) -> Solution:
    if isinstance(s, Infinity):
        return Infinity(-s.j % 3)
    return Finite(s.q, s.p, s.r)


def translate(s: Solution, j: int) -> Solution:
    """s + j*h0; on finite points (p : q : r) -> (w^j p : w^2j q : r)."""
    j %= 3
    if isinstance(s, Infinity):
        return Infinity((s.j + j) % 3)
    if j == 0:
        return s
    return Finite(scale(_OMEGA_POW[j], s.p), scale(_OMEGA_POW[2 * j % 3], s.q), s.r)


def strip_common_factor(p: BinaryForm, q: BinaryForm, r: BinaryForm):
    """Divide out the gcd of a projective solution triple.

    Any factor shared by two of p, q, r divides the third when
    p^3 + q^3 = (x^3 + y^3) r^3, so gcd(p, r) is the whole common part.
    Returns (p, q, r, g).
    """
    g = gcd(p, r)
    if g.is_constant():
        return p, q, r, g
    try:
        return exact_div(p, g), exact_div(q, g), exact_div(r, g), g
    except NotDivisible as exc:  # pragma: no cover - would contradict the identity
        raise ArithmeticError("common factor of p and r does not divide q") from exc


def _coprime_solution(p, q, r) -> Finite:
    p, q, r, _ = strip_common_factor(p, q, r)
    s = Finite(p, q, r)
    if not r.is_constant():
        assert gcd(p, r).is_constant() and gcd(q, r).is_constant(), "gcd stripping left a common factor"
    assert gcd(p, q).is_constant(), "gcd stripping left a common factor"
    return s


def double(s: Solution) -> Solution:
    """2s via the tangent line."""
    if isinstance(s, Infinity):
        return Infinity(2 * s.j % 3)
    p, q, r = s.components
    p3, q3 = p**3, q**3
    # 2(X, Y) = (-Y(2X^3 + Y^3), X(X^3 + 2Y^3)) / (X^3 - Y^3)
    return _coprime_solution(-(q * (2 * p3 + q3)), p * (p3 + 2 * q3), r * (p3 - q3))


def _chord(s1: Finite, s2: Finite) -> Finite:
    """Sum of distinct finite points not on a line through infinity.

    The affine formula X = p/r, Y = q/r
        Z = (A(Y1 - Y2) + X1 X2 (X1 Y2 - X2 Y1)) / D
        W = (A(X1 - X2) + Y1 Y2 (X2 Y1 - X1 Y2)) / D
        D = (X1^2 X2 + Y1^2 Y2) - (X1 X2^2 + Y1 Y2^2),   A = x^3 + y^3
    with the sum equal to (Z, W), cleared by r1^2 r2^2.
    """
    p1, q1, r1 = s1.components
    p2, q2, r2 = s2.components
    rr = CUBIC * r1 * r2
    cross = p1 * q2 - p2 * q1
    zn = rr * (q1 * r2 - q2 * r1) + p1 * p2 * cross
    wn = rr * (p1 * r2 - p2 * r1) - q1 * q2 * cross
    dn = r2 * (p1 * p1 * p2 + q1 * q1 * q2) - r1 * (p1 * p2 * p2 + q1 * q2 * q2)
    if dn.is_zero():
        raise ArithmeticError("chord through two finite points met infinity unexpectedly")
    return _coprime_solution(zn, wn, dn)


def add(s1: Solution, s2: Solution) -> Solution:
    """Group sum, with the degenerate cases taken in a fixed order.

    (a) identity; (b) translation by h0 or 2h0, or sum of two infinite
    points; (c) the mirror pairs whose chord passes through infinity;
    (d) doubling; (e) the chord formula.
    """
    if isinstance(s1, Infinity) and s1.j == 0:
        return s2
    if isinstance(s2, Infinity) and s2.j == 0:
        return s1
    if isinstance(s1, Infinity):
        return translate(s2, s1.j)
    if isinstance(s2, Infinity):
        return translate(s1, s2.j)
    p, q, r = s1.components
    # (X, Y) + (Y, X) = 0, (X, Y) + (wY, w^2 X) = h0, (X, Y) + (w^2 Y, w X) = 2h0
    for j in range(3):
        if s2 == Finite(scale(_OMEGA_POW[j], q), scale(_OMEGA_POW[2 * j % 3], p), r):
            return Infinity(j)
    if s1 == s2:
        return double(s1)
    return _chord(s1, s2)


def smul(k: int, s: Solution) -> Solution:
    """k * s by double-and-add."""
    if k < 0:
        return smul(-k, neg(s))
    result = IDENTITY
    base = s
    while k:
        if k & 1:
            result = add(result, base)
        k >>= 1
        if k:
            base = double(base)
    return result


@dataclass(frozen=True)
class AffiliateClass:
    representative: Finite
    members: tuple

    def __contains__(self, s):
        return s in self.members

    def __len__(self):
        return len(self.members)


def affiliates(s: Solution) -> AffiliateClass:
    """The 18 points (w^j f, w^k g) and (w^k g, w^j f), j and k in {0, 1, 2}."""
    if isinstance(s, Infinity):
        raise NotApplicable("affiliates are defined for finite solutions only")
    p, q, r = s.components
    wp = [scale(c, p) for c in _OMEGA_POW]
    wq = [scale(c, q) for c in _OMEGA_POW]
    members = [Finite(wp[j], wq[k], r) for j in range(3) for k in range(3)]
    members += [Finite(wq[k], wp[j], r) for j in range(3) for k in range(3)]
    return AffiliateClass(s, tuple(members))


def same_affiliate_class(s1: Solution, s2: Solution) -> bool:
    if isinstance(s1, Infinity) or isinstance(s2, Infinity):
        raise NotApplicable("affiliate classes are defined for finite solutions only")
    if s1.degree != s2.degree:
        return False
    return s2 in affiliates(s1)


def conjugate(s: Solution) -> Solution:
    """Complex conjugate of every coefficient."""
    if isinstance(s, Infinity):
        return Infinity(-s.j % 3)
    return Finite(s.p.conj(), s.q.conj(), s.r.conj())


def solution_to_json(s: Solution) -> dict:
    if isinstance(s, Infinity):
        return {"kind": "infinity", "j": s.j}
    return {
        "kind": "finite",
        "degree": s.degree,
        "p": s.p.to_json(),
        "q": s.q.to_json(),
        "r": s.r.to_json(),
    }


def solution_from_json(obj: dict) -> Solution:
    kind = obj.get("kind")
    if kind == "infinity":
        return Infinity(int(obj["j"]))
    if kind != "finite":
        raise ValueError(f"unknown solution kind {kind!r}")
    s = Finite(*(BinaryForm.from_json(obj[k]) for k in ("p", "q", "r")))
    if obj.get("degree") != s.degree:
        raise ValueError(f"declared degree {obj.get('degree')} does not match p")
    return s
