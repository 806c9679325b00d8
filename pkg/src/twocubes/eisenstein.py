"""Exact arithmetic in Q(w) and Z[w], w a primitive cube root of unity.

Every element is kept on the basis {1, w}; products are reduced with
w^2 = -1 - w, so equality is a field-by-field comparison.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

__all__ = [
    "QOmega",
    "EisensteinInt",
    "ZERO",
    "ONE",
    "OMEGA",
    "OMEGA2",
    "norm",
    "conj",
    "qomega_mul",
    "divides",
    "divides_by_congruence",
    "parse_qomega",
    "format_qomega",
]


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


@dataclass(frozen=True, slots=True, eq=False)
class QOmega:
    """The number a + b*w with rational a, b."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))

    def __eq__(self, other):
        if isinstance(other, QOmega):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        # agrees with hash of the rational when b = 0
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    @classmethod
    def coerce(cls, value) -> QOmega:
        if isinstance(value, QOmega):
            return value
        if isinstance(value, EisensteinInt):
            return cls(value.m, value.n)
        if isinstance(value, str):
            return parse_qomega(value)
        return cls(value)

    def __add__(self, other):
        try:
            other = QOmega.coerce(other)
        except TypeError:
            return NotImplemented
        return QOmega(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QOmega(-self.a, -self.b)

    def __sub__(self, other):
        try:
            other = QOmega.coerce(other)
        except TypeError:
            return NotImplemented
        return QOmega(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return QOmega.coerce(other) - self

    def __mul__(self, other):
        try:
            other = QOmega.coerce(other)
        except TypeError:
            return NotImplemented
        return qomega_mul(self, other)

    __rmul__ = __mul__

    def conj(self) -> QOmega:
        return conj(self)

    def norm(self) -> Fraction:
        """|a + b w|^2 = a^2 - ab + b^2."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> QOmega:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = conj(self)
        return QOmega(c.a / n, c.b / n)

    def __truediv__(self, other):
        try:
            other = QOmega.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QOmega.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> QOmega:
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self):
        return format_qomega(self)

    def __repr__(self):
        return f"QOmega({format_qomega(self)!r})"


def qomega_mul(u: QOmega, v: QOmega) -> QOmega:
    # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = -1 - w
    bd = u.b * v.b
    return QOmega(u.a * v.a - bd, u.a * v.b + u.b * v.a - bd)


def conj(u: QOmega) -> QOmega:
    """Complex conjugate: conj(w) = w^2 = -1 - w."""
    return QOmega(u.a - u.b, -u.b)


ZERO = QOmega(0)
ONE = QOmega(1)
OMEGA = QOmega(0, 1)
OMEGA2 = QOmega(-1, -1)


@dataclass(frozen=True, slots=True)
class EisensteinInt:
    """The Eisenstein integer m + n*w."""

    m: int
    n: int

    def __add__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.m + other.m, self.n + other.n)

    def __sub__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.m - other.m, self.n - other.n)

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.m, -self.n)

    def __mul__(self, other: EisensteinInt) -> EisensteinInt:
        if isinstance(other, int):
            return EisensteinInt(self.m * other, self.n * other)
        nn = self.n * other.n
        return EisensteinInt(self.m * other.m - nn, self.m * other.n + self.n * other.m - nn)

    __rmul__ = __mul__

    def norm(self) -> int:
        return norm(self)

    def conj(self) -> EisensteinInt:
        return EisensteinInt(self.m - self.n, -self.n)

    def __bool__(self):
        return bool(self.m) or bool(self.n)

    def to_qomega(self) -> QOmega:
        return QOmega(self.m, self.n)

    def exact_div(self, other: EisensteinInt) -> EisensteinInt:
        """self / other, which must lie in Z[w]."""
        q = self.to_qomega() / other.to_qomega()
        if q.a.denominator != 1 or q.b.denominator != 1:
            raise ArithmeticError(f"{other} does not divide {self}")
        return EisensteinInt(int(q.a), int(q.b))

    def __str__(self):
        return format_qomega(self.to_qomega())


UNITS = tuple(
    EisensteinInt(m, n) for m, n in ((1, 0), (0, 1), (-1, -1), (-1, 0), (0, -1), (1, 1))
)


def norm(z: EisensteinInt) -> int:
    return z.m * z.m - z.m * z.n + z.n * z.n


def divides(w: EisensteinInt, z: EisensteinInt) -> bool:
    """True iff z / w is an Eisenstein integer.

    Computed by exact division in Q(w); the congruence test
    :func:`divides_by_congruence` is an independent route to the same answer.
    """
    if not w:
        raise ZeroDivisionError("divisibility by zero")
    q = z.to_qomega() / w.to_qomega()
    return q.a.denominator == 1 and q.b.denominator == 1


def divides_by_congruence(w: EisensteinInt, z: EisensteinInt) -> bool:
    # m0 m1 + n0 n1 == m0 n1 == m1 n0  (mod m1^2 - m1 n1 + n1^2), z = m0 + n0 w, w = m1 + n1 w
    if not w:
        raise ZeroDivisionError("divisibility by zero")
    m0, n0, m1, n1 = z.m, z.n, w.m, w.n
    k = norm(w)
    return (m0 * m1 + n0 * n1 - m0 * n1) % k == 0 and (m0 * n1 - m1 * n0) % k == 0


# -- text form ---------------------------------------------------------------

_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_RAT_RE = re.compile(r"\d+(?:/\d+)?")


def parse_qomega(text: str) -> QOmega:
    """Parse ``a/b``, ``a/b+c/d*w``, ``c/d*w``, ``-1+2*w``, ``w`` and the like."""
    s = "".join(text.split())
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    terms = _TERM_RE.findall(s)
    if not s or "".join(sign + body for sign, body in terms) != s or len(terms) > 2:
        raise ValueError(f"not an element of Q(w): {text!r}")
    a = b = None
    for sign, body in terms:
        if body.endswith("w"):
            coef = body[:-1]
            if coef.endswith("*"):
                coef = coef[:-1]
                if not coef:
                    raise ValueError(f"not an element of Q(w): {text!r}")
            if b is not None or (coef and not _RAT_RE.fullmatch(coef)):
                raise ValueError(f"not an element of Q(w): {text!r}")
            b = Fraction(coef) if coef else Fraction(1)
            if sign == "-":
                b = -b
        else:
            if a is not None or b is not None or not _RAT_RE.fullmatch(body):
                raise ValueError(f"not an element of Q(w): {text!r}")
            a = Fraction(body)
            if sign == "-":
                a = -a
    return QOmega(a or 0, b or 0)


def _fmt_rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_qomega(u: QOmega) -> str:
    """Canonical text; ``parse_qomega(format_qomega(u)) == u``."""
    if u.b == 0:
        return _fmt_rat(u.a)
    babs_ = abs(u.b)
    wpart = "w" if babs_ == 1 else f"{_fmt_rat(babs_)}*w"
    if u.a == 0:
        return wpart if u.b > 0 else "-" + wpart
    return _fmt_rat(u.a) + ("+" if u.b > 0 else "-") + wpart
