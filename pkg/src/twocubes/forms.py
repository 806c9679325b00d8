"""Binary forms over Q(w): dense, exact, homogeneous.

A form of degree d is stored as d+1 coefficients, coefficient i multiplying
x^(d-i) * y^i.  Internally every coefficient is (A_i + B_i w) / den with
integers A_i, B_i and one positive common denominator; the triple is kept
primitive so structural equality is mathematical equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as igcd

from . import _modgcd
from .eisenstein import QOmega, format_qomega, parse_qomega, ZERO as QZERO

__all__ = [
    "BinaryForm",
    "DegreeMismatch",
    "NotDivisible",
    "ZERO",
    "ONE",
    "X",
    "Y",
    "add",
    "mul",
    "scale",
    "substitute",
    "gcd",
    "gcd_euclid",
    "exact_div",
    "normalize_scale",
    "shape_mod3",
    "parse_form",
    "format_form",
    "RationalFunction",
]


class DegreeMismatch(ValueError):
    """Adding or substituting forms of different degree."""


class NotDivisible(ArithmeticError):
    pass


def _conv(u, v):
    if not u or not v:
        return []
    if len(u) < len(v):
        u, v = v, u
    out = [0] * (len(u) + len(v) - 1)
    for j, vj in enumerate(v):
        if vj:
            for i, ui in enumerate(u):
                out[i + j] += ui * vj
    return out


def _mul_vectors(a1, b1, a2, b2):
    # (A1 + B1 w)(A2 + B2 w) with w^2 = -1 - w, three convolutions
    p = _conv(a1, a2)
    q = _conv(b1, b2)
    s = _conv([x + y for x, y in zip(a1, b1)], [x + y for x, y in zip(a2, b2)])
    a = [pi - qi for pi, qi in zip(p, q)]
    b = [si - pi - 2 * qi for si, pi, qi in zip(s, p, q)]
    return a, b


def _to_ints(coeffs):
    """QOmega sequence -> (A, B, den) on a common denominator."""
    den = 1
    for c in coeffs:
        den = den * c.a.denominator // igcd(den, c.a.denominator)
        den = den * c.b.denominator // igcd(den, c.b.denominator)
    a = [c.a.numerator * (den // c.a.denominator) for c in coeffs]
    b = [c.b.numerator * (den // c.b.denominator) for c in coeffs]
    return a, b, den


class BinaryForm:
    """Homogeneous polynomial in x, y with coefficients in Q(w).

    ``BinaryForm(coeffs)`` takes the d+1 coefficients in order of
    descending x-power.  The zero form has no degree (``degree is None``).
    """

    __slots__ = ("_a", "_b", "_den", "_hash")

    def __init__(self, coeffs=()):
        coeffs = [QOmega.coerce(c) for c in coeffs]
        a, b, den = _to_ints(coeffs)
        self._set(a, b, den)

    @classmethod
    def _raw(cls, a, b, den=1) -> BinaryForm:
        f = cls.__new__(cls)
        f._set(a, b, den)
        return f

    def _set(self, a, b, den):
        if not any(a) and not any(b):
            a, b, den = (), (), 1
        else:
            g = igcd(*a, *b, den)
            if den < 0:
                g = -g
            if g != 1:
                a = [x // g for x in a]
                b = [x // g for x in b]
                den //= g
        self._a = tuple(a)
        self._b = tuple(b)
        self._den = den
        self._hash = None

    # -- construction --------------------------------------------------------

    @classmethod
    def constant(cls, c) -> BinaryForm:
        return cls([c])

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> BinaryForm:
        """c * x^i * y^j."""
        coeffs = [QZERO] * (i + j + 1)
        coeffs[j] = QOmega.coerce(c)
        return cls(coeffs)

    @classmethod
    def from_terms(cls, terms: dict) -> BinaryForm:
        """Build from {(i, j): coefficient}; all i + j must agree."""
        terms = {k: QOmega.coerce(v) for k, v in terms.items() if v}
        if not terms:
            return ZERO
        degrees = {i + j for i, j in terms}
        if len(degrees) != 1:
            raise DegreeMismatch(f"inhomogeneous terms of degrees {sorted(degrees)}")
        d = degrees.pop()
        coeffs = [QZERO] * (d + 1)
        for (_, j), c in terms.items():
            coeffs[j] = c
        return cls(coeffs)

    # -- basic properties ----------------------------------------------------

    @property
    def degree(self):
        return len(self._a) - 1 if self._a else None

    @property
    def coeffs(self) -> tuple:
        d = self._den
        return tuple(QOmega(Fraction(a, d), Fraction(b, d)) for a, b in zip(self._a, self._b))

    def is_zero(self) -> bool:
        return not self._a

    def __bool__(self):
        return bool(self._a)

    def __len__(self):
        return len(self._a)

    def __getitem__(self, i) -> QOmega:
        return QOmega(Fraction(self._a[i], self._den), Fraction(self._b[i], self._den))

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            if isinstance(other, (int, Fraction, QOmega)):
                return self == BinaryForm.constant(other) if other else self.is_zero()
            return NotImplemented
        return self._a == other._a and self._b == other._b and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._a, self._b, self._den))
        return self._hash

    def __repr__(self):
        return f"BinaryForm({format_form(self)!r})"

    def __str__(self):
        return format_form(self)

    def is_rational(self) -> bool:
        return not any(self._b)

    def is_constant(self) -> bool:
        return len(self._a) == 1

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, BinaryForm):
            try:
                other = BinaryForm.constant(other)
            except TypeError:
                return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return BinaryForm._raw([-x for x in self._a], [-x for x in self._b], self._den)

    def __sub__(self, other):
        if not isinstance(other, BinaryForm):
            other = BinaryForm.constant(other)
        return add(self, -other)

    def __rsub__(self, other):
        return BinaryForm.constant(other) - self

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            return mul(self, other)
        try:
            return scale(other, self)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BinaryForm:
        if k < 0:
            raise ValueError("negative power of a form")
        result, base = ONE, self
        while k:
            if k & 1:
                result = mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return result

    def __floordiv__(self, other):
        return self.exact_div(other)

    def conj(self) -> BinaryForm:
        """Complex conjugate of every coefficient."""
        return BinaryForm._raw([a - b for a, b in zip(self._a, self._b)], [-b for b in self._b], self._den)

    def swap_xy(self) -> BinaryForm:
        """f(y, x)."""
        return BinaryForm._raw(self._a[::-1], self._b[::-1], self._den)

    def scale_vars(self, cx, cy) -> BinaryForm:
        """f(cx * x, cy * y) for scalars cx, cy."""
        cx, cy = QOmega.coerce(cx), QOmega.coerce(cy)
        d = self.degree
        if d is None:
            return self
        return BinaryForm([c * cx ** (d - i) * cy**i for i, c in enumerate(self.coeffs)])

    def evaluate(self, x0, y0) -> QOmega:
        """Value at the point (x0, y0)."""
        x0, y0 = QOmega.coerce(x0), QOmega.coerce(y0)
        if self.is_zero():
            return QZERO
        d = self.degree
        total = QZERO
        xp = [x0**k for k in range(d + 1)]
        yp = QOmega(1)
        for i, c in enumerate(self.coeffs):
            if c:
                total = total + c * xp[d - i] * yp
            yp = yp * y0
        return total

    def x_power(self) -> int:
        """Largest k with x^k dividing the form."""
        k = 0
        for a, b in zip(reversed(self._a), reversed(self._b)):
            if a or b:
                return k
            k += 1
        return k

    def y_power(self) -> int:
        """Largest k with y^k dividing the form."""
        k = 0
        for a, b in zip(self._a, self._b):
            if a or b:
                return k
            k += 1
        return k

    def exact_div(self, other: BinaryForm) -> BinaryForm:
        """self / other, raising NotDivisible unless the quotient is a form."""
        return exact_div(self, other)

    def divides(self, other: BinaryForm) -> bool:
        try:
            exact_div(other, self)
        except NotDivisible:
            return False
        return True

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [format_qomega(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> BinaryForm:
        f = cls(parse_qomega(c) for c in obj["coeffs"])
        if obj.get("degree") != f.degree:
            raise ValueError(f"declared degree {obj.get('degree')} but {len(obj['coeffs'])} coefficients")
        return f


ZERO = BinaryForm()
ONE = BinaryForm([1])
X = BinaryForm([1, 0])
Y = BinaryForm([0, 1])


def add(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    if len(f._a) != len(g._a):
        raise DegreeMismatch(f"cannot add forms of degree {f.degree} and {g.degree}")
    df, dg = f._den, g._den
    if df == dg:
        a = [x + y for x, y in zip(f._a, g._a)]
        b = [x + y for x, y in zip(f._b, g._b)]
        return BinaryForm._raw(a, b, df)
    a = [x * dg + y * df for x, y in zip(f._a, g._a)]
    b = [x * dg + y * df for x, y in zip(f._b, g._b)]
    return BinaryForm._raw(a, b, df * dg)


def mul(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    if f.is_zero() or g.is_zero():
        return ZERO
    a, b = _mul_vectors(f._a, f._b, g._a, g._b)
    return BinaryForm._raw(a, b, f._den * g._den)


def scale(c, f: BinaryForm) -> BinaryForm:
    c = QOmega.coerce(c)
    if f.is_zero() or not c:
        return ZERO
    den = c.a.denominator * c.b.denominator
    ca = c.a.numerator * c.b.denominator
    cb = c.b.numerator * c.a.denominator
    bb = [x * cb for x in f._b]
    a = [x * ca - y for x, y in zip(f._a, bb)]
    b = [x * cb + y * ca - z for x, y, z in zip(f._a, f._b, bb)]
    return BinaryForm._raw(a, b, f._den * den)


def substitute(f: BinaryForm, u: BinaryForm, v: BinaryForm) -> BinaryForm:
    """f(u(x, y), v(x, y)); u and v must share one degree."""
    if f.is_zero():
        return ZERO
    du, dv = u.degree, v.degree
    if du is not None and dv is not None and du != dv:
        raise DegreeMismatch(f"substituting forms of degrees {du} and {dv}")
    d = f.degree
    if d == 0:
        return f
    upow = [ONE]
    vpow = [ONE]
    for _ in range(d):
        upow.append(mul(upow[-1], u))
        vpow.append(mul(vpow[-1], v))
    total = ZERO
    for i, c in enumerate(f.coeffs):
        if c:
            total = add(total, scale(c, mul(upow[d - i], vpow[i])))
    return total


def _fraction_div(fa, fb, ga, gb):
    """Quotient of integer vectors (fa + fb w) / (ga + gb w), low index first.

    Requires ga[0] + gb[0] w != 0.  Returns (qa, qb) as Fractions without
    checking the remainder.
    """
    # multiply through by conj(g0) so the pivot becomes the rational n0
    c0a, c0b = ga[0] - gb[0], -gb[0]

    def times_c0(xa, xb):
        bb = [x * c0b for x in xb]
        return ([x * c0a - y for x, y in zip(xa, bb)],
                [x * c0b + y * c0a - z for x, y, z in zip(xa, xb, bb)])

    fa, fb = times_c0(fa, fb)
    ga, gb = times_c0(ga, gb)
    n0 = ga[0]
    nq = len(fa) - len(ga) + 1
    qa, qb = [], []
    dg = len(ga) - 1
    for k in range(nq):
        sa, sb = Fraction(fa[k]), Fraction(fb[k])
        for j in range(1, min(k, dg) + 1):
            xa, xb = qa[k - j], qb[k - j]
            if xa or xb:
                gja, gjb = ga[j], gb[j]
                bb = gjb * xb
                sa -= gja * xa - bb
                sb -= gja * xb + gjb * xa - bb
        qa.append(sa / n0)
        qb.append(sb / n0)
    return qa, qb


def exact_div(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    if g.is_zero():
        raise ZeroDivisionError("division by the zero form")
    if f.is_zero():
        return ZERO
    if f.degree < g.degree:
        raise NotDivisible("divisor has larger degree")
    ky = g.y_power()
    if f.y_power() < ky:
        raise NotDivisible("y-power of divisor too large")
    fa, fb = f._a[ky:], f._b[ky:]
    ga, gb = g._a[ky:], g._b[ky:]
    qa, qb = _fraction_div(fa, fb, ga, gb)
    q = BinaryForm([QOmega(a, b) for a, b in zip(qa, qb)])
    # scale back: f/g = (f_num/f_den) / (g_num/g_den)
    q = scale(QOmega(Fraction(g._den, f._den)), q)
    if mul(q, g) != f:
        raise NotDivisible("nonzero remainder")
    return q


# -- gcd ---------------------------------------------------------------------


def _core(f: BinaryForm):
    """Strip monomial factors; return (y_power, x_power, A, B)."""
    ky, kx = f.y_power(), f.x_power()
    end = len(f._a) - kx
    return ky, kx, list(f._a[ky:end]), list(f._b[ky:end])


def _from_core(ky, kx, a, b) -> BinaryForm:
    return BinaryForm._raw([0] * ky + list(a) + [0] * kx, [0] * ky + list(b) + [0] * kx, 1)


def _check_candidate(ha, hb, fa, fb):
    """Does the integer vector h divide f over Q(w)?"""
    f = BinaryForm._raw(fa, fb, 1)
    h = BinaryForm._raw(ha, hb, 1)
    try:
        exact_div(f, h)
    except NotDivisible:
        return False
    return True


def gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Greatest common divisor, scaled so its first nonzero coefficient is 1.

    Monomial factors x^i y^j are split off first; the remaining univariate
    gcd is found modulo primes p = 1 (mod 3), under both embeddings of w,
    and lifted by rational reconstruction.  A lift is accepted only after it
    divides both inputs exactly.
    """
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero():
        return normalize_scale(g)[0]
    if g.is_zero():
        return normalize_scale(f)[0]
    fy, fx, fa, fb = _core(f)
    gy, gx, ga, gb = _core(g)
    ky, kx = min(fy, gy), min(fx, gx)
    if len(fa) == 1 or len(ga) == 1:
        return _from_core(ky, kx, [1], [0])
    ha, hb = _modgcd.gcd_qomega(fa, fb, ga, gb, _check_candidate)
    if ha is None:  # pragma: no cover - prime supply exhausted
        return gcd_euclid(f, g)
    return normalize_scale(_from_core(ky, kx, ha, hb))[0]


def _poly_rem_q(r, s):
    """Remainder of QOmega lists (low index first), s with nonzero top."""
    r = list(r)
    inv = s[-1].inverse()
    ds = len(s) - 1
    while len(r) - 1 >= ds and any(r):
        c = r[-1] * inv
        shift = len(r) - 1 - ds
        for j in range(ds + 1):
            r[shift + j] = r[shift + j] - c * s[j]
        r.pop()
        while r and not r[-1]:
            r.pop()
    return r


def gcd_euclid(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Reference gcd: Euclid's algorithm in Q(w)[x] after dehomogenizing at y = 1.

    Slow on large degrees because of coefficient growth; kept as the
    independent route for checking :func:`gcd`.
    """
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero() or g.is_zero():
        return normalize_scale(f if g.is_zero() else g)[0]
    ky = min(f.y_power(), g.y_power())
    kx = min(f.x_power(), g.x_power())
    # cores have no monomial factor; reversed coefficients = f(x, 1), low power first
    r = list(reversed(f.coeffs[f.y_power(): len(f) - f.x_power()]))
    s = list(reversed(g.coeffs[g.y_power(): len(g) - g.x_power()]))
    while s:
        r, s = s, _poly_rem_q(r, s)
    core = list(reversed(r))
    h = BinaryForm([QZERO] * ky + core + [QZERO] * kx)
    return normalize_scale(h)[0]


def normalize_scale(f: BinaryForm):
    """(f / c, c) with c the first nonzero coefficient of f."""
    if f.is_zero():
        raise ValueError("cannot normalize the zero form")
    c = f[f.y_power()]
    return scale(c.inverse(), f), c


def shape_mod3(f: BinaryForm) -> dict:
    """Residues mod 3 of the x- and y-exponents in f, or 'mixed'."""
    d = f.degree
    if d is None:
        return {"x": None, "y": None}
    xs = {(d - i) % 3 for i, (a, b) in enumerate(zip(f._a, f._b)) if a or b}
    ys = {i % 3 for i, (a, b) in enumerate(zip(f._a, f._b)) if a or b}
    return {
        "x": xs.pop() if len(xs) == 1 else "mixed",
        "y": ys.pop() if len(ys) == 1 else "mixed",
    }


# -- text form ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([wxy])|(\*\*|[-+*^()]))")


def _tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", Fraction(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    """Recursive descent over +, -, *, ^ and parentheses.

    Values are sparse polynomials {(i, j): QOmega}.
    """

    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0
        self.text = text

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        val = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input in {self.text!r}")
        return val

    def expr(self):
        sign = 1
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        val = self.term()
        if sign < 0:
            val = {k: -v for k, v in val.items()}
        while self.peek() in (("op", "+"), ("op", "-")):
            neg = self.take()[1] == "-"
            rhs = self.term()
            for k, v in rhs.items():
                val[k] = val.get(k, QZERO) + (-v if neg else v)
        return {k: v for k, v in val.items() if v}

    def term(self):
        val = self.power()
        while self.peek() == ("op", "*"):
            self.take()
            val = _sparse_mul(val, self.power())
        return val

    def power(self):
        val = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, k = self.take()
            if kind != "num" or k.denominator != 1:
                raise ValueError(f"bad exponent in {self.text!r}")
            out = {(0, 0): QOmega(1)}
            for _ in range(int(k)):
                out = _sparse_mul(out, val)
            val = out
        return val

    def atom(self):
        kind, v = self.take()
        if kind == "num":
            return {(0, 0): QOmega(v)}
        if kind == "name":
            if v == "w":
                return {(0, 0): QOmega(0, 1)}
            return {(1, 0) if v == "x" else (0, 1): QOmega(1)}
        if (kind, v) == ("op", "("):
            val = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError(f"unbalanced parenthesis in {self.text!r}")
            return val
        raise ValueError(f"unexpected token {v!r} in {self.text!r}")


def _sparse_mul(f, g):
    out = {}
    for (i1, j1), c1 in f.items():
        for (i2, j2), c2 in g.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, QZERO) + c1 * c2
    return {k: v for k, v in out.items() if v}


def parse_form(text: str) -> BinaryForm:
    """Parse text such as ``x^3 + (1+2*w)*x*y^2 - 1/2*y^3``."""
    terms = _Parser(text).parse()
    return BinaryForm.from_terms(terms)


def _coef_text(c: QOmega):
    """(negative?, text) for a coefficient, text empty for 1."""
    if c.b == 0 or c.a == 0:
        neg = (c.a < 0) if c.b == 0 else (c.b < 0)
        body = format_qomega(-c if neg else c)
        return neg, body
    return False, f"({format_qomega(c)})"


def format_form(f: BinaryForm) -> str:
    """Canonical text, terms by descending x-power; parse_form inverts it."""
    if f.is_zero():
        return "0"
    d = f.degree
    parts = []
    for j, c in enumerate(f.coeffs):
        if not c:
            continue
        i = d - j
        mono = [v if e == 1 else f"{v}^{e}" for v, e in (("x", i), ("y", j)) if e]
        neg, body = _coef_text(c)
        if mono and body == "1":
            text = "*".join(mono)
        else:
            text = "*".join([body] + mono)
        if not parts:
            parts.append(("-" if neg else "") + text)
        else:
            parts.append(("- " if neg else "+ ") + text)
    return " ".join(parts)


# -- fraction field ----------------------------------------------------------


class RationalFunction:
    """Quotient num/den of forms, kept coprime with den's first coefficient 1.

    Homogeneous of weight deg(num) - deg(den); sums require equal weights.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        if not isinstance(num, BinaryForm):
            num = BinaryForm.constant(num)
        if not isinstance(den, BinaryForm):
            den = BinaryForm.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        h = gcd(num, den)
        if not h.is_constant():
            num, den = exact_div(num, h), exact_div(den, h)
        den, c = normalize_scale(den)
        self.num = scale(c.inverse(), num)
        self.den = den

    @property
    def weight(self):
        return None if self.num.is_zero() else self.num.degree - self.den.degree

    def _coerce(self, other):
        return other if isinstance(other, RationalFunction) else RationalFunction(other)

    def __add__(self, other):
        other = self._coerce(other)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunction(self.den**-k, self.num**-k)
        return RationalFunction(self.num**k, self.den**k)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            try:
                other = RationalFunction(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == ONE:
            return f"RationalFunction({format_form(self.num)!r})"
        return f"RationalFunction(({format_form(self.num)}) / ({format_form(self.den)}))"
