"""Canonical coordinates m*h1 + n*h2 + t*h0 and what they control.

``generate`` builds the solution with given coordinates from the group law,
``recognize`` inverts it, and composition of solutions corresponds to the
product formula of :func:`compose_coords` (on t = 0, multiplication in Z[w]).
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import NamedTuple

from .curve import (
    H1,
    H2,
    Finite,
    Infinity,
    NotApplicable,
    Solution,
    add,
    smul,
    solution_to_json,
    strip_common_factor,
    translate,
)
from .eisenstein import EisensteinInt, divides, norm
from .forms import BinaryForm, substitute

__all__ = [
    "CanonCoord",
    "generate",
    "generate_via_composition",
    "compose",
    "compose_coords",
    "rmap",
    "rmap_inv",
    "omega_action",
    "conjugate_coords",
    "recognize",
    "extract_structure",
    "Structure",
    "classify_reality",
    "norm_shell",
    "build_catalog",
    "UndefinedComposition",
    "OutsideV1",
    "NotInV",
    "ShapeViolation",
]


class UndefinedComposition(ValueError):
    """Substitution into a point at infinity."""


class OutsideV1(ValueError):
    """The R-map is only defined for t = 0."""


class NotInV(ValueError):
    """No canonical coordinates reproduce the solution."""


class ShapeViolation(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CanonCoord:
    m: int
    n: int
    t: int = 0

    def __post_init__(self):
        if self.t not in (0, 1, 2):
            raise ValueError(f"t must be 0, 1 or 2, not {self.t}")

    @property
    def degree(self) -> int:
        return self.m * self.m - self.m * self.n + self.n * self.n

    def as_tuple(self):
        return self.m, self.n, self.t


def _coord(c) -> CanonCoord:
    return c if isinstance(c, CanonCoord) else CanonCoord(*c)


@lru_cache(maxsize=None)
def _h1_multiple(k: int) -> Solution:
    return smul(k, H1)


@lru_cache(maxsize=None)
def _h2_multiple(k: int) -> Solution:
    return smul(k, H2)


def generate(c) -> Solution:
    """The solution m*h1 + n*h2 + t*h0, by double-and-add in the group."""
    c = _coord(c)
    return translate(add(_h1_multiple(c.m), _h2_multiple(c.n)), c.t)


def compose(v: Solution, w: Solution) -> Solution:
    """v o w: substitute w's components into v.

    (p : q : r) o (p' : q' : r') = (p(p', q') : q(p', q') : r' r(p', q')).
    No common factor can appear; one would raise ArithmeticError.
    """
    if isinstance(v, Infinity):
        return v
    if isinstance(w, Infinity):
        raise UndefinedComposition("cannot substitute a point at infinity")
    p, q, r = v.components
    p1, q1, r1 = w.components
    pc = substitute(p, p1, q1)
    qc = substitute(q, p1, q1)
    rc = r1 * substitute(r, p1, q1)
    pc, qc, rc, g = strip_common_factor(pc, qc, rc)
    if not g.is_constant():
        raise ArithmeticError(f"composition cancelled a factor of degree {g.degree}")
    return Finite(pc, qc, rc)


def compose_coords(c, c2) -> CanonCoord:
    c, c2 = _coord(c), _coord(c2)
    m, n, t = c.as_tuple()
    m2, n2, t2 = c2.as_tuple()
    return CanonCoord(m * m2 - n * n2, m * n2 + m2 * n - n * n2, ((m + n) * t2 + t) % 3)


def rmap(c) -> EisensteinInt:
    c = _coord(c)
    if c.t != 0:
        raise OutsideV1(f"R is defined on t = 0 only, got t = {c.t}")
    return EisensteinInt(c.m, c.n)


def rmap_inv(z: EisensteinInt) -> CanonCoord:
    return CanonCoord(z.m, z.n, 0)


def omega_action(c) -> CanonCoord:
    """Coordinates of (w f, w g)."""
    m, n, t = _coord(c).as_tuple()
    return CanonCoord(-n, m - n, t)


def conjugate_coords(c) -> CanonCoord:
    """Coordinates of the complex conjugate solution."""
    m, n, t = _coord(c).as_tuple()
    return CanonCoord(m - n, -n, 2 * t % 3)


def norm_shell(d: int):
    """All (m, n) with m^2 - mn + n^2 = d, sorted."""
    if d == 0:
        return [(0, 0)]
    out = []
    bound = isqrt(4 * d // 3) + 1
    for n in range(-bound, bound + 1):
        disc = 4 * d - 3 * n * n
        if disc < 0:
            continue
        s = isqrt(disc)
        if s * s != disc:
            continue
        for root in {n + s, n - s}:
            if root % 2 == 0:
                out.append((root // 2, n))
    return sorted(out)


def recognize(s: Solution) -> CanonCoord:
    """The unique (m, n, t) with generate(m, n, t) == s."""
    if isinstance(s, Infinity):
        return CanonCoord(0, 0, s.j)
    for m, n in norm_shell(s.degree):
        g = generate((m, n, 0))
        for t in range(3):
            if translate(g, t) == s:
                return CanonCoord(m, n, t)
    raise NotInV(f"no canonical coordinates of degree {s.degree} match")


def _eisenstein_factor(z: EisensteinInt):
    """A factorization z = u * w with 1 < N(u) < N(z), or None if z is prime or a unit."""
    nz = norm(z)
    for d in range(2, nz):
        if nz % d:
            continue
        for a, b in norm_shell(d):
            u = EisensteinInt(a, b)
            if divides(u, z):
                return u, z.exact_div(u)
    return None


def generate_via_composition(c) -> Solution:
    """Same result as :func:`generate`, built by composing smaller pieces.

    m + n w is split in Z[w] and the factors' solutions composed, using
    R(v o w) = R(v) R(w); an Eisenstein prime falls back to the group law.
    """
    c = _coord(c)
    z = EisensteinInt(c.m, c.n)
    split = _eisenstein_factor(z) if norm(z) > 1 else None
    if split is None:
        base = add(_h1_multiple(c.m), _h2_multiple(c.n))
    else:
        u, w = split
        base = compose(generate_via_composition((u.m, u.n, 0)), generate_via_composition((w.m, w.n, 0)))
    return translate(base, c.t)


class Structure(NamedTuple):
    P: BinaryForm
    Q: BinaryForm
    R: BinaryForm
    shape: str
    swapped: bool = False


def _regroup(f: BinaryForm, ex: int, ey: int):
    """F with f = x^ex y^ey F(x^3, y^3), or None if f has another shape."""
    d = f.degree
    if d is None or (d - ex - ey) % 3 or d < ex + ey:
        return None
    coeffs = f.coeffs
    out = []
    for j, c in enumerate(coeffs):
        i = d - j
        if (i - ex) % 3 == 0 and (j - ey) % 3 == 0:
            out.append(c)
        elif c:
            return None
    return BinaryForm(out)


def extract_structure(s: Solution) -> Structure:
    """P, Q, R with p, q, r regrouped in x^3, y^3.

    Degree 0 mod 3: p = P(x^3, y^3), q = Q(x^3, y^3), r = xy R(x^3, y^3).
    Degree 1 mod 3: p = x P(x^3, y^3), q = y Q(x^3, y^3), r = R(x^3, y^3),
    after swapping p and q if needed.
    """
    if isinstance(s, Infinity):
        raise NotApplicable("structure is defined for finite solutions only")
    p, q, r = s.components
    d = s.degree
    if d % 3 == 0:
        parts = (_regroup(p, 0, 0), _regroup(q, 0, 0), _regroup(r, 1, 1))
        if None in parts:
            raise ShapeViolation(f"degree {d} solution is not in x^3, y^3")
        return Structure(*parts, "div3")
    if d % 3 == 1:
        for swapped, (a, b) in ((False, (p, q)), (True, (q, p))):
            parts = (_regroup(a, 1, 0), _regroup(b, 0, 1), _regroup(r, 0, 0))
            if None not in parts:
                return Structure(*parts, "res1", swapped)
        raise ShapeViolation(f"degree {d} solution has no x P, y Q, R shape")
    raise ShapeViolation(f"degree {d} = 2 (mod 3) cannot occur")


def classify_reality(c) -> str:
    """'real', 'conj-pair', 'self-conjugate-class' or 'generic'.

    real: the solution equals its conjugate (n = t = 0).
    conj-pair: g is the conjugate of f, i.e. conj(v) = -v (n = 2m != 0).
    self-conjugate-class: v and conj(v) are affiliates,
        mn(m - n) = 0 or (m + n)(m - 2n)(2m - n) = 0.
    """
    m, n, t = _coord(c).as_tuple()
    if n == 0 and t == 0:
        return "real"
    if n == 2 * m and m != 0:
        return "conj-pair"
    if m * n * (m - n) == 0 or (m + n) * (m - 2 * n) * (2 * m - n) == 0:
        return "self-conjugate-class"
    return "generic"


def catalog_record(c) -> dict:
    c = _coord(c)
    s = generate(c)
    return {"m": c.m, "n": c.n, "t": c.t, "degree": s.degree, "solution": solution_to_json(s)}


def _cell(mn):
    m, n = mn
    return [catalog_record((m, n, t)) for t in range(3)]


def build_catalog(dmax: int, jobs: int = 1) -> list:
    """Records for every finite solution of degree <= dmax, sorted by (degree, m, n, t)."""
    cells = [(m, n) for d in range(1, dmax + 1) for m, n in norm_shell(d)]
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            groups = list(pool.map(_cell, cells))
    else:
        groups = [_cell(mn) for mn in cells]
    records = [rec for group in groups for rec in group]
    records.sort(key=lambda r: (r["degree"], r["m"], r["n"], r["t"]))
    return records
