"""Reproduction of the classical examples, run by ``twocubes selftest``."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterator, Tuple

from . import catalog as cat
from . import count, curve, orbits
from .curve import H1, H2, IDENTITY, Finite, Infinity
from .eisenstein import OMEGA2, EisensteinInt, divides, norm
from .forms import ONE, X, Y, RationalFunction, gcd, scale, shape_mod3, substitute
from .table import TABLE, TABLE_COORDS, V3, V4, V9, V12, lucas_sides, lucas_triple

Check = Tuple[str, Callable[[], bool]]


def _lucas() -> bool:
    a, b, c = lucas_sides()
    return a**3 + b**3 == 27 * X * Y * (X + Y) * c**3


def _v4_instance() -> bool:
    x, y = RationalFunction(X), RationalFunction(Y)
    a = (2 * x**2 + 5 * x * y + 2 * y**2) / (2 * (x**2 + x * y + y**2))
    b = -3 * x * y * (x + y) / (2 * (x**3 - y**3))
    lam = -((x - y) ** 3) / (9 * x * y)
    got = orbits.euler_binet(a, b, lam)
    return got == (x, y, RationalFunction(V4.p, V4.r), RationalFunction(V4.q, V4.r))


def _raises(exc, fn) -> bool:
    try:
        fn()
    except exc:
        return True
    return False


def _struct(s, P, Q, R, shape) -> bool:
    """Structure of s equals (P, Q, R) up to one common scalar."""
    st = cat.extract_structure(s)
    c = st.P[0] / P[0]
    return st.shape == shape and (st.P, st.Q, st.R) == tuple(scale(c, f) for f in (P, Q, R))


def checks() -> Iterator[Check]:
    u, v = X, Y
    yield "norm(-2,-3) = 7", lambda: norm(EisensteinInt(-2, -3)) == 7
    yield "norm(1,2) = 3", lambda: norm(EisensteinInt(1, 2)) == 3
    yield "1+2w divides -3", lambda: divides(EisensteinInt(1, 2), EisensteinInt(-3, 0))
    yield "p4, q4 satisfy the identity by substitution", lambda: (
        substitute(X**3 + Y**3, V4.p, V4.q) == (X**3 + Y**3) * V4.r**3
    )
    yield "gcd(p4, r4) = 1", lambda: gcd(V4.p, V4.r) == ONE
    yield "shape of p9", lambda: shape_mod3(TABLE[9].p) == {"x": 0, "y": 0}
    yield "shape of p4", lambda: shape_mod3(V4.p) == {"x": 1, "y": 0}
    for d, s in TABLE.items():
        yield f"table entry of degree {d} verifies", lambda s=s: curve.verify(s)
        yield f"generate{TABLE_COORDS[d]} is an affiliate of the degree {d} entry", lambda d=d, s=s: (
            curve.same_affiliate_class(cat.generate(TABLE_COORDS[d] + (0,)), s)
        )
    yield "(x : y : 2) fails", lambda: not curve.verify(Finite(X, Y, 2 * ONE))
    yield "neg(x : y : 1) = (y : x : 1)", lambda: curve.neg(H1) == Finite(Y, X, ONE)
    yield "h1 + h1 is the doubling line", lambda: curve.add(H1, H1) == Finite(
        -(Y * (2 * X**3 + Y**3)), X * (X**3 + 2 * Y**3), X**3 - Y**3
    )
    yield "(x : y : 1) + (y : x : 1) = 0", lambda: curve.add(H1, curve.neg(H1)) == IDENTITY
    yield "h1 + 2h2 is v3", lambda: curve.same_affiliate_class(curve.add(H1, curve.smul(2, H2)), V3)
    yield "3 h0 = 0", lambda: curve.smul(3, Infinity(1)) == IDENTITY
    yield "-2 h1 = v4", lambda: curve.smul(-2, H1) == V4
    yield "-3 h1 = v9", lambda: curve.smul(-3, H1) == V9
    yield "h2 is an affiliate of h1", lambda: H2 in curve.affiliates(H1)
    yield "affiliate classes have 18 members", lambda: all(
        len(set(curve.affiliates(s).members)) == 18 for s in TABLE.values()
    )
    yield "v3 o v3 = v9", lambda: curve.same_affiliate_class(cat.compose(V3, V3), V9)
    yield "v3 o v4 = v12", lambda: curve.same_affiliate_class(cat.compose(V3, V4), V12)
    yield "v4 o v3 = v12", lambda: curve.same_affiliate_class(cat.compose(V4, V3), V12)
    yield "h1 is a two-sided identity for o", lambda: cat.compose(H1, V4) == V4 == cat.compose(V4, H1)
    yield "h2 o h2 = -h1 - h2", lambda: cat.compose(H2, H2) == Finite(scale(OMEGA2, X), scale(OMEGA2, Y), ONE)
    yield "(1,2,0) o (1,2,0) = (-3,0,0)", lambda: cat.compose_coords((1, 2, 0), (1, 2, 0)) == cat.CanonCoord(-3, 0)
    yield "(1,2,0) o (-2,0,0) = (-2,-4,0)", lambda: cat.compose_coords((1, 2, 0), (-2, 0, 0)) == cat.CanonCoord(-2, -4)
    yield "R(v3) = 1+2w", lambda: cat.rmap((1, 2, 0)) == EisensteinInt(1, 2)
    yield "R(v4) = -2", lambda: cat.rmap((-2, 0, 0)) == EisensteinInt(-2, 0)
    yield "w h1 = h2", lambda: cat.omega_action((1, 0, 0)) == cat.CanonCoord(0, 1)
    yield "conj(m h1) = m h1", lambda: all(cat.conjugate_coords((m, 0, 0)) == cat.CanonCoord(m, 0) for m in range(-5, 6))
    yield "conj(v3) = -v3", lambda: cat.conjugate_coords((1, 2, 0)) == cat.CanonCoord(-1, -2)
    yield "recognize(v9) = (-3,0,0)", lambda: cat.recognize(V9) == cat.CanonCoord(-3, 0)
    yield "structure of v9", lambda: _struct(
        V9,
        -(u**3) + 3 * u**2 * v + 6 * u * v**2 + v**3,
        u**3 + 6 * u**2 * v + 3 * u * v**2 - v**3,
        3 * (u**2 + u * v + v**2),
        "div3",
    )
    yield "structure of v4", lambda: _struct(V4, u + 2 * v, -(v + 2 * u), u - v, "res1")
    yield "5 h1 is real", lambda: cat.classify_reality((5, 0, 0)) == "real"
    yield "2 v3 is a conjugate pair", lambda: cat.classify_reality((2, 4, 0)) == "conj-pair"
    yield "f(1) = 1", lambda: count.count_formula(1) == 1
    yield "f(7) = 2", lambda: count.count_formula(7) == 2
    yield "f(1729) = 8", lambda: count.count_formula(1729) == 8
    yield "f(2) = 0", lambda: count.count_formula(2) == 0
    yield "f(3) = 1 by lattice", lambda: count.count_lattice(3) == 1
    yield "f(16) = 1", lambda: count.count_formula(16) == 1
    ctx = orbits.OrbitContext(189)
    yield "189 = 6^3 + (-3)^3 = 4^3 + 5^3", lambda: orbits.viete_step(ctx, orbits.Affine(6, -3)) == orbits.Affine(4, 5)
    yield "189 = (-1256/61)^3 + (1265/61)^3", lambda: orbits.viete_step(ctx, orbits.Affine(4, 5)) == orbits.Affine(
        Fraction(-1256, 61), Fraction(1265, 61)
    )
    yield "(2,1) + (1,2) = 0 on A = 9", lambda: orbits.add_points(
        orbits.OrbitContext(9), orbits.Affine(2, 1), orbits.Affine(1, 2)
    ) == orbits.InfinityQ()
    yield "h1 at (2,1) is (2,1)", lambda: orbits.specialize(H1, 2, 1) == orbits.Affine(2, 1)
    yield "v9 at (6,-3) is (219/38, -51/38)", lambda: orbits.specialize(V9, 6, -3) == orbits.Affine(
        Fraction(219, 38), Fraction(-51, 38)
    )
    yield "v4 has a pole at (1,1)", lambda: _raises(orbits.SpecializationPole, lambda: orbits.specialize(V4, 1, 1))
    yield "Lucas identity", _lucas
    yield "Lucas triple is v9", lambda: lucas_triple() == V9 and cat.recognize(lucas_triple()) == cat.CanonCoord(-3, 0)
    yield "Euler-Binet gives (x, y, f4, g4)", _v4_instance


def run(report=print) -> Tuple[bool, str]:
    """Run every check; returns (ok, name of first failure or '')."""
    first = ""
    for name, fn in checks():
        try:
            ok = bool(fn())
        except Exception as exc:  # a crash counts as a failure
            ok = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        report(f"{'ok  ' if ok else 'FAIL'} {name}")
        if not ok and not first:
            first = name
    return not first, first
