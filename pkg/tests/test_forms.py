import json

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import SX, SY, forms, nonzero_qomegas, sympy_equal, to_sympy
from twocubes.eisenstein import OMEGA, QOmega
from twocubes.forms import (
    ONE,
    ZERO,
    BinaryForm,
    DegreeMismatch,
    NotDivisible,
    RationalFunction,
    X,
    Y,
    add,
    exact_div,
    format_form,
    gcd,
    gcd_euclid,
    mul,
    normalize_scale,
    parse_form,
    scale,
    shape_mod3,
    substitute,
)
from twocubes.table import V4, V9, V12

x, y = X, Y


def associates(f, g) -> bool:
    return normalize_scale(f)[0] == normalize_scale(g)[0]


def test_basic_products():
    assert mul(x + y, x - y) == x**2 - y**2
    assert mul(x + y, ZERO) == ZERO
    assert ZERO.degree is None


def test_add_requires_equal_degrees():
    with pytest.raises(DegreeMismatch):
        add(x, x * y)
    assert add(ZERO, x * y) == x * y


def test_degree_twelve_arithmetic():
    # the pieces of p12 multiply out to a form satisfying the identity
    assert V12.degree == 12
    p, q, r = V12.components
    assert p**3 + q**3 == (x**3 + y**3) * r**3


@given(forms(), forms())
def test_product_matches_sympy(f, g):
    assert sympy_equal(to_sympy(f * g), to_sympy(f) * to_sympy(g))


@given(st.integers(0, 3).flatmap(lambda d: st.tuples(forms(degree=d), forms(degree=d))))
def test_sum_matches_sympy(fg):
    f, g = fg
    assert sympy_equal(to_sympy(f + g), to_sympy(f) + to_sympy(g))


def test_substitute_examples():
    u = x**2 + scale(OMEGA, y**2)
    assert substitute(x, u, x * y) == u
    assert substitute(x**3 + y**3, V4.p, V4.q) == (x**3 + y**3) * V4.r**3
    assert substitute(x**2 + x * y + y**2, x**3, y**3) == x**6 + x**3 * y**3 + y**6
    with pytest.raises(DegreeMismatch):
        substitute(x, x, x * y)


@given(st.integers(1, 2).flatmap(lambda d: st.tuples(forms(degree=d), forms(degree=d), forms(degree=2), forms(degree=2))))
def test_substitute_is_a_ring_homomorphism(data):
    f, g, u, v = data
    assert substitute(f + g, u, v) == substitute(f, u, v) + substitute(g, u, v)
    assert substitute(f * g, u, v) == substitute(f, u, v) * substitute(g, u, v)


def test_gcd_examples():
    assert gcd(x**2 * y, x * y**2) == x * y
    assert gcd(V4.p, V4.r) == ONE
    a = x + scale(OMEGA, y)
    assert gcd(a**2, a * (x - y)) == a
    assert exact_div(a**2, gcd(a**2, a * (x - y))) == a
    assert gcd(x**3 - y**3, ZERO) == x**3 - y**3
    with pytest.raises(ValueError):
        gcd(ZERO, ZERO)


@given(forms(max_degree=3), forms(max_degree=3), forms(max_degree=3))
def test_gcd_of_common_multiples(f, g, h):
    got = gcd(f * g, f * h)
    assert associates(got, f * gcd(g, h))
    assert got == gcd_euclid(f * g, f * h)


@given(forms(max_degree=5, coeff=st.builds(QOmega, st.integers(-5, 5))), forms(max_degree=5, coeff=st.builds(QOmega, st.integers(-5, 5))))
def test_gcd_of_rational_forms_matches_sympy(f, g):
    want = sympy.gcd(sympy.Poly(to_sympy(f), SX, SY), sympy.Poly(to_sympy(g), SX, SY))
    got = sympy.Poly(to_sympy(gcd(f, g)), SX, SY)
    assert got.total_degree() == want.total_degree()
    assert sympy.div(got, want)[1].is_zero


def test_gcd_handles_large_solution_components():
    from twocubes.catalog import generate

    s = generate((4, -3, 0))
    p, q, r = s.components
    assert gcd(p, q) == ONE
    assert gcd(p * (x + y), r * (x + y)) == x + y


def test_normalize_scale():
    assert normalize_scale(3 * x**2) == (x**2, QOmega(3))
    c = QOmega(1, 2)
    assert normalize_scale(scale(c, x * y)) == (x * y, c)
    with pytest.raises(ValueError):
        normalize_scale(ZERO)


@given(forms(), nonzero_qomegas)
def test_normalize_scale_ignores_scalars(f, c):
    assert normalize_scale(scale(c, f))[0] == normalize_scale(f)[0]


def test_shape_mod3():
    assert shape_mod3(V9.p) == {"x": 0, "y": 0}
    assert shape_mod3(x * (x**3 + 2 * y**3)) == {"x": 1, "y": 0}
    assert shape_mod3(x**2 + x * y) == {"x": "mixed", "y": "mixed"}


def test_exact_division():
    assert exact_div(x**2 - y**2, x - y) == x + y
    with pytest.raises(NotDivisible):
        exact_div(x**2 + y**2, x - y)


@given(forms(), forms())
def test_exact_division_recovers_factor(f, g):
    assert exact_div(f * g, g) == f


def test_text_format_example():
    f = x**3 + scale(QOmega(1, 2), x * y**2) - scale(QOmega(1) / 2, y**3)
    assert format_form(f) == "x^3 + (1+2*w)*x*y^2 - 1/2*y^3"
    assert parse_form("x^3 + (1+2*w)*x*y^2 - 1/2*y^3") == f


@given(forms(max_degree=6, coeff=st.builds(QOmega, st.fractions(-9, 9, max_denominator=7), st.fractions(-9, 9, max_denominator=7))))
def test_text_and_json_round_trips(f):
    assert parse_form(format_form(f)) == f
    blob = json.dumps(f.to_json())
    assert BinaryForm.from_json(json.loads(blob)) == f
    assert json.dumps(BinaryForm.from_json(json.loads(blob)).to_json()) == blob


def test_rational_functions_reduce():
    r = RationalFunction(x**2 - y**2, x - y)
    assert r == RationalFunction(x + y)
    assert (r / RationalFunction(x + y)) == RationalFunction(ONE)
    assert RationalFunction(x, y).weight == 0
