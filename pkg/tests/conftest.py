from fractions import Fraction

import sympy
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from twocubes.eisenstein import QOmega
from twocubes.forms import BinaryForm

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SX, SY = sympy.symbols("x y")
SW = (-1 + sympy.sqrt(3) * sympy.I) / 2


def to_sympy_scalar(c: QOmega):
    return sympy.Rational(c.a.numerator, c.a.denominator) + sympy.Rational(c.b.numerator, c.b.denominator) * SW


def to_sympy(f: BinaryForm):
    if f.is_zero():
        return sympy.Integer(0)
    d = f.degree
    return sum(to_sympy_scalar(c) * SX ** (d - i) * SY**i for i, c in enumerate(f.coeffs))


def sympy_equal(a, b) -> bool:
    return sympy.simplify(sympy.expand(a - b)) == 0


small_fractions = st.fractions(min_value=-6, max_value=6, max_denominator=4)
qomegas = st.builds(QOmega, small_fractions, small_fractions)
nonzero_qomegas = qomegas.filter(bool)
small_ints = st.integers(-6, 6)
int_qomegas = st.builds(QOmega, small_ints, small_ints)


@st.composite
def forms(draw, degree=None, max_degree=4, coeff=int_qomegas):
    d = draw(st.integers(0, max_degree)) if degree is None else degree
    coeffs = draw(st.lists(coeff, min_size=d + 1, max_size=d + 1))
    f = BinaryForm(coeffs)
    if f.is_zero():
        f = BinaryForm.monomial(d, 0)
    return f


def frac(s) -> Fraction:
    return Fraction(s)


# acceptance criteria report: number -> (title, passed)
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {n:2d}. {title}")
