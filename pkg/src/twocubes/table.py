"""Classical solutions of low degree, entered by hand over Q(w).

These are independent of the group law: each triple is typed in from its
closed form, so comparing them with :func:`catalog.generate` is a genuine
check.  The degree-3 entry has its sqrt(3) removed using
zeta/sqrt(3) = (2 + w)/3 and zeta^-1/sqrt(3) = (2 + w^2)/3, zeta = exp(i pi/6).
"""

from __future__ import annotations

from fractions import Fraction

from .curve import Finite
from .eisenstein import OMEGA, OMEGA2, QOmega
from .forms import ONE, X, Y, scale

x, y = X, Y
x3, y3 = x**3, y**3

_Z_OVER_R3 = QOmega(Fraction(2, 3), Fraction(1, 3))  # (2 + w) / 3
_ZINV_OVER_R3 = (2 + OMEGA2) * QOmega(Fraction(1, 3))  # (2 + w^2) / 3

V1 = Finite(x, y, ONE)

V3 = Finite(
    scale(_ZINV_OVER_R3, x3) + scale(_Z_OVER_R3, y3),
    scale(_Z_OVER_R3, x3) + scale(_ZINV_OVER_R3, y3),
    x * y,
)

V4 = Finite(x * (x3 + 2 * y3), -(y * (y3 + 2 * x3)), x3 - y3)

_c7 = 1 + 3 * OMEGA
V7 = Finite(
    x * (x**6 + scale(_c7, x3 * y3 + y**6)),
    y * (scale(_c7, x**6 + x3 * y3) + y**6),
    x**6 + scale(1 - 3 * OMEGA, x3 * y3) + y**6,
)

V9 = Finite(
    -(x**9) + 3 * x**6 * y3 + 6 * x3 * y**6 + y**9,
    x**9 + 6 * x**6 * y3 + 3 * x3 * y**6 - y**9,
    3 * x * y * (x**6 + x3 * y3 + y**6),
)

_common12 = -3 * (x3 - y3) ** 3 * (x3 + y3)
_tail12 = x3 * (x3 + 2 * y3) ** 3 + y3 * (y3 + 2 * x3) ** 3
V12 = Finite(
    _common12 - scale(1 + 2 * OMEGA, _tail12),
    _common12 - scale(1 + 2 * OMEGA2, _tail12),
    6 * x * y * (x3 - y3) * (2 * x3 + y3) * (x3 + 2 * y3),
)

TABLE = {1: V1, 3: V3, 4: V4, 7: V7, 9: V9, 12: V12}

# canonical coordinates (m, n) with v = m h1 + n h2, up to affiliation
TABLE_COORDS = {1: (1, 0), 3: (1, 2), 4: (-2, 0), 7: (-2, -3), 9: (-3, 0), 12: (-2, -4)}


def lucas_sides(u=x, v=y):
    """Both sides of the degree-3 Lucas identity in u, v.

    (-u^3 + 3u^2 v + 6u v^2 + v^3)^3 + (u^3 + 6u^2 v + 3u v^2 - v^3)^3
        = 27 u v (u + v) (u^2 + u v + v^2)^3
    """
    a = -(u**3) + 3 * u**2 * v + 6 * u * v**2 + v**3
    b = u**3 + 6 * u**2 * v + 3 * u * v**2 - v**3
    c = u**2 + u * v + v**2
    return a, b, c


def lucas_triple():
    """(a(x^3, y^3) : b(x^3, y^3) : 3xy c(x^3, y^3)), a degree-9 solution."""
    a, b, c = lucas_sides(x3, y3)
    return Finite(a, b, 3 * x * y * c)
