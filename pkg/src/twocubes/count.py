"""The number f(d) of affiliate classes of solutions of degree d.

f(d) = sum over e | d of the Legendre symbol (e/3), and 6 f(d) is the number
of lattice points (m, n) with m^2 - mn + n^2 = d.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from math import ceil, isqrt, sqrt
from typing import Optional

import numpy as np

__all__ = [
    "CountReport",
    "legendre3",
    "count_formula",
    "count_lattice",
    "lattice_counts",
    "series_counts",
    "count_table",
    "catalog_class_counts",
]


@dataclass(frozen=True)
class CountReport:
    d: int
    f_formula: int
    f_lattice: int
    f_catalog: Optional[int] = None

    @property
    def agrees(self) -> bool:
        ok = self.f_formula == self.f_lattice
        return ok and (self.f_catalog is None or self.f_catalog == self.f_formula)

    def to_json(self) -> dict:
        return asdict(self)


def legendre3(e: int) -> int:
    return (0, 1, -1)[e % 3]


def _check(d: int):
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")


def count_formula(d: int) -> int:
    _check(d)
    total = 0
    for e in range(1, isqrt(d) + 1):
        if d % e == 0:
            total += legendre3(e)
            if e * e != d:
                total += legendre3(d // e)
    return total


def _box(d: int) -> int:
    # m^2 - mn + n^2 = (n - m/2)^2 + 3m^2/4 >= 3m^2/4, and symmetrically in n
    return ceil(2 * sqrt(d / 3)) + 1


def count_lattice(d: int) -> int:
    """Lattice-point count divided by 6, by brute enumeration of a box."""
    _check(d)
    b = _box(d)
    m = np.arange(-b, b + 1, dtype=np.int64)
    mm, nn = np.meshgrid(m, m, indexing="ij")
    raw = int(np.count_nonzero(mm * mm - mm * nn + nn * nn == d))
    if raw % 6:
        raise ArithmeticError(f"lattice count {raw} at d={d} is not divisible by 6")
    return raw // 6


def lattice_counts(dmax: int) -> np.ndarray:
    """Coefficients of sum over Z^2 of z^(m^2 - mn + n^2), indices 0..dmax."""
    b = _box(dmax)
    m = np.arange(-b, b + 1, dtype=np.int64)
    mm, nn = np.meshgrid(m, m, indexing="ij")
    phi = (mm * mm - mm * nn + nn * nn).ravel()
    return np.bincount(phi[phi <= dmax], minlength=dmax + 1)


def series_counts(dmax: int) -> np.ndarray:
    """Coefficients of 1 + 6 sum_i (z^(3i+1)/(1 - z^(3i+1)) - z^(3i+2)/(1 - z^(3i+2)))."""
    out = np.zeros(dmax + 1, dtype=np.int64)
    out[0] = 1
    for k in range(1, dmax + 1):
        sign = legendre3(k)
        if sign:
            out[k::k] += 6 * sign
    return out


def catalog_class_counts(records) -> dict:
    """Affiliate classes per degree among catalog records."""
    from .curve import Finite, affiliates, solution_from_json

    seen: dict = {}
    classes: dict = {}
    for rec in records:
        s = solution_from_json(rec["solution"])
        if not isinstance(s, Finite):
            continue
        bucket = seen.setdefault(s.degree, set())
        if s in bucket:
            continue
        bucket.update(affiliates(s).members)
        classes[s.degree] = classes.get(s.degree, 0) + 1
    return classes


def count_table(dmax: int, catalog_path=None) -> list:
    """Reports for d = 1..dmax, with catalog class counts if a catalog file is given."""
    _check(dmax)
    classes = None
    if catalog_path is not None:
        with open(catalog_path) as fh:
            records = json.load(fh)
        classes = catalog_class_counts(records)
        top = max((r["degree"] for r in records if r.get("degree") is not None), default=0)
    return [
        CountReport(
            d,
            count_formula(d),
            count_lattice(d),
            None if classes is None or d > top else classes.get(d, 0),
        )
        for d in range(1, dmax + 1)
    ]
