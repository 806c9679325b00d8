import json
import random
from math import gcd

import pytest
import sympy

from twocubes.catalog import build_catalog
from twocubes.count import (
    CountReport,
    catalog_class_counts,
    count_formula,
    count_lattice,
    count_table,
    lattice_counts,
    series_counts,
)


def test_formula_examples():
    assert count_formula(1) == 1
    assert count_formula(7) == 2
    assert count_formula(1729) == 8
    assert count_formula(2) == 0
    assert count_formula(49) == 3


def test_lattice_examples():
    assert count_lattice(1) == 1
    assert count_lattice(3) == 1
    assert count_lattice(49) == 3


def test_formula_matches_lattice_to_2000():
    lat = lattice_counts(2000)
    assert lat[0] == 1
    for d in range(1, 2001):
        assert lat[d] % 6 == 0
        assert count_formula(d) == lat[d] // 6
    assert all(count_lattice(d) == count_formula(d) for d in range(1, 400))


def test_generating_function():
    assert (series_counts(2000) == lattice_counts(2000)).all()


def test_vanishes_at_two_mod_three():
    assert all(count_formula(d) == 0 for d in range(2, 2001, 3))


def test_multiplicative():
    rng = random.Random(7)
    pairs = 0
    while pairs < 200:
        a, b = rng.randint(1, 60), rng.randint(1, 60)
        if gcd(a, b) != 1 or a * b > 2000:
            continue
        assert count_formula(a * b) == count_formula(a) * count_formula(b)
        pairs += 1


@pytest.mark.parametrize("p", [7, 13, 19, 31])
def test_prime_powers_one_mod_three(p):
    for k in range(1, 4):
        assert count_formula(p**k) == k + 1


@pytest.mark.parametrize("p", [2, 5, 11])
def test_prime_powers_two_mod_three(p):
    for k in range(1, 5):
        assert count_formula(p**k) == (1 if k % 2 == 0 else 0)


def test_support():
    for d in range(1, 2001):
        ok = all(e % 2 == 0 for p, e in sympy.factorint(d).items() if p % 3 == 2)
        assert (count_formula(d) > 0) == ok


def test_count_table_small():
    table = count_table(12)
    nonzero = {r.d: r.f_formula for r in table if r.f_formula}
    assert nonzero == {1: 1, 3: 1, 4: 1, 7: 2, 9: 1, 12: 1}
    assert all(r.agrees for r in table)
    assert count_table(1) == [CountReport(1, 1, 1)]
    assert count_table(16)[-1].f_formula == 1


def test_count_table_with_catalog(tmp_path):
    path = tmp_path / "cat.json"
    path.write_text(json.dumps(build_catalog(13)))
    table = count_table(13, path)
    assert all(r.f_catalog == r.f_formula == r.f_lattice for r in table)


def test_catalog_classes_have_eighteen_members():
    records = build_catalog(13)
    classes = catalog_class_counts(records)
    for d, k in classes.items():
        assert sum(1 for r in records if r["degree"] == d) == 18 * k


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        count_formula(0)
