import json
import random
from itertools import product

import pytest

from twocubes.catalog import (
    CanonCoord,
    NotInV,
    OutsideV1,
    ShapeViolation,
    UndefinedComposition,
    build_catalog,
    classify_reality,
    compose,
    compose_coords,
    conjugate_coords,
    extract_structure,
    generate,
    generate_via_composition,
    norm_shell,
    omega_action,
    recognize,
    rmap,
    rmap_inv,
)
from twocubes.curve import H0, H1, H2, IDENTITY, Finite, Infinity, add, conjugate, same_affiliate_class, verify
from twocubes.eisenstein import OMEGA, EisensteinInt, norm
from twocubes.forms import ONE, X, Y, scale, substitute
from twocubes.table import TABLE, TABLE_COORDS, V3, V4, V7, V9, V12

x, y = X, Y


def coords_up_to(dmax, ts=(0, 1, 2)):
    return [CanonCoord(m, n, t) for d in range(1, dmax + 1) for m, n in norm_shell(d) for t in ts]


def phi(m, n):
    return m * m - m * n + n * n


def test_norm_shell_against_box():
    for d in range(0, 60):
        box = sorted((m, n) for m in range(-10, 11) for n in range(-10, 11) if phi(m, n) == d)
        assert norm_shell(d) == box


def test_generate_examples():
    assert generate((1, 0, 0)) == H1
    assert generate((0, 1, 0)) == H2
    assert same_affiliate_class(generate((1, 2, 0)), V3)
    s7 = generate((-2, -3, 0))
    assert s7.degree == 7 and same_affiliate_class(s7, V7)
    assert same_affiliate_class(generate((-2, -4, 0)), V12)
    assert [generate((0, 0, t)) for t in range(3)] == [Infinity(0), Infinity(1), Infinity(2)]


def test_degree_law():
    for c in coords_up_to(13):
        assert generate(c).degree == c.degree == phi(c.m, c.n)


def test_fast_path_agrees():
    for c in coords_up_to(16, ts=(0, 2)):
        assert generate_via_composition(c) == generate(c)


def test_composition_examples():
    assert same_affiliate_class(compose(V3, V3), V9)
    v34, v43 = compose(V3, V4), compose(V4, V3)
    assert same_affiliate_class(v34, V12) and same_affiliate_class(v43, V12)
    for s in (V3, V4, V7, generate((2, 1, 1))):
        assert compose(H1, s) == s == compose(s, H1)
    assert compose(H2, H2) == Finite(scale(OMEGA**2, x), scale(OMEGA**2, y), ONE) == generate((-1, -1, 0))


def test_composition_degrees_multiply():
    for a, b in [((1, 2, 0), (2, 1, 1)), ((-2, -3, 2), (1, 1, 0)), ((3, 1, 0), (-1, 1, 2))]:
        v, w = generate(a), generate(b)
        assert compose(v, w).degree == v.degree * w.degree


def test_composition_with_infinity():
    assert compose(H0, V4) == H0
    with pytest.raises(UndefinedComposition):
        compose(V4, H0)


def test_compose_coords_examples():
    assert compose_coords((1, 2, 0), (1, 2, 0)) == CanonCoord(-3, 0, 0)
    assert compose_coords((1, 2, 0), (-2, 0, 0)) == CanonCoord(-2, -4, 0)
    for m, n, t in product(range(-3, 4), range(-3, 4), range(3)):
        assert compose_coords((m, n, t), (1, 0, 0)) == CanonCoord(m, n, t)


def test_rmap():
    assert rmap((1, 2, 0)) == EisensteinInt(1, 2)
    assert rmap((-2, 0, 0)) == EisensteinInt(-2, 0)
    with pytest.raises(OutsideV1):
        rmap((1, 0, 1))
    for m, n in product(range(-10, 11), repeat=2):
        c = CanonCoord(m, n, 0)
        assert rmap_inv(rmap(c)) == c


def test_rmap_is_a_ring_homomorphism():
    r = range(-6, 7)
    for m, n, m2, n2 in product(r, r, r, r):
        a, b = CanonCoord(m, n), CanonCoord(m2, n2)
        assert rmap(compose_coords(a, b)) == rmap(a) * rmap(b)
        assert rmap(CanonCoord(m + m2, n + n2)) == rmap(a) + rmap(b)


def test_norm_composition():
    r = range(-8, 9)
    for m, n, m2, n2 in product(r, r, r[::2], r[::2]):
        c = compose_coords((m, n, 0), (m2, n2, 0))
        assert phi(c.m, c.n) == phi(m, n) * phi(m2, n2)


def test_generation_commutes_with_composition():
    cs = [c for c in coords_up_to(4)] + [CanonCoord(0, 0, t) for t in range(3)]
    for c in cs:
        for c2 in coords_up_to(4):
            assert generate(compose_coords(c, c2)) == compose(generate(c), generate(c2))


def test_left_distributivity():
    rng = random.Random(5)
    pool = coords_up_to(4)
    for _ in range(10):
        u, v, w = (generate(rng.choice(pool)) for _ in range(3))
        assert compose(add(u, v), w) == add(compose(u, w), compose(v, w))


def test_right_distributivity_fails_through_h0():
    for c in coords_up_to(4):
        assert compose(Infinity(1), generate(c)) == Infinity(1)
    assert Infinity(1) != Infinity(2)
    # h0 o (2 h1) = h0, whereas h0 o h1 + h0 o h1 = 2 h0
    assert compose(H0, generate((2, 0, 0))) != add(compose(H0, H1), compose(H0, H1))


def test_trios():
    rng = random.Random(6)
    pool = coords_up_to(7)
    for _ in range(10):
        a, b = rng.choice(pool), rng.choice(pool)
        vw, wv = recognize(compose(generate(a), generate(b))), recognize(compose(generate(b), generate(a)))
        assert (vw.m, vw.n) == (wv.m, wv.n)


def test_omega_action():
    assert omega_action((1, 0, 0)) == CanonCoord(0, 1, 0)
    assert omega_action((1, 2, 0)) == CanonCoord(-2, -1, 0)
    for m, n, t in product(range(-10, 11), range(-10, 11), range(3)):
        c = CanonCoord(m, n, t)
        assert omega_action(omega_action(omega_action(c))) == c


def test_omega_action_on_solutions():
    for c in coords_up_to(7):
        p, q, r = generate(c).components
        assert generate(omega_action(c)) == Finite(scale(OMEGA, p), scale(OMEGA, q), r)


def test_conjugate_coords():
    assert all(conjugate_coords((m, 0, 0)) == CanonCoord(m, 0, 0) for m in range(-6, 7))
    assert conjugate_coords((1, 2, 0)) == CanonCoord(-1, -2, 0)
    for m, n, t in product(range(-10, 11), range(-10, 11), range(3)):
        c = CanonCoord(m, n, t)
        assert conjugate_coords(conjugate_coords(c)) == c


def test_conjugate_coords_on_solutions():
    for c in coords_up_to(9):
        assert generate(conjugate_coords(c)) == conjugate(generate(c))


def test_conjugate_twist():
    for m, n in product(range(-10, 11), repeat=2):
        assert omega_action(conjugate_coords((m, n, 0))) == CanonCoord(n, m, 0)


def test_scalar_pull_through():
    for m, n, r in product(range(-4, 5), range(-4, 5), range(-5, 6)):
        assert compose_coords((m, n, 0), (r, 0, 0)) == CanonCoord(r * m, r * n, 0)


def test_realmaker():
    for c in coords_up_to(4, ts=(0,)):
        v, vbar = generate(c), generate(conjugate_coords(c))
        assert compose(v, vbar) == generate((norm(EisensteinInt(c.m, c.n)), 0, 0))


def test_recognize():
    assert recognize(H2) == CanonCoord(0, 1, 0)
    assert recognize(V9) == CanonCoord(-3, 0, 0)
    for c in coords_up_to(13):
        assert recognize(generate(c)) == c
    with pytest.raises(NotInV):
        recognize(Finite(x, y, 2 * ONE))


def test_table_coordinates():
    for d, s in TABLE.items():
        assert same_affiliate_class(generate(TABLE_COORDS[d] + (0,)), s)


def test_swap_symmetry_of_components():
    for c in coords_up_to(9):
        p, q, r = generate(c).components
        assert q.swap_xy() ** 3 * r**3 == p**3 * r.swap_xy() ** 3


def test_extract_structure_examples():
    u, v = x, y
    st9 = extract_structure(V9)
    want = (-(u**3) + 3 * u**2 * v + 6 * u * v**2 + v**3, u**3 + 6 * u**2 * v + 3 * u * v**2 - v**3, 3 * (u**2 + u * v + v**2))
    c = st9.P[0] / want[0][0]
    assert st9.shape == "div3"
    assert (st9.P, st9.Q, st9.R) == tuple(scale(c, f) for f in want)
    st4 = extract_structure(V4)
    assert (st4.P, st4.Q, st4.R, st4.shape) == (u + 2 * v, -(v + 2 * u), u - v, "res1")
    st1 = extract_structure(H1)
    assert (st1.P, st1.Q, st1.R, st1.shape) == (ONE, ONE, ONE, "res1")


def _rebuild(st):
    c3 = (x**3, y**3)
    P, Q, R = (substitute(f, *c3) if not f.is_constant() else f for f in (st.P, st.Q, st.R))
    if st.shape == "div3":
        return P, Q, x * y * R
    p, q = x * P, y * Q
    return (q, p, R) if st.swapped else (p, q, R)


def test_extract_structure_rebuilds_every_small_solution():
    for c in coords_up_to(13):
        s = generate(c)
        st = extract_structure(s)
        assert st.shape == ("div3" if s.degree % 3 == 0 else "res1")
        assert _rebuild(st) == s.components


def test_extract_structure_rejects_bad_shapes():
    with pytest.raises(ShapeViolation):
        extract_structure(Finite(x**2 + x * y, y * y, x))


def test_classify_reality():
    assert classify_reality((5, 0, 0)) == "real"
    assert classify_reality((2, 4, 0)) == "conj-pair"
    assert classify_reality((1, 3, 0)) == "generic"
    assert classify_reality((2, 0, 1)) == "self-conjugate-class"


def test_reality_classes_match_solutions():
    for c in coords_up_to(13):
        s, tag = generate(c), classify_reality(c)
        p, q, r = s.components
        sbar = conjugate(s)
        assert (sbar == s) == (tag == "real")
        if tag == "conj-pair":
            assert sbar == Finite(q, p, r)
        assert same_affiliate_class(s, sbar) == (tag != "generic")


def test_build_catalog(tmp_path):
    records = build_catalog(7)
    keys = [(r["degree"], r["m"], r["n"], r["t"]) for r in records]
    assert keys == sorted(keys)
    assert len(records) == 3 * sum(len(norm_shell(d)) for d in range(1, 8))
    assert build_catalog(7, jobs=2) == records
    path = tmp_path / "cat.json"
    path.write_text(json.dumps(records))
    from twocubes.curve import solution_from_json

    assert all(verify(solution_from_json(r["solution"])) for r in json.loads(path.read_text()))
