import random

import pytest

from conftest import ball_by_diameter
from munn.elements import identity, left_factors, multiply
from munn.errors import FlavorError
from munn.finitary import fi_duality, gen_L, gen_R, gen_l, gen_r, reduce_pair


def test_fi_duality_involution_and_antihomomorphism():
    rng = random.Random(11)
    for flavor in ("FI", "FA"):
        ball = ball_by_diameter(flavor, 1)
        for m in ball:
            assert fi_duality(fi_duality(m)) == m
        for _ in range(1500):
            m, n = rng.choice(ball), rng.choice(ball)
            assert fi_duality(multiply(m, n)) == multiply(
                fi_duality(n), fi_duality(m)
            )


def test_fi_duality_rejects_fla():
    with pytest.raises(FlavorError):
        fi_duality(identity("FLA"))


def _soundness(a, b):
    target = a.tree.words | b.tree.words
    R = gen_R(a, b)
    for u, v in R.generators:
        m = multiply(a, u)
        assert m == multiply(b, v) and m.tree.words == target
    r = gen_r(a, b)
    for u in r.generators:
        m = multiply(a, u)
        assert m == multiply(b, u) and m.tree.words == target
    L = gen_L(a, b)
    for u, v in L.generators:
        assert multiply(u, a) == multiply(v, b)
    l_ = gen_l(a, b)
    for u in l_.generators:
        assert multiply(u, a) == multiply(u, b)
    return R, r, L, l_


def _right_completeness(a, b, R, r, ball):
    gset = set(R.generators)
    for u in ball:
        for v in ball:
            if multiply(a, u) != multiply(b, v):
                continue
            (u0, v0), tail = reduce_pair(a, u, b, v)
            assert (u0, v0) in gset
            assert multiply(u0, tail) == u and multiply(v0, tail) == v
    rset = set(r.generators)
    for u in ball:
        if multiply(a, u) != multiply(b, u):
            continue
        (u0, v0), tail = reduce_pair(a, u, b, u)
        assert u0 == v0 and u0 in rset


def _left_completeness(a, b, L, l_, ball):
    lg = list(L.generators)
    for u in ball:
        for v in ball:
            if multiply(u, a) != multiply(v, b):
                continue
            assert any(
                any(
                    multiply(s, v0) == v
                    for s in left_factors(u, u0)
                    if multiply(s, u0) == u
                )
                for u0, v0 in lg
            )
    lgl = list(l_.generators)
    for u in ball:
        if multiply(u, a) != multiply(u, b):
            continue
        assert any(
            any(multiply(s, u0) == u for s in left_factors(u, u0))
            for u0 in lgl
        )


@pytest.mark.parametrize("flavor,d", [("FI", 1), ("FA", 1), ("FLA", 2)])
def test_generating_slices_sound_and_complete(flavor, d):
    rng = random.Random(13)
    ball = ball_by_diameter(flavor, d)
    pairs = [(a, b) for a in ball for b in ball]
    rng.shuffle(pairs)
    for a, b in pairs[:40]:
        R, r, L, l_ = _soundness(a, b)
        _right_completeness(a, b, R, r, ball)
        _left_completeness(a, b, L, l_, ball)


def test_empty_relation_reported():
    # (x, y) in FLA: no u, v with x u = y v (first letters disagree)
    from munn.elements import generator

    gx, gy = generator(1, "FLA"), generator(2, "FLA")
    assert gen_R(gx, gy).empty
    assert gen_r(gx, gy).empty
