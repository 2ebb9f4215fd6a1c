"""Shared exhaustive-instance generators for the peeling calculus tests."""

import itertools

from munn.elements import identity, multiply, translate
from munn.factorization import crack, crack_fla, crack_left, roll
from munn.words import EPSILON, concat


def product_groups(ball, max_diameter=None):
    """Group all (outer, inner) pairs from the ball by their product."""
    groups = {}
    for a in ball:
        positive = a.flavor == "FLA"
        for u in ball:
            if (
                positive
                and max_diameter is not None
                and len(a.point) + u.diameter > max_diameter
            ):
                continue
            m = multiply(a, u)
            if max_diameter is not None and m.diameter > max_diameter:
                continue
            groups.setdefault(m, []).append((a, u))
    return groups


def left_product_groups(ball, max_diameter=None):
    groups = {}
    for u in ball:
        for a in ball:
            if (
                max_diameter is not None
                and len(u.point) + a.diameter > max_diameter
            ):
                continue
            m = multiply(u, a)
            if max_diameter is not None and m.diameter > max_diameter:
                continue
            groups.setdefault(m, []).append((u, a))
    return groups


def check_crack_instance(a, u, b, v, x):
    r = crack(a, u, b, v, x)
    assert multiply(r.u_prime, r.z) == u
    assert multiply(r.v_prime, r.z) == v
    aup = multiply(a, r.u_prime)
    assert aup == multiply(b, r.v_prime)
    assert len(aup.tree) < len(multiply(a, u).tree)
    assert x not in aup.tree
    if u == v:
        assert r.u_prime == r.v_prime
    return r


def sweep_crack(groups):
    """All valid crack instances from grouped equations; returns the count."""
    one_cache = {}
    n = 0
    for m, facs in groups.items():
        lvs = m.tree.leaves()
        for (a, u), (b, v) in itertools.product(facs, repeat=2):
            one = one_cache.setdefault(a.flavor, identity(a.flavor))
            if u == one:
                continue
            forbidden = a.tree.words | b.tree.words
            for x in lvs:
                if x in forbidden:
                    continue
                check_crack_instance(a, u, b, v, x)
                n += 1
    return n


def check_crack_fla_instance(d, z, b, v, x):
    r = crack_fla(d, z, b, v, x)
    assert multiply(r.u_prime, r.z) == z
    assert multiply(r.v_prime, r.z) == v
    assert multiply(d, r.u_prime) == multiply(b, r.v_prime)
    assert r.u_prime.weight < z.weight
    # recompute the case label and the guaranteed flags
    dx = concat(d.point, x)
    case = {
        (True, False): "case2",
        (True, True): "case3",
        (False, False): "case1",
        (False, True): "case4",
    }[(x == z.point, dx in d.tree)]
    assert r.case_tag == case
    if case in ("case1", "case2"):
        assert r.set_decreased is True
    if case in ("case1", "case2", "case3"):
        assert r.weight_decreased is True
    return r


def sweep_crack_fla(groups):
    n = 0
    for m, facs in groups.items():
        one = identity("FLA")
        for (d, z), (b, v) in itertools.product(facs, repeat=2):
            if z == one:
                continue
            for x in z.tree.leaves():
                if concat(d.point, x) in b.tree:
                    continue
                check_crack_fla_instance(d, z, b, v, x)
                n += 1
    return n


def check_crack_left_instance(u, a, v, b, x):
    r = crack_left(u, a, v, b, x)
    assert multiply(r.u_prime, a) == multiply(r.v_prime, b)
    assert multiply(r.z, r.u_prime) == u
    assert multiply(r.z, r.v_prime) == v
    return r


def sweep_crack_left(groups):
    n = 0
    for m, facs in groups.items():
        lvs = m.tree.leaves()
        nonempty = [w for w in m.tree.words if w]
        rooted = bool(nonempty) and len({w[0] for w in nonempty}) == 1
        for (u, a), (v, b) in itertools.product(facs, repeat=2):
            ua = translate(u.point, a.tree.words)
            vb = translate(v.point, b.tree.words)
            for x in lvs:
                if x in ua or x in vb:
                    continue
                check_crack_left_instance(u, a, v, b, x)
                n += 1
            if rooted and EPSILON not in ua and EPSILON not in vb:
                check_crack_left_instance(u, a, v, b, EPSILON)
                n += 1
    return n


def sweep_roll(ball, groups):
    from munn.words import common_prefix
    n = 0
    for m, facs in groups.items():
        for a, bf in facs:
            # b_factor must be exactly x-prefixes u point-prefixes, two leaves
            lvs = set(bf.tree.leaves())
            lvs.discard(bf.point)
            if len(lvs) != 1:
                continue
            x = next(iter(lvs))
            if x == EPSILON or common_prefix(x, bf.point)[0] != EPSILON:
                continue
            if len(bf.tree) != len(x) + len(bf.point) + 1:
                continue
            ax = concat(a.point, x)
            if ax in a.tree or a.tree.words != m.tree.words - {ax}:
                continue
            for c, d in facs:
                if ax in c.tree:
                    continue
                d_prime = roll(a, bf, c, d)
                assert multiply(c, d_prime) == a
                assert multiply(d_prime, bf) == d
                n += 1
    return n
