"""Leaf factorization of product equations.

Given an equation between two products whose combined Munn tree has a leaf
outside the base trees, these operations peel that leaf off as a common
right (or left) factor, strictly shrinking the equation.  They are the
engine behind every reduction loop in the package, so every precondition is
validated and violations raise, never pass silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import FlavorError, PreconditionError
from .words import (
    EPSILON,
    Word,
    common_prefix,
    concat,
    invert,
    strip_prefix,
    strip_suffix,
)
from .elements import (
    MonoidElement,
    PrefixSet,
    identity,
    multiply,
    pc_closure,
    translate,
)


@dataclass(frozen=True)
class CrackResult:
    """Outcome of one peeling step.

    The governing equation holds for the primed elements and the peeled
    factor z recombines them to the originals:
    (u, v) = (u', v') z for right-sided variants, (u, v) = z (u', v') for the
    left-sided one.
    """

    u_prime: MonoidElement
    v_prime: MonoidElement
    z: MonoidElement
    case_tag: str
    set_decreased: Optional[bool] = None  # |D u dZ'| < |D u dZ|  (cases 1, 2)
    weight_decreased: Optional[bool] = None  # w(b v') < w(b v)  (cases 1-3)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)


def crack_fla(
    d: MonoidElement,
    z: MonoidElement,
    b: MonoidElement,
    v: MonoidElement,
    x: Word,
) -> CrackResult:
    """Peel the leaf x of Z out of the equation d z = b v (all FLA).

    Requires z != 1 and d.point x not in B.  Returns z', v' and the factor
    with z = z' * factor, v = v' * factor, d z' = b v', w(z') < w(z).
    Cases: (1) x != z-point, dx not in D; (2) x == z-point, dx not in D;
    (3) x == z-point, dx in D; (4) x != z-point, dx in D.
    """
    for m in (d, z, b, v):
        if m.flavor != "FLA":
            raise FlavorError("crack_fla is defined on FLA only")
    prod = multiply(d, z)
    _require(prod == multiply(b, v), "equation d z = b v fails")
    _require(z.point != EPSILON or len(z.tree) > 1, "z must not be the identity")
    _require(x in z.tree.leaves(), f"{x} is not a leaf of Z")
    dx = concat(d.point, x)
    _require(dx not in b.tree, "d.point x lies in B")

    z_words = z.tree.words - {x}
    v_words = v.tree.words
    if x == z.point:
        _require(x != EPSILON, "x = z = empty contradicts z != 1")
        last = (x[-1],)
        z_prime = MonoidElement(PrefixSet(z_words), x[:-1], "FLA")
        factor = MonoidElement(PrefixSet(pc_closure({last})), last, "FLA")
        v_stripped = strip_suffix(last, v.point)
        _require(v_stripped is not None, "v does not end with the peeled letter")
        if dx not in d.tree:
            case = "case2"
            v_prime = MonoidElement(PrefixSet(v_words - {v.point}), v_stripped, "FLA")
        else:
            case = "case3"
            v_prime = MonoidElement(PrefixSet(v_words), v_stripped, "FLA")
    else:
        zc, z_tail, x_tail = common_prefix(z.point, x)
        _require(x_tail != EPSILON, "leaf x distinct from z must extend past it")
        factor_words = pc_closure({z_tail, x_tail})
        factor = MonoidElement(PrefixSet(factor_words), z_tail, "FLA")
        z_prime = MonoidElement(PrefixSet(z_words), zc, "FLA")
        v_stripped = strip_suffix(z_tail, v.point)
        _require(v_stripped is not None, "v does not end with the peeled tail")
        if dx not in d.tree:
            case = "case1"
            bdx = strip_prefix(b.point, dx)
            _require(bdx is not None and bdx in v.tree, "b^-1 d x not in V")
            v_prime = MonoidElement(PrefixSet(v_words - {bdx}), v_stripped, "FLA")
        else:
            case = "case4"
            v_prime = MonoidElement(PrefixSet(v_words), v_stripped, "FLA")

    # report the actual decreases; cases 1-2 guarantee the set decrease and
    # cases 1-3 the weight decrease, but case 4 may decrease weight as well
    new_prod = multiply(d, z_prime)
    return CrackResult(
        u_prime=z_prime,
        v_prime=v_prime,
        z=factor,
        case_tag=case,
        set_decreased=len(new_prod.tree) < len(prod.tree),
        weight_decreased=new_prod.weight < prod.weight,
    )


def crack(
    a: MonoidElement,
    u: MonoidElement,
    b: MonoidElement,
    v: MonoidElement,
    x: Word,
) -> CrackResult:
    """Peel a leaf x of A u aU with x not in A u B out of a u = b v.

    Works in all three flavors.  Returns u', v', z with a u' = b v',
    (u, v) = (u', v') z and |A u aU'| < |A u aU|.  If u == v then u' == v'.
    """
    flavor = a.flavor
    prod = multiply(a, u)
    _require(prod == multiply(b, v), "equation a u = b v fails")
    _require(x in prod.tree.leaves(), f"{x} is not a leaf of A u aU")
    _require(x not in a.tree and x not in b.tree, "x must avoid A u B")
    _require(u != identity(flavor), "u must not be the identity")

    if flavor == "FLA":
        k = strip_prefix(a.point, x)
        _require(k is not None and k != EPSILON, "leaf does not extend a")
        return crack_fla(a, u, b, v, k)

    au = concat(a.point, u.point)
    if x != au:
        # common right factor is the translated leaf tail
        zw = concat(invert(au), x)
        a_leaf = concat(invert(a.point), x)
        b_leaf = concat(invert(b.point), x)
        _require(a_leaf in u.tree and b_leaf in v.tree, "leaf missing from U or V")
        u_prime = MonoidElement(PrefixSet(u.tree.words - {a_leaf}), u.point, flavor)
        v_prime = MonoidElement(PrefixSet(v.tree.words - {b_leaf}), v.point, flavor)
        # the factor's point is empty: u' and v' keep their points here
        factor = MonoidElement(PrefixSet(pc_closure({zw})), EPSILON, flavor)
        case = "case1"
    else:
        # x = au = bv: the last letter of x, u and v coincides
        _require(u.point != EPSILON and v.point != EPSILON, "u, v nonempty here")
        last = (x[-1],)
        _require(
            u.point[-1] == x[-1] and v.point[-1] == x[-1],
            "last letters of x, u, v must agree",
        )
        u_prime = MonoidElement(
            PrefixSet(u.tree.words - {u.point}), u.point[:-1], flavor
        )
        v_prime = MonoidElement(
            PrefixSet(v.tree.words - {v.point}), v.point[:-1], flavor
        )
        factor = MonoidElement(PrefixSet(pc_closure({last})), last, flavor)
        case = "case2"
    return CrackResult(u_prime=u_prime, v_prime=v_prime, z=factor, case_tag=case)


def crack_left(
    u: MonoidElement,
    a: MonoidElement,
    v: MonoidElement,
    b: MonoidElement,
    x: Word,
) -> CrackResult:
    """Left-sided peeling for u a = v b in FLA.

    x must lie in U u uA but outside uA u vB, and be either a leaf or the
    root (x empty, with all nonempty members sharing a first letter).
    Returns u', v', z with u' a = v' b and (u, v) = z (u', v').
    """
    for m in (u, a, v, b):
        if m.flavor != "FLA":
            raise FlavorError("crack_left is defined on FLA only")
    prod = multiply(u, a)
    _require(prod == multiply(v, b), "equation u a = v b fails")
    ua_set = translate(u.point, a.tree.words)
    vb_set = translate(v.point, b.tree.words)
    _require(x in prod.tree, "x not in U u uA")
    _require(x not in ua_set and x not in vb_set, "x must avoid uA u vB")

    if x == EPSILON:
        nonempty = [w for w in prod.tree.words if w]
        _require(bool(nonempty), "tree has no nonempty member")
        first = {w[0] for w in nonempty}
        _require(len(first) == 1, "no common first letter at the root")
        c = (first.pop(),)
        _require(u.point != EPSILON and v.point != EPSILON, "u, v nonempty here")
        factor = MonoidElement(PrefixSet(pc_closure({c})), c, "FLA")
        u_words = frozenset(w[1:] for w in u.tree.words if w)
        v_words = frozenset(w[1:] for w in v.tree.words if w)
        u_prime = MonoidElement(PrefixSet(u_words), u.point[1:], "FLA")
        v_prime = MonoidElement(PrefixSet(v_words), v.point[1:], "FLA")
        case = "left_root"
    else:
        _require(x in prod.tree.leaves(), f"{x} is not a leaf")
        _require(x in u.tree and x in v.tree, "x must lie in both U and V")
        _require(x != u.point and x != v.point, "x equals a point, not removable")
        factor = MonoidElement(PrefixSet(pc_closure({x})), EPSILON, "FLA")
        u_prime = MonoidElement(PrefixSet(u.tree.words - {x}), u.point, "FLA")
        v_prime = MonoidElement(PrefixSet(v.tree.words - {x}), v.point, "FLA")
        case = "left_leaf"
    return CrackResult(u_prime=u_prime, v_prime=v_prime, z=factor, case_tag=case)


def roll(
    a: MonoidElement,
    b_factor: MonoidElement,
    c: MonoidElement,
    d: MonoidElement,
) -> MonoidElement:
    """Transfer a two-leaf factor across the equation a b_factor = c d.

    b_factor must have tree x-prefixes u b-prefixes with x nonempty sharing
    no prefix with the point b; with ax outside A u C and
    A = (A u aB) minus {ax}, returns d' with a = c d' and d = d' b_factor.
    """
    for m in (a, b_factor, c, d):
        if m.flavor != "FLA":
            raise FlavorError("roll is defined on FLA only")
    prod = multiply(a, b_factor)
    _require(prod == multiply(c, d), "equation a b_factor = c d fails")

    b = b_factor.point
    lvs = set(b_factor.tree.leaves())
    lvs.discard(b)
    _require(len(lvs) == 1, "b_factor must have exactly one leaf besides its point")
    x = lvs.pop()
    _require(x != EPSILON, "x must be nonempty")
    _require(common_prefix(x, b)[0] == EPSILON, "x and b share a prefix")
    _require(
        b_factor.tree.words == pc_closure({x, b}),
        "b_factor tree must be exactly x-prefixes u b-prefixes",
    )

    ax = concat(a.point, x)
    _require(ax not in a.tree and ax not in c.tree, "ax must avoid A u C")
    _require(
        a.tree.words == prod.tree.words - {ax},
        "A must be (A u aB) minus {ax}",
    )

    d_pt = strip_prefix(c.point, a.point)
    _require(d_pt is not None, "c is not a prefix of a")
    dx = concat(d_pt, x)
    _require(dx in d.tree, "d'x missing from D")
    d_prime = MonoidElement(PrefixSet(d.tree.words - {dx}), d_pt, "FLA")
    _require(multiply(c, d_prime) == a, "derived d' fails a = c d'")
    _require(multiply(d_prime, b_factor) == d, "derived d' fails d = d' b_factor")
    return d_prime
