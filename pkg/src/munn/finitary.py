"""Finite generating sets for the one-sided equalizer conditions.

For elements a, b of the same monoid S the right equalizers are

    R(a, b) = {(u, v) : a u = b v},    r(a, b) = {u : a u = b u},

which are a right congruence-like subact of S x S and a right ideal of S;
L(a, b) and l(a, b) are the left-sided mirrors.  Each is generated by the
finite slice whose members keep the product tree as small as the inputs
allow:

* R(a, b) is generated (as a right subact) by
      X = {(u, v) : a u = b v,  A | aU = A | B};
* r(a, b) by Y = {u : a u = b u,  A | aU = A | B};
* L(a, b) over FLA, with b = y a as words, by
      X = {(u, v) : u a = v b,  U | uA = B | yA},
  and is empty unless one point is a suffix of the other;
* l(a, b) over FLA by the same slice with u = v.

For FI and FA the left conditions are obtained from the right ones through
an anti-automorphism (``fi_duality``): inversion for FI, word reversal for
FA.  ``reduce_pair`` realizes generation constructively, peeling leaves via
``crack`` until the slice condition holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import FlavorError, PreconditionError
from .words import EPSILON, Word, concat, invert, strip_suffix
from .elements import (
    MonoidElement,
    PrefixSet,
    identity,
    multiply,
    pc_closure,
    pc_interval,
    right_factors,
    translate,
)
from .factorization import crack

_WORD_KEY = lambda w: (len(w), w)  # noqa: E731


@dataclass(frozen=True)
class GeneratingSetReport:
    """Finite generating set for one of the conditions R, r, L, l.

    ``generators`` holds pairs (u, v) for R and L, single elements for
    r and l.  ``empty`` is True when the relation itself is empty.
    """

    condition: str
    a: MonoidElement
    b: MonoidElement
    generators: tuple

    @property
    def empty(self) -> bool:
        return not self.generators

    def __len__(self) -> int:
        return len(self.generators)


def _check_flavors(a: MonoidElement, b: MonoidElement) -> str:
    if a.flavor != b.flavor:
        raise FlavorError(f"flavor mismatch: {a.flavor} vs {b.flavor}")
    return a.flavor


def _target_products(a: MonoidElement, b: MonoidElement):
    """All products m with tree A | B, one per admissible point."""
    flavor = a.flavor
    target = a.tree.words | b.tree.words
    tree = PrefixSet(target)
    for p in tree.sorted_words():
        if flavor == "FA" and not all(k > 0 for k in p):
            continue
        yield MonoidElement(tree, p, flavor)


def gen_R(a: MonoidElement, b: MonoidElement) -> GeneratingSetReport:
    """The finite set X = {(u, v): a u = b v, A | aU = A | B}."""
    _check_flavors(a, b)
    out: List[Tuple[MonoidElement, MonoidElement]] = []
    for m in _target_products(a, b):
        us = list(right_factors(m, a))
        vs = list(right_factors(m, b))
        out.extend((u, v) for u in us for v in vs)
    out.sort(key=lambda p: (p[0].sort_key(), p[1].sort_key()))
    return GeneratingSetReport("R", a, b, tuple(out))


def gen_r(a: MonoidElement, b: MonoidElement) -> GeneratingSetReport:
    """The finite set Y = {u: a u = b u, A | aU = A | B}."""
    _check_flavors(a, b)
    out: List[MonoidElement] = []
    for m in _target_products(a, b):
        for u in right_factors(m, a):
            if multiply(b, u) == m:
                out.append(u)
    out.sort(key=MonoidElement.sort_key)
    return GeneratingSetReport("r", a, b, tuple(out))


def _suffix_offset(a: MonoidElement, b: MonoidElement) -> Optional[Word]:
    """The word y with b = y a (as points), or None."""
    return strip_suffix(a.point, b.point)


def _gen_L_fla(a: MonoidElement, b: MonoidElement) -> List[Tuple[MonoidElement, MonoidElement]]:
    """Pairs of X = {(u, v): u a = v b, U | uA = B | yA}, given b = y a."""
    y = _suffix_offset(a, b)
    if y is None:
        return []
    target = b.tree.words | translate(y, a.tree.words)
    # members of X are forced to have points u = y and v = epsilon
    u_low = pc_closure((target - translate(y, a.tree.words)) | {y})
    v_low = pc_closure(target - b.tree.words)
    us = [
        MonoidElement(PrefixSet(ws), y, "FLA")
        for ws in pc_interval(u_low, frozenset(target))
    ]
    vs = [
        MonoidElement(PrefixSet(ws), EPSILON, "FLA")
        for ws in pc_interval(v_low, frozenset(target))
    ]
    return [(u, v) for u in us for v in vs]


def gen_L(a: MonoidElement, b: MonoidElement) -> GeneratingSetReport:
    """A finite generating set of L(a, b) = {(u, v): u a = v b} (as a left subact).

    Over FLA this is the slice X above, taken in whichever direction the
    suffix relation between the points holds (both, if the points agree).
    For FI and FA the computation is pushed through fi_duality to gen_R.
    """
    flavor = _check_flavors(a, b)
    if flavor != "FLA":
        dual = gen_R(fi_duality(a), fi_duality(b))
        out = [(fi_duality(u), fi_duality(v)) for (u, v) in dual.generators]
        out.sort(key=lambda p: (p[0].sort_key(), p[1].sort_key()))
        return GeneratingSetReport("L", a, b, tuple(out))
    if _suffix_offset(a, b) is not None:
        out = _gen_L_fla(a, b)
    else:
        out = [(v, u) for (u, v) in _gen_L_fla(b, a)]
    out.sort(key=lambda p: (p[0].sort_key(), p[1].sort_key()))
    return GeneratingSetReport("L", a, b, tuple(out))


def gen_l(a: MonoidElement, b: MonoidElement) -> GeneratingSetReport:
    """A finite generating set of l(a, b) = {u: u a = u b} (as a left ideal)."""
    flavor = _check_flavors(a, b)
    if flavor != "FLA":
        dual = gen_r(fi_duality(a), fi_duality(b))
        out = [fi_duality(u) for u in dual.generators]
        out.sort(key=MonoidElement.sort_key)
        return GeneratingSetReport("l", a, b, tuple(out))
    out: List[MonoidElement] = []
    if a.point == b.point:
        # u a = u b forces equal points, so the slice has y = epsilon
        for u, v in _gen_L_fla(a, b):
            if u == v and multiply(u, a) == multiply(u, b):
                out.append(u)
    out.sort(key=MonoidElement.sort_key)
    return GeneratingSetReport("l", a, b, tuple(out))


def reduce_pair(
    a: MonoidElement, u: MonoidElement, b: MonoidElement, v: MonoidElement
) -> Tuple[Tuple[MonoidElement, MonoidElement], MonoidElement]:
    """Express (u, v) in R(a, b) as (u0, v0) * tail with (u0, v0) in gen_R's slice.

    Repeatedly peels a leaf of A | aU outside A | B with ``crack``; the tree
    strictly shrinks each step, so this terminates with A | aU = A | B.
    """
    if multiply(a, u) != multiply(b, v):
        raise PreconditionError("equation a u = b v fails")
    flavor = a.flavor
    tail = identity(flavor)
    base = a.tree.words | b.tree.words
    while True:
        prod = multiply(a, u).tree.words
        if prod == base:
            return (u, v), tail
        x = min((w for w in multiply(a, u).tree.leaves() if w not in base), key=_WORD_KEY)
        step = crack(a, u, b, v, x)
        u, v = step.u_prime, step.v_prime
        tail = multiply(step.z, tail)


def _signflip(w: Word) -> Word:
    return tuple(-k for k in w)


def _reverse(w: Word) -> Word:
    return tuple(reversed(w))


def fi_duality(m: MonoidElement) -> MonoidElement:
    """An involutive anti-automorphism, used to transport L/l to R/r.

    For FI it is inversion m -> m^-1 (the extension of x -> x^-1).  For FA,
    where inversion leaves the monoid, it is the reversal map
    (A, a) -> (rev(a) * flip(A), rev(a)), the composite of inversion with
    the sign-flip automorphism; it fixes FA setwise.
    """
    if m.flavor == "FLA":
        raise FlavorError("fi_duality is not defined for FLA")
    if m.flavor == "FI":
        g = invert(m.point)
        return MonoidElement(PrefixSet(translate(g, m.tree.words)), g, "FI")
    g = _reverse(m.point)
    ws = frozenset(concat(g, _signflip(w)) for w in m.tree.words)
    return MonoidElement(PrefixSet(ws), g, "FA")
