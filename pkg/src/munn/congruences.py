"""Finitely generated one-sided congruences on FI / FA / FLA.

A presentation is a finite symmetric set H of element pairs; the right
congruence it generates relates s and t when they are joined by an
H-sequence

    s = c1 t1,  d1 t1 = c2 t2,  ...,  dn tn = t,

with every (ci, di) in H.  This module provides bounded H-sequence search
(``relate``), the right-sided reduction calculus on sequences
(``find_reduction`` / ``irreducible_form`` / ``decompose_y``, FLA only),
the finite candidate constructions for annihilator and intersection
congruences, and alphabet projection (``project_alphabet``).

Bounded search is a semi-decision procedure: a miss means "not found within
the bound", never unrelatedness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import FlavorError, PreconditionError, ResourceCapError
from .words import EPSILON, Alphabet, Word, concat, invert, is_positive
from .elements import (
    MonoidElement,
    PrefixSet,
    enumerate_elements,
    identity,
    is_idempotent,
    left_factors,
    multiply,
    pc_closure,
    pc_interval,
    right_factors,
    translate,
)
from .factorization import crack_fla

_WORD_KEY = lambda w: (len(w), w)  # noqa: E731


# ---------------------------------------------------------------------------
# presentations and sequences


@dataclass(frozen=True)
class CongruencePresentation:
    """A finite symmetric generating set H for a one-sided congruence.

    ``pairs`` is closed under swap on construction.  ``alphabet`` fixes the
    ambient monoid (needed by the enumeration-based operations below).
    """

    alphabet: Alphabet
    flavor: str
    side: str
    pairs: Tuple[Tuple[MonoidElement, MonoidElement], ...]

    def __post_init__(self):
        if self.side not in ("right", "left"):
            raise PreconditionError(f"side must be right or left: {self.side!r}")
        for c, d in self.pairs:
            if c.flavor != self.flavor or d.flavor != self.flavor:
                raise FlavorError("presentation pair flavor mismatch")
        seen = dict.fromkeys(
            p for c, d in self.pairs for p in ((c, d), (d, c))
        )
        object.__setattr__(self, "pairs", tuple(seen))

    @property
    def script_D(self) -> int:
        """Maximum diameter over all components of all pairs."""
        return max((m.diameter for p in self.pairs for m in p), default=0)


@dataclass(frozen=True)
class HSequence:
    """An explicit chain witnessing a u ~ b v under a presentation.

    Right side: a u = c1 t1, di ti = c(i+1) t(i+1), dn tn = b v.
    Left side mirrored (t1 c1 = u a and so on).  Endpoints are carried in
    factored form so the reduction calculus can speak of the multipliers
    u, t1, ..., tn, v.
    """

    side: str
    a: MonoidElement
    u: MonoidElement
    b: MonoidElement
    v: MonoidElement
    steps: Tuple[Tuple[Tuple[MonoidElement, MonoidElement], MonoidElement], ...]

    def _mul(self, outer: MonoidElement, inner: MonoidElement) -> MonoidElement:
        if self.side == "right":
            return multiply(outer, inner)
        return multiply(inner, outer)

    @property
    def start(self) -> MonoidElement:
        return self._mul(self.a, self.u)

    @property
    def end(self) -> MonoidElement:
        return self._mul(self.b, self.v)

    @property
    def multipliers(self) -> Tuple[MonoidElement, ...]:
        return (self.u,) + tuple(t for _, t in self.steps) + (self.v,)

    def __len__(self) -> int:
        return len(self.steps)

    def validate(self, rho: Optional[CongruencePresentation] = None) -> None:
        """Re-check every equation (and H-membership when rho is given)."""
        current = self.start
        for (c, d), t in self.steps:
            if rho is not None and (c, d) not in rho.pairs:
                raise PreconditionError("sequence step pair not in H")
            if self._mul(c, t) != current:
                raise PreconditionError("sequence equation fails")
            current = self._mul(d, t)
        if current != self.end:
            raise PreconditionError("sequence endpoint mismatch")

    def with_endpoints(
        self,
        a: MonoidElement,
        u: MonoidElement,
        b: MonoidElement,
        v: MonoidElement,
    ) -> "HSequence":
        """The same chain with endpoints refactored as a u and b v."""
        out = HSequence(self.side, a, u, b, v, self.steps)
        if out.start != self.start or out.end != self.end:
            raise PreconditionError("refactored endpoints disagree")
        return out


def sequence_weight(s: HSequence) -> int:
    """w(a u) + w(t1) + ... + w(tn) + w(b v)."""
    return s.start.weight + sum(t.weight for _, t in s.steps) + s.end.weight


# ---------------------------------------------------------------------------
# bounded search


def _one_steps(
    rho: CongruencePresentation, m: MonoidElement, max_weight: int
) -> Iterator[Tuple[Tuple[MonoidElement, MonoidElement], MonoidElement, MonoidElement]]:
    """All single H-steps from m: yields ((c, d), t, d t) with m = c t."""
    factors = right_factors if rho.side == "right" else left_factors
    mul = (lambda x, t: multiply(x, t)) if rho.side == "right" else (
        lambda x, t: multiply(t, x)
    )
    for c, d in rho.pairs:
        for t in factors(m, c):
            nxt = mul(d, t)
            if nxt.weight <= max_weight:
                yield (c, d), t, nxt


def relate(
    rho: CongruencePresentation,
    m1: MonoidElement,
    m2: MonoidElement,
    max_weight: int,
    max_nodes: Optional[int] = None,
) -> Optional[HSequence]:
    """Shortest H-sequence from m1 to m2 within the weight bound, or None.

    Breadth-first search on elements of weight <= max_weight with single
    H-steps as edges.  None means "not found within bound", never a proof
    of unrelatedness.
    """
    if m1.flavor != rho.flavor or m2.flavor != rho.flavor:
        raise FlavorError("relate: flavor mismatch with presentation")
    if max_weight < max(m1.weight, m2.weight):
        raise PreconditionError("relate: bound below endpoint weights")
    one = identity(rho.flavor)

    def seq(steps):
        return HSequence(rho.side, m1, one, m2, one, tuple(steps))

    if m1 == m2:
        return seq(())
    frontier = [m1]
    parent: Dict[MonoidElement, tuple] = {m1: None}
    nodes = 1
    while frontier:
        nxt_frontier = []
        for m in frontier:
            for pair, t, nxt in _one_steps(rho, m, max_weight):
                if nxt in parent:
                    continue
                parent[nxt] = (m, pair, t)
                nodes += 1
                if max_nodes is not None and nodes > max_nodes:
                    raise ResourceCapError("relate: node cap exceeded")
                if nxt == m2:
                    steps = []
                    cur = nxt
                    while parent[cur] is not None:
                        prev, pair_, t_ = parent[cur]
                        steps.append((pair_, t_))
                        cur = prev
                    return seq(reversed(steps))
                nxt_frontier.append(nxt)
        frontier = nxt_frontier
    return None


def rho_classes(
    rho: CongruencePresentation, max_weight: int, max_nodes: Optional[int] = None
) -> Dict[MonoidElement, MonoidElement]:
    """Union-find closure of single H-steps over the weight-<= bound ball.

    Returns a map element -> class representative (minimal in sort order).
    Since w(t) <= w(c t), every H-sequence whose products stay within the
    bound is captured; the partition can only be coarser beyond it.
    """
    ball = list(
        enumerate_elements(rho.alphabet, rho.flavor, max_weight=max_weight)
    )
    if max_nodes is not None and len(ball) > max_nodes:
        raise ResourceCapError("rho_classes: ball exceeds node cap")
    parent = {m: m for m in ball}

    def find(m):
        root = m
        while parent[root] != root:
            root = parent[root]
        while parent[m] != root:
            parent[m], m = root, parent[m]
        return root

    def union(m, n):
        rm, rn = find(m), find(n)
        if rm != rn:
            if rn.sort_key() < rm.sort_key():
                rm, rn = rn, rm
            parent[rn] = rm

    for m in ball:
        for _, _, nxt in _one_steps(rho, m, max_weight):
            union(m, nxt)
    return {m: find(m) for m in ball}


# ---------------------------------------------------------------------------
# reduction calculus (right side)


@dataclass(frozen=True)
class ReductionWitness:
    """A witness (y and primed multipliers) that a sequence is reducible."""

    y: MonoidElement
    primed: Tuple[MonoidElement, ...]  # u', t1', ..., tn', v'


def _divides_right(m: MonoidElement, y: MonoidElement) -> bool:
    """True when m = m' y for some m' (same flavor)."""
    p = concat(m.point, invert(y.point))
    if m.flavor in ("FA", "FLA") and not is_positive(p):
        return False
    return translate(p, y.tree.words) <= m.tree.words


def _right_divisor_candidates(m: MonoidElement) -> Iterator[MonoidElement]:
    """All y with m = m' y for some m', in deterministic order."""
    flavor = m.flavor
    pt = m.point
    for cut in range(len(pt) + 1):
        head, y_pt = pt[:cut], pt[cut:]
        if flavor in ("FA", "FLA") and not is_positive(y_pt):
            continue
        high = translate(invert(head), m.tree.words)
        if flavor == "FLA":
            high = frozenset(w for w in high if is_positive(w))
        low = pc_closure({y_pt})
        if not low <= high:
            continue
        for ws in pc_interval(low, high):
            yield MonoidElement(PrefixSet(ws), y_pt, flavor)


def find_reduction(s: HSequence) -> Optional[ReductionWitness]:
    """A reduction witness satisfying Red1-Red3, or None (irreducible).

    Red2 confines y to the common right divisors of the multipliers
    u, t1, ..., tn, v — a finite set — so the search is exhaustive and a
    miss certifies irreducibility.
    """
    if s.side != "right":
        raise PreconditionError("find_reduction works on right-sided sequences")
    s.validate()
    mults = s.multipliers
    seed = min(mults, key=lambda m: (m.weight, m.sort_key()))
    for y in _right_divisor_candidates(seed):
        if y == identity(y.flavor):
            continue
        if not all(_divides_right(m, y) for m in mults):
            continue
        witness = _complete_reduction(s, y)
        if witness is not None:
            return witness
    return None


def _complete_reduction(s: HSequence, y: MonoidElement) -> Optional[ReductionWitness]:
    """Backtracking search for primed multipliers for a fixed y."""
    mults = s.multipliers
    outers = (s.a,) + tuple(c for (c, _), _ in s.steps) + (s.b,)
    inner_next = tuple(d for (_, d), _ in s.steps)
    n = len(s.steps)

    def options(i: int, current: Optional[MonoidElement]):
        # primed candidates for multiplier index i (0 = u, n+1 = v)
        if i == 0:
            for cand in left_factors(mults[0], y):
                yield cand
            return
        # ti' (or v') must recover mults[i] via y and satisfy the chain
        for cand in right_factors(current, outers[i]):
            if multiply(cand, y) == mults[i]:
                yield cand

    def rec(i: int, current: Optional[MonoidElement], acc: list):
        if i == len(mults):
            primed = tuple(acc)
            # Red1 via (W2): some primed product/multiplier must differ
            changed = (
                multiply(s.a, primed[0]) != s.start
                or multiply(s.b, primed[-1]) != s.end
                or any(primed[j] != mults[j] for j in range(1, len(mults) - 1))
            )
            return ReductionWitness(y, primed) if changed else None
        for cand in options(i, current):
            nxt = (
                multiply(s.a, cand)
                if i == 0
                else (multiply(inner_next[i - 1], cand) if i <= n else None)
            )
            got = rec(i + 1, nxt, acc + [cand])
            if got is not None:
                return got
        return None

    return rec(0, None, [])


def irreducible_form(s: HSequence) -> Tuple[HSequence, MonoidElement]:
    """Iterate find_reduction to an irreducible sequence.

    Returns (s', y) with every multiplier of s equal to the corresponding
    multiplier of s' times y.  Terminates because the sequence weight
    strictly decreases at each reduction.
    """
    y_acc = identity(s.u.flavor)
    while True:
        witness = find_reduction(s)
        if witness is None:
            return s, y_acc
        primed = witness.primed
        steps = tuple(
            (pair, primed[i + 1]) for i, (pair, _) in enumerate(s.steps)
        )
        nxt = HSequence(s.side, s.a, primed[0], s.b, primed[-1], steps)
        nxt.validate()
        if sequence_weight(nxt) >= sequence_weight(s):
            raise PreconditionError("reduction failed to decrease weight")
        y_acc = multiply(witness.y, y_acc)
        s = nxt


def _minimal_cofactor(
    mults: Sequence[MonoidElement], primed: Sequence[MonoidElement]
) -> MonoidElement:
    """The minimal-weight z with mults[i] = primed[i] z for all i."""
    best = None
    for z in right_factors(mults[0], primed[0]):
        if all(
            multiply(p, z) == m for p, m in zip(primed[1:], mults[1:])
        ):
            key = (z.weight, z.sort_key())
            if best is None or key < best[0]:
                best = (key, z)
    if best is None:
        raise PreconditionError("no common cofactor exists")
    return best[1]


def peel_last(s: HSequence) -> Tuple[HSequence, MonoidElement]:
    """One application of the dismantling step to an irreducible sequence.

    Drops the last equation, reduces the truncated sequence to irreducible
    form, and returns it with the minimal-weight z carrying the original
    multipliers: u = u' z, ti = ti' z.
    """
    if not s.steps:
        raise PreconditionError("peel_last needs at least one step")
    (c_n, _), t_n = s.steps[-1]
    trunc = HSequence(s.side, s.a, s.u, c_n, t_n, s.steps[:-1])
    reduced, _ = irreducible_form(trunc)
    z = _minimal_cofactor(trunc.multipliers, reduced.multipliers)
    return reduced, z


def decompose_y(s: HSequence, merged: bool = True) -> List[MonoidElement]:
    """Factor u through an irreducible sequence: u = y1 y2 ... ym.

    With ``merged=False`` returns the raw peeling factors
    y(1), ..., y(n), z (one per dismantling step); with ``merged=True``
    idempotent runs are merged into the following non-idempotent, so all
    factors but possibly the last are non-idempotents and each has weight
    bounded by the max weight at diameter max(d(a), d(b), script_D).
    """
    if s.side != "right":
        raise PreconditionError("decompose_y works on right-sided sequences")
    if s.u.flavor != "FLA":
        raise FlavorError("decompose_y is defined on FLA only")
    if find_reduction(s) is not None:
        raise PreconditionError("decompose_y needs an irreducible sequence")
    factors: List[MonoidElement] = []
    while s.steps:
        s, z = peel_last(s)
        factors.append(z)
    factors.append(s.u)  # y(1) = u of the final length-0 sequence
    factors.reverse()
    if not merged:
        return factors
    out: List[MonoidElement] = []
    acc = identity("FLA")
    for f in factors:
        acc = multiply(acc, f)
        if not is_idempotent(f):
            out.append(acc)
            acc = identity("FLA")
    if acc != identity("FLA") or not out:
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# candidate constructions


@dataclass(frozen=True)
class AnnihilatorBounds:
    """The bound data behind an annihilator candidate set."""

    script_D_prime: int
    script_K: int
    script_W: int
    script_W_prime: int

    @property
    def pair_weight_bound(self) -> int:
        return (self.script_K + 3) * self.script_W_prime


def _max_weight_at_diameter(alphabet: Alphabet, d: int) -> int:
    """Max weight of an FLA element of diameter <= d (full tree + point)."""
    k = alphabet.size
    nodes = sum(k ** i for i in range(d + 1))
    return nodes - 1 + d


def annihilator_candidate(
    rho: CongruencePresentation,
    a: MonoidElement,
    relate_bound: int,
    max_nodes: int = 200000,
) -> Tuple[Tuple[Tuple[MonoidElement, MonoidElement], ...], AnnihilatorBounds]:
    """Candidate generating set H' for the right annihilator of a rho.

    H' = {(u, v): a u ~ a v, w(a u), w(a v) <= (K + 3) W'} where K counts
    the rho-classes meeting the diameter-<= 2 max(d(a), script_D) ball and
    W' is the max weight at that doubled diameter.  Relatedness is decided
    within relate_bound, so soundness is exact and completeness is relative
    to the bound.  Raises ResourceCapError when the balls exceed max_nodes.
    """
    if rho.flavor != "FLA" or a.flavor != "FLA":
        raise FlavorError("annihilator_candidate is defined on FLA only")
    if rho.side != "right":
        raise PreconditionError("annihilator_candidate needs a right congruence")
    d_prime = max(a.diameter, rho.script_D)
    w_small = _max_weight_at_diameter(rho.alphabet, d_prime)
    w_prime = _max_weight_at_diameter(rho.alphabet, 2 * d_prime)
    # estimate K: number of rho-classes with a representative of
    # diameter <= 2 d_prime (every relevant class has one)
    classes = rho_classes(rho, max(relate_bound, w_prime), max_nodes)
    small_reps = {
        classes[m]
        for m in classes
        if m.diameter <= 2 * d_prime
    }
    script_K = len(small_reps)
    bounds = AnnihilatorBounds(d_prime, script_K, w_small, w_prime)
    w_bound = bounds.pair_weight_bound
    closure_bound = max(relate_bound, w_bound)
    classes = rho_classes(rho, closure_bound, max_nodes)
    # group the products a u by class and emit same-class pairs
    by_class: Dict[MonoidElement, List[MonoidElement]] = {}
    for u in enumerate_elements(rho.alphabet, "FLA", max_weight=w_bound):
        au = multiply(a, u)
        if au.weight > w_bound:
            continue
        by_class.setdefault(classes[au], []).append(u)
    pairs: List[Tuple[MonoidElement, MonoidElement]] = []
    for rep in sorted(by_class, key=MonoidElement.sort_key):
        us = by_class[rep]
        for i, u in enumerate(us):
            for v in us[i:]:
                pairs.append((u, v))
    return tuple(pairs), bounds


def intersection_candidate(
    rho: CongruencePresentation,
    a: MonoidElement,
    b: MonoidElement,
    relate_bound: int,
    max_nodes: int = 200000,
) -> Tuple[MonoidElement, ...]:
    """Representatives of the classes generating a rho S intersect b rho S.

    Searches the weight-<= relate_bound ball for classes containing both an
    a-multiple and a b-multiple, reduces a witnessing pair to an irreducible
    one, and returns the reduced a-sides (one per class, deterministic).
    Empty means "no common multiple within the bound".
    """
    if rho.flavor != "FLA" or a.flavor != "FLA" or b.flavor != "FLA":
        raise FlavorError("intersection_candidate is defined on FLA only")
    if rho.side != "right":
        raise PreconditionError("intersection_candidate needs a right congruence")
    classes = rho_classes(rho, relate_bound, max_nodes)
    witnesses: Dict[MonoidElement, Tuple[MonoidElement, MonoidElement]] = {}
    for m in sorted(classes, key=MonoidElement.sort_key):
        rep = classes[m]
        if rep in witnesses and witnesses[rep][0] is not None:
            continue
        us = next(iter(right_factors(m, a)), None)
        if us is None:
            continue
        # find a b-multiple in the same class
        partner = witnesses.get(rep, (None, None))[1]
        if partner is None:
            for m2 in sorted(classes, key=MonoidElement.sort_key):
                if classes[m2] == rep and next(iter(right_factors(m2, b)), None) is not None:
                    partner = m2
                    break
        if partner is None:
            continue
        witnesses[rep] = (m, partner)
    reps: List[MonoidElement] = []
    seen_classes = set()
    for rep in sorted(witnesses, key=MonoidElement.sort_key):
        m, m2 = witnesses[rep]
        if m is None or m2 is None:
            continue
        u = next(iter(right_factors(m, a)))
        v = next(iter(right_factors(m2, b)))
        seq = relate(rho, m, m2, relate_bound, max_nodes)
        if seq is None:
            continue
        seq = seq.with_endpoints(a, u, b, v)
        reduced, _ = irreducible_form(seq)
        klass = classes.get(reduced.start, reduced.start)
        if klass not in seen_classes:
            seen_classes.add(klass)
            reps.append(reduced.start)
    return tuple(reps)


# ---------------------------------------------------------------------------
# alphabet projection


def project_alphabet(
    d: MonoidElement,
    z: MonoidElement,
    b: MonoidElement,
    v: MonoidElement,
    pi: Iterable[int],
) -> Tuple[MonoidElement, MonoidElement, MonoidElement]:
    """Push the equation d z = b v down to the sub-alphabet pi.

    pi is a set of positive letter codes containing every letter of D and
    B.  Returns (z', v', x) over pi with d z' = b v' and
    (z, v) = (z', v') x, obtained by peeling leaves carrying foreign
    letters via crack until both sides are clean.
    """
    for m in (d, z, b, v):
        if m.flavor != "FLA":
            raise FlavorError("project_alphabet is defined on FLA only")
    if multiply(d, z) != multiply(b, v):
        raise PreconditionError("equation d z = b v fails")
    pi = frozenset(pi)

    def clean(w: Word) -> bool:
        return all(abs(k) in pi for k in w)

    for m in (d, b):
        if not all(clean(w) for w in m.tree.words):
            raise PreconditionError("pi misses letters of D or B")

    x_acc = identity("FLA")
    while True:
        dirty_z = [w for w in z.tree.leaves() if not clean(w)]
        dirty_v = [w for w in v.tree.leaves() if not clean(w)]
        if not dirty_z and not dirty_v:
            return z, v, x_acc
        if dirty_z:
            x = min(dirty_z, key=_WORD_KEY)
            step = crack_fla(d, z, b, v, x)
            z, v = step.u_prime, step.v_prime
        else:
            x = min(dirty_v, key=_WORD_KEY)
            step = crack_fla(b, v, d, z, x)
            v, z = step.u_prime, step.v_prime
        x_acc = multiply(step.z, x_acc)
