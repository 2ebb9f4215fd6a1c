"""Elements of the free inverse / free ample / free left ample monoids.

An element is a pair (A, a): a finite, nonempty, prefix-closed set A of
reduced words together with a distinguished point a in A.  Multiplication is
(A, a)(B, b) = (A | aB, ab).  The flavor tag restricts where A and a live:

* FI  — A any prefix-closed set of reduced words, a in A;
* FA  — as FI but the point a must be a positive word;
* FLA — every word of A (hence a) must be positive.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import FlavorError, ParseError, PreconditionError
from .words import (
    EPSILON,
    Alphabet,
    Word,
    concat,
    invert,
    is_positive,
    prefixes,
)

FLAVORS = ("FI", "FA", "FLA")

_WORD_KEY = lambda w: (len(w), w)  # noqa: E731  canonical word order


def pc_closure(ws: Iterable[Word]) -> frozenset:
    """Prefix closure of a set of reduced words (always contains epsilon)."""
    out = {EPSILON}
    for w in ws:
        for p in prefixes(w):
            out.add(p)
    return frozenset(out)


def is_prefix_closed(ws: frozenset) -> bool:
    return all((not w or w[:-1] in ws) for w in ws) and EPSILON in ws


def translate(g: Word, ws: Iterable[Word]) -> frozenset:
    """The translated set gX = {reduced gw : w in X}."""
    return frozenset(concat(g, w) for w in ws)


@dataclass(frozen=True)
class PrefixSet:
    """A finite nonempty prefix-closed set of reduced words (a Munn tree)."""

    words: frozenset

    def __post_init__(self):
        if not isinstance(self.words, frozenset):
            object.__setattr__(self, "words", frozenset(self.words))
        if not is_prefix_closed(self.words):
            raise PreconditionError(f"set is not prefix-closed: {sorted(self.words)}")

    @staticmethod
    def closure(ws: Iterable[Word]) -> "PrefixSet":
        return PrefixSet(pc_closure(ws))

    def __contains__(self, w: Word) -> bool:
        return w in self.words

    def __iter__(self) -> Iterator[Word]:
        return iter(self.sorted_words())

    def __len__(self) -> int:
        return len(self.words)

    def sorted_words(self) -> Tuple[Word, ...]:
        return tuple(sorted(self.words, key=_WORD_KEY))

    @property
    def diameter(self) -> int:
        return max(len(w) for w in self.words)

    def leaves(self) -> Tuple[Word, ...]:
        """Members that are not proper prefixes of other members."""
        parents = {w[:-1] for w in self.words if w}
        return tuple(
            sorted((w for w in self.words if w not in parents), key=_WORD_KEY)
        )

    def is_positive(self) -> bool:
        return all(is_positive(w) for w in self.words)

    def union(self, other: Iterable[Word]) -> "PrefixSet":
        ws = other.words if isinstance(other, PrefixSet) else frozenset(other)
        return PrefixSet(self.words | ws)


@dataclass(frozen=True)
class MonoidElement:
    """A pair (tree, point) tagged with a flavor."""

    tree: PrefixSet
    point: Word
    flavor: str

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise FlavorError(f"unknown flavor {self.flavor!r}")
        if self.point not in self.tree:
            raise PreconditionError(
                f"point {self.point} not in tree {self.tree.sorted_words()}"
            )
        if self.flavor == "FLA" and not self.tree.is_positive():
            raise FlavorError("FLA element must have an all-positive tree")
        if self.flavor == "FA" and not is_positive(self.point):
            raise FlavorError("FA element must have a positive point")

    def __mul__(self, other: "MonoidElement") -> "MonoidElement":
        return multiply(self, other)

    @property
    def weight(self) -> int:
        return len(self.tree) - 1 + len(self.point)

    @property
    def diameter(self) -> int:
        return self.tree.diameter

    def sort_key(self):
        return (
            self.diameter,
            len(self.tree),
            self.tree.sorted_words(),
            _WORD_KEY(self.point),
        )

    def with_flavor(self, flavor: str) -> "MonoidElement":
        return MonoidElement(self.tree, self.point, flavor)


def element(ws: Iterable[Word], point: Word, flavor: str) -> MonoidElement:
    return MonoidElement(PrefixSet(frozenset(ws)), point, flavor)


def identity(flavor: str) -> MonoidElement:
    return element({EPSILON}, EPSILON, flavor)


def generator(code: int, flavor: str) -> MonoidElement:
    """The natural injection of an alphabet letter: x -> ({e, x}, x)."""
    if code <= 0:
        raise PreconditionError("generator takes a positive letter code")
    return element({EPSILON, (code,)}, (code,), flavor)


def multiply(m1: MonoidElement, m2: MonoidElement) -> MonoidElement:
    if m1.flavor != m2.flavor:
        raise FlavorError(f"flavor mismatch: {m1.flavor} vs {m2.flavor}")
    ws = m1.tree.words | translate(m1.point, m2.tree.words)
    return MonoidElement(PrefixSet(ws), concat(m1.point, m2.point), m1.flavor)


def product(ms: Sequence[MonoidElement], flavor: Optional[str] = None) -> MonoidElement:
    out = identity(flavor or ms[0].flavor)
    for m in ms:
        out = multiply(out, m)
    return out


def inverse(m: MonoidElement) -> MonoidElement:
    """(A, a)^{-1} = (a^{-1}A, a^{-1}).  Raises FlavorError when the result
    leaves the flavor (FA/FLA elements with non-idempotent point)."""
    ws = translate(invert(m.point), m.tree.words)
    return MonoidElement(PrefixSet(ws), invert(m.point), m.flavor)


def plus(m: MonoidElement) -> MonoidElement:
    """(A, a)^+ = (A, e)."""
    return MonoidElement(m.tree, EPSILON, m.flavor)


def star(m: MonoidElement) -> MonoidElement:
    """(A, a)^* = (a^{-1}A, e).  Not available for FLA unless idempotent."""
    ws = translate(invert(m.point), m.tree.words)
    return MonoidElement(PrefixSet(ws), EPSILON, m.flavor)


def weight(m: MonoidElement) -> int:
    return m.weight


def diameter(m: MonoidElement) -> int:
    return m.diameter


def leaves(tree: PrefixSet) -> Tuple[Word, ...]:
    return tree.leaves()


def is_idempotent(m: MonoidElement) -> bool:
    return m.point == EPSILON


# ---------------------------------------------------------------------------
# prefix-closed set enumeration


def pc_sets_by_diameter(
    alphabet: Alphabet, max_diameter: int, signed: bool
) -> List[frozenset]:
    """All prefix-closed sets of reduced words of length <= max_diameter.

    Exhaustive recursion over subtree shapes.  Feasible only at desk scale;
    for signed alphabets the count grows doubly exponentially with depth.
    """
    letters = alphabet.signed_codes() if signed else tuple(alphabet.codes())
    cache: dict = {}

    def subtrees(excluded: int, depth: int) -> List[frozenset]:
        # all prefix-closed sets of suffix-words rooted here, as sets of words
        key = (excluded, depth)
        if key in cache:
            return cache[key]
        if depth == 0:
            out = [frozenset({EPSILON})]
        else:
            child_choices = []
            for c in letters:
                if c == excluded:
                    continue
                subs = subtrees(-c, depth - 1)
                # None (child absent) or a subtree shifted under letter c
                choices = [None] + [
                    frozenset((c,) + w for w in s) for s in subs
                ]
                child_choices.append(choices)
            out = []
            for combo in itertools.product(*child_choices):
                s = frozenset({EPSILON}).union(*(x for x in combo if x is not None))
                out.append(s)
        cache[key] = out
        return out

    sets = subtrees(0, max_diameter)
    return sorted(sets, key=lambda s: (max(len(w) for w in s), len(s), sorted(s, key=_WORD_KEY)))


def pc_sets_by_size(
    alphabet: Alphabet, max_size: int, signed: bool, max_diameter: Optional[int] = None
) -> List[frozenset]:
    """All prefix-closed sets with at most max_size words, generated by
    repeated single-leaf extension with dedup."""
    letters = alphabet.signed_codes() if signed else tuple(alphabet.codes())
    seen = {frozenset({EPSILON})}
    frontier = [frozenset({EPSILON})]
    for _ in range(max_size - 1):
        nxt = []
        for s in frontier:
            for w in s:
                if max_diameter is not None and len(w) >= max_diameter:
                    continue
                for c in letters:
                    if w and w[-1] == -c:
                        continue
                    ext = w + (c,)
                    if ext in s:
                        continue
                    s2 = s | {ext}
                    if s2 not in seen:
                        seen.add(s2)
                        nxt.append(s2)
        frontier = nxt
    return sorted(seen, key=lambda s: (max(len(w) for w in s), len(s), sorted(s, key=_WORD_KEY)))


def pc_interval(low: frozenset, high: frozenset) -> Iterator[frozenset]:
    """All prefix-closed sets T with low <= T <= high.

    Assumes low and high are prefix-closed and low <= high.  Deterministic
    order; a word may enter T only when its parent is already present.
    """
    free = sorted(high - low, key=_WORD_KEY)
    n = len(free)

    def rec(i: int, chosen: set):
        if i == n:
            yield frozenset(low | chosen)
            return
        w = free[i]
        # exclude
        yield from rec(i + 1, chosen)
        # include, if parent present
        if not w or w[:-1] in low or w[:-1] in chosen:
            chosen.add(w)
            yield from rec(i + 1, chosen)
            chosen.discard(w)

    if not low <= high:
        return iter(())
    return rec(0, set())


def right_factors(m: MonoidElement, c: MonoidElement) -> Iterator[MonoidElement]:
    """All t (same flavor) with c * t == m, in deterministic order.

    From (C, c)(T, t) = (C | cT, ct) = (M, m): t = c^-1 m is forced, the set
    cT must cover M - C and stay inside M, so T ranges over the interval of
    prefix-closed sets between pc_closure(c^-1 (M - C) | {t}) and c^-1 M.
    """
    if m.flavor != c.flavor:
        raise FlavorError(f"flavor mismatch: {m.flavor} vs {c.flavor}")
    flavor = m.flavor
    if not c.tree.words <= m.tree.words or c.point not in m.tree.words:
        return
    t_pt = concat(invert(c.point), m.point)
    high = translate(invert(c.point), m.tree.words)
    low = pc_closure(translate(invert(c.point), m.tree.words - c.tree.words) | {t_pt})
    if flavor == "FLA":
        if not all(is_positive(w) for w in low):
            return
        high = frozenset(w for w in high if is_positive(w))
    elif flavor == "FA" and not is_positive(t_pt):
        return
    for ws in pc_interval(low, high):
        yield MonoidElement(PrefixSet(ws), t_pt, flavor)


def left_factors(m: MonoidElement, c: MonoidElement) -> Iterator[MonoidElement]:
    """All t (same flavor) with t * c == m, in deterministic order.

    From (T, t)(C, c) = (T | tC, tc) = (M, m): t = m c^-1 is forced; tC must
    lie inside M, and T ranges over the interval between
    pc_closure((M - tC) | {t}) and M.
    """
    if m.flavor != c.flavor:
        raise FlavorError(f"flavor mismatch: {m.flavor} vs {c.flavor}")
    flavor = m.flavor
    t_pt = concat(m.point, invert(c.point))
    if flavor in ("FA", "FLA") and not is_positive(t_pt):
        return
    shifted = translate(t_pt, c.tree.words)
    if not shifted <= m.tree.words:
        return
    low = pc_closure((m.tree.words - shifted) | {t_pt})
    if not low <= m.tree.words:
        return
    for ws in pc_interval(low, m.tree.words):
        yield MonoidElement(PrefixSet(ws), t_pt, flavor)


def enumerate_elements(
    alphabet: Alphabet,
    flavor: str,
    max_diameter: Optional[int] = None,
    max_weight: Optional[int] = None,
) -> Iterator[MonoidElement]:
    """Exhaustive, deterministic stream of elements within a finite bound.

    Exactly one of max_diameter / max_weight must be given.  Order: by
    diameter, then tree size, then tree words, then point.
    """
    if (max_diameter is None) == (max_weight is None):
        raise PreconditionError("give exactly one of max_diameter / max_weight")
    signed = flavor != "FLA"
    if max_diameter is not None:
        sets = pc_sets_by_diameter(alphabet, max_diameter, signed)
    else:
        sets = pc_sets_by_size(alphabet, max_weight + 1, signed, max_diameter=max_weight)
    for s in sets:
        size = len(s)
        for p in sorted(s, key=_WORD_KEY):
            if flavor == "FA" and not is_positive(p):
                continue
            if max_weight is not None and size - 1 + len(p) > max_weight:
                continue
            yield MonoidElement(PrefixSet(s), p, flavor)


# ---------------------------------------------------------------------------
# text / JSON / DOT


def render_element(m: MonoidElement, alphabet: Alphabet, empty: str = "e") -> str:
    inner = ",".join(alphabet.render_word(w, empty) for w in m.tree.sorted_words())
    return f"({{{inner}}},{alphabet.render_word(m.point, empty)})"


def parse_element(text: str, alphabet: Alphabet, flavor: str) -> MonoidElement:
    s = "".join(text.split())
    if not (s.startswith("({") and s.endswith(")")):
        raise ParseError(f"bad element literal: {text!r}")
    body = s[2:-1]
    try:
        set_part, point_part = body.rsplit("},", 1)
    except ValueError:
        raise ParseError(f"bad element literal: {text!r}") from None
    ws = frozenset(alphabet.parse_word(t) for t in set_part.split(",") if t != "")
    point = alphabet.parse_word(point_part)
    try:
        return MonoidElement(PrefixSet(ws), point, flavor)
    except (PreconditionError, FlavorError) as exc:
        raise ParseError(str(exc)) from None


def element_to_json(m: MonoidElement, alphabet: Alphabet) -> dict:
    return {
        "set": [alphabet.render_word(w) for w in m.tree.sorted_words()],
        "point": alphabet.render_word(m.point),
        "flavor": m.flavor,
    }


def element_from_json(obj: dict, alphabet: Alphabet) -> MonoidElement:
    ws = frozenset(alphabet.parse_word(t) for t in obj["set"])
    return MonoidElement(PrefixSet(ws), alphabet.parse_word(obj["point"]), obj["flavor"])


def element_to_dot(m: MonoidElement, alphabet: Alphabet) -> str:
    lines = ["digraph munn {", "  node [shape=circle];"]
    for w in m.tree.sorted_words():
        lines.append(f'  "{alphabet.render_word(w)}";')
    for w in m.tree.sorted_words():
        if w:
            parent = alphabet.render_word(w[:-1])
            label = alphabet.render_word((w[-1],))
            lines.append(f'  "{parent}" -> "{alphabet.render_word(w)}" [label="{label}"];')
    lines.append(f'  "{alphabet.render_word(m.point)}" [peripheries=2];')
    lines.append("}")
    return "\n".join(lines)


def element_json_str(m: MonoidElement, alphabet: Alphabet) -> str:
    return json.dumps(element_to_json(m, alphabet), sort_keys=True)
