"""Reduced-word arithmetic over a finite alphabet and its formal inverses.

A word is a tuple of nonzero ints: ``+k`` is the alphabet letter with index
``k - 1``, ``-k`` its formal inverse.  All words handed around by this package
are reduced (no adjacent ``c, -c`` pair); constructors reduce eagerly.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

from .errors import ParseError

Word = tuple  # tuple[int, ...]

EPSILON: Word = ()


class Alphabet:
    """An ordered finite set of distinct letter names.

    Iteration order is fixed and total; it is what makes every enumeration in
    the package deterministic.
    """

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if not names:
            raise ValueError("alphabet must contain at least one letter")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate letters in alphabet: {names}")
        for n in names:
            if not n or any(ch in n for ch in "^'(){},"):
                raise ValueError(f"invalid letter name: {n!r}")
        self.names = names
        self._index = {n: i + 1 for i, n in enumerate(names)}

    @property
    def size(self) -> int:
        return len(self.names)

    def code(self, name: str) -> int:
        """Positive letter code (1-based) for a letter name."""
        try:
            return self._index[name]
        except KeyError:
            raise ParseError(f"unknown letter {name!r}") from None

    def name(self, code: int) -> str:
        return self.names[abs(code) - 1]

    def codes(self) -> range:
        """Positive letter codes in canonical order."""
        return range(1, self.size + 1)

    def signed_codes(self) -> tuple:
        """All signed codes, positives first, in canonical order."""
        return tuple(range(1, self.size + 1)) + tuple(
            -c for c in range(1, self.size + 1)
        )

    # -- text rendering -----------------------------------------------------

    def render_word(self, w: Word, empty: str = "e") -> str:
        if not w:
            return empty
        return "".join(
            self.name(c) if c > 0 else self.name(c) + "^-1" for c in w
        )

    def parse_word(self, text: str) -> Word:
        """Inverse of :meth:`render_word`.  Accepts ``e`` or ``1`` for the
        empty word and ``x^-1`` or ``x'`` for inverse letters."""
        s = text.strip()
        if s in ("e", "1", ""):
            return EPSILON
        out = []
        i = 0
        while i < len(s):
            match = None
            # longest-name match keeps multi-character letter names unambiguous
            for name in sorted(self.names, key=len, reverse=True):
                if s.startswith(name, i):
                    match = name
                    break
            if match is None:
                raise ParseError(f"cannot parse word {text!r} at position {i}")
            i += len(match)
            code = self._index[match]
            if s.startswith("^-1", i):
                code = -code
                i += 3
            elif s.startswith("'", i):
                code = -code
                i += 1
            out.append(code)
        w = reduce_word(out)
        if len(w) != len(out):
            raise ParseError(f"word {text!r} is not reduced")
        return w

    def __repr__(self) -> str:
        return f"Alphabet({list(self.names)!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)


def reduce_word(seq: Iterable[int]) -> Word:
    """Free reduction: delete adjacent inverse pairs until none remain."""
    stack: list = []
    for c in seq:
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return tuple(stack)


def concat(u: Word, v: Word) -> Word:
    """Reduced form of the concatenation ``uv`` (both inputs reduced)."""
    if not u:
        return v
    if not v:
        return u
    i = len(u)
    j = 0
    while i > 0 and j < len(v) and u[i - 1] == -v[j]:
        i -= 1
        j += 1
    return u[:i] + v[j:]


def invert(u: Word) -> Word:
    return tuple(-c for c in reversed(u))


def prefixes(u: Word) -> tuple:
    """All prefixes of a reduced word, shortest first; size is len(u) + 1."""
    return tuple(u[:i] for i in range(len(u) + 1))


def common_prefix(u: Word, v: Word):
    """Split off the longest common prefix: returns (p, u', v') with
    u = p + u', v = p + v' and u', v' sharing no nonempty prefix."""
    i = 0
    n = min(len(u), len(v))
    while i < n and u[i] == v[i]:
        i += 1
    return u[:i], u[i:], v[i:]


def is_positive(u: Word) -> bool:
    return all(c > 0 for c in u)


def is_prefix(p: Word, w: Word) -> bool:
    return len(p) <= len(w) and w[: len(p)] == p


def is_suffix(s: Word, w: Word) -> bool:
    return len(s) <= len(w) and w[len(w) - len(s):] == s


def strip_prefix(p: Word, w: Word) -> Optional[Word]:
    """w with literal prefix p removed, or None if p is not a prefix."""
    if is_prefix(p, w):
        return w[len(p):]
    return None


def strip_suffix(s: Word, w: Word) -> Optional[Word]:
    """w with literal suffix s removed, or None if s is not a suffix."""
    if is_suffix(s, w):
        return w[: len(w) - len(s)]
    return None


def reduced_words(alphabet: Alphabet, max_length: int, signed: bool) -> Iterator[Word]:
    """All reduced words of length <= max_length, shortest first, in
    canonical order.  With signed=False only positive words are produced."""
    frontier = [EPSILON]
    yield EPSILON
    letters = alphabet.signed_codes() if signed else tuple(alphabet.codes())
    for _ in range(max_length):
        nxt = []
        for w in frontier:
            for c in letters:
                if w and w[-1] == -c:
                    continue
                nxt.append(w + (c,))
        yield from nxt
        frontier = nxt
