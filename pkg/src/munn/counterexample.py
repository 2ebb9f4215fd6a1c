"""The witness that FI, FA and FLA are not left coherent.

Over the alphabet {x, y}, let a = ({e,x}, x) and b = ({e,y}, y), let rho be
the left congruence generated by (a, 1), and let tau be the left
annihilator of b rho, i.e. u tau v iff u b rho v b.  Then

* u rho v  iff  u a^n = v a^m for some n, m >= 0 (decide_rho);
* u tau v  iff  u b a^n = v b a^m for some n, m >= 0 (decide_tau);
* the path elements (U_i, e) with U_i = {e, y, yx, ..., yx^i} are all
  tau-related, yet for any finite symmetric H inside tau and any k larger
  than every first-component size in H, every single H-step fixes
  (U_k, e), so the <H>-class of (U_k, e) is a singleton — H cannot
  generate tau (refute_finite_generation).

Both deciders are exact: the search bound N on the exponents is safe
because beyond it the appended x-tail grows the second coordinate
monotonically (asserted at runtime).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import FlavorError, PreconditionError
from .words import Alphabet, EPSILON
from .elements import (
    MonoidElement,
    PrefixSet,
    element,
    identity,
    left_factors,
    multiply,
)

ALPHABET = Alphabet(("x", "y"))
X, Y = 1, 2

A_GEN = element([EPSILON, (X,)], (X,), "FI")  # a = ({e,x}, x)
B_GEN = element([EPSILON, (Y,)], (Y,), "FI")  # b = ({e,y}, y)


@dataclass(frozen=True)
class PathElement:
    """(U_i, e) with U_i = {e, y, yx, ..., yx^i}, a single path."""

    i: int
    element: MonoidElement


def path_element(i: int) -> PathElement:
    if i < 0:
        raise PreconditionError("path index must be nonnegative")
    ws = [EPSILON] + [(Y,) + (X,) * j for j in range(i + 1)]
    return PathElement(i, element(ws, EPSILON, "FI"))


def _check_flavor(m: MonoidElement) -> None:
    if m.flavor != "FI":
        raise FlavorError("the counterexample lives in FI over {x, y}")
    if any(abs(k) > 2 for w in m.tree.words for k in w):
        raise PreconditionError("element uses letters outside {x, y}")


def _search_power_match(
    u: MonoidElement, v: MonoidElement
) -> Optional[Tuple[int, int]]:
    """The least (n, m) with u a^n = v a^m, searched up to the safe bound."""
    bound = (
        len(u.point) + len(v.point) + u.diameter + v.diameter + 2
    )
    u_powers = [u]
    v_powers = [v]
    for _ in range(bound + 1):
        u_powers.append(multiply(u_powers[-1], A_GEN))
        v_powers.append(multiply(v_powers[-1], A_GEN))
    # beyond the bound the appended x-tail grows the point monotonically,
    # so no further matches can appear; fail loudly if that ever breaks
    for seq in (u_powers, v_powers):
        if not len(seq[-1].point) > len(seq[-2].point) > len(seq[-3].point):
            raise PreconditionError("power tail failed to grow monotonically")
    for total in range(2 * bound + 1):
        for n in range(min(total, bound) + 1):
            m = total - n
            if m > bound:
                continue
            if u_powers[n] == v_powers[m]:
                return (n, m)
    return None


def decide_rho(u: MonoidElement, v: MonoidElement) -> Optional[Tuple[int, int]]:
    """Exact decision of u rho v: witnessing (n, m) with u a^n = v a^m."""
    _check_flavor(u)
    _check_flavor(v)
    return _search_power_match(u, v)


def decide_tau(u: MonoidElement, v: MonoidElement) -> Optional[Tuple[int, int]]:
    """Exact decision of u tau v: witnessing (n, m) with u b a^n = v b a^m."""
    _check_flavor(u)
    _check_flavor(v)
    return _search_power_match(multiply(u, B_GEN), multiply(v, B_GEN))


@dataclass(frozen=True)
class RefutationReport:
    """Outcome of checking a finite H against tau."""

    refuted: bool
    k: int
    u_k: MonoidElement
    u_k1: MonoidElement
    tau_witness: Optional[Tuple[int, int]]
    factorizations: int
    class_is_singleton: bool

    def summary(self) -> str:
        lines = [
            f"k = {self.k}; checked {self.factorizations} left factorizations"
            f" (U_k, e) = t c over H",
            f"<H>-class of (U_k, e) singleton: {self.class_is_singleton}",
            f"(U_k, e) tau (U_k+1, e) via exponents: {self.tau_witness}",
            "REFUTED: H does not generate tau"
            if self.refuted
            else "NOT REFUTED (preconditions or singleton check failed)",
        ]
        return "\n".join(lines)


def refute_finite_generation(
    pairs: Sequence[Tuple[MonoidElement, MonoidElement]], k: int
) -> RefutationReport:
    """Refute that a finite symmetric H inside tau generates tau.

    Requires every pair tau-related and k > |S| for every component (S, s)
    of H.  Enumerates every left factorization (U_k, e) = t c with (c, d)
    in H and checks t d = (U_k, e); when all steps fix (U_k, e), its
    <H>-class is a singleton while decide_tau relates it to (U_k+1, e).
    """
    sym: List[Tuple[MonoidElement, MonoidElement]] = []
    for c, d in pairs:
        for p in ((c, d), (d, c)):
            if p not in sym:
                sym.append(p)
    for c, d in sym:
        _check_flavor(c)
        _check_flavor(d)
        if decide_tau(c, d) is None:
            raise PreconditionError("H contains a pair outside tau")
        if k <= len(c.tree):
            raise PreconditionError("k must exceed every component size in H")
    u_k = path_element(k).element
    u_k1 = path_element(k + 1).element
    singleton = True
    count = 0
    for c, d in sym:
        for t in left_factors(u_k, c):
            count += 1
            if multiply(t, c) != u_k:
                raise PreconditionError("left factorization failed to re-multiply")
            if multiply(t, d) != u_k:
                singleton = False
    witness = decide_tau(u_k, u_k1)
    return RefutationReport(
        refuted=singleton and witness is not None,
        k=k,
        u_k=u_k,
        u_k1=u_k1,
        tau_witness=witness,
        factorizations=count,
        class_is_singleton=singleton,
    )


def tau_pairs_up_to_weight(max_weight: int) -> Tuple[Tuple[MonoidElement, MonoidElement], ...]:
    """All tau-related pairs with both components of weight <= max_weight."""
    from .elements import enumerate_elements

    ball = list(enumerate_elements(ALPHABET, "FI", max_weight=max_weight))
    out = []
    for i, u in enumerate(ball):
        for v in ball[i + 1 :]:
            if decide_tau(u, v) is not None:
                out.append((u, v))
    return tuple(out)
