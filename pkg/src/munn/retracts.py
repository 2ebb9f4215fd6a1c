"""Retract maps and transfer of coherency data.

A retract of a monoid S is the image T of an idempotent endomorphism phi.
Coherency data transfers along phi: a generating set X for a right
annihilator computed in S maps to the generating set X phi in T, and
ambient witnessing sequences restrict to T by applying phi to their
multipliers.  The one shipped instance is the projection
FLA -> free monoid, (A, a) |-> (down-set of a, a).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Tuple

from .errors import PreconditionError
from .words import Alphabet, Word
from .elements import (
    MonoidElement,
    PrefixSet,
    multiply,
    pc_closure,
)
from .congruences import CongruencePresentation, HSequence, relate


def random_element(
    alphabet: Alphabet, flavor: str, rng: random.Random, max_diameter: int = 4
) -> MonoidElement:
    """A random element, built from a handful of random reduced words."""
    signed = flavor != "FLA"
    letters = alphabet.signed_codes() if signed else tuple(alphabet.codes())

    def word():
        out: List[int] = []
        for _ in range(rng.randint(0, max_diameter)):
            choices = [c for c in letters if not out or c != -out[-1]]
            out.append(rng.choice(choices))
        return tuple(out)

    ws = pc_closure({word() for _ in range(rng.randint(1, 3))})
    points = sorted(ws, key=lambda w: (len(w), w))
    if flavor == "FA":
        points = [w for w in points if all(k > 0 for k in w)]
    return MonoidElement(PrefixSet(ws), rng.choice(points), flavor)


@dataclass(frozen=True)
class RetractMap:
    """An idempotent endomorphism phi, given by an evaluator on elements.

    Construction spot-checks the homomorphism law phi(m n) = phi(m) phi(n)
    and idempotence phi(phi(m)) = phi(m) on random pairs; the checks are
    probabilistic and guard user-supplied maps.
    """

    flavor: str
    alphabet: Alphabet
    func: Callable[[MonoidElement], MonoidElement]

    def __call__(self, m: MonoidElement) -> MonoidElement:
        return self.func(m)

    def fixes(self, m: MonoidElement) -> bool:
        """True when m lies in the retract T = Im phi."""
        return self.func(m) == m

    def validate(self, samples: int = 1000, max_diameter: int = 4, seed: int = 0) -> None:
        rng = random.Random(seed)
        for _ in range(samples):
            m = random_element(self.alphabet, self.flavor, rng, max_diameter)
            n = random_element(self.alphabet, self.flavor, rng, max_diameter)
            if self.func(multiply(m, n)) != multiply(self.func(m), self.func(n)):
                raise PreconditionError("retract map is not a homomorphism")
            if self.func(self.func(m)) != self.func(m):
                raise PreconditionError("retract map is not idempotent")


def fla_to_free_retract(alphabet: Alphabet) -> RetractMap:
    """The projection (A, a) |-> (down-set of a, a) of FLA onto the free monoid.

    Its image is the copy {(down-set of a, a) : a positive} of the free
    monoid inside FLA; validated on construction.
    """

    def func(m: MonoidElement) -> MonoidElement:
        return MonoidElement(PrefixSet(pc_closure({m.point})), m.point, m.flavor)

    phi = RetractMap("FLA", alphabet, func)
    phi.validate()
    return phi


def transfer_annihilator(
    phi: RetractMap, pairs: Iterable[Tuple[MonoidElement, MonoidElement]]
) -> Tuple[Tuple[MonoidElement, MonoidElement], ...]:
    """X phi = {(u phi, v phi)}: the image of an ambient generating set.

    If X generates the annihilator r(a rho') in the ambient monoid with a
    in the retract, X phi generates r(a rho) in the retract.
    """
    return tuple((phi(u), phi(v)) for u, v in pairs)


def restrict_congruence(
    phi: RetractMap, rho_ambient: CongruencePresentation
) -> Callable[[MonoidElement, MonoidElement, int], Optional[HSequence]]:
    """A relatedness oracle on T for the restriction of an ambient congruence.

    The generators of rho_ambient must lie in T.  The returned callable
    relates t1, t2 in T by an ambient bounded search, then maps every
    multiplier through phi, which yields a T-internal witness (the
    generator components are fixed by phi); the result is re-validated.
    A None result only means "not found within bound".
    """
    for c, d in rho_ambient.pairs:
        if not phi.fixes(c) or not phi.fixes(d):
            raise PreconditionError("presentation generators must lie in the retract")

    def oracle(t1: MonoidElement, t2: MonoidElement, max_weight: int) -> Optional[HSequence]:
        if not phi.fixes(t1) or not phi.fixes(t2):
            raise PreconditionError("endpoints must lie in the retract")
        seq = relate(rho_ambient, t1, t2, max_weight)
        if seq is None:
            return None
        mapped = HSequence(
            seq.side,
            phi(seq.a),
            phi(seq.u),
            phi(seq.b),
            phi(seq.v),
            tuple((pair, phi(t)) for pair, t in seq.steps),
        )
        mapped.validate(rho_ambient)
        return mapped

    return oracle
