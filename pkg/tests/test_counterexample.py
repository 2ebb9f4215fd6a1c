import pytest

from munn.counterexample import (
    A_GEN,
    ALPHABET,
    B_GEN,
    decide_rho,
    decide_tau,
    path_element,
    refute_finite_generation,
    tau_pairs_up_to_weight,
)
from munn.elements import element, generator, identity, multiply
from munn.errors import FlavorError, PreconditionError
from munn.words import EPSILON

ONE = identity("FI")


def test_generators_golden():
    assert A_GEN == element([EPSILON, (1,)], (1,), "FI")
    assert B_GEN == element([EPSILON, (2,)], (2,), "FI")


def test_path_element_shape():
    p = path_element(3)
    assert p.i == 3
    assert p.element.tree.words == {EPSILON, (2,), (2, 1), (2, 1, 1), (2, 1, 1, 1)}
    assert p.element.point == EPSILON
    assert path_element(0).element.tree.words == {EPSILON, (2,)}
    with pytest.raises(PreconditionError):
        path_element(-1)


def test_decide_rho_basics():
    assert decide_rho(ONE, ONE) == (0, 0)
    assert decide_rho(ONE, A_GEN) == (1, 0)
    # u rho (u a^3) always, with minimal total exponents
    u = path_element(2).element
    n, m = decide_rho(u, multiply(u, multiply(A_GEN, A_GEN)))
    assert n - m == 2
    assert decide_rho(ONE, B_GEN) is None


def test_decide_witnesses_verify():
    for i in range(1, 6):
        u = path_element(i).element
        v = path_element(i + 1).element
        assert decide_rho(u, v) is None  # distinct paths are rho-separated
        w = decide_tau(u, v)  # but tau-related
        assert w is not None
        n, m = w
        lhs, rhs = multiply(u, B_GEN), multiply(v, B_GEN)
        for _ in range(n):
            lhs = multiply(lhs, A_GEN)
        for _ in range(m):
            rhs = multiply(rhs, A_GEN)
        assert lhs == rhs


def test_flavor_and_alphabet_guard():
    with pytest.raises(FlavorError):
        decide_rho(identity("FLA"), identity("FLA"))
    with pytest.raises(PreconditionError):
        decide_rho(generator(3, "FI"), ONE)  # 3rd letter is out of range


def test_tau_pairs_sound_and_deduplicated():
    pairs = tau_pairs_up_to_weight(2)
    assert pairs
    seen = set()
    for u, v in pairs:
        assert u != v and (v, u) not in seen  # one entry per unordered pair
        seen.add((u, v))
        assert decide_tau(u, v) is not None


def test_refutation_small():
    pairs = tau_pairs_up_to_weight(3)
    kmin = max(len(c.tree) for p in pairs for c in p) + 1
    rep = refute_finite_generation(pairs, max(kmin, 5))
    assert rep.refuted and rep.class_is_singleton
    assert rep.tau_witness is not None
    assert "REFUTED" in rep.summary()


def test_refutation_preconditions():
    with pytest.raises(PreconditionError):
        refute_finite_generation(((ONE, B_GEN),), 6)  # pair outside tau
    with pytest.raises(PreconditionError):
        refute_finite_generation(((ONE, A_GEN),), 1)  # k too small


def test_empty_h_refuted():
    assert refute_finite_generation((), 1).refuted
