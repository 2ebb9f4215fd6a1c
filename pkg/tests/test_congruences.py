import itertools
import random

import pytest

from conftest import AB1, AB2, ball_by_weight
from munn.congruences import (
    CongruencePresentation,
    HSequence,
    annihilator_candidate,
    decompose_y,
    find_reduction,
    intersection_candidate,
    irreducible_form,
    project_alphabet,
    relate,
    rho_classes,
    sequence_weight,
    _max_weight_at_diameter,
)
from munn.elements import (
    element,
    generator,
    identity,
    is_idempotent,
    multiply,
)
from munn.errors import PreconditionError, ResourceCapError

ONE = identity("FLA")
GX = generator(1, "FLA")
GY = generator(2, "FLA")


def _pres(pairs, alphabet=AB2, side="right"):
    return CongruencePresentation(alphabet, "FLA", side, tuple(pairs))


def test_presentation_symmetrized_and_deduped():
    rho = _pres([(GX, ONE), (ONE, GX), (GX, ONE)])
    assert len(rho.pairs) == 2
    assert set(rho.pairs) == {(GX, ONE), (ONE, GX)}
    assert rho.script_D == 1


def test_relate_reflexive_and_one_step():
    rho = _pres([(GX, ONE)])
    assert len(relate(rho, ONE, ONE, 5)) == 0
    s = relate(rho, ONE, GX, 5)
    assert len(s) == 1
    s.validate(rho)
    assert s.start == ONE and s.end == GX


def test_relate_bound_precondition_and_cap():
    rho = _pres([(GX, ONE)])
    with pytest.raises(PreconditionError):
        relate(rho, multiply(GX, GX), ONE, 1)
    with pytest.raises(ResourceCapError):
        relate(rho, ONE, element([(), (2,), (2, 2)], (2, 2), "FLA"), 8,
               max_nodes=3)


def test_relate_agrees_with_union_find():
    rng = random.Random(3)
    ball4 = list(ball_by_weight("FLA", 4))
    for _ in range(5):
        rho = _pres([(rng.choice(ball4), rng.choice(ball4)) for _ in range(2)])
        classes = rho_classes(rho, 5)
        sample = rng.sample(list(classes), 20)
        for m1 in sample:
            for m2 in sample[:8]:
                seq = relate(rho, m1, m2, 5)
                assert (seq is not None) == (classes[m1] == classes[m2])
                if seq is not None:
                    seq.validate(rho)
                    assert seq.start == m1 and seq.end == m2


def test_sequence_weight_definition():
    rho = _pres([(GX, GY)])
    seq = relate(rho, GX, GY, 6)
    assert sequence_weight(seq) == GX.weight + GY.weight + sum(
        t.weight for _, t in seq.steps
    )


def _related_pair(rho, bound=6):
    classes = rho_classes(rho, bound)
    ms = sorted(classes, key=lambda m: m.weight)
    for m1, m2 in itertools.combinations(ms[:40], 2):
        if m1 != m2 and classes[m1] == classes[m2]:
            return m1, m2
    return None


def test_irreducible_form_roundtrip_and_blowup():
    rng = random.Random(17)
    ball4 = list(ball_by_weight("FLA", 4))
    checked = 0
    while checked < 12:
        rho = _pres([(rng.choice(ball4), rng.choice(ball4)) for _ in range(2)])
        pair = _related_pair(rho)
        if pair is None:
            continue
        checked += 1
        seq = relate(rho, pair[0], pair[1], 6)
        irr, y = irreducible_form(seq)
        irr.validate(rho)
        assert find_reduction(irr) is None
        for m_orig, m_red in zip(seq.multipliers, irr.multipliers):
            assert multiply(m_red, y) == m_orig
        # right-multiplying all multipliers by a non-idempotent makes the
        # sequence reducible again
        z = rng.choice([m for m in ball4 if not is_idempotent(m)])
        blown = HSequence(
            "right", seq.a, multiply(seq.u, z), seq.b, multiply(seq.v, z),
            tuple((p, multiply(t, z)) for p, t in seq.steps),
        )
        blown.validate(rho)
        assert find_reduction(blown) is not None


def test_decompose_y_properties():
    rng = random.Random(19)
    ball4 = list(ball_by_weight("FLA", 4))
    checked = 0
    while checked < 8:
        rho = _pres([(rng.choice(ball4), rng.choice(ball4)) for _ in range(2)])
        pair = _related_pair(rho)
        if pair is None:
            continue
        seq = relate(rho, pair[0], pair[1], 6)
        irr, _ = irreducible_form(seq)
        if len(irr) == 0:
            continue
        checked += 1
        ys = decompose_y(irr)
        prod = ONE
        for f in ys:
            prod = multiply(prod, f)
        assert prod == irr.u  # recombination
        assert all(not is_idempotent(f) for f in ys[:-1])  # merged runs
        w_cap = _max_weight_at_diameter(
            AB2, max(irr.a.diameter, irr.b.diameter, rho.script_D)
        )
        assert all(f.weight <= w_cap for f in ys)
        raw = decompose_y(irr, merged=False)
        d_cap = max(irr.a.diameter, irr.b.diameter, rho.script_D)
        assert all(f.diameter <= d_cap for f in raw)


X1 = generator(1, "FLA")
RHO1 = CongruencePresentation(
    AB1, "FLA", "right", ((multiply(X1, X1), X1),)
)


def test_annihilator_candidate_sound():
    pairs, bounds = annihilator_candidate(RHO1, ONE, relate_bound=10)
    assert pairs
    assert bounds.pair_weight_bound == (bounds.script_K + 3) * bounds.script_W_prime
    classes = rho_classes(RHO1, max(10, bounds.pair_weight_bound))
    for u, v in pairs[:300]:
        assert classes[u] == classes[v]


def test_annihilator_empty_presentation_gives_diagonal():
    rho0 = CongruencePresentation(AB1, "FLA", "right", ())
    pairs, _ = annihilator_candidate(rho0, ONE, relate_bound=4)
    assert all(u == v for u, v in pairs)


def test_intersection_candidate():
    reps = intersection_candidate(RHO1, X1, multiply(X1, X1), relate_bound=10)
    assert reps
    rho_triv = _pres(())
    assert intersection_candidate(rho_triv, GX, GY, relate_bound=6) == ()
    assert intersection_candidate(rho_triv, GX, GX, relate_bound=6)


def test_project_alphabet():
    from munn.words import Alphabet

    ab3 = Alphabet(("x", "y", "w"))
    d = element([(), (1,)], (1,), "FLA")
    b = identity("FLA")
    z = element([(), (1,), (1, 3)], (1,), "FLA")  # carries the foreign letter w
    v = multiply(d, z)
    z2, v2, x = project_alphabet(d, z, b, v, {1, 2})
    assert multiply(d, z2) == multiply(b, v2)
    assert multiply(z2, x) == z and multiply(v2, x) == v
    for m in (z2, v2):
        assert all(abs(k) != 3 for w in m.tree.words for k in w)
    # already clean: the peeled cofactor is trivial
    _, _, x2 = project_alphabet(d, d, b, multiply(d, d), {1, 2})
    assert x2 == ONE
