"""Exact computation in free inverse and free (left) ample monoids.

Elements are represented as pairs (A, a) of a finite prefix-closed set of
reduced words and a distinguished point a in A.  The package covers element
arithmetic, factorization (crack/roll), generating slices for the finitary
conditions R/r/L/l, one-sided congruence searches with a reduction calculus
for H-sequences, annihilator/intersection candidate sets, a retract onto the
free monoid, and an exact decision procedure refuting finite generation of a
specific left congruence on the two-generator free inverse monoid.
"""

from .congruences import (
    AnnihilatorBounds,
    CongruencePresentation,
    HSequence,
    annihilator_candidate,
    decompose_y,
    find_reduction,
    intersection_candidate,
    irreducible_form,
    peel_last,
    project_alphabet,
    relate,
    rho_classes,
    sequence_weight,
)
from .counterexample import (
    RefutationReport,
    decide_rho,
    decide_tau,
    path_element,
    refute_finite_generation,
    tau_pairs_up_to_weight,
)
from .elements import (
    MonoidElement,
    PrefixSet,
    diameter,
    element,
    element_from_json,
    element_to_dot,
    element_to_json,
    enumerate_elements,
    generator,
    identity,
    inverse,
    is_idempotent,
    leaves,
    left_factors,
    multiply,
    parse_element,
    pc_closure,
    plus,
    product,
    render_element,
    right_factors,
    star,
    weight,
)
from .errors import (
    FlavorError,
    MunnError,
    ParseError,
    PreconditionError,
    ResourceCapError,
)
from .factorization import CrackResult, crack, crack_fla, crack_left, roll
from .finitary import (
    GeneratingSetReport,
    fi_duality,
    gen_L,
    gen_R,
    gen_l,
    gen_r,
    reduce_pair,
)
from .retracts import (
    RetractMap,
    fla_to_free_retract,
    restrict_congruence,
    transfer_annihilator,
)
from .words import EPSILON, Alphabet, concat, invert, reduce_word

__all__ = [name for name in dir() if not name.startswith("_")]
