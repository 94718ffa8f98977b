from coregames.coalition_algebra import (
    Algebra,
    PlayerSet,
    algebra_from_partition,
    closure,
    contains,
    full_algebra,
)
from coregames.cores import core, core_plus, dominates, extended_dominates
from coregames.extended import (
    ALL_SUBSETS,
    GroundCollection,
    induced_game,
    kappa_number,
    kappa_number_bruteforce,
    nu_prime,
    winning_family_new,
)
from coregames.games import (
    INFINITE,
    ExtendedCardinal,
    Finite,
    majority_game,
    nakamura_number,
    new_simple_game,
    weighted_majority_game,
)
from coregames.preferences import (
    Agenda,
    AlternativeSet,
    Profile,
    is_measurable,
    maximal_set,
    preference_from_pairs,
)
from coregames.witness import (
    empty_core_linear_witness,
    empty_core_witness,
    empty_coreplus_witness_extended,
)
