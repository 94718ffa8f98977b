"""Constructive empty-core profiles.

Given a minimum family of v winning sets with empty intersection and the
first v agenda members in X order, the players of the k-th set prefer the
(k+1)-th cycle member to the k-th (wrapping around), so dominance runs around
a cycle, and every player prefers the first cycle member to each remaining
agenda member.
"""

from coregames.coalition_algebra import Coalition
from coregames.exceptions import PreconditionError
from coregames.extended import WinningFamily, kappa_number
from coregames.games import ExtendedCardinal, SimpleGame, nakamura_number
from coregames.preferences import (
    AlternativeSet,
    Agenda,
    Alternative,
    Preference,
    Profile,
    linear_order,
)
from coregames.utils.python_utils import iter_bits

from typing import List, Optional, Sequence, Tuple


class WitnessProfile:
    """A generated profile with the cycle it was built around.

    :param profile: The profile.
    :param cycle_alternatives: The cycle members, in cycle order.
    :param subfamily: The sets used for the cycle edges (for the extended
        construction, the closures of the winning sets).
    :param winning_sets: The winning sets the subfamily was derived from.
    """

    def __init__(
        self,
        profile: Profile,
        cycle_alternatives: Sequence[Alternative],
        subfamily: Sequence[Coalition],
        winning_sets: Optional[Sequence[Coalition]] = None,
    ) -> None:
        self.profile = profile
        self.cycle_alternatives = tuple(cycle_alternatives)
        self.subfamily = tuple(subfamily)
        self.winning_sets = tuple(winning_sets or subfamily)

    def __repr__(self) -> str:
        return "WitnessProfile(cycle={0}, {1})".format(
            list(self.cycle_alternatives), self.profile
        )


def _check_size(value: ExtendedCardinal, agenda: Agenda, name: str) -> int:
    if value.is_infinite:
        raise PreconditionError(
            "{0} is infinite; every agenda has a nonempty core.".format(name)
        )
    if value.value > len(agenda):
        _msg = "{0} = {1} exceeds the agenda size {2}; no empty-core profile exists."
        raise PreconditionError(_msg.format(name, value.value, len(agenda)))
    return value.value


def _cycle_profile(
    n: int, agenda: Agenda, subfamily: Sequence[Coalition]
) -> Tuple[Profile, Tuple[Alternative, ...]]:
    size = len(subfamily)
    cycle = agenda.ordered[:size]
    others = agenda.ordered[size:]
    pairs: List[set] = [set() for _ in range(n)]
    for k, coalition in enumerate(subfamily):
        better, worse = cycle[(k + 1) % size], cycle[k]
        for i in iter_bits(coalition):
            pairs[i].add((better, worse))
    for i in range(n):
        for y in others:
            pairs[i].add((cycle[0], y))
    return Profile([Preference(p) for p in pairs]), cycle


def empty_core_witness(game: SimpleGame, agenda: Agenda) -> WitnessProfile:
    """A measurable profile for the agenda whose core is empty.

    A player's maximal set holds the cycle members whose set excludes them.

    :raises PreconditionError: if the Nakamura number is infinite or exceeds
        the agenda size.
    """
    result = nakamura_number(game)
    _check_size(result.value, agenda, "The Nakamura number")
    profile, cycle = _cycle_profile(game.n, agenda, result.witness)
    return WitnessProfile(profile, cycle, result.witness)


def empty_core_linear_witness(
    game: SimpleGame, agenda: Agenda, x_set: Optional[AlternativeSet] = None
) -> WitnessProfile:
    """An empty-core profile of linear orders on X, each with exactly one
    maximal element of the agenda.

    Players in every coalition of the Nakamura witness before the k-th but not
    in the k-th rank the k-th cycle member first and walk the cycle backwards
    from there; the alternatives outside the cycle come last, the latest in X
    ranked highest.
    """
    x_set = x_set or agenda.x_set
    result = nakamura_number(game)
    size = _check_size(result.value, agenda, "The Nakamura number")
    subfamily = result.witness
    cycle = agenda.ordered[:size]
    rest = [x for x in reversed(range(x_set.m)) if x not in cycle]

    preferences: List[Optional[Preference]] = [None] * game.n
    running = game.player_set.full
    for k, coalition in enumerate(subfamily):
        block = running & ~coalition
        running &= coalition
        ranking = [cycle[(k - j) % size] for j in range(size)] + rest
        order = linear_order(x_set, ranking)
        for i in iter_bits(block):
            preferences[i] = order
    # running is now the intersection of the subfamily, which is empty
    return WitnessProfile(Profile(preferences), cycle, subfamily)


def empty_coreplus_witness_extended(family: WinningFamily, agenda: Agenda) -> WitnessProfile:
    """A measurable profile for the agenda whose core without majority
    dissatisfaction, with respect to the winning sets, is empty.

    The cycle is built on the closures of a minimum kappa-witnessing family.

    :raises PreconditionError: if kappa is infinite or exceeds the agenda size.
    """
    result = kappa_number(family)
    _check_size(result.value, agenda, "The kappa number")
    profile, cycle = _cycle_profile(family.algebra.n, agenda, result.closures)
    return WitnessProfile(profile, cycle, result.closures, result.witness)
