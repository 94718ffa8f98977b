"""Dominance, the core, the core without majority dissatisfaction and the
set-to-point (extended) dominance.

Every operation takes a :class:`WinningSets`, which houses a simple game's
winning coalitions, an extended family's winning sets, or the empty family.
For the empty family nothing is dominated and both cores equal the agenda.
"""

from coregames.constants import CoreGamesConstants as CC
from coregames.exceptions import GameError
from coregames.games import SimpleGame
from coregames.preferences import (
    Agenda,
    Alternative,
    Preference,
    Profile,
    maximal_set,
)
from coregames.utils.python_utils import iter_bits, mask_sort_key, members_of

from typing import FrozenSet, Iterable, Optional, Union

class WinningSets:
    """A family of nonempty sets of players, any of which "wins".

    :param family: Bitmasks; may be empty.
    :param n: Number of players.
    """

    def __init__(self, family: Iterable[int], n: int) -> None:
        self.family = frozenset(family)
        self.n = n
        if 0 in self.family:
            raise GameError("The empty set cannot be winning!")
        self.sorted_family = tuple(sorted(self.family, key=mask_sort_key))
        self._table: Optional[bytearray] = None

    def __len__(self) -> int:
        return len(self.family)

    def __iter__(self):
        return iter(self.sorted_family)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WinningSets)
            and other.n == self.n
            and other.family == self.family
        )

    def __hash__(self) -> int:
        return hash(("WinningSets", self.n, self.family))

    def __repr__(self) -> str:
        return "WinningSets(n={0}, {1})".format(
            self.n, [members_of(s) for s in self.sorted_family]
        )

    @property
    def superset_table(self) -> bytearray:
        """``table[mask]`` is 1 iff mask contains some winning set.

        Built by marking the winning sets and closing upwards one player at a time.
        """
        if self._table is None:
            table = bytearray(1 << self.n)
            for s in self.family:
                table[s] = 1
            for i in range(self.n):
                bit = 1 << i
                for mask in range(1 << self.n):
                    if mask & bit and table[mask ^ bit]:
                        table[mask] = 1
            self._table = table
        return self._table

    def contains_winning(self, mask: int) -> bool:
        "True iff some winning set is a subset of mask."
        if self.n <= CC.GUARD_TABLE_PLAYERS:
            return bool(self.superset_table[mask])
        return any(not s & ~mask for s in self.family)


def as_winning_sets(w) -> WinningSets:
    """Accept a WinningSets, a SimpleGame or an extended WinningFamily."""
    if isinstance(w, WinningSets):
        return w
    cached = getattr(w, "_winning_sets", None)
    if cached is not None:
        return cached
    if isinstance(w, SimpleGame):
        cached = WinningSets(w.winning, w.n)
    elif hasattr(w, "sets") and hasattr(w, "algebra"):
        cached = WinningSets(w.sets, w.algebra.n)
    else:
        raise TypeError(
            "Cannot interpret {0} as winning sets!".format(type(w).__name__)
        )
    w._winning_sets = cached
    return cached


def _members(agenda: Union[Agenda, Iterable[Alternative]]):
    return agenda.ordered if isinstance(agenda, Agenda) else tuple(sorted(agenda))


def dominates(w, profile: Profile, x: Alternative, y: Alternative) -> bool:
    "True iff some winning set prefers x to y unanimously."
    return as_winning_sets(w).contains_winning(profile.supporters(x, y))


def core(w, agenda: Union[Agenda, Iterable[Alternative]], profile: Profile) -> FrozenSet[Alternative]:
    "Agenda members not dominated by any agenda member."
    w = as_winning_sets(w)
    members = _members(agenda)
    return frozenset(
        x
        for x in members
        if not any(w.contains_winning(profile.supporters(y, x)) for y in members)
    )


def core_plus(w, agenda: Union[Agenda, Iterable[Alternative]], profile: Profile) -> FrozenSet[Alternative]:
    """The core without majority dissatisfaction.

    Computed as the intersection over winning sets S of the union over i in S
    of i's maximal set on the agenda; the empty family leaves the agenda.
    """
    w = as_winning_sets(w)
    members = _members(agenda)
    maximal_sets = [maximal_set(pref, members) for pref in profile.preferences]
    result = frozenset(members)
    for s in w.sorted_family:
        satisfied = frozenset()
        for i in iter_bits(s):
            satisfied |= maximal_sets[i]
        result &= satisfied
        if not result:
            break
    return result


def dissatisfied_players(profile: Profile, agenda: Union[Agenda, Iterable[Alternative]], x: Alternative) -> int:
    "Players for whom x is not a maximal element of the agenda."
    mask = 0
    for y in _members(agenda):
        mask |= profile.supporters(y, x)
    return mask


def extended_dominates(w, profile: Profile, y_set: Iterable[Alternative], x: Alternative) -> bool:
    """True iff some winning set's members each prefer some element of y_set
    to x."""
    mask = 0
    for y in y_set:
        mask |= profile.supporters(y, x)
    return as_winning_sets(w).contains_winning(mask)


def dominance_relation(w, profile: Profile, agenda: Union[Agenda, Iterable[Alternative]]) -> Preference:
    """The dominance relation restricted to the agenda.

    For families with disjoint winning sets the relation need not be asymmetric,
    so it is returned unvalidated.
    """
    w = as_winning_sets(w)
    members = _members(agenda)
    return Preference(
        (x, y)
        for x in members
        for y in members
        if x != y and w.contains_winning(profile.supporters(x, y))
    )
