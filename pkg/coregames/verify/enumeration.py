"""Enumeration of preferences and of measurable profiles on an agenda.

Preferences are enumerated on the local alternatives ``0..m-1`` of an agenda
of size m; cores and maximal sets depend only on the restriction of a profile
to the agenda. A profile is measurable for an algebra exactly when all players
of a block hold the same preference, so measurable profiles are enumerated as
one preference per block, in lexicographic order of the per-block indices.
That order is the fixed total order on profiles used for shards and for
picking the earliest counterexample.
"""

from coregames.coalition_algebra import Algebra
from coregames.constants import CoreGamesConstants as CC
from coregames.cores import WinningSets
from coregames.exceptions import PreconditionError, ScaleError
from coregames.preferences import (
    Agenda,
    Preference,
    Profile,
    is_acyclic,
    maximal_set,
)
from coregames.utils.logging_mixin import LoggingMixin
from coregames.utils.python_utils import iter_bits

from itertools import combinations, permutations, product
from typing import Callable, Iterator, List, Optional, Sequence, Tuple


def resolve_mode(mode: Optional[str], default: str = CC.MODE_FULL) -> str:
    "Map a mode name or spelling variant to one of CC.MODES."
    if mode is None:
        return default
    key = str(mode).lower().strip()
    if not key in CC.MODE_SPELLING_VARIANTS:
        _msg = "Invalid enumeration mode {0}! Accepted modes: {1}".format(
            mode, ", ".join(CC.MODES)
        )
        raise PreconditionError(_msg)
    return CC.MODE_SPELLING_VARIANTS[key]


def _all_asymmetric(m: int) -> Iterator[Preference]:
    unordered = list(combinations(range(m), 2))
    # 0: neither, 1: x > y, 2: y > x
    for states in product(range(3), repeat=len(unordered)):
        pairs = []
        for (x, y), state in zip(unordered, states):
            if state == 1:
                pairs.append((x, y))
            elif state == 2:
                pairs.append((y, x))
        yield Preference(pairs)


def _representatives_of_maximal_sets(m: int) -> Iterator[Preference]:
    """One preference per nonempty subset S of the agenda, whose maximal set
    is exactly S: the least member of S beats every non-member."""
    for selection in range(1, 1 << m):
        top = (selection & -selection).bit_length() - 1
        yield Preference((top, y) for y in range(m) if not selection >> y & 1)


def enumerate_preferences_for(
    agenda_size: int, mode: str = CC.MODE_FULL, for_agenda: bool = False
) -> Iterator[Preference]:
    """Yield each preference on ``0..agenda_size-1`` of the mode exactly once.

    :param agenda_size: m.
    :param mode: full (3^(m choose 2) relations), acyclic, linear (m! orders) or
        maxsets (one representative per nonempty maximal set).
    :param for_agenda: Drop relations without a maximal element.
    :raises ScaleError: beyond m = 5 for full and acyclic.
    """
    mode = resolve_mode(mode)
    if agenda_size < 1:
        raise PreconditionError("The agenda size must be positive!")
    if mode in (CC.MODE_FULL, CC.MODE_ACYCLIC) and agenda_size > CC.GUARD_RELATION_AGENDA:
        _msg = "Enumerating {0} relations is limited to agendas of size {1}, got {2}!"
        raise ScaleError(_msg.format(mode, CC.GUARD_RELATION_AGENDA, agenda_size))
    if mode == CC.MODE_LINEAR and agenda_size > CC.GUARD_RELATION_AGENDA + 2:
        _msg = "Enumerating linear orders is limited to agendas of size {0}, got {1}!"
        raise ScaleError(_msg.format(CC.GUARD_RELATION_AGENDA + 2, agenda_size))
    everything = range(agenda_size)
    if mode == CC.MODE_MAXSETS:
        yield from _representatives_of_maximal_sets(agenda_size)
        return
    if mode == CC.MODE_LINEAR:
        for ranking in permutations(everything):
            yield Preference(
                (ranking[a], ranking[b])
                for a in range(agenda_size)
                for b in range(a + 1, agenda_size)
            )
        return
    for pref in _all_asymmetric(agenda_size):
        if mode == CC.MODE_ACYCLIC and not is_acyclic(pref):
            continue
        if for_agenda and not maximal_set(pref, everything):
            continue
        yield pref


class ProfileEnumerator(LoggingMixin):
    """Measurable profiles on an agenda, one relation per algebra block.

    :param algebra: Players and blocks.
    :param agenda: The agenda; relations live on its local indices.
    :param relations: The per-block relation catalogue (from
        :func:`enumerate_preferences_for`).
    :param mode: The mode the catalogue was enumerated in.
    """

    def __init__(
        self,
        algebra: Algebra,
        agenda: Agenda,
        relations: Sequence[Preference],
        mode: str = CC.MODE_FULL,
    ) -> None:
        self.mode = mode
        self.algebra = algebra
        self.agenda = agenda
        self.m = len(agenda)
        self.relations = list(relations)
        self.blocks = algebra.blocks
        self.count = len(self.relations) ** len(self.blocks)
        if self.count > CC.GUARD_PROFILE_COUNT:
            _msg = "{0} relations on {1} blocks give {2} profiles, above the limit of {3}!"
            raise ScaleError(
                _msg.format(
                    len(self.relations),
                    len(self.blocks),
                    self.count,
                    CC.GUARD_PROFILE_COUNT,
                )
            )
        m = self.m
        everything = range(m)
        # per relation: pair ids x*m+y it holds, and alternatives it leaves non-maximal
        self._pair_ids = [[x * m + y for (x, y) in sorted(r.pairs)] for r in self.relations]
        self._nonmaximal = []
        for r in self.relations:
            maximals = maximal_set(r, everything)
            mask = 0
            for x in everything:
                if x not in maximals:
                    mask |= 1 << x
            self._nonmaximal.append(mask)
        self.log.debug(
            "{0} relations per block, {1} blocks: {2} profiles".format(
                len(self.relations), len(self.blocks), self.count
            )
        )

    def shard(self, first: int) -> Iterator[Tuple[int, ...]]:
        "Profiles (per-block relation indices) whose first block holds relation ``first``."
        for rest in product(range(len(self.relations)), repeat=len(self.blocks) - 1):
            yield (first,) + rest

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        for first in range(len(self.relations)):
            yield from self.shard(first)

    def supporters(self, choice: Tuple[int, ...]) -> List[int]:
        "sup[x*m+y] is the coalition preferring local x to local y."
        sup = [0] * (self.m * self.m)
        for block, r in zip(self.blocks, choice):
            for p in self._pair_ids[r]:
                sup[p] |= block
        return sup

    def dissatisfied(self, choice: Tuple[int, ...]) -> List[int]:
        "dis[x] is the coalition for which local x is not maximal."
        dis = [0] * self.m
        for block, r in zip(self.blocks, choice):
            for x in iter_bits(self._nonmaximal[r]):
                dis[x] |= block
        return dis

    def core_is_empty(self, wins: Callable[[int], bool], choice: Tuple[int, ...]) -> bool:
        m = self.m
        sup = self.supporters(choice)
        for x in range(m):
            if not any(wins(sup[y * m + x]) for y in range(m)):
                return False
        return True

    def coreplus_is_empty(self, wins: Callable[[int], bool], choice: Tuple[int, ...]) -> bool:
        return all(wins(d) for d in self.dissatisfied(choice))

    def union_of_maximal_mask(self, choice: Tuple[int, ...]) -> int:
        "Bitmask of the local alternatives maximal for some player."
        mask = 0
        for r in choice:
            mask |= ~self._nonmaximal[r]
        return mask & ((1 << self.m) - 1)

    def core_mask(self, wins: Callable[[int], bool], choice: Tuple[int, ...]) -> int:
        "Bitmask of the local alternatives in the core."
        m = self.m
        sup = self.supporters(choice)
        mask = 0
        for x in range(m):
            if not any(wins(sup[y * m + x]) for y in range(m)):
                mask |= 1 << x
        return mask

    def coreplus_mask(self, wins: Callable[[int], bool], choice: Tuple[int, ...]) -> int:
        mask = 0
        for x, d in enumerate(self.dissatisfied(choice)):
            if not wins(d):
                mask |= 1 << x
        return mask

    def dominance_is_cyclic(self, wins: Callable[[int], bool], choice: Tuple[int, ...]) -> bool:
        m = self.m
        sup = self.supporters(choice)
        dominance = Preference(
            (x, y)
            for x in range(m)
            for y in range(m)
            if x != y and wins(sup[x * m + y])
        )
        return not is_acyclic(dominance)

    def profile(self, choice: Tuple[int, ...]) -> Profile:
        "The enumerated profile on X indices (local alternatives mapped to the agenda)."
        names = self.agenda.ordered
        preferences: List[Optional[Preference]] = [None] * self.algebra.n
        for block, r in zip(self.blocks, choice):
            pref = Preference((names[x], names[y]) for (x, y) in self.relations[r].pairs)
            for i in iter_bits(block):
                preferences[i] = pref
        return Profile(preferences)


def winning_test(w: WinningSets) -> Callable[[int], bool]:
    "A fast ``mask -> contains a winning set`` predicate."
    if w.n <= CC.GUARD_TABLE_PLAYERS:
        return w.superset_table.__getitem__
    return w.contains_winning
