"""The extended framework: winning sets drawn from a ground collection B'
that contains the algebra B, the induced game, nu' and the kappa number.

The kappa number is evaluated two ways. The fast path replaces every winning
set by its closure (the least algebra member containing it): a finite cover's
union is itself an algebra member containing the set, and the closure is the
smallest such member, so one-element covers by closures are optimal. The
brute-force oracle minimises directly over families and covers and exists to
check the fast path.
"""

from coregames.coalition_algebra import Algebra, Coalition, closure, contains
from coregames.constants import CoreGamesConstants as CC
from coregames.cores import WinningSets
from coregames.exceptions import FamilyError, ScaleError
from coregames.games import (
    INFINITE,
    ExtendedCardinal,
    Finite,
    NakamuraResult,
    min_empty_intersection,
)
from coregames.utils.python_utils import mask_sort_key, members_of

from itertools import combinations
from typing import Dict, Iterable, NamedTuple, Optional, Tuple, Union


class GroundCollection:
    """The collection B' of sets that can be assigned winning/losing status.

    ``GroundCollection()`` is B' = 2^N, kept symbolic; ``GroundCollection(sets)``
    is an explicit list.
    """

    def __init__(self, sets: Optional[Iterable[int]] = None) -> None:
        self.explicit = None if sets is None else frozenset(sets)

    @property
    def is_all_subsets(self) -> bool:
        return self.explicit is None

    def __contains__(self, s: int) -> bool:
        return self.explicit is None or s in self.explicit

    def __eq__(self, other) -> bool:
        return isinstance(other, GroundCollection) and other.explicit == self.explicit

    def __hash__(self) -> int:
        return hash(("GroundCollection", self.explicit))

    def __repr__(self) -> str:
        if self.explicit is None:
            return "GroundCollection(AllSubsets)"
        return "GroundCollection({0})".format(
            [members_of(s) for s in sorted(self.explicit, key=mask_sort_key)]
        )


ALL_SUBSETS = GroundCollection()


class WinningFamily:
    "A collection W' of winning sets inside the ground collection."

    def __init__(self, algebra: Algebra, ground: GroundCollection, sets: Iterable[int]) -> None:
        self.algebra = algebra
        self.ground = ground
        self.sets = frozenset(sets)
        self.sorted_sets = tuple(sorted(self.sets, key=mask_sort_key))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WinningFamily)
            and other.algebra == self.algebra
            and other.ground == self.ground
            and other.sets == self.sets
        )

    def __hash__(self) -> int:
        return hash(("WinningFamily", self.algebra, self.ground, self.sets))

    def __repr__(self) -> str:
        return "WinningFamily({0}, {1}, sets={2})".format(
            self.algebra, self.ground, [members_of(s) for s in self.sorted_sets]
        )


def winning_family_new(
    algebra: Algebra,
    ground: GroundCollection,
    sets: Iterable[Union[int, Iterable[int]]],
) -> WinningFamily:
    """Validate and build a collection of winning sets.

    The empty set is never required to be listed in an explicit ground
    collection.

    :raises FamilyError: on an empty member, an empty family, a member outside
        the ground collection, or an algebra member missing from it.
    """
    player_set = algebra.player_set
    masks = []
    for s in sets:
        try:
            mask = s if isinstance(s, int) else player_set.coalition(s)
        except Exception as e:
            raise FamilyError(str(e))
        if not player_set.is_coalition(mask):
            raise FamilyError("{0} is not a set of players!".format(mask))
        masks.append(mask)
    if not masks:
        raise FamilyError("A collection of winning sets must be nonempty!")
    if not ground.is_all_subsets:
        for member in algebra.members():
            if member and not member in ground:
                _msg = "Coalition {0} of the algebra is missing from B'!".format(
                    members_of(member)
                )
                raise FamilyError(_msg)
    for mask in masks:
        if not mask:
            raise FamilyError("The empty set cannot be a winning set!")
        if not mask in ground:
            raise FamilyError(
                "Winning set {0} is not in B'!".format(members_of(mask))
            )
    return WinningFamily(algebra, ground, masks)


class CoverPair:
    """A family Y of winning sets with a cover (list of algebra members) for
    each; the cover unions have empty intersection."""

    def __init__(self, y_family: Iterable[int], covers: Dict[int, Tuple[Coalition, ...]]) -> None:
        self.y_family = tuple(y_family)
        self.covers = dict(covers)

    def union(self, w: int) -> Coalition:
        result = 0
        for s in self.covers[w]:
            result |= s
        return result

    def is_valid(self, algebra: Algebra) -> bool:
        running = algebra.player_set.full
        for w in self.y_family:
            cover = self.covers.get(w)
            if not cover or not all(contains(algebra, s) for s in cover):
                return False
            union = self.union(w)
            if w & ~union:
                return False
            running &= union
        return bool(self.y_family) and running == 0

    @property
    def size(self) -> int:
        "max{#Y, max #Z(W)}"
        return max([len(self.y_family)] + [len(c) for c in self.covers.values()])

    def to_json(self) -> list:
        return [
            {
                "set": members_of(w),
                "cover": [members_of(s) for s in self.covers[w]],
            }
            for w in self.y_family
        ]


class KappaResult(NamedTuple):
    value: ExtendedCardinal
    cover_pair: Optional[CoverPair]

    @property
    def witness(self) -> Tuple[int, ...]:
        return () if self.cover_pair is None else self.cover_pair.y_family

    @property
    def closures(self) -> Tuple[Coalition, ...]:
        if self.cover_pair is None:
            return ()
        return tuple(self.cover_pair.union(w) for w in self.cover_pair.y_family)


def induced_game(family: WinningFamily) -> WinningSets:
    "W' intersected with B: the winning sets that are coalitions. May be empty."
    return WinningSets(
        [s for s in family.sets if contains(family.algebra, s)], family.algebra.n
    )


def nu_prime(family: WinningFamily) -> NakamuraResult:
    "Least number of winning sets with empty intersection (Infinite if none)."
    sets = family.sorted_sets
    found = min_empty_intersection(sets, family.algebra.player_set.full)
    if found is None:
        return NakamuraResult(INFINITE, ())
    return NakamuraResult(Finite(len(found)), tuple(sets[j] for j in found))


def induced_nakamura(family: WinningFamily) -> NakamuraResult:
    "nu of the induced game; the empty induced family reads as Infinite."
    induced = induced_game(family)
    sets = induced.sorted_family
    found = min_empty_intersection(sets, family.algebra.player_set.full)
    if not sets or found is None:
        return NakamuraResult(INFINITE, ())
    return NakamuraResult(Finite(len(found)), tuple(sets[j] for j in found))


def kappa_number(family: WinningFamily) -> KappaResult:
    """The kappa number via closures.

    The least size of a subfamily of winning sets whose closures have empty
    intersection, with each set covered by its closure alone.
    """
    sets = family.sorted_sets
    closures = [closure(family.algebra, s) for s in sets]
    found = min_empty_intersection(closures, family.algebra.player_set.full)
    if found is None:
        return KappaResult(INFINITE, None)
    y_family = [sets[j] for j in found]
    covers = {sets[j]: (closures[j],) for j in found}
    return KappaResult(Finite(len(found)), CoverPair(y_family, covers))


def _cover_options(family: WinningFamily, w: int, cover_size_limit: int) -> Dict[int, Tuple[Coalition, ...]]:
    "union -> a smallest cover of w (up to the size limit) with that union"
    members = sorted((s for s in family.algebra.members() if s), key=mask_sort_key)
    options = {}
    for size in range(1, cover_size_limit + 1):
        for cover in combinations(members, size):
            union = 0
            for s in cover:
                union |= s
            if not w & ~union and not union in options:
                options[union] = cover
    return options


def kappa_number_bruteforce(family: WinningFamily, cover_size_limit: int = CC.DEFAULT_COVER_SIZE_LIMIT) -> KappaResult:
    """Minimise max{#Y, max #Z(W)} over every family Y of winning sets and every
    choice of covers of at most ``cover_size_limit`` algebra members.

    :raises ScaleError: beyond n = 8 players or 6 winning sets.
    """
    n = family.algebra.n
    if n > CC.GUARD_KAPPA_PLAYERS or len(family.sets) > CC.GUARD_KAPPA_SETS:
        _msg = "kappa_number_bruteforce is limited to n <= {0} and {1} sets;"
        _msg += " got n = {2} with {3} sets!"
        raise ScaleError(
            _msg.format(
                CC.GUARD_KAPPA_PLAYERS, CC.GUARD_KAPPA_SETS, n, len(family.sets)
            )
        )
    if cover_size_limit < 1:
        raise ScaleError("cover_size_limit must be positive!")
    full = family.algebra.player_set.full
    sets = family.sorted_sets
    options = {w: _cover_options(family, w, cover_size_limit) for w in sets}

    best: Optional[Tuple[int, CoverPair]] = None
    for y_size in range(1, len(sets) + 1):
        if best is not None and best[0] <= y_size:
            break
        for y_family in combinations(sets, y_size):
            # running intersection -> (largest cover size so far, covers)
            states = {full: (0, ())}
            for w in y_family:
                next_states = {}
                for running, (cost, chosen) in states.items():
                    for union, cover in options[w].items():
                        key = running & union
                        value = (max(cost, len(cover)), chosen + (cover,))
                        if key not in next_states or value[0] < next_states[key][0]:
                            next_states[key] = value
                states = next_states
            if 0 in states:
                cost, chosen = states[0]
                total = max(y_size, cost)
                if best is None or total < best[0]:
                    best = (total, CoverPair(y_family, dict(zip(y_family, chosen))))
    if best is None:
        return KappaResult(INFINITE, None)
    return KappaResult(Finite(best[0]), best[1])


def cover_condition_holds(family: WinningFamily) -> bool:
    "Every winning set contains a winning coalition of the induced game."
    induced = induced_game(family).family
    return all(any(not s & ~w for s in induced) for w in family.sets)
