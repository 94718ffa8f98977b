"""Simple games, the weakness test and the exact Nakamura number."""

from coregames.coalition_algebra import (
    Algebra,
    Coalition,
    PlayerSet,
    contains,
    full_algebra,
)
from coregames.constants import CoreGamesConstants as CC
from coregames.exceptions import GameError
from coregames.utils.python_utils import (
    iter_bits,
    mask_sort_key,
    members_of,
    popcount,
)

from functools import total_ordering
from multiprocessing.dummy import Pool as ThreadPool
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence, Tuple, Union


@total_ordering
class ExtendedCardinal:
    """A finite count or infinity, the codomain of the Nakamura and kappa numbers.

    ``Finite(a) < Finite(b)`` iff ``a < b`` and every finite value is below
    ``INFINITE``. Plain integers compare as finite values.
    """

    def __init__(self, value: Optional[int] = None) -> None:
        if value is not None and (not isinstance(value, int) or value < 0):
            raise ValueError("Finite cardinals are nonnegative integers!")
        self.value = value

    @classmethod
    def finite(cls, k: int) -> "ExtendedCardinal":
        return cls(k)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def _key(self) -> Tuple[int, int]:
        return (1, 0) if self.value is None else (0, self.value)

    @staticmethod
    def _coerce(other) -> Optional["ExtendedCardinal"]:
        if isinstance(other, ExtendedCardinal):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return ExtendedCardinal(other)
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        return other is not None and other._key() == self._key()

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return "Infinite" if self.value is None else "Finite({0})".format(self.value)

    def to_json(self):
        return CC.INFINITY_TOKEN if self.value is None else self.value


INFINITE = ExtendedCardinal(None)


def Finite(k: int) -> ExtendedCardinal:
    return ExtendedCardinal.finite(k)


class SimpleGame:
    """A nonempty family of nonempty winning coalitions inside an algebra.

    Use :func:`new_simple_game` to build a validated instance.
    """

    def __init__(self, algebra: Algebra, winning: Iterable[Coalition]) -> None:
        self.algebra = algebra
        self.winning = frozenset(winning)
        # (size, bit pattern) order fixes every tie-break downstream
        self.sorted_winning = tuple(sorted(self.winning, key=mask_sort_key))

    @property
    def player_set(self) -> PlayerSet:
        return self.algebra.player_set

    @property
    def n(self) -> int:
        return self.algebra.n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimpleGame)
            and other.algebra == self.algebra
            and other.winning == self.winning
        )

    def __hash__(self) -> int:
        return hash(("SimpleGame", self.algebra, self.winning))

    def __repr__(self) -> str:
        return "SimpleGame(n={0}, winning={1})".format(
            self.n, [members_of(s) for s in self.sorted_winning]
        )


def _as_mask(player_set: PlayerSet, s: Union[Coalition, Iterable[int]]) -> Coalition:
    if isinstance(s, int):
        if not player_set.is_coalition(s):
            raise GameError("{0} is not a set of players of {1}!".format(s, player_set))
        return s
    try:
        return player_set.coalition(s)
    except Exception as e:
        raise GameError(str(e))


def new_simple_game(
    algebra: Algebra, winning: Iterable[Union[Coalition, Iterable[int]]]
) -> SimpleGame:
    """Validate and build a simple game.

    :param algebra: The algebra of coalitions.
    :param winning: Winning coalitions, as bitmasks or lists of player indices.
    :raises GameError: if the family is empty, contains the empty coalition, or
        contains a set that is not an algebra member.
    """
    masks = [_as_mask(algebra.player_set, s) for s in winning]
    if not masks:
        raise GameError("A simple game needs at least one winning coalition!")
    for mask in masks:
        if not mask:
            raise GameError("The empty coalition cannot be winning!")
        if not contains(algebra, mask):
            _msg = "Winning set {0} is not a coalition of {1}!".format(
                members_of(mask), algebra
            )
            raise GameError(_msg)
    return SimpleGame(algebra, masks)


def weighted_majority_game(
    weights: Sequence[int],
    quota: Union[int, float],
    strict: bool = False,
    algebra: Optional[Algebra] = None,
) -> SimpleGame:
    """Quota game: a coalition wins iff its total weight reaches the quota.

    :param weights: One nonnegative weight per player.
    :param quota: The threshold.
    :param strict: If True a coalition must exceed the quota instead.
    :param algebra: Restrict winning coalitions to this algebra (default 2^N).
    """
    player_set = PlayerSet(len(weights))
    algebra = algebra or full_algebra(player_set)
    if algebra.player_set != player_set:
        raise GameError("Weights and algebra disagree on the number of players!")
    if any(w < 0 for w in weights):
        raise GameError("Weights must be nonnegative!")
    winning = []
    for s in algebra.members():
        if not s:
            continue
        total = sum(weights[i] for i in iter_bits(s))
        if total > quota or (not strict and total == quota):
            winning.append(s)
    return new_simple_game(algebra, winning)


def majority_game(n: int, algebra: Optional[Algebra] = None) -> SimpleGame:
    "Coalitions holding more than half of the n players win."
    return weighted_majority_game([1] * n, n / 2.0, strict=True, algebra=algebra)


def all_simple_games(algebra: Algebra) -> Iterator[SimpleGame]:
    """Every simple game over the algebra, one per nonempty family of nonempty
    members (127 games for three players over the power set)."""
    candidates = sorted((s for s in algebra.members() if s), key=mask_sort_key)
    for selection in range(1, 1 << len(candidates)):
        yield SimpleGame(algebra, [candidates[j] for j in iter_bits(selection)])


def is_weak(game: SimpleGame) -> bool:
    "True iff the winning coalitions share a player."
    return intersection_of(game.winning, game.player_set.full) != 0


def intersection_of(sets: Iterable[int], full: int) -> int:
    result = full
    for s in sets:
        result &= s
    return result


class NakamuraResult(NamedTuple):
    value: ExtendedCardinal
    witness: Tuple[Coalition, ...]


class _EmptyIntersectionSearch:
    """Depth-first search for the lexicographically least k-subfamily (in the
    given order) with empty intersection.

    A state (running intersection, sets still to pick) that failed from start
    index s fails from every later start too, so it is pruned.
    """

    def __init__(self, sets: Sequence[int]) -> None:
        self.sets = sets
        self.failed = {}

    def find(self, start: int, remaining: int, running: int) -> Optional[Tuple[int, ...]]:
        if remaining == 0:
            return () if running == 0 else None
        key = (running, remaining)
        failed_from = self.failed.get(key)
        if failed_from is not None and start >= failed_from:
            return None
        sets = self.sets
        if remaining == 1:
            for j in range(start, len(sets)):
                if not running & sets[j]:
                    return (j,)
        else:
            for j in range(start, len(sets) - remaining + 1):
                found = self.find(j + 1, remaining - 1, running & sets[j])
                if found is not None:
                    return (j,) + found
        self.failed[key] = start if failed_from is None else min(failed_from, start)
        return None


def _search_with_first(args) -> Optional[Tuple[int, ...]]:
    sets, first, k = args
    found = _EmptyIntersectionSearch(sets).find(first + 1, k - 1, sets[first])
    return None if found is None else (first,) + found


def min_empty_intersection(
    sets: Sequence[int], full: int, jobs: int = 1
) -> Optional[Tuple[int, ...]]:
    """Indices of a smallest subfamily of ``sets`` with empty intersection.

    Among all smallest subfamilies the lexicographically least index tuple is
    returned, so the caller's ordering of ``sets`` is the tie-break. Returns
    None if the whole family has a common element.

    :param sets: Bitmasks in tie-break order.
    :param full: Bitmask of all players (intersection of the empty family).
    :param jobs: Worker threads; the first-element choice is split across them.
    """
    if intersection_of(sets, full):
        return None
    for k in range(1, len(sets) + 1):
        if jobs > 1 and k > 1:
            pool = ThreadPool(jobs)
            try:
                results = pool.map(
                    _search_with_first,
                    [(sets, first, k) for first in range(len(sets) - k + 1)],
                )
            finally:
                pool.close()
                pool.join()
            found = [r for r in results if r is not None]
            if found:
                return min(found)
        else:
            found = _EmptyIntersectionSearch(sets).find(0, k, full)
            if found is not None:
                return found
    return None


def nakamura_number(game: SimpleGame, jobs: int = 1) -> NakamuraResult:
    """The Nakamura number and a witnessing subfamily.

    Infinite (with an empty witness) iff the game is weak; otherwise the least
    k such that some k winning coalitions have empty intersection. The witness
    is the lexicographically least such family in the (size, bit pattern)
    coalition order.
    """
    sets = game.sorted_winning
    found = min_empty_intersection(sets, game.player_set.full, jobs=jobs)
    if found is None:
        return NakamuraResult(INFINITE, ())
    return NakamuraResult(Finite(len(found)), tuple(sets[j] for j in found))


def nakamura_bounds_hold(game: SimpleGame) -> bool:
    """2 <= nu <= min winning size + 1 and nu <= n for nonweak games; weak games
    hold vacuously."""
    value = nakamura_number(game).value
    if value.is_infinite:
        return is_weak(game)
    smallest = min(popcount(s) for s in game.winning)
    return 2 <= value.value <= smallest + 1 and value.value <= game.n
