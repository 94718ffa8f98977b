"""Finite player sets, coalitions and Boolean algebras of coalitions.

A coalition is an ``int`` bitmask over the player indices ``0..n-1``. A Boolean
subalgebra of the power set of a finite set is exactly the set of unions of the
blocks of a unique partition, so an :class:`Algebra` is stored as that
partition and never as a member list.
"""

from coregames.exceptions import PartitionError
from coregames.utils.python_utils import (
    iter_bits,
    mask_from_members,
    mask_sort_key,
    members_of,
)

from typing import Iterable, Iterator, List, Sequence, Union

Coalition = int


class PlayerSet:
    "The players 0..n-1."

    def __init__(self, n: int) -> None:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise PartitionError(
                "A player set needs a positive number of players, got {0}!".format(n)
            )
        self.n = n
        self.full = (1 << n) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, PlayerSet) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("PlayerSet", self.n))

    def __repr__(self) -> str:
        return "PlayerSet({0})".format(self.n)

    def coalition(self, members: Iterable[int]) -> Coalition:
        "Build a coalition from player indices, checking the range."
        mask = 0
        for i in members:
            if not isinstance(i, int) or not 0 <= i < self.n:
                raise PartitionError(
                    "Player {0} is not in 0..{1}!".format(i, self.n - 1)
                )
            mask |= 1 << i
        return mask

    def is_coalition(self, s: Coalition) -> bool:
        return isinstance(s, int) and 0 <= s and not s & ~self.full


class Algebra:
    """A Boolean algebra of coalitions represented by its generating partition.

    :param player_set: The players.
    :param blocks: Pairwise disjoint nonempty coalitions covering all players.
        Stored sorted by their lowest player.
    """

    def __init__(self, player_set: PlayerSet, blocks: Sequence[Coalition]) -> None:
        self.player_set = player_set
        self.blocks = tuple(sorted(blocks, key=lambda b: b & -b))

    @property
    def n(self) -> int:
        return self.player_set.n

    @property
    def is_full(self) -> bool:
        "True iff the algebra is the whole power set."
        return len(self.blocks) == self.n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Algebra)
            and other.player_set == self.player_set
            and other.blocks == self.blocks
        )

    def __hash__(self) -> int:
        return hash(("Algebra", self.player_set, self.blocks))

    def __repr__(self) -> str:
        return "Algebra(n={0}, blocks={1})".format(
            self.n, [members_of(b) for b in self.blocks]
        )

    def __len__(self) -> int:
        "Number of algebra members."
        return 1 << len(self.blocks)

    def __iter__(self) -> Iterator[Coalition]:
        "All members, ordered by (size, bit pattern)."
        return iter(sorted(self.members(), key=mask_sort_key))

    def members(self) -> List[Coalition]:
        result = []
        for selection in range(1 << len(self.blocks)):
            result.append(
                sum(self.blocks[j] for j in iter_bits(selection))
            )
        return result

    def contains(self, s: Coalition) -> bool:
        return contains(self, s)

    def closure(self, s: Union[Coalition, Iterable[int]]) -> Coalition:
        return closure(self, s)


def algebra_from_partition(
    player_set: PlayerSet, blocks: Iterable[Union[Coalition, Iterable[int]]]
) -> Algebra:
    """Return the algebra whose members are all unions of ``blocks``.

    :param player_set: The players.
    :param blocks: The generating partition, as bitmasks or lists of indices.
    :raises PartitionError: if blocks overlap, contain the empty set or do not
        cover the player set.
    """
    masks = []
    for block in blocks:
        if isinstance(block, int):
            if not player_set.is_coalition(block):
                raise PartitionError(
                    "Block {0} is not a set of players of {1}!".format(
                        block, player_set
                    )
                )
            masks.append(block)
        else:
            masks.append(player_set.coalition(block))
    covered = 0
    for mask in masks:
        if not mask:
            raise PartitionError("The empty set cannot be a block!")
        if covered & mask:
            raise PartitionError(
                "Blocks overlap at players {0}!".format(members_of(covered & mask))
            )
        covered |= mask
    if covered != player_set.full:
        raise PartitionError(
            "Blocks do not cover players {0}!".format(
                members_of(player_set.full & ~covered)
            )
        )
    return Algebra(player_set, masks)


def full_algebra(player_set: PlayerSet) -> Algebra:
    "The power set, generated by the singleton partition."
    return Algebra(player_set, [1 << i for i in range(player_set.n)])


def contains(algebra: Algebra, s: Coalition) -> bool:
    "True iff s is a union of blocks."
    if not algebra.player_set.is_coalition(s):
        return False
    for block in algebra.blocks:
        part = block & s
        if part and part != block:
            return False
    return True


def closure(algebra: Algebra, s: Union[Coalition, Iterable[int]]) -> Coalition:
    "The least algebra member containing s: the union of the blocks meeting s."
    if not isinstance(s, int):
        s = mask_from_members(s)
    result = 0
    for block in algebra.blocks:
        if block & s:
            result |= block
    return result


def set_partitions(n: int) -> Iterator[List[Coalition]]:
    """Yield every partition of 0..n-1 once, as lists of block bitmasks.

    Blocks are produced in order of their lowest player.
    """
    if n == 0:
        yield []
        return
    last = 1 << (n - 1)
    for partition in set_partitions(n - 1):
        for j in range(len(partition)):
            yield partition[:j] + [partition[j] | last] + partition[j + 1 :]
        yield partition + [last]


def all_algebras(player_set: PlayerSet) -> Iterator[Algebra]:
    "Every Boolean subalgebra of the power set of the players."
    for blocks in set_partitions(player_set.n):
        yield Algebra(player_set, blocks)