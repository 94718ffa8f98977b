from coregames.coalition_algebra import (
    PlayerSet,
    algebra_from_partition,
    all_algebras,
    closure,
    contains,
    full_algebra,
    set_partitions,
)
from coregames.exceptions import PartitionError

import pytest


def test_algebra_members_are_unions_of_blocks():
    algebra = algebra_from_partition(PlayerSet(4), [[0, 1], [2], [3]])
    assert len(algebra) == 8
    assert sorted(algebra.members()) == sorted(
        [0, 0b0011, 0b0100, 0b1000, 0b0111, 0b1011, 0b1100, 0b1111]
    )
    assert list(algebra)[0] == 0
    assert list(algebra)[-1] == 0b1111


def test_contains():
    algebra = algebra_from_partition(PlayerSet(4), [[0, 1], [2, 3]])
    assert contains(algebra, 0)
    assert contains(algebra, 0b0011)
    assert contains(algebra, 0b1111)
    assert not contains(algebra, 0b0001)
    assert not contains(algebra, 0b0111)
    assert not contains(algebra, 1 << 4)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_contains_is_a_boolean_algebra(n):
    full = PlayerSet(n).full
    for algebra in all_algebras(PlayerSet(n)):
        members = set(algebra.members())
        assert {s for s in range(full + 1) if contains(algebra, s)} == members
        for s in members:
            assert contains(algebra, full & ~s)
            for t in members:
                assert contains(algebra, s | t)
                assert contains(algebra, s & t)


def test_closure_is_the_union_of_touched_blocks():
    algebra = algebra_from_partition(PlayerSet(6), [[0, 1], [2, 3], [4, 5]])
    assert closure(algebra, [0, 2]) == 0b001111
    assert closure(algebra, 0b101000) == 0b111100
    assert closure(algebra, 0) == 0
    assert algebra.closure([1]) == 0b11


def test_closure_is_least_containing_member():
    for algebra in all_algebras(PlayerSet(4)):
        members = algebra.members()
        for s in range(16):
            c = closure(algebra, s)
            assert contains(algebra, c)
            assert not s & ~c
            assert all(c & ~m == 0 for m in members if not s & ~m)


def test_full_algebra_contains_everything():
    algebra = full_algebra(PlayerSet(3))
    assert algebra.is_full
    assert all(contains(algebra, s) for s in range(8))


def test_set_partitions_counts():
    # Bell numbers
    assert [sum(1 for _ in set_partitions(n)) for n in range(1, 7)] == [1, 2, 5, 15, 52, 203]


def test_set_partitions_cover_players():
    for blocks in set_partitions(5):
        covered = 0
        for block in blocks:
            assert not covered & block
            covered |= block
        assert covered == 0b11111


@pytest.mark.parametrize(
    "blocks",
    [
        [[0, 1], [1, 2]],
        [[0], [1]],
        [[0, 1, 2], []],
        [[0, 1, 2, 3]],
    ],
)
def test_invalid_partitions(blocks):
    with pytest.raises(PartitionError):
        algebra_from_partition(PlayerSet(3), blocks)


def test_invalid_player_set():
    with pytest.raises(PartitionError):
        PlayerSet(0)
