from coregames.coalition_algebra import PlayerSet, algebra_from_partition, full_algebra
from coregames.exceptions import FamilyError, ScaleError
from coregames.extended import (
    ALL_SUBSETS,
    GroundCollection,
    cover_condition_holds,
    induced_game,
    induced_nakamura,
    kappa_number,
    kappa_number_bruteforce,
    nu_prime,
    winning_family_new,
)
from coregames.games import INFINITE, majority_game, nakamura_number

import pytest


def test_closure_instance(closure6):
    assert nu_prime(closure6).value == 2
    assert nu_prime(closure6).witness == (0b000101, 0b101000)
    kappa = kappa_number(closure6)
    assert kappa.value == 3
    assert kappa.cover_pair.is_valid(closure6.algebra)
    assert sorted(kappa.closures) == [0b001111, 0b110011, 0b111100]
    assert len(induced_game(closure6)) == 0
    assert induced_nakamura(closure6).value == INFINITE


def test_bruteforce_agrees_on_closure_instance(closure6):
    oracle = kappa_number_bruteforce(closure6)
    assert oracle.value == 3
    assert oracle.cover_pair.is_valid(closure6.algebra)
    assert oracle.cover_pair.size == 3


def test_disjoint_pair_separates_nu_prime_from_kappa():
    algebra = algebra_from_partition(PlayerSet(6), [[0, 1], [2, 3], [4, 5]])
    # {0, 2} and {1, 3} are disjoint but share the closure {0, 1, 2, 3}
    family = winning_family_new(
        algebra, ALL_SUBSETS, [[0, 2], [3, 5], [0, 4], [1, 3]]
    )
    assert nu_prime(family).value == 2
    assert kappa_number(family).value == 3
    assert kappa_number_bruteforce(family).value == 3


def test_kappa_extends_nakamura():
    game = majority_game(3)
    family = winning_family_new(game.algebra, ALL_SUBSETS, game.winning)
    assert kappa_number(family).value == nakamura_number(game).value == 3
    assert induced_nakamura(family).value == 3


def test_trivial_algebra_kappa_is_infinite():
    algebra = algebra_from_partition(PlayerSet(2), [[0, 1]])
    family = winning_family_new(algebra, ALL_SUBSETS, [[0], [1]])
    assert nu_prime(family).value == 2
    assert kappa_number(family).value == INFINITE
    assert kappa_number_bruteforce(family).value == INFINITE
    assert kappa_number(family).cover_pair is None


def test_cover_condition():
    algebra = algebra_from_partition(PlayerSet(4), [[0, 1], [2, 3]])
    covered = winning_family_new(algebra, ALL_SUBSETS, [[0, 1], [0, 1, 2]])
    assert cover_condition_holds(covered)
    uncovered = winning_family_new(algebra, ALL_SUBSETS, [[0, 1], [0, 2]])
    assert not cover_condition_holds(uncovered)


def test_explicit_ground_collection():
    algebra = algebra_from_partition(PlayerSet(3), [[0, 1], [2]])
    ground = GroundCollection([0b011, 0b100, 0b111, 0b001])
    family = winning_family_new(algebra, ground, [[0]])
    assert family.sets == frozenset([0b001])
    with pytest.raises(FamilyError):
        winning_family_new(algebra, ground, [[1]])
    with pytest.raises(FamilyError):
        # the algebra member {0, 1} is missing from the ground collection
        winning_family_new(algebra, GroundCollection([0b100, 0b111]), [[2]])


@pytest.mark.parametrize("sets", [[], [[]], [[0, 7]]])
def test_invalid_families(sets):
    with pytest.raises(FamilyError):
        winning_family_new(full_algebra(PlayerSet(3)), ALL_SUBSETS, sets)


def test_bruteforce_guard():
    family = winning_family_new(
        full_algebra(PlayerSet(9)), ALL_SUBSETS, [[0], [1]]
    )
    with pytest.raises(ScaleError):
        kappa_number_bruteforce(family)
