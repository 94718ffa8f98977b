from coregames.coalition_algebra import PlayerSet, algebra_from_partition, full_algebra
from coregames.exceptions import GameError
from coregames.games import (
    INFINITE,
    ExtendedCardinal,
    Finite,
    SimpleGame,
    all_simple_games,
    is_weak,
    majority_game,
    min_empty_intersection,
    nakamura_bounds_hold,
    nakamura_number,
    new_simple_game,
    weighted_majority_game,
)

from itertools import permutations

import pytest


def test_extended_cardinal_order():
    assert Finite(2) < Finite(3) < INFINITE
    assert Finite(3) == 3
    assert INFINITE > 10 ** 9
    assert not INFINITE < INFINITE
    assert Finite(4).to_json() == 4
    assert INFINITE.to_json() == "inf"
    assert max(Finite(1), INFINITE, Finite(7)) == INFINITE
    with pytest.raises(ValueError):
        ExtendedCardinal(-1)


def test_majority_of_three():
    result = nakamura_number(majority_game(3))
    assert result.value == 3
    assert result.witness == (0b011, 0b101, 0b110)


def test_weak_game_is_infinite():
    game = new_simple_game(full_algebra(PlayerSet(3)), [[0, 1, 2]])
    assert is_weak(game)
    result = nakamura_number(game)
    assert result.value == INFINITE
    assert result.witness == ()


def test_two_dictators():
    game = new_simple_game(full_algebra(PlayerSet(2)), [[0], [1]])
    assert nakamura_number(game).value == 2


def test_majority_numbers():
    # nu of the strict majority of n players
    assert nakamura_number(majority_game(4)).value == 4
    assert nakamura_number(majority_game(5)).value == 3
    assert nakamura_number(majority_game(7)).value == 3


def test_jobs_do_not_change_the_witness():
    for n in (4, 5):
        game = majority_game(n)
        assert nakamura_number(game, jobs=4) == nakamura_number(game)


def test_min_empty_intersection_is_lexicographically_least():
    sets = [0b011, 0b110, 0b100, 0b001]
    assert min_empty_intersection(sets, 0b111) == (0, 2)
    assert min_empty_intersection([0b11, 0b01], 0b11) is None
    assert min_empty_intersection([0], 0b1) == (0,)


def test_weighted_majority_game():
    game = weighted_majority_game([3, 2, 1], 4)
    assert game.winning == frozenset([0b011, 0b101, 0b111])
    assert nakamura_number(game).value == INFINITE
    strict = weighted_majority_game([1, 1, 1, 1], 2, strict=True)
    assert min(bin(s).count("1") for s in strict.winning) == 3


def test_game_over_a_subalgebra():
    algebra = algebra_from_partition(PlayerSet(4), [[0, 1], [2, 3]])
    game = majority_game(4, algebra)
    assert game.winning == frozenset([0b1111])
    with pytest.raises(GameError):
        new_simple_game(algebra, [[0, 2]])


@pytest.mark.parametrize("winning", [[], [[]], [[0, 5]]])
def test_invalid_games(winning):
    with pytest.raises(GameError):
        new_simple_game(full_algebra(PlayerSet(3)), winning)


def test_all_simple_games_on_three_players():
    games = list(all_simple_games(full_algebra(PlayerSet(3))))
    assert len(games) == 127
    assert len(set(games)) == 127


def test_nakamura_bounds_on_all_games():
    for game in all_simple_games(full_algebra(PlayerSet(3))):
        assert nakamura_bounds_hold(game)
        value = nakamura_number(game).value
        assert value.is_infinite == is_weak(game)


def relabel(game, permutation):
    moved = []
    for s in game.winning:
        moved.append(sum(1 << permutation[i] for i in range(game.n) if s >> i & 1))
    return SimpleGame(full_algebra(PlayerSet(game.n)), moved)


def test_nakamura_number_ignores_player_names():
    games = list(all_simple_games(full_algebra(PlayerSet(3))))
    games += [
        weighted_majority_game([2, 1, 1, 1], 3),
        weighted_majority_game([1, 1, 1, 1], 2, strict=True),
        new_simple_game(full_algebra(PlayerSet(4)), [[0, 1], [1, 2], [2, 3], [0, 3]]),
    ]
    for game in games:
        value = nakamura_number(game).value
        for permutation in permutations(range(game.n)):
            assert nakamura_number(relabel(game, permutation)).value == value
