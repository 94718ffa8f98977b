"""Exhaustive property sweeps over small instances."""

from coregames.coalition_algebra import PlayerSet, algebra_from_partition, all_algebras, full_algebra
from coregames.constants import CoreGamesConstants as CC
from coregames.cores import core, core_plus, extended_dominates
from coregames.extended import (
    ALL_SUBSETS,
    WinningFamily,
    cover_condition_holds,
    induced_game,
    induced_nakamura,
    kappa_number,
    kappa_number_bruteforce,
    nu_prime,
    winning_family_new,
)
from coregames.games import all_simple_games, majority_game, nakamura_number, new_simple_game
from coregames.preferences import Agenda, AlternativeSet, pareto_set, union_of_maximal_sets
from coregames.utils.python_utils import mask_sort_key
from coregames.verify import (
    ProfileEnumerator,
    check_cover_condition,
    check_nakamura_equivalence,
    enumerate_preferences_for,
)

from .conftest import agenda_of, families_up_to_relabeling, small_families

from itertools import combinations

import pytest


def profiles(algebra, agenda, mode=CC.MODE_FULL, for_agenda=False):
    relations = list(enumerate_preferences_for(len(agenda), mode, for_agenda))
    enumerator = ProfileEnumerator(algebra, agenda, relations)
    for choice in enumerator:
        yield enumerator.profile(choice)


def test_coreplus_depends_only_on_maximal_sets(maj3):
    agenda = agenda_of("abc")
    seen = {}
    count = 0
    for profile in profiles(maj3.algebra, agenda):
        key = tuple(profile.maximal_sets(agenda))
        chosen = core_plus(maj3, agenda, profile)
        assert seen.setdefault(key, chosen) == chosen
        count += 1
    assert count == 27 ** 3
    # seven nonempty maximal sets plus the empty one of a cycle
    assert len(seen) == 8 ** 3


@pytest.mark.parametrize(
    "winning",
    [
        [[0, 1], [0, 2], [1, 2], [0, 1, 2]],
        [[0]],
        [[0, 1]],
        [[0], [1]],
    ],
)
def test_core_inclusions_and_pareto(winning):
    game = new_simple_game(full_algebra(PlayerSet(3)), winning)
    agenda = agenda_of("abc")
    for profile in profiles(game.algebra, agenda):
        chosen = core(game, agenda, profile)
        plus = core_plus(game, agenda, profile)
        maximals = union_of_maximal_sets(profile, agenda)
        pareto = pareto_set(profile, agenda)
        assert plus <= chosen & maximals
        assert chosen <= pareto
        assert maximals <= pareto
        assert plus == frozenset(
            x for x in agenda if not extended_dominates(game, profile, agenda, x)
        )


def test_coreplus_can_be_strictly_smaller(example1):
    profile = example1.require_profile()
    chosen = core(example1.game(), example1.agenda, profile)
    plus = core_plus(example1.game(), example1.agenda, profile)
    assert plus < chosen


def test_extended_family_can_be_strictly_finer():
    algebra = algebra_from_partition(PlayerSet(4), [[0, 1], [2], [3]])
    family = winning_family_new(algebra, ALL_SUBSETS, [[0, 1, 2], [0, 3]])
    induced = induced_game(family)
    assert len(induced) == 1
    agenda = agenda_of("abc")
    strict = 0
    for profile in profiles(algebra, agenda):
        strict += core_plus(family, agenda, profile) < core_plus(induced, agenda, profile)
    assert strict > 0


@pytest.mark.slow
@pytest.mark.parametrize("size", [1, 2, 3])
def test_extended_family_refines_the_induced_game(size):
    agenda = Agenda(AlternativeSet(["a", "b", "c"]), ["a", "b", "c"][:size])
    for family in families_up_to_relabeling(3, 2):
        induced = induced_game(family)
        for profile in profiles(family.algebra, agenda):
            plus = core_plus(family, agenda, profile)
            induced_plus = core_plus(induced, agenda, profile)
            induced_core = core(induced, agenda, profile)
            chosen = core(family, agenda, profile)
            assert plus <= induced_plus <= induced_core
            assert plus <= chosen <= induced_core


def test_nu_prime_kappa_nakamura_chain():
    for family in small_families(4, 3):
        nu = nu_prime(family).value
        kappa = kappa_number(family)
        assert 2 <= nu <= kappa.value <= induced_nakamura(family).value
        if kappa.value.is_finite:
            assert kappa.cover_pair.is_valid(family.algebra)


def test_kappa_equals_nakamura_inside_the_algebra():
    for algebra in all_algebras(PlayerSet(3)):
        for game in all_simple_games(algebra):
            family = WinningFamily(algebra, ALL_SUBSETS, game.winning)
            nu = nakamura_number(game).value
            assert kappa_number(family).value == nu
            assert nu_prime(family).value == nu


@pytest.mark.slow
def test_kappa_closures_agree_with_covers():
    for family in families_up_to_relabeling(5, 4):
        kappa = kappa_number(family)
        assert kappa_number_bruteforce(family).value == kappa.value
        assert 2 <= nu_prime(family).value <= kappa.value <= induced_nakamura(family).value


@pytest.mark.slow
def test_cover_condition_gives_equal_cores():
    algebra = algebra_from_partition(PlayerSet(3), [[0, 1], [2]])
    candidates = sorted(range(1, 1 << 3), key=mask_sort_key)
    agenda = agenda_of("abc")
    covered = 0
    for size in range(1, 4):
        for sets in combinations(candidates, size):
            family = WinningFamily(algebra, ALL_SUBSETS, sets)
            if not cover_condition_holds(family):
                continue
            covered += 1
            report = check_cover_condition(family, agenda)
            assert report.statements["cores_agree"]
            assert report.statements["coreplus_agree"]
            assert report.holds
    assert covered > 0


@pytest.mark.slow
@pytest.mark.parametrize("size", [2, 3])
def test_nakamura_equivalence_for_every_game_on_three_players(size):
    agenda = agenda_of("abcde"[:size])
    for game in all_simple_games(full_algebra(PlayerSet(3))):
        report = check_nakamura_equivalence(game, agenda)
        assert report.evidence == CC.EVIDENCE_ENUMERATION
        assert report.holds, report


@pytest.mark.slow
@pytest.mark.parametrize("size", [4, 5])
def test_nakamura_equivalence_on_maximal_sets(size):
    agenda = agenda_of("abcde"[:size])
    for game in all_simple_games(full_algebra(PlayerSet(3))):
        report = check_nakamura_equivalence(game, agenda, mode=CC.MODE_MAXSETS)
        assert report.mode == CC.MODE_MAXSETS
        assert report.holds, report


def test_majority_games_on_two_alternatives():
    for n in range(2, 5):
        report = check_nakamura_equivalence(majority_game(n), agenda_of("ab"))
        assert report.holds
