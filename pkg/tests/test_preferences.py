from coregames.coalition_algebra import PlayerSet, algebra_from_partition, full_algebra
from coregames.exceptions import AsymmetryError, PreconditionError
from coregames.preferences import (
    Agenda,
    AlternativeSet,
    Preference,
    Profile,
    has_maximal_element,
    is_acyclic,
    is_linear_on,
    is_measurable,
    is_profile_for,
    linear_order,
    maximal_set,
    pareto_set,
    preference_from_pairs,
    profile_to_pairs,
    restrict,
    transitive_closure,
    union_of_maximal_sets,
)

import pytest


@pytest.fixture
def x_set():
    return AlternativeSet(["a", "b", "c", "d"])


def test_labels_and_indices(x_set):
    assert x_set.index("c") == 2
    assert x_set.index(3) == 3
    assert x_set.labels_of([3, 0]) == ["a", "d"]
    with pytest.raises(PreconditionError):
        x_set.index("z")
    with pytest.raises(PreconditionError):
        AlternativeSet(["a"])
    with pytest.raises(PreconditionError):
        AlternativeSet(["a", "a"])


def test_agenda(x_set):
    agenda = Agenda(x_set, ["d", "b"])
    assert agenda.ordered == (1, 3)
    assert 3 in agenda and not 0 in agenda
    assert len(Agenda.whole(x_set)) == 4
    with pytest.raises(PreconditionError):
        Agenda(x_set, [])


def test_asymmetry_is_enforced(x_set):
    with pytest.raises(AsymmetryError):
        preference_from_pairs(x_set, [("a", "b"), ("b", "a")])
    with pytest.raises(AsymmetryError):
        preference_from_pairs(x_set, [("a", "a")])
    with pytest.raises(AsymmetryError):
        preference_from_pairs(x_set, ["ab"])


def test_maximal_set_depends_on_agenda(x_set):
    pref = preference_from_pairs(x_set, [("a", "b"), ("b", "c")])
    assert maximal_set(pref, range(4)) == frozenset([0, 3])
    assert maximal_set(pref, [1, 2]) == frozenset([1])
    assert maximal_set(pref, [2]) == frozenset([2])


def test_cycle_has_no_maximal_element(x_set):
    cycle = preference_from_pairs(x_set, [("a", "b"), ("b", "c"), ("c", "a")])
    assert not has_maximal_element(cycle, [0, 1, 2])
    assert has_maximal_element(cycle, [0, 1, 2, 3])
    assert not is_acyclic(cycle)
    assert is_acyclic(restrict(cycle, [0, 1]))


def test_linear_order(x_set):
    order = linear_order(x_set, ["c", "a", "d", "b"])
    assert is_linear_on(order, range(4))
    assert order.prefers(2, 1)
    assert maximal_set(order, range(4)) == frozenset([2])
    assert not is_linear_on(preference_from_pairs(x_set, [("a", "b")]), range(3))


def test_transitive_closure():
    assert transitive_closure([(0, 1), (1, 2), (2, 3)]) == frozenset(
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    )


def test_supporters_and_measurability(x_set):
    profile = Profile.from_pairs(x_set, [[("a", "b")], [("a", "b")], [("b", "a")]])
    assert profile.supporters(0, 1) == 0b011
    assert profile.supporters(1, 0) == 0b100
    assert profile.supporters(2, 3) == 0
    coarse = algebra_from_partition(PlayerSet(3), [[0, 1], [2]])
    assert is_measurable(profile, coarse)
    assert is_measurable(profile, full_algebra(PlayerSet(3)))
    assert not is_measurable(profile, algebra_from_partition(PlayerSet(3), [[0], [1, 2]]))


def test_profile_for_requires_maximal_elements(x_set):
    agenda = Agenda(x_set, ["a", "b", "c"])
    cycle = [("a", "b"), ("b", "c"), ("c", "a")]
    profile = Profile.from_pairs(x_set, [cycle, []])
    assert not is_profile_for(profile, agenda, full_algebra(PlayerSet(2)))
    assert is_profile_for(Profile.empty(2), agenda, full_algebra(PlayerSet(2)))


def test_pareto_and_union_of_maximal_sets(x_set):
    profile = Profile.from_pairs(x_set, [[("a", "b"), ("c", "d")], [("a", "b"), ("d", "c")]])
    assert pareto_set(profile, range(4)) == frozenset([0, 2, 3])
    assert union_of_maximal_sets(profile, range(4)) == frozenset([0, 2, 3])


def test_profile_to_pairs(x_set):
    profile = Profile([Preference([(3, 0), (1, 2)]), Preference(())])
    assert profile_to_pairs(profile, x_set) == {"0": [["b", "c"], ["d", "a"]]}
