from coregames.cli.documents import InstanceDocument, load_document
from coregames.coalition_algebra import PlayerSet, algebra_from_partition, all_algebras
from coregames.extended import ALL_SUBSETS, WinningFamily, winning_family_new
from coregames.games import majority_game
from coregames.preferences import Agenda, AlternativeSet
from coregames.utils.python_utils import mask_sort_key

from itertools import combinations

import os
import pytest

INSTANCES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "instances")


def instance_path(name: str) -> str:
    return os.path.join(INSTANCES, name)


@pytest.fixture
def example1() -> InstanceDocument:
    "Majority of three, X = a..e; core {d, e}, core without dissatisfaction {e}."
    return load_document(instance_path("example1.json"))


@pytest.fixture
def example2() -> InstanceDocument:
    "Majority of three, X = a..d; core {d}, core without dissatisfaction empty."
    return load_document(instance_path("example2.json"))


@pytest.fixture
def seven_players() -> InstanceDocument:
    "Seven players, majority of four; core {d, e}, core without dissatisfaction {e}."
    return load_document(instance_path("appendixA3.json"))


@pytest.fixture
def maj3():
    return majority_game(3)


@pytest.fixture
def abc() -> AlternativeSet:
    return AlternativeSet(["a", "b", "c"])


@pytest.fixture
def closure6():
    "kappa = 3, nu' = 2, induced game empty."
    player_set = PlayerSet(6)
    algebra = algebra_from_partition(player_set, [[0, 1], [2, 3], [4, 5]])
    return winning_family_new(algebra, ALL_SUBSETS, [[0, 2], [3, 5], [0, 4]])


def agenda_of(labels: str) -> Agenda:
    return Agenda(AlternativeSet(list(labels)), list(labels))


def small_families(n_max: int, size_max: int):
    "Every family of at most size_max nonempty player sets, over every algebra on up to n_max players."
    for n in range(1, n_max + 1):
        candidates = sorted(range(1, 1 << n), key=mask_sort_key)
        for algebra in all_algebras(PlayerSet(n)):
            for size in range(1, size_max + 1):
                for sets in combinations(candidates, size):
                    yield WinningFamily(algebra, ALL_SUBSETS, sets)


def _integer_partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _integer_partitions(n - part, part):
            yield (part,) + rest


def partition_shapes(n: int):
    "One algebra per block-size shape; any other algebra on n players is a relabeling of one of these."
    for shape in _integer_partitions(n, n):
        blocks, start = [], 0
        for size in shape:
            blocks.append(list(range(start, start + size)))
            start += size
        yield algebra_from_partition(PlayerSet(n), blocks)


def families_up_to_relabeling(n_max: int, size_max: int):
    "Every family of at most size_max nonempty player sets over every partition shape."
    for n in range(1, n_max + 1):
        candidates = sorted(range(1, 1 << n), key=mask_sort_key)
        for algebra in partition_shapes(n):
            for size in range(1, size_max + 1):
                for sets in combinations(candidates, size):
                    yield WinningFamily(algebra, ALL_SUBSETS, sets)
