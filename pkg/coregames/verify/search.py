"""Exhaustive search for small instances on which the extended notions part
ways with the plain ones.

Instances are tried in a fixed order (agenda size, then players, then the
partitions of :func:`set_partitions`, then families of at most
``CC.SEARCH_FAMILY_MAX`` sets in (size, bit pattern) order, then profiles in
enumeration order), so the first instance found per category is reproducible.
"""

from coregames.coalition_algebra import Algebra, PlayerSet, set_partitions
from coregames.constants import CoreGamesConstants as CC
from coregames.cores import WinningSets
from coregames.exceptions import ScaleError
from coregames.extended import ALL_SUBSETS, WinningFamily, induced_game, kappa_number, nu_prime
from coregames.preferences import Agenda, AlternativeSet, Profile, profile_to_pairs
from coregames.utils.logging_mixin import LoggingMixin
from coregames.utils.python_utils import iter_bits, mask_sort_key, members_of
from coregames.verify.enumeration import ProfileEnumerator, enumerate_preferences_for, winning_test
from coregames.verify.reports import SearchReport

from collections import OrderedDict
from itertools import combinations
from string import ascii_lowercase
from typing import Iterator, Optional, Sequence, Tuple


def _families(candidates: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    for size in range(1, CC.SEARCH_FAMILY_MAX + 1):
        yield from combinations(candidates, size)


def _instance(
    algebra: Algebra,
    family: Sequence[int],
    x_set: Optional[AlternativeSet] = None,
    profile: Optional[Profile] = None,
    extended: bool = True,
    **values
) -> dict:
    result = OrderedDict()
    result[CC.DOC_PLAYERS] = algebra.n
    result[CC.DOC_ALGEBRA] = [members_of(b) for b in algebra.blocks]
    if extended:
        result[CC.DOC_GROUND] = CC.DOC_GROUND_ALL
    result[CC.DOC_WINNING] = [members_of(s) for s in family]
    if x_set is not None:
        result[CC.DOC_ALTERNATIVES] = list(x_set.labels)
        result[CC.DOC_PROFILE] = profile_to_pairs(profile, x_set)
    for key, value in values.items():
        result[key] = value
    return result


class DivergenceSearch(LoggingMixin):
    """Searches up to ``n_max`` players and agendas of up to ``m_max``
    alternatives."""

    def __init__(self, n_max: int, m_max: int) -> None:
        if not 1 <= n_max <= CC.GUARD_SEARCH_PLAYERS or not 1 <= m_max <= CC.GUARD_SEARCH_AGENDA:
            _msg = "The search is limited to 1 <= n_max <= {0} and 1 <= m_max <= {1},"
            _msg += " got n_max = {2} and m_max = {3}!"
            raise ScaleError(
                _msg.format(CC.GUARD_SEARCH_PLAYERS, CC.GUARD_SEARCH_AGENDA, n_max, m_max)
            )
        self.n_max = n_max
        self.m_max = m_max
        self.report = SearchReport(n_max, m_max)

    def algebras(self) -> Iterator[Algebra]:
        for n in range(1, self.n_max + 1):
            player_set = PlayerSet(n)
            for blocks in set_partitions(n):
                yield Algebra(player_set, blocks)

    def x_sets(self, m_min: int = 2) -> Iterator[AlternativeSet]:
        for m in range(m_min, self.m_max + 1):
            yield AlternativeSet(ascii_lowercase[:m])

    def _enumerator(self, algebra: Algebra, agenda: Agenda) -> Optional[ProfileEnumerator]:
        relations = list(enumerate_preferences_for(len(agenda), CC.MODE_FULL, for_agenda=True))
        try:
            return ProfileEnumerator(algebra, agenda, relations)
        except ScaleError as e:
            self.log.info("Skipping {0}: {1}".format(algebra, e.message))
            return None

    def search_nu_prime_below_kappa(self) -> None:
        for algebra in self.algebras():
            candidates = sorted(range(1, 1 << algebra.n), key=mask_sort_key)
            for family in _families(candidates):
                winning = WinningFamily(algebra, ALL_SUBSETS, family)
                self.report.work_units += 2
                nu = nu_prime(winning).value
                kappa = kappa_number(winning).value
                if nu < kappa:
                    self.report.record(
                        CC.DIVERGENCE_NU_KAPPA,
                        _instance(algebra, family, nu_prime=nu, kappa=kappa),
                    )
                    return

    def _profiles(self, family_candidates, m_min: int = 2):
        "(x_set, algebra, family, enumerator, choice) in search order."
        algebras = list(self.algebras())
        for x_set in self.x_sets(m_min):
            agenda = Agenda.whole(x_set)
            for algebra in algebras:
                enumerator = self._enumerator(algebra, agenda)
                if enumerator is None:
                    continue
                for family in _families(family_candidates(algebra)):
                    for choice in enumerator:
                        yield x_set, algebra, family, enumerator, choice

    def search_induced_coreplus(self) -> None:
        "C+ of the winning sets differs from C+ of the induced game."
        cache = {}

        def tests(algebra, family):
            key = (algebra, family)
            if not key in cache:
                winning = WinningFamily(algebra, ALL_SUBSETS, family)
                extended = WinningSets(family, algebra.n)
                cache.clear()
                cache[key] = (winning_test(extended), winning_test(induced_game(winning)))
            return cache[key]

        def candidates(algebra):
            return sorted(range(1, 1 << algebra.n), key=mask_sort_key)

        for x_set, algebra, family, enumerator, choice in self._profiles(candidates):
            extended_wins, induced_wins = tests(algebra, family)
            self.report.work_units += 2
            extended = enumerator.coreplus_mask(extended_wins, choice)
            induced = enumerator.coreplus_mask(induced_wins, choice)
            if extended != induced:
                self.report.record(
                    CC.DIVERGENCE_INDUCED_COREPLUS,
                    _instance(
                        algebra,
                        family,
                        x_set,
                        enumerator.profile(choice),
                        core_plus=x_set.labels_of(iter_bits(extended)),
                        induced_core_plus=x_set.labels_of(iter_bits(induced)),
                    ),
                )
                return

    def search_strict_maximals(self) -> None:
        "C+ strictly inside the core intersected with the union of maximal sets."
        # on two alternatives x is outside C+ only if the other one dominates it
        cache = {}

        def candidates(algebra):
            return sorted((s for s in algebra.members() if s), key=mask_sort_key)

        for x_set, algebra, family, enumerator, choice in self._profiles(candidates, m_min=3):
            key = (algebra, family)
            if not key in cache:
                cache.clear()
                cache[key] = winning_test(WinningSets(family, algebra.n))
            wins = cache[key]
            self.report.work_units += 2
            coreplus = enumerator.coreplus_mask(wins, choice)
            union = enumerator.union_of_maximal_mask(choice)
            bound = enumerator.core_mask(wins, choice) & union
            if coreplus != bound:
                self.report.record(
                    CC.DIVERGENCE_STRICT_MAXIMALS,
                    _instance(
                        algebra,
                        family,
                        x_set,
                        enumerator.profile(choice),
                        extended=False,
                        core=x_set.labels_of(iter_bits(enumerator.core_mask(wins, choice))),
                        core_plus=x_set.labels_of(iter_bits(coreplus)),
                        union_of_maximal_sets=x_set.labels_of(iter_bits(union)),
                    ),
                )
                return

    def run(self) -> SearchReport:
        self.search_strict_maximals()
        self.search_nu_prime_below_kappa()
        self.search_induced_coreplus()
        for category, instance in self.report.found.items():
            self.log.info(
                "{0}: {1}".format(category, "found" if instance else "none in range")
            )
        return self.report


def search_divergence_instance(
    n_max: int = CC.GUARD_SEARCH_PLAYERS, m_max: int = CC.GUARD_SEARCH_AGENDA
) -> SearchReport:
    """Find, per category, the first instance on which
    nu' < kappa, or C+ of the winning sets differs from C+ of the induced game,
    or C+ is strictly smaller than the core intersected with the union of the
    maximal sets.

    :raises ScaleError: if n_max > 6 or m_max > 4.
    """
    return DivergenceSearch(n_max, m_max).run()
