"""Checks of the core nonemptiness equivalences on concrete instances.

Each check evaluates its statements, decides the "for every profile"
statements by enumerating the measurable profiles on the agenda when that is
within the guards, and otherwise by a witness profile (for the statements that
fail) or by the veto player argument (for weak games, where they hold).
The evidence path used is recorded in the report.
"""

from coregames.coalition_algebra import Algebra
from coregames.constants import CoreGamesConstants as CC
from coregames.cores import as_winning_sets, core, core_plus
from coregames.exceptions import PreconditionError, ScaleError
from coregames.extended import (
    WinningFamily,
    cover_condition_holds,
    induced_game,
    induced_nakamura,
    kappa_number,
    nu_prime,
)
from coregames.games import SimpleGame, intersection_of, nakamura_number
from coregames.preferences import Agenda, maximal_set
from coregames.utils.logging_mixin import LoggingMixin
from coregames.verify.enumeration import (
    ProfileEnumerator,
    enumerate_preferences_for,
    resolve_mode,
    winning_test,
)
from coregames.verify.reports import TheoremReport
from coregames.witness import (
    empty_core_linear_witness,
    empty_core_witness,
    empty_coreplus_witness_extended,
)

from collections import OrderedDict
from multiprocessing.dummy import Pool as ThreadPool
from typing import Callable, Dict, List, Optional, Sequence, Tuple

Check = Tuple[str, Callable[[Tuple[int, ...]], bool]]


class _Sweep:
    "Merged result of running checks over every profile of an enumerator."

    def __init__(self, failures: Dict[str, Tuple[int, ...]], profiles: int, work_units: int) -> None:
        self.failures = failures
        self.profiles = profiles
        self.work_units = work_units


class CoreGamesVerifier(LoggingMixin):
    """Runs the theorem checks.

    :param jobs: Number of worker threads; shards are the relations of the first
        block, so results do not depend on it.
    :param guard: Largest number of algebra blocks for which profiles are
        enumerated.
    """

    def __init__(self, jobs: int = CC.DEFAULT_JOBS, guard: int = CC.GUARD_PLAYERS) -> None:
        if jobs < 1 or guard < 1:
            raise PreconditionError("jobs and guard must be positive!")
        self.jobs = jobs
        self.guard = guard

    def enumerator(
        self,
        algebra: Algebra,
        agenda: Agenda,
        mode: str,
        relation_filter: Optional[Callable] = None,
    ) -> ProfileEnumerator:
        """Measurable profiles-for-the-agenda of the given mode.

        :raises ScaleError: outside the guards.
        """
        m = len(agenda)
        if len(algebra.blocks) > self.guard:
            _msg = "Profile enumeration is limited to {0} blocks, got {1}!"
            raise ScaleError(_msg.format(self.guard, len(algebra.blocks)))
        limit = CC.GUARD_AGENDA_FULL
        if mode in (CC.MODE_MAXSETS, CC.MODE_LINEAR):
            limit = CC.GUARD_AGENDA_MAXSETS
        if m > limit:
            _msg = "Profile enumeration in mode {0} is limited to agendas of size {1}, got {2}!"
            raise ScaleError(_msg.format(mode, limit, m))
        relations = enumerate_preferences_for(m, mode, for_agenda=True)
        if relation_filter is not None:
            relations = filter(relation_filter, relations)
        return ProfileEnumerator(algebra, agenda, list(relations), mode)

    def _try_enumerator(self, *args, **kwargs) -> Optional[ProfileEnumerator]:
        try:
            return self.enumerator(*args, **kwargs)
        except ScaleError as e:
            self.log.info("Not enumerating: {0}".format(e.message))
            return None

    def _enumerator_for(self, algebra: Algebra, agenda: Agenda, mode: str) -> Optional[ProfileEnumerator]:
        "Full enumeration if possible, else maximal sets only, else None."
        enumerator = None
        if mode == CC.MODE_FULL:
            enumerator = self._try_enumerator(algebra, agenda, CC.MODE_FULL)
        if enumerator is None:
            enumerator = self._try_enumerator(algebra, agenda, CC.MODE_MAXSETS)
        return enumerator

    @staticmethod
    def _evaluate_shard(enumerator: ProfileEnumerator, checks: Sequence[Check], first: int):
        failures = {}
        profiles = 0
        work_units = 0
        for choice in enumerator.shard(first):
            profiles += 1
            for label, fails in checks:
                if label in failures:
                    continue
                work_units += 1
                if fails(choice):
                    failures[label] = choice
        return failures, profiles, work_units

    def sweep(self, enumerator: ProfileEnumerator, checks: Sequence[Check]) -> _Sweep:
        """Evaluate every check on every profile and keep, per check, the
        earliest profile on which it fails."""

        def evaluate(first):
            return self._evaluate_shard(enumerator, checks, first)

        shards = range(len(enumerator.relations))
        if self.jobs > 1:
            pool = ThreadPool(self.jobs)
            try:
                results = pool.map(evaluate, shards)
            finally:
                pool.close()
                pool.join()
        else:
            results = [evaluate(first) for first in shards]

        failures: Dict[str, Tuple[int, ...]] = {}
        profiles = 0
        work_units = 0
        # shards come in profile order, so the first failure seen is the earliest
        for shard_failures, shard_profiles, shard_work in results:
            profiles += shard_profiles
            work_units += shard_work
            for label, choice in shard_failures.items():
                failures.setdefault(label, choice)
        self.log.debug(
            "Swept {0} profiles ({1} work units), failing: {2}".format(
                profiles, work_units, sorted(failures)
            )
        )
        return _Sweep(failures, profiles, work_units)

    @staticmethod
    def _agree(statements: Dict[str, Optional[bool]], reference: str = "i") -> bool:
        return all(
            value == statements[reference]
            for value in statements.values()
            if value is not None
        )

    def _counterexample(self, enumerator, sweep, statements, labels):
        "A profile refuting a statement that should have held, if any."
        if enumerator is None or not statements["i"]:
            return None
        for label in labels:
            if label in sweep.failures:
                return enumerator.profile(sweep.failures[label])
        return None

    def nakamura_equivalence(self, game: SimpleGame, agenda: Agenda, mode: Optional[str] = None) -> TheoremReport:
        mode = resolve_mode(mode)
        if not mode in (CC.MODE_FULL, CC.MODE_MAXSETS):
            _msg = "The Nakamura equivalence is checked in modes {0} and {1}, not {2}!"
            raise PreconditionError(_msg.format(CC.MODE_FULL, CC.MODE_MAXSETS, mode))
        nakamura = nakamura_number(game, jobs=self.jobs)
        m = len(agenda)
        statements = OrderedDict([("i", nakamura.value > m), ("ii", None), ("iii", None)])
        numbers = OrderedDict([("nakamura", nakamura.value), ("agenda_size", m)])
        wins = winning_test(as_winning_sets(game))
        notes = []
        refuting = OrderedDict()

        enumerator = self._enumerator_for(game.algebra, agenda, mode)
        if enumerator is not None and enumerator.mode != mode:
            notes.append("full enumeration out of guard, C+ checked on maximal sets only")
            mode = enumerator.mode

        if enumerator is not None:
            checks: List[Check] = [("ii", lambda c: enumerator.coreplus_is_empty(wins, c))]
            if mode == CC.MODE_FULL:
                checks.append(("iii", lambda c: enumerator.core_is_empty(wins, c)))
            sweep = self.sweep(enumerator, checks)
            for label, _ in checks:
                statements[label] = label not in sweep.failures
                if label in sweep.failures:
                    refuting[label] = enumerator.profile(sweep.failures[label])
            if mode == CC.MODE_MAXSETS:
                if statements["ii"]:
                    # C+ is contained in C
                    statements["iii"] = True
                    notes.append("(iii) follows from (ii)")
                elif not statements["i"]:
                    witness = empty_core_witness(game, agenda)
                    statements["iii"] = bool(core(game, agenda, witness.profile))
                    refuting["iii"] = witness.profile
            counterexample = self._counterexample(enumerator, sweep, statements, ("ii", "iii"))
            return TheoremReport(
                "nakamura_equivalence",
                agenda.x_set,
                agenda.ordered,
                statements,
                holds=self._agree(statements),
                evidence=CC.EVIDENCE_ENUMERATION,
                mode=mode,
                counterexample=counterexample,
                refuting_profiles=refuting,
                numbers=numbers,
                profiles_enumerated=sweep.profiles,
                work_units=sweep.work_units,
                notes=notes,
            )

        evidence, work_units = self._beyond_guard(game.winning, game.player_set.full, statements)
        if evidence == CC.EVIDENCE_WITNESS:
            witness = empty_core_witness(game, agenda)
            statements["ii"] = False if not core_plus(game, agenda, witness.profile) else None
            statements["iii"] = False if not core(game, agenda, witness.profile) else None
            refuting["ii"] = refuting["iii"] = witness.profile
        return TheoremReport(
            "nakamura_equivalence",
            agenda.x_set,
            agenda.ordered,
            statements,
            holds=self._agree(statements),
            evidence=evidence,
            mode=mode,
            refuting_profiles=refuting,
            numbers=numbers,
            work_units=work_units,
            notes=notes,
        )

    def _beyond_guard(self, sets, full: int, statements: Dict[str, Optional[bool]]) -> Tuple[str, int]:
        """Decide the profile statements without enumeration.

        If (i) fails the caller builds a witness. If (i) holds, the statements
        hold for weak families: every winning set contains a veto player, whose
        maximal elements are then undominated and satisfy a member of each
        winning set.
        """
        if not statements["i"]:
            return CC.EVIDENCE_WITNESS, 2
        if intersection_of(sets, full):
            for label in statements:
                if statements[label] is None:
                    statements[label] = True
            return CC.EVIDENCE_VACUOUS, 0
        raise ScaleError(
            "The instance is outside the enumeration guards and (i) holds;"
            " the profile statements cannot be decided."
        )

    def acyclic_theorem(self, game: SimpleGame, agenda: Agenda) -> TheoremReport:
        "Core and dominance acyclicity over acyclic profiles."
        nakamura = nakamura_number(game, jobs=self.jobs)
        m = len(agenda)
        statements = OrderedDict(
            [("i", nakamura.value > m), ("core", None), ("dominance_acyclic", None)]
        )
        numbers = OrderedDict([("nakamura", nakamura.value), ("agenda_size", m)])
        wins = winning_test(as_winning_sets(game))
        refuting = OrderedDict()
        enumerator = self._try_enumerator(game.algebra, agenda, CC.MODE_ACYCLIC)
        if enumerator is not None:
            checks = [
                ("core", lambda c: enumerator.core_is_empty(wins, c)),
                ("dominance_acyclic", lambda c: enumerator.dominance_is_cyclic(wins, c)),
            ]
            sweep = self.sweep(enumerator, checks)
            for label, _ in checks:
                statements[label] = label not in sweep.failures
                if label in sweep.failures:
                    refuting[label] = enumerator.profile(sweep.failures[label])
            return TheoremReport(
                "acyclic_theorem",
                agenda.x_set,
                agenda.ordered,
                statements,
                holds=self._agree(statements),
                evidence=CC.EVIDENCE_ENUMERATION,
                mode=CC.MODE_ACYCLIC,
                counterexample=self._counterexample(
                    enumerator, sweep, statements, ("core", "dominance_acyclic")
                ),
                refuting_profiles=refuting,
                numbers=numbers,
                profiles_enumerated=sweep.profiles,
                work_units=sweep.work_units,
            )

        evidence, work_units = self._beyond_guard(game.winning, game.player_set.full, statements)
        if evidence == CC.EVIDENCE_WITNESS:
            # the witness preferences are acyclic and its dominance runs around the cycle
            witness = empty_core_witness(game, agenda)
            statements["core"] = False if not core(game, agenda, witness.profile) else None
            statements["dominance_acyclic"] = False
            refuting["core"] = refuting["dominance_acyclic"] = witness.profile
        return TheoremReport(
            "acyclic_theorem",
            agenda.x_set,
            agenda.ordered,
            statements,
            holds=self._agree(statements),
            evidence=evidence,
            mode=CC.MODE_ACYCLIC,
            refuting_profiles=refuting,
            numbers=numbers,
            work_units=work_units,
        )

    def linear_proposition(self, game: SimpleGame, agenda: Agenda) -> TheoremReport:
        """(i) against C+ and C nonemptiness over profiles with a single maximal
        element per player (ii.a, iii.a) and over linear orders (ii.b, iii.b)."""
        nakamura = nakamura_number(game, jobs=self.jobs)
        m = len(agenda)
        statements = OrderedDict(
            [
                ("i", nakamura.value > m),
                ("ii.a", None),
                ("iii.a", None),
                ("ii.b", None),
                ("iii.b", None),
            ]
        )
        numbers = OrderedDict([("nakamura", nakamura.value), ("agenda_size", m)])
        wins = winning_test(as_winning_sets(game))
        refuting = OrderedDict()
        notes = []
        profiles = 0
        work_units = 0
        counterexample = None
        everything = range(m)

        def single_maximal(pref):
            return len(maximal_set(pref, everything)) == 1

        variants = [
            ("a", CC.MODE_FULL, single_maximal),
            ("b", CC.MODE_LINEAR, None),
        ]
        undecided = []
        for suffix, mode, relation_filter in variants:
            enumerator = self._try_enumerator(game.algebra, agenda, mode, relation_filter)
            if enumerator is None:
                undecided.append(suffix)
                continue
            checks = [
                ("ii." + suffix, lambda c, e=enumerator: e.coreplus_is_empty(wins, c)),
                ("iii." + suffix, lambda c, e=enumerator: e.core_is_empty(wins, c)),
            ]
            sweep = self.sweep(enumerator, checks)
            profiles += sweep.profiles
            work_units += sweep.work_units
            for label, _ in checks:
                statements[label] = label not in sweep.failures
                if label in sweep.failures:
                    refuting[label] = enumerator.profile(sweep.failures[label])
            counterexample = counterexample or self._counterexample(
                enumerator, sweep, statements, [label for label, _ in checks]
            )

        evidence = CC.EVIDENCE_ENUMERATION
        if undecided:
            if not statements["i"]:
                # linear orders with exactly one maximal element refute all four
                witness = empty_core_linear_witness(game, agenda)
                cp_empty = not core_plus(game, agenda, witness.profile)
                c_empty = not core(game, agenda, witness.profile)
                for suffix in undecided:
                    statements["ii." + suffix] = False if cp_empty else None
                    statements["iii." + suffix] = False if c_empty else None
                    refuting["ii." + suffix] = refuting["iii." + suffix] = witness.profile
                work_units += 2
                evidence = CC.EVIDENCE_WITNESS
            elif intersection_of(game.winning, game.player_set.full):
                for suffix in undecided:
                    statements["ii." + suffix] = statements["iii." + suffix] = True
                evidence = CC.EVIDENCE_VACUOUS
            else:
                notes.extend(
                    "statements {0} not decided: out of guard".format(suffix)
                    for suffix in undecided
                )
                if len(undecided) == len(variants):
                    raise ScaleError(
                        "The instance is outside the enumeration guards and (i) holds;"
                        " the profile statements cannot be decided."
                    )
        return TheoremReport(
            "linear_proposition",
            agenda.x_set,
            agenda.ordered,
            statements,
            holds=self._agree(statements),
            evidence=evidence,
            mode=CC.MODE_LINEAR,
            counterexample=counterexample,
            refuting_profiles=refuting,
            numbers=numbers,
            profiles_enumerated=profiles,
            work_units=work_units,
            notes=notes,
        )

    def extended_equivalence(
        self, family: WinningFamily, agenda: Agenda, mode: Optional[str] = None
    ) -> TheoremReport:
        """(i) #B < kappa against C+ nonemptiness (ii), and (ii) implies C
        nonemptiness (iii), for the extended winning sets. (iii) never implies
        anything here."""
        mode = resolve_mode(mode)
        if not mode in (CC.MODE_FULL, CC.MODE_MAXSETS):
            _msg = "The extended equivalence is checked in modes {0} and {1}, not {2}!"
            raise PreconditionError(_msg.format(CC.MODE_FULL, CC.MODE_MAXSETS, mode))
        kappa = kappa_number(family)
        m = len(agenda)
        statements = OrderedDict([("i", kappa.value > m), ("ii", None), ("iii", None)])
        numbers = OrderedDict(
            [
                ("kappa", kappa.value),
                ("nu_prime", nu_prime(family).value),
                ("induced_nakamura", induced_nakamura(family).value),
                ("agenda_size", m),
            ]
        )
        notes = []
        if not len(induced_game(family)):
            notes.append("induced game empty")
        winning_sets = as_winning_sets(family)
        wins = winning_test(winning_sets)
        refuting = OrderedDict()

        def holds(statements):
            implied = not statements["ii"] or statements["iii"] is not False
            return statements["ii"] in (None, statements["i"]) and implied

        enumerator = self._enumerator_for(family.algebra, agenda, mode)
        if enumerator is not None and enumerator.mode != mode:
            notes.append("full enumeration out of guard, C+ checked on maximal sets only")
            mode = enumerator.mode

        if enumerator is not None:
            checks: List[Check] = [("ii", lambda c: enumerator.coreplus_is_empty(wins, c))]
            if mode == CC.MODE_FULL:
                checks.append(("iii", lambda c: enumerator.core_is_empty(wins, c)))
            sweep = self.sweep(enumerator, checks)
            for label, _ in checks:
                statements[label] = label not in sweep.failures
                if label in sweep.failures:
                    refuting[label] = enumerator.profile(sweep.failures[label])
            if mode == CC.MODE_MAXSETS and statements["ii"]:
                statements["iii"] = True
                notes.append("(iii) follows from (ii)")
            counterexample = None
            if statements["i"] and "ii" in sweep.failures:
                counterexample = refuting["ii"]
            elif statements["ii"] and "iii" in sweep.failures:
                counterexample = refuting["iii"]
            return TheoremReport(
                "extended_equivalence",
                agenda.x_set,
                agenda.ordered,
                statements,
                holds=holds(statements),
                evidence=CC.EVIDENCE_ENUMERATION,
                mode=mode,
                counterexample=counterexample,
                refuting_profiles=refuting,
                numbers=numbers,
                profiles_enumerated=sweep.profiles,
                work_units=sweep.work_units,
                notes=notes,
            )

        evidence, work_units = self._beyond_guard(
            winning_sets.family, family.algebra.player_set.full, statements
        )
        if evidence == CC.EVIDENCE_WITNESS:
            witness = empty_coreplus_witness_extended(family, agenda)
            statements["ii"] = False if not core_plus(winning_sets, agenda, witness.profile) else None
            if not core(winning_sets, agenda, witness.profile):
                statements["iii"] = False
                refuting["iii"] = witness.profile
            refuting["ii"] = witness.profile
        return TheoremReport(
            "extended_equivalence",
            agenda.x_set,
            agenda.ordered,
            statements,
            holds=holds(statements),
            evidence=evidence,
            mode=mode,
            refuting_profiles=refuting,
            numbers=numbers,
            work_units=work_units,
            notes=notes,
        )

    def cover_condition(self, family: WinningFamily, agenda: Agenda) -> TheoremReport:
        """If every winning set contains a winning coalition, the extended
        winning sets and the induced game give the same cores on every
        measurable profile."""
        covered = cover_condition_holds(family)
        statements = OrderedDict(
            [("cover_condition", covered), ("cores_agree", None), ("coreplus_agree", None)]
        )
        extended_wins = winning_test(as_winning_sets(family))
        induced = induced_game(family)
        induced_wins = winning_test(induced)
        refuting = OrderedDict()

        def holds(statements):
            return not covered or (
                statements["cores_agree"] is not False
                and statements["coreplus_agree"] is not False
            )

        enumerator = self._try_enumerator(family.algebra, agenda, CC.MODE_FULL)
        if enumerator is None:
            if covered:
                raise ScaleError(
                    "The instance is outside the enumeration guards;"
                    " the agreement of the cores cannot be decided."
                )
            return TheoremReport(
                "cover_condition",
                agenda.x_set,
                agenda.ordered,
                statements,
                holds=True,
                evidence=CC.EVIDENCE_VACUOUS,
                mode=CC.MODE_FULL,
            )
        checks = [
            (
                "cores_agree",
                lambda c: enumerator.core_mask(extended_wins, c)
                != enumerator.core_mask(induced_wins, c),
            ),
            (
                "coreplus_agree",
                lambda c: enumerator.coreplus_mask(extended_wins, c)
                != enumerator.coreplus_mask(induced_wins, c),
            ),
        ]
        sweep = self.sweep(enumerator, checks)
        for label, _ in checks:
            statements[label] = label not in sweep.failures
            if label in sweep.failures:
                refuting[label] = enumerator.profile(sweep.failures[label])
        counterexample = None
        if covered and refuting:
            counterexample = next(iter(refuting.values()))
        return TheoremReport(
            "cover_condition",
            agenda.x_set,
            agenda.ordered,
            statements,
            holds=holds(statements),
            evidence=CC.EVIDENCE_ENUMERATION,
            mode=CC.MODE_FULL,
            counterexample=counterexample,
            refuting_profiles=refuting,
            profiles_enumerated=sweep.profiles,
            work_units=sweep.work_units,
        )


def check_nakamura_equivalence(
    game: SimpleGame,
    agenda: Agenda,
    mode: Optional[str] = None,
    jobs: int = CC.DEFAULT_JOBS,
    guard: int = CC.GUARD_PLAYERS,
) -> TheoremReport:
    """(i) #B < nu, (ii) C+ is nonempty and (iii) C is nonempty for every
    measurable profile for the agenda; the three must agree.

    :param mode: full (default) or maxsets, which decides (ii) on one
        representative preference per maximal set.
    :raises ScaleError: if the instance is outside the guards and the
        statements cannot be decided by a witness.
    """
    return CoreGamesVerifier(jobs, guard).nakamura_equivalence(game, agenda, mode)


def check_acyclic_theorem(
    game: SimpleGame, agenda: Agenda, jobs: int = CC.DEFAULT_JOBS, guard: int = CC.GUARD_PLAYERS
) -> TheoremReport:
    """Over acyclic measurable profiles: the core is always nonempty, and the
    dominance relation on the agenda is always acyclic, iff #B < nu."""
    return CoreGamesVerifier(jobs, guard).acyclic_theorem(game, agenda)


def check_linear_proposition(
    game: SimpleGame, agenda: Agenda, jobs: int = CC.DEFAULT_JOBS, guard: int = CC.GUARD_PLAYERS
) -> TheoremReport:
    return CoreGamesVerifier(jobs, guard).linear_proposition(game, agenda)


def check_extended_equivalence(
    family: WinningFamily,
    agenda: Agenda,
    mode: Optional[str] = None,
    jobs: int = CC.DEFAULT_JOBS,
    guard: int = CC.GUARD_PLAYERS,
) -> TheoremReport:
    return CoreGamesVerifier(jobs, guard).extended_equivalence(family, agenda, mode)


def check_cover_condition(
    family: WinningFamily, agenda: Agenda, jobs: int = CC.DEFAULT_JOBS, guard: int = CC.GUARD_PLAYERS
) -> TheoremReport:
    return CoreGamesVerifier(jobs, guard).cover_condition(family, agenda)
