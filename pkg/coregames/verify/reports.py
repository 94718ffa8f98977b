from coregames.constants import CoreGamesConstants as CC
from coregames.preferences import AlternativeSet, Profile, profile_to_pairs

from collections import OrderedDict
from typing import Any, Dict, List, Optional


class TheoremReport:
    """Outcome of checking one equivalence on one instance.

    :param theorem: Name of the check, e.g. ``"nakamura_equivalence"``.
    :param x_set: Alternatives, for rendering profiles with labels.
    :param statements: Statement label -> truth value; None where a statement
        was not evaluated.
    :param holds: Whether the statements relate as claimed.
    :param evidence: How the "for all profiles" statements were decided, one of
        CC.EVIDENCE_ENUMERATION, CC.EVIDENCE_WITNESS, CC.EVIDENCE_VACUOUS.
    """

    def __init__(
        self,
        theorem: str,
        x_set: AlternativeSet,
        agenda: List[int],
        statements: Dict[str, Optional[bool]],
        holds: bool,
        evidence: str,
        mode: Optional[str] = None,
        counterexample: Optional[Profile] = None,
        refuting_profiles: Optional[Dict[str, Profile]] = None,
        numbers: Optional[Dict[str, Any]] = None,
        profiles_enumerated: int = 0,
        work_units: int = 0,
        notes: Optional[List[str]] = None,
    ) -> None:
        self.theorem = theorem
        self.x_set = x_set
        self.agenda = list(agenda)
        self.statements = OrderedDict(statements)
        self.holds = holds
        self.evidence = evidence
        self.mode = mode
        # a profile on which the claimed relationship fails
        self.counterexample = None if holds else counterexample
        # statement label -> a profile on which its "always nonempty" fails
        self.refuting_profiles = OrderedDict(refuting_profiles or {})
        self.numbers = OrderedDict(numbers or {})
        self.profiles_enumerated = profiles_enumerated
        self.work_units = work_units
        self.notes = list(notes or [])

    def __repr__(self) -> str:
        return "TheoremReport({0}, holds={1}, {2})".format(
            self.theorem, self.holds, dict(self.statements)
        )

    def to_json(self) -> dict:
        result = OrderedDict()
        result["theorem"] = self.theorem
        result["agenda"] = self.x_set.labels_of(self.agenda)
        result["statements"] = self.statements
        result["holds"] = self.holds
        result["evidence"] = self.evidence
        result["mode"] = self.mode
        result["numbers"] = self.numbers
        if self.counterexample is not None:
            result["counterexample"] = profile_to_pairs(self.counterexample, self.x_set)
        result["refuting_profiles"] = OrderedDict(
            (label, profile_to_pairs(profile, self.x_set))
            for (label, profile) in self.refuting_profiles.items()
        )
        result["profiles_enumerated"] = self.profiles_enumerated
        result["work_units"] = self.work_units
        if self.notes:
            result["notes"] = self.notes
        return result


class SearchReport:
    """First instance found per divergence category.

    ``found[category]`` is an instance dictionary (players, algebra, ground,
    winning, alternatives, agenda, profile and the computed values) or None.
    """

    def __init__(self, n_max: int, m_max: int) -> None:
        self.n_max = n_max
        self.m_max = m_max
        self.found: Dict[str, Optional[dict]] = OrderedDict(
            (category, None) for category in CC.DIVERGENCE_CATEGORIES
        )
        self.work_units = 0

    def record(self, category: str, instance: dict) -> None:
        if self.found[category] is None:
            self.found[category] = instance

    def to_json(self) -> dict:
        result = OrderedDict()
        result["n_max"] = self.n_max
        result["m_max"] = self.m_max
        result["found"] = OrderedDict(
            (category, "none in range" if instance is None else instance)
            for (category, instance) in self.found.items()
        )
        result["work_units"] = self.work_units
        return result
