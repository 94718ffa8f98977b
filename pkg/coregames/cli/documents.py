"""The instance document read and written by the command line.

A document is a JSON (or YAML) mapping::

    {
        "players": 3,
        "algebra": [[0], [1], [2]],          # optional, default: singletons
        "ground": "all",                     # optional, marks winning *sets*
        "winning": [[0, 1], [0, 2], [1, 2]],
        "alternatives": ["a", "b", "c"],
        "agenda": ["a", "b", "c"],           # optional, default: all
        "profile": {"0": [["a", "b"]]}       # optional, player -> [better, worse]
    }

Players are 0-based indices, alternatives are referred to by label.
"""

from coregames.coalition_algebra import Algebra, PlayerSet, algebra_from_partition, full_algebra
from coregames.constants import CoreGamesConstants as CC
from coregames.cores import WinningSets, as_winning_sets
from coregames.exceptions import CoreGamesException, InstanceError, PreconditionError
from coregames.extended import ALL_SUBSETS, GroundCollection, WinningFamily, winning_family_new
from coregames.games import SimpleGame, new_simple_game
from coregames.preferences import (
    Agenda,
    AlternativeSet,
    Preference,
    Profile,
    is_measurable,
    preference_from_pairs,
    profile_to_pairs,
)
from coregames.utils.logging_mixin import LoggingMixin
from coregames.utils.python_utils import is_iterable_not_string, mask_sort_key, members_of

from collections import OrderedDict
from contextlib import contextmanager
from typing import List, Optional, Sequence

import os
import yaml


@contextmanager
def _at(path: str):
    "Attach ``path`` to errors raised while reading one part of a document."
    try:
        yield
    except PreconditionError as e:
        raise InstanceError(e.message, path=e.path or path)
    except CoreGamesException as e:
        e.path = e.path or path
        raise
    except (TypeError, ValueError) as e:
        raise InstanceError(str(e), path=path)


def _list(value, path: str) -> list:
    if not is_iterable_not_string(value) or isinstance(value, dict):
        raise InstanceError("Expected a list, got {0}!".format(value), path=path)
    return list(value)


def _player_sets(player_set: PlayerSet, value, path: str) -> List[int]:
    masks = []
    for j, members in enumerate(_list(value, path)):
        with _at("{0}/{1}".format(path, j)):
            for i in _list(members, "{0}/{1}".format(path, j)):
                if not isinstance(i, int) or isinstance(i, bool):
                    raise InstanceError("Player indices must be integers, got {0}!".format(i))
            masks.append(player_set.coalition(members))
    return masks


class InstanceDocument(LoggingMixin):
    """A parsed instance.

    :param algebra: The coalition algebra.
    :param winning: Winning sets as bitmasks, in document order.
    :param x_set: The alternatives, if given.
    :param agenda: The agenda; defaults to all alternatives.
    :param ground: The ground collection; None for a plain simple game.
    :param profile: The profile, if given.
    """

    def __init__(
        self,
        algebra: Algebra,
        winning: Sequence[int],
        x_set: Optional[AlternativeSet] = None,
        agenda: Optional[Agenda] = None,
        ground: Optional[GroundCollection] = None,
        profile: Optional[Profile] = None,
    ) -> None:
        self.algebra = algebra
        self.winning = tuple(winning)
        self.x_set = x_set
        self.agenda = agenda if agenda is not None or x_set is None else Agenda.whole(x_set)
        self.ground = ground
        self.profile = profile

    @property
    def n(self) -> int:
        return self.algebra.n

    @property
    def is_extended(self) -> bool:
        return self.ground is not None

    def game(self) -> SimpleGame:
        with _at(CC.DOC_WINNING):
            return new_simple_game(self.algebra, self.winning)

    def family(self) -> WinningFamily:
        with _at(CC.DOC_WINNING):
            return winning_family_new(self.algebra, self.ground or ALL_SUBSETS, self.winning)

    def winning_sets(self) -> WinningSets:
        "The winning sets of the family if a ground is given, else of the game."
        return as_winning_sets(self.family() if self.is_extended else self.game())

    def require_alternatives(self) -> Agenda:
        if self.x_set is None:
            raise InstanceError("The document lists no alternatives!", path=CC.DOC_ALTERNATIVES)
        return self.agenda

    def require_profile(self) -> Profile:
        self.require_alternatives()
        if self.profile is None:
            raise InstanceError("The document has no profile!", path=CC.DOC_PROFILE)
        return self.profile

    def with_agenda(self, labels: Optional[str]) -> "InstanceDocument":
        "Copy with the agenda replaced by comma separated labels (None keeps it)."
        if labels is None:
            return self
        x_set = self.x_set or self._default_alternatives(labels)
        with _at(CC.DOC_AGENDA):
            agenda = Agenda(x_set, [x.strip() for x in labels.split(",") if x.strip()])
        return InstanceDocument(self.algebra, self.winning, x_set, agenda, self.ground, self.profile)

    @staticmethod
    def _default_alternatives(labels: str) -> AlternativeSet:
        with _at(CC.DOC_ALTERNATIVES):
            return AlternativeSet([x.strip() for x in labels.split(",") if x.strip()])

    def with_profile(self, profile: Profile) -> "InstanceDocument":
        return InstanceDocument(
            self.algebra, self.winning, self.x_set, self.agenda, self.ground, profile
        )

    def to_json(self) -> dict:
        result = OrderedDict()
        result[CC.DOC_PLAYERS] = self.n
        if not self.algebra.is_full:
            result[CC.DOC_ALGEBRA] = [members_of(b) for b in self.algebra.blocks]
        if self.ground is not None:
            if self.ground.is_all_subsets:
                result[CC.DOC_GROUND] = CC.DOC_GROUND_ALL
            else:
                result[CC.DOC_GROUND] = [
                    members_of(s) for s in sorted(self.ground.explicit, key=mask_sort_key)
                ]
        result[CC.DOC_WINNING] = [members_of(s) for s in self.winning]
        if self.x_set is not None:
            result[CC.DOC_ALTERNATIVES] = list(self.x_set.labels)
            if len(self.agenda) != self.x_set.m:
                result[CC.DOC_AGENDA] = self.x_set.labels_of(self.agenda)
        if self.profile is not None:
            result[CC.DOC_PROFILE] = profile_to_pairs(self.profile, self.x_set)
        return result

    @classmethod
    def parse(cls, raw) -> "InstanceDocument":
        """Validate a decoded document.

        :raises InstanceError: on malformed documents; errors of the
            constructing operations keep their code and gain a path.
        """
        if not isinstance(raw, dict):
            raise InstanceError("An instance document must be a mapping!", path="")
        unknown = [key for key in raw if not key in CC.DOC_KEYS]
        if unknown:
            _msg = "Unknown keys: {0}".format(", ".join(str(k) for k in unknown))
            raise InstanceError(_msg, path=str(unknown[0]))
        for key in (CC.DOC_PLAYERS, CC.DOC_WINNING):
            if not key in raw:
                raise InstanceError("Missing key {0}!".format(key), path=key)

        with _at(CC.DOC_PLAYERS):
            n = raw[CC.DOC_PLAYERS]
            if not isinstance(n, int) or isinstance(n, bool):
                raise InstanceError("players must be an integer, got {0}!".format(n))
            player_set = PlayerSet(n)

        if raw.get(CC.DOC_ALGEBRA) is None:
            algebra = full_algebra(player_set)
        else:
            blocks = _player_sets(player_set, raw[CC.DOC_ALGEBRA], CC.DOC_ALGEBRA)
            with _at(CC.DOC_ALGEBRA):
                algebra = algebra_from_partition(player_set, blocks)

        ground = None
        if CC.DOC_GROUND in raw:
            value = raw[CC.DOC_GROUND]
            if value == CC.DOC_GROUND_ALL:
                ground = ALL_SUBSETS
            else:
                ground = GroundCollection(_player_sets(player_set, value, CC.DOC_GROUND))

        winning = _player_sets(player_set, raw[CC.DOC_WINNING], CC.DOC_WINNING)

        x_set = None
        agenda = None
        if raw.get(CC.DOC_ALTERNATIVES) is not None:
            labels = _list(raw[CC.DOC_ALTERNATIVES], CC.DOC_ALTERNATIVES)
            with _at(CC.DOC_ALTERNATIVES):
                x_set = AlternativeSet(labels)
        if raw.get(CC.DOC_AGENDA) is not None:
            if x_set is None:
                raise InstanceError("An agenda needs alternatives!", path=CC.DOC_AGENDA)
            with _at(CC.DOC_AGENDA):
                agenda = Agenda(x_set, _list(raw[CC.DOC_AGENDA], CC.DOC_AGENDA))

        profile = None
        if raw.get(CC.DOC_PROFILE) is not None:
            if x_set is None:
                raise InstanceError("A profile needs alternatives!", path=CC.DOC_PROFILE)
            profile = cls._parse_profile(raw[CC.DOC_PROFILE], player_set, x_set)

        document = cls(algebra, winning, x_set, agenda, ground, profile)
        if profile is not None and not is_measurable(profile, algebra):
            document.log.warning("The profile is not measurable for the algebra!")
        return document

    @staticmethod
    def _parse_profile(value, player_set: PlayerSet, x_set: AlternativeSet) -> Profile:
        if not isinstance(value, dict):
            raise InstanceError("The profile must map players to pairs!", path=CC.DOC_PROFILE)
        preferences: List[Preference] = [Preference(()) for _ in range(player_set.n)]
        seen = set()
        for key, pairs in value.items():
            path = "{0}/{1}".format(CC.DOC_PROFILE, key)
            try:
                i = int(key)
            except (TypeError, ValueError):
                raise InstanceError("Players are integers, got {0}!".format(key), path=path)
            if not 0 <= i < player_set.n:
                raise InstanceError("Player {0} is out of range!".format(i), path=path)
            if i in seen:
                raise InstanceError("Player {0} is listed twice!".format(i), path=path)
            seen.add(i)
            with _at(path):
                preferences[i] = preference_from_pairs(x_set, _list(pairs, path))
        return Profile(preferences)


def load_document(file_path: str) -> InstanceDocument:
    "Read and validate an instance document from a JSON or YAML file."
    if not os.path.isfile(file_path):
        _msg = "Instance document {0} does not exist!".format(file_path)
        raise InstanceError(_msg, path="")
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            raw = yaml.safe_load(f)
    except (yaml.YAMLError, UnicodeDecodeError, OSError) as e:
        raise InstanceError("Malformed document: {0}".format(e), path="")
    return InstanceDocument.parse(raw)
