"""Asymmetric preference relations, profiles and the set functions built on them.

Alternatives are dense indices into an :class:`AlternativeSet`; labels only
appear at the I/O boundary. A preference is an arbitrary asymmetric relation
stored as its set of ordered pairs ``(x, y)`` meaning "x is preferred to y";
incomparability is the default.
"""

from coregames.coalition_algebra import Algebra, Coalition, contains
from coregames.exceptions import AsymmetryError, PreconditionError
from coregames.utils.python_utils import is_iterable_not_string

from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

Alternative = int
Pair = Tuple[Alternative, Alternative]


class AlternativeSet:
    "The set X of alternatives, with distinct string labels."

    def __init__(self, labels: Sequence[str]) -> None:
        labels = [str(label) for label in labels]
        if len(labels) < 2:
            raise PreconditionError("X needs at least two alternatives!")
        if len(set(labels)) != len(labels):
            raise PreconditionError(
                "Alternative labels must be distinct: {0}".format(labels)
            )
        self.labels = tuple(labels)
        self.m = len(labels)
        self._index = {label: i for (i, label) in enumerate(labels)}

    def __len__(self) -> int:
        return self.m

    def __eq__(self, other) -> bool:
        return isinstance(other, AlternativeSet) and other.labels == self.labels

    def __hash__(self) -> int:
        return hash(("AlternativeSet", self.labels))

    def __repr__(self) -> str:
        return "AlternativeSet({0})".format(list(self.labels))

    def index(self, alternative: Union[str, int]) -> Alternative:
        "Translate a label (or pass through an index) to an index."
        if isinstance(alternative, int) and not isinstance(alternative, bool):
            if not 0 <= alternative < self.m:
                raise PreconditionError(
                    "Alternative index {0} out of range!".format(alternative)
                )
            return alternative
        try:
            return self._index[str(alternative)]
        except KeyError:
            raise PreconditionError("Unknown alternative {0}!".format(alternative))

    def label(self, x: Alternative) -> str:
        return self.labels[x]

    def labels_of(self, alternatives: Iterable[Alternative]) -> List[str]:
        "Labels of the given alternatives, in X order."
        return [self.labels[x] for x in sorted(alternatives)]


class Agenda:
    "A nonempty subset B of X."

    def __init__(self, x_set: AlternativeSet, members: Iterable[Union[str, int]]) -> None:
        self.x_set = x_set
        self.members = frozenset(x_set.index(x) for x in members)
        if not self.members:
            raise PreconditionError("An agenda must be nonempty!")
        self.ordered = tuple(sorted(self.members))

    @classmethod
    def whole(cls, x_set: AlternativeSet) -> "Agenda":
        return cls(x_set, range(x_set.m))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.ordered)

    def __contains__(self, x: Alternative) -> bool:
        return x in self.members

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Agenda)
            and other.x_set == self.x_set
            and other.members == self.members
        )

    def __hash__(self) -> int:
        return hash(("Agenda", self.x_set, self.members))

    def __repr__(self) -> str:
        return "Agenda({0})".format(self.x_set.labels_of(self.members))


class Preference:
    """An asymmetric, irreflexive relation on alternatives.

    Use :func:`preference_from_pairs` to build a validated instance.
    ``beaten_by[y]`` is the bitmask of alternatives preferred to ``y``.
    """

    def __init__(self, pairs: Iterable[Pair]) -> None:
        self.pairs = frozenset(pairs)
        beaten_by: Dict[Alternative, int] = {}
        for (x, y) in self.pairs:
            beaten_by[y] = beaten_by.get(y, 0) | (1 << x)
        self.beaten_by = beaten_by

    def prefers(self, x: Alternative, y: Alternative) -> bool:
        return (x, y) in self.pairs

    def __eq__(self, other) -> bool:
        return isinstance(other, Preference) and other.pairs == self.pairs

    def __hash__(self) -> int:
        return hash(("Preference", self.pairs))

    def __repr__(self) -> str:
        return "Preference({0})".format(sorted(self.pairs))


def _check_asymmetric(pairs: FrozenSet[Pair]) -> None:
    for (x, y) in pairs:
        if x == y:
            raise AsymmetryError("Preference contains the reflexive pair {0}!".format((x, y)))
        if (y, x) in pairs:
            raise AsymmetryError(
                "Preference contains both {0} and {1}!".format((x, y), (y, x))
            )


def preference_from_pairs(
    x_set: AlternativeSet, pairs: Iterable[Tuple[Union[str, int], Union[str, int]]]
) -> Preference:
    """Validate and build a preference.

    :param x_set: The alternatives; pairs may use labels or indices.
    :param pairs: Ordered pairs (better, worse).
    :raises AsymmetryError: if a pair and its reverse, or a reflexive pair, occur.
    """
    index_pairs = []
    for pair in pairs:
        if not is_iterable_not_string(pair) or len(pair) != 2:
            raise AsymmetryError("Invalid preference pair {0}!".format(pair))
        index_pairs.append((x_set.index(pair[0]), x_set.index(pair[1])))
    index_pairs = frozenset(index_pairs)
    _check_asymmetric(index_pairs)
    return Preference(index_pairs)


def transitive_closure(pairs: Iterable[Pair]) -> FrozenSet[Pair]:
    closed = set(pairs)
    changed = True
    while changed:
        changed = False
        for (x, y) in list(closed):
            for (u, v) in list(closed):
                if y == u and (x, v) not in closed:
                    closed.add((x, v))
                    changed = True
    return frozenset(closed)


def linear_order(x_set: AlternativeSet, ranking: Sequence[Union[str, int]]) -> Preference:
    "The linear order ranking[0] > ranking[1] > ... on the ranked alternatives."
    ranked = [x_set.index(x) for x in ranking]
    pairs = [
        (ranked[a], ranked[b])
        for a in range(len(ranked))
        for b in range(a + 1, len(ranked))
    ]
    return preference_from_pairs(x_set, pairs)


def restrict(pref: Preference, domain: Iterable[Alternative]) -> Preference:
    domain = frozenset(domain)
    return Preference((x, y) for (x, y) in pref.pairs if x in domain and y in domain)


def _mask_of(alternatives: Iterable[Alternative]) -> int:
    mask = 0
    for x in alternatives:
        mask |= 1 << x
    return mask


def maximal_set(pref: Preference, agenda: Union[Agenda, Iterable[Alternative]]) -> FrozenSet[Alternative]:
    "Agenda members that no agenda member is preferred to."
    members = agenda.ordered if isinstance(agenda, Agenda) else tuple(agenda)
    agenda_mask = _mask_of(members)
    return frozenset(
        x for x in members if not pref.beaten_by.get(x, 0) & agenda_mask
    )


def has_maximal_element(pref: Preference, agenda: Union[Agenda, Iterable[Alternative]]) -> bool:
    return bool(maximal_set(pref, agenda))


def is_acyclic(pref: Preference) -> bool:
    "True iff the directed graph of the pairs has no directed cycle."
    successors: Dict[Alternative, List[Alternative]] = {}
    indegree: Dict[Alternative, int] = {}
    for (x, y) in pref.pairs:
        successors.setdefault(x, []).append(y)
        indegree[y] = indegree.get(y, 0) + 1
        indegree.setdefault(x, 0)
    queue = [x for (x, d) in indegree.items() if d == 0]
    removed = 0
    while queue:
        x = queue.pop()
        removed += 1
        for y in successors.get(x, []):
            indegree[y] -= 1
            if indegree[y] == 0:
                queue.append(y)
    return removed == len(indegree)


def is_linear_on(pref: Preference, domain: Iterable[Alternative]) -> bool:
    "True iff pref restricted to domain is transitive and total on domain."
    domain = sorted(set(domain))
    for a, x in enumerate(domain):
        for y in domain[a + 1 :]:
            if not (pref.prefers(x, y) or pref.prefers(y, x)):
                return False
    for x in domain:
        for y in domain:
            if not pref.prefers(x, y):
                continue
            for z in domain:
                if pref.prefers(y, z) and not pref.prefers(x, z):
                    return False
    return True


class Profile:
    "One preference per player, indexed by player."

    def __init__(self, preferences: Sequence[Preference]) -> None:
        if not preferences:
            raise PreconditionError("A profile needs at least one player!")
        self.preferences = tuple(preferences)
        self.n = len(self.preferences)
        self._supporters: Dict[Pair, Coalition] = {}
        for i, pref in enumerate(self.preferences):
            for pair in pref.pairs:
                self._supporters[pair] = self._supporters.get(pair, 0) | (1 << i)

    @classmethod
    def from_pairs(cls, x_set: AlternativeSet, per_player_pairs: Sequence[Iterable]) -> "Profile":
        return cls([preference_from_pairs(x_set, pairs) for pairs in per_player_pairs])

    @classmethod
    def empty(cls, n: int) -> "Profile":
        "The profile in which every player is indifferent between everything."
        return cls([Preference(()) for _ in range(n)])

    def __getitem__(self, i: int) -> Preference:
        return self.preferences[i]

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, Profile) and other.preferences == self.preferences

    def __hash__(self) -> int:
        return hash(("Profile", self.preferences))

    def __repr__(self) -> str:
        return "Profile({0})".format([sorted(p.pairs) for p in self.preferences])

    def supporters(self, x: Alternative, y: Alternative) -> Coalition:
        "The coalition {i : x >_i y}."
        return self._supporters.get((x, y), 0)

    def support_pairs(self) -> Dict[Pair, Coalition]:
        "Every ordered pair some player holds, with its supporters."
        return dict(self._supporters)

    def maximal_sets(self, agenda: Union[Agenda, Iterable[Alternative]]) -> List[FrozenSet[Alternative]]:
        return [maximal_set(pref, agenda) for pref in self.preferences]


def is_measurable(
    profile: Profile, algebra: Algebra, x_set: Optional[AlternativeSet] = None
) -> bool:
    """True iff every coalition {i : x >_i y} is an algebra member.

    Pairs nobody holds have the empty supporter coalition, which is always a
    member, so only held pairs are checked; ``x_set`` is accepted for symmetry
    with the other operations.
    """
    if profile.n != algebra.n:
        return False
    return all(contains(algebra, s) for s in profile.support_pairs().values())


def is_profile_for(profile: Profile, agenda: Agenda, algebra: Algebra) -> bool:
    "Measurable, and every player has a maximal element of the agenda."
    return is_measurable(profile, algebra, agenda.x_set) and all(
        profile.maximal_sets(agenda)
    )


def pareto_set(profile: Profile, agenda: Union[Agenda, Iterable[Alternative]]) -> FrozenSet[Alternative]:
    "Agenda members to which no agenda member is unanimously preferred."
    members = agenda.ordered if isinstance(agenda, Agenda) else tuple(agenda)
    everyone = (1 << profile.n) - 1
    return frozenset(
        x
        for x in members
        if not any(profile.supporters(y, x) == everyone for y in members)
    )


def union_of_maximal_sets(profile: Profile, agenda: Union[Agenda, Iterable[Alternative]]) -> FrozenSet[Alternative]:
    result = frozenset()
    for maximals in profile.maximal_sets(agenda):
        result |= maximals
    return result


def profile_to_pairs(profile: Profile, x_set: AlternativeSet) -> Dict[str, List[List[str]]]:
    """Player index (as a string) -> sorted ``[better, worse]`` label pairs.

    Players without any strict pair are left out.
    """
    result = {}
    for i, pref in enumerate(profile.preferences):
        if pref.pairs:
            result[str(i)] = [
                [x_set.label(x), x_set.label(y)] for (x, y) in sorted(pref.pairs)
            ]
    return result
