from coregames.verify.enumeration import (
    ProfileEnumerator,
    enumerate_preferences_for,
    resolve_mode,
)
from coregames.verify.reports import SearchReport, TheoremReport
from coregames.verify.search import search_divergence_instance
from coregames.verify.theorems import (
    CoreGamesVerifier,
    check_acyclic_theorem,
    check_cover_condition,
    check_extended_equivalence,
    check_linear_proposition,
    check_nakamura_equivalence,
)
