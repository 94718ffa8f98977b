from coregames.cli.base import CoreGamesBaseCommand
from coregames.constants import CoreGamesConstants as CC
from coregames.verify import (
    CoreGamesVerifier,
    resolve_mode,
    search_divergence_instance,
)


class VerifyCommand(CoreGamesBaseCommand):
    """Checks the Nakamura equivalence for the document's game and agenda.

    ``--mode acyclic`` checks the acyclic version together with the acyclicity
    of dominance, ``--mode linear`` the single-maximal-element and linear-order
    versions.
    """

    _NAMES = [CC.CMD_VERIFY]

    def verifier(self, args) -> CoreGamesVerifier:
        guard = getattr(args, "guard", None) or self.config["guard"]
        return CoreGamesVerifier(jobs=self.config["jobs"], guard=guard)

    def execute(self, document, args):
        agenda = document.require_alternatives()
        game = document.game()
        mode = resolve_mode(self.mode(args))
        verifier = self.verifier(args)
        if mode == CC.MODE_ACYCLIC:
            return verifier.acyclic_theorem(game, agenda)
        if mode == CC.MODE_LINEAR:
            return verifier.linear_proposition(game, agenda)
        return verifier.nakamura_equivalence(game, agenda, mode)


class VerifyExtendedCommand(VerifyCommand):
    "kappa equivalence for winning sets; ``--cover-condition`` checks the cover condition."

    _NAMES = [CC.CMD_VERIFY_EXTENDED]

    def execute(self, document, args):
        agenda = document.require_alternatives()
        family = document.family()
        verifier = self.verifier(args)
        if getattr(args, "cover_condition", False):
            return verifier.cover_condition(family, agenda)
        return verifier.extended_equivalence(family, agenda, self.mode(args))


class SearchCommand(CoreGamesBaseCommand):
    _NAMES = [CC.CMD_SEARCH]

    _NEEDS_DOCUMENT = False

    def execute(self, document, args):
        n_max = getattr(args, "n_max", None) or self.config["search"]["n_max"]
        m_max = getattr(args, "m_max", None) or self.config["search"]["m_max"]
        return search_divergence_instance(n_max, m_max)
