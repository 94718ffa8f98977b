from coregames.cli.base import CoreGamesBaseCommand
from coregames.constants import CoreGamesConstants as CC
from coregames.cores import core, core_plus

from collections import OrderedDict


class CoreCommand(CoreGamesBaseCommand):
    "Undominated agenda members of the document's profile."

    _NAMES = [CC.CMD_CORE]

    _KEY = "core"

    @staticmethod
    def solve(winning_sets, agenda, profile):
        return core(winning_sets, agenda, profile)

    def execute(self, document, args):
        profile = document.require_profile()
        agenda = document.agenda
        x_set = document.x_set
        chosen = self.solve(document.winning_sets(), agenda, profile)
        result = OrderedDict()
        result[self._KEY] = x_set.labels_of(chosen)
        result["maximal_sets"] = [
            x_set.labels_of(maximals) for maximals in profile.maximal_sets(agenda)
        ]
        return result


class CorePlusCommand(CoreCommand):
    "The core without majority dissatisfaction."

    _NAMES = [CC.CMD_COREPLUS, "core-plus", "core_plus"]

    _KEY = "core_plus"

    @staticmethod
    def solve(winning_sets, agenda, profile):
        return core_plus(winning_sets, agenda, profile)
