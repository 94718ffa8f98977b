from coregames.cli.base import CoreGamesBaseCommand
from coregames.constants import CoreGamesConstants as CC
from coregames.extended import (
    induced_nakamura,
    kappa_number,
    kappa_number_bruteforce,
    nu_prime,
)
from coregames.games import nakamura_number
from coregames.utils.python_utils import members_of

from collections import OrderedDict


class NakamuraCommand(CoreGamesBaseCommand):
    _NAMES = [CC.CMD_NAKAMURA, "nu"]

    def execute(self, document, args):
        result = nakamura_number(document.game(), jobs=self.config["jobs"])
        return OrderedDict(
            [
                ("nakamura", result.value),
                ("witness", [members_of(s) for s in result.witness]),
            ]
        )


class KappaCommand(CoreGamesBaseCommand):
    """kappa of the document's winning sets, with nu' and the Nakamura number
    of the induced game. ``--oracle`` minimises over covers directly."""

    _NAMES = [CC.CMD_KAPPA]

    def execute(self, document, args):
        family = document.family()
        if getattr(args, "oracle", False):
            result = kappa_number_bruteforce(family, self.config["cover_size_limit"])
        else:
            result = kappa_number(family)
        return OrderedDict(
            [
                ("kappa", result.value),
                ("witness", [members_of(s) for s in result.witness]),
                ("covers", result.cover_pair.to_json() if result.cover_pair else []),
                ("nu_prime", nu_prime(family).value),
                ("induced_nakamura", induced_nakamura(family).value),
            ]
        )
