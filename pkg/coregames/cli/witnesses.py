from coregames.cli.base import CoreGamesBaseCommand
from coregames.constants import CoreGamesConstants as CC
from coregames.witness import (
    empty_core_linear_witness,
    empty_core_witness,
    empty_coreplus_witness_extended,
)


class WitnessCommand(CoreGamesBaseCommand):
    "Prints the document with an empty-core profile for its agenda."

    _NAMES = [CC.CMD_WITNESS]

    def generate(self, document):
        return empty_core_witness(document.game(), document.agenda)

    def execute(self, document, args):
        document.require_alternatives()
        witness = self.generate(document)
        self.log.info(
            "Cycle on {0}".format(document.x_set.labels_of(witness.cycle_alternatives))
        )
        return document.with_profile(witness.profile)


class LinearWitnessCommand(WitnessCommand):
    _NAMES = [CC.CMD_WITNESS_LINEAR, "linear"]

    def generate(self, document):
        return empty_core_linear_witness(document.game(), document.agenda)


class ExtendedWitnessCommand(WitnessCommand):
    _NAMES = [CC.CMD_WITNESS_EXTENDED]

    def generate(self, document):
        return empty_coreplus_witness_extended(document.family(), document.agenda)
