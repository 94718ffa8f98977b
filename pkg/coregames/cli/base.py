from coregames.cli.documents import InstanceDocument, load_document
from coregames.constants import CoreGamesConstants as CC
from coregames.exceptions import (
    CoreGamesException,
    InstanceError,
    PreconditionError,
    ScaleError,
)
from coregames.utils.config import CoreGamesConfig
from coregames.utils.json_encoder import dumps
from coregames.utils.logging_mixin import LoggingMixin

from argparse import Namespace
from typing import Optional, Tuple


class CoreGamesBaseCommand(LoggingMixin):
    """Base class of the command line commands.

    *How to use*
    A child class sets ``_NAMES`` and implements ``execute()``, which receives
    the parsed instance document (None if ``_NEEDS_DOCUMENT`` is False) and the
    command line arguments and returns a JSON-serializable report. ``run()``
    turns errors into exit statuses and an ``{"error": {...}}`` report.
    """

    # Overwrite _NAMES with a list of names that work as aliases on the command line
    _NAMES = []

    _NEEDS_DOCUMENT = True

    def __init__(self, config: Optional[CoreGamesConfig] = None) -> None:
        self.config = config or CoreGamesConfig()

    def execute(self, document: Optional[InstanceDocument], args: Namespace):
        raise Exception("execute() is not implemented for {0}!".format(self._NAMES))

    def mode(self, args: Namespace) -> Optional[str]:
        return getattr(args, "mode", None) or self.config["mode"]

    def run(self, args: Namespace) -> Tuple[int, str]:
        "Return the exit status and the JSON text to print."
        try:
            document = None
            if self._NEEDS_DOCUMENT:
                if not getattr(args, "document", None):
                    raise InstanceError("No instance document given!", path="")
                self.log.info("Reading {0}".format(args.document))
                document = load_document(args.document)
                document = document.with_agenda(getattr(args, "agenda", None))
            result = self.execute(document, args)
        except (ScaleError, PreconditionError) as e:
            self.log.error(e.message)
            return CC.EXIT_SCALE, self.error_report(e)
        except CoreGamesException as e:
            self.log.error(e.message)
            return CC.EXIT_VALIDATION, self.error_report(e)
        return CC.EXIT_OK, dumps(result, indent=2)

    @staticmethod
    def error_report(error: CoreGamesException) -> str:
        return dumps({"error": error.as_dict()}, indent=2)
