from typing import Optional


class CoreGamesException(Exception):
    """Base class of all errors raised by coregames.

    :param message: Human readable description.
    :param path: Optional location of the offending value, e.g. in an instance
        document ("winning/2").
    """

    code = "error"

    def __init__(self, message: str, path: Optional[str] = None) -> None:
        super().__init__(message)
        self.message = message
        self.path = path

    def as_dict(self) -> dict:
        return {"code": self.code, "message": self.message, "path": self.path}


class PartitionError(CoreGamesException):
    code = "partition"


class GameError(CoreGamesException):
    code = "game"


class AsymmetryError(CoreGamesException):
    code = "asymmetry"


class FamilyError(CoreGamesException):
    code = "family"


class InstanceError(CoreGamesException):
    "Raised for malformed or inconsistent instance documents."

    code = "instance"


class ScaleError(CoreGamesException):
    "An exhaustive computation was requested beyond its guard."

    code = "scale"


class PreconditionError(CoreGamesException):
    code = "precondition"
