import logging


class LoggingMixin:
    """Gives the inheriting class a ``log`` attribute.

    The logger is named after the module and class of the instance, e.g.
    ``coregames.verify.theorems.CoreGamesVerifier``.
    """

    @property
    def log(self) -> logging.Logger:
        try:
            return self._log
        except AttributeError:
            self._log = logging.getLogger(
                self.__class__.__module__ + "." + self.__class__.__name__
            )
            return self._log


def configure_logging(level: str = "WARNING") -> None:
    """Send log records to standard error. Standard output is reserved for
    JSON reports."""
    numeric_level = getattr(logging, str(level).upper(), None)
    if not isinstance(numeric_level, int):
        raise ValueError("Invalid log level: {0}".format(level))
    logging.basicConfig(
        level=numeric_level,
        format="%(asctime)s %(levelname)s %(name)s - %(message)s",
    )
