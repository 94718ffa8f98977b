from coregames.constants import CoreGamesConstants as CC
from coregames.exceptions import InstanceError
from coregames.utils.yml_loader import load_yml

from copy import deepcopy
from typing import Any, Optional

import os


class CoreGamesConfig:
    """Settings shared by all commands.

    Values come from (lowest to highest priority) the defaults below, the YAML
    file named by ``COREGAMES_CONFIG`` or ``--config``, and command-line flags.
    The file may use Jinja2 templating, e.g. ``jobs: {{ env.JOBS }}``.
    """

    DEFAULTS = {
        "guard": CC.GUARD_PLAYERS,
        "jobs": CC.DEFAULT_JOBS,
        "mode": None,
        "log_level": "WARNING",
        "cover_size_limit": CC.DEFAULT_COVER_SIZE_LIMIT,
        "search": {
            "n_max": CC.GUARD_SEARCH_PLAYERS,
            "m_max": CC.GUARD_SEARCH_AGENDA,
        },
    }

    @staticmethod
    def _default(my_dict: dict, key: str, default_value: Any):
        "Set default value to a key if key does not exist in dict."
        my_dict[key] = my_dict.pop(key, default_value)

    def __init__(self, settings: Optional[dict] = None) -> None:
        settings = deepcopy(settings or {})
        unknown = [key for key in settings if not key in CC.CONFIG_KEYS]
        if unknown:
            _msg = "Invalid configuration keys: {0}".format(", ".join(unknown))
            raise InstanceError(_msg, path="config")
        for key, value in self.DEFAULTS.items():
            self._default(settings, key, deepcopy(value))
        for key, value in self.DEFAULTS["search"].items():
            self._default(settings["search"], key, value)
        for key in ("guard", "jobs", "cover_size_limit"):
            if not isinstance(settings[key], int) or settings[key] < 1:
                _msg = "Configuration value {0} must be a positive integer!".format(
                    key
                )
                raise InstanceError(_msg, path="config/{0}".format(key))
        mode = settings["mode"]
        if mode is not None and not str(mode).lower().strip() in CC.MODE_SPELLING_VARIANTS:
            _msg = "Invalid enumeration mode {0}! Accepted modes: {1}".format(
                mode, ", ".join(CC.MODES)
            )
            raise InstanceError(_msg, path="config/mode")
        self.settings = settings

    def __getitem__(self, key: str) -> Any:
        return self.settings[key]

    def override(self, **kwargs) -> "CoreGamesConfig":
        "Return a copy with every non-None keyword applied."
        settings = deepcopy(self.settings)
        settings.update({k: v for (k, v) in kwargs.items() if v is not None})
        return CoreGamesConfig(settings)

    @classmethod
    def from_file(cls, file_path: Optional[str] = None) -> "CoreGamesConfig":
        file_path = file_path or os.environ.get(CC.CONFIG_ENV_VAR)
        if not file_path:
            return cls()
        if not os.path.isfile(file_path):
            _msg = "Configuration file {0} does not exist!".format(file_path)
            raise InstanceError(_msg, path="config")
        return cls(load_yml(file_path) or {})
