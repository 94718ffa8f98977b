from typing import Any

import json


class CoreGamesJSONEncoder(json.JSONEncoder):
    """Extension of the native json encoder for the value types of coregames.

    Implemented types:
        - objects with a ``to_json()`` method (e.g. ExtendedCardinal) -> its result
        - set / frozenset -> sorted list, so reports are byte-stable
    """

    def default(self, obj: Any) -> Any:
        if callable(getattr(obj, "to_json", None)):
            return obj.to_json()
        if isinstance(obj, (set, frozenset)):
            return sorted(obj)
        # Let the base class default method raise the TypeError
        return super().default(obj)


def dumps(obj: Any, indent: int = None) -> str:
    return json.dumps(obj, cls=CoreGamesJSONEncoder, indent=indent, sort_keys=False)
