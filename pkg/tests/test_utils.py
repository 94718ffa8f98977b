from coregames.constants import CoreGamesConstants as CC
from coregames.exceptions import InstanceError
from coregames.games import INFINITE, Finite
from coregames.utils.config import CoreGamesConfig
from coregames.utils.json_encoder import dumps
from coregames.utils.logging_mixin import configure_logging
from coregames.utils.python_utils import is_iterable_not_string, iter_bits, mask_sort_key
from coregames.utils.yml_loader import load_yml

import pytest


def test_bit_helpers():
    assert list(iter_bits(0b10110)) == [1, 2, 4]
    assert sorted([0b100, 0b11, 0b1, 0b10], key=mask_sort_key) == [0b1, 0b10, 0b100, 0b11]
    assert is_iterable_not_string([1])
    assert not is_iterable_not_string("ab")


def test_json_encoder():
    assert dumps({"a": INFINITE, "b": Finite(3), "c": frozenset([3, 1])}) == (
        '{"a": "inf", "b": 3, "c": [1, 3]}'
    )
    with pytest.raises(TypeError):
        dumps(object())


def test_config_defaults_and_overrides():
    config = CoreGamesConfig()
    assert config["guard"] == CC.GUARD_PLAYERS
    assert config["search"]["m_max"] == CC.GUARD_SEARCH_AGENDA
    partial = CoreGamesConfig({"search": {"n_max": 3}})
    assert partial["search"] == {"n_max": 3, "m_max": CC.GUARD_SEARCH_AGENDA}
    override = config.override(jobs=3, guard=None)
    assert override["jobs"] == 3
    assert override["guard"] == CC.GUARD_PLAYERS
    assert config["jobs"] == CC.DEFAULT_JOBS


@pytest.mark.parametrize(
    "settings, path",
    [
        ({"colour": "red"}, "config"),
        ({"jobs": 0}, "config/jobs"),
        ({"guard": "four"}, "config/guard"),
        ({"mode": "random"}, "config/mode"),
    ],
)
def test_invalid_config(settings, path):
    with pytest.raises(InstanceError) as error:
        CoreGamesConfig(settings)
    assert error.value.path == path


def test_config_file_is_templated(tmp_path, monkeypatch):
    monkeypatch.setenv("COREGAMES_TEST_JOBS", "6")
    (tmp_path / "search.yml").write_text("n_max: 2\nm_max: 3\n")
    config_file = tmp_path / "coregames.yml"
    config_file.write_text(
        "jobs: {{ env.COREGAMES_TEST_JOBS }}\nmode: Maximal-Sets\nsearch: !yml_from_file search.yml\n"
    )
    config = CoreGamesConfig.from_file(str(config_file))
    assert config["jobs"] == 6
    assert config["mode"] == "Maximal-Sets"
    assert config["search"] == {"n_max": 2, "m_max": 3}


def test_missing_config_file(tmp_path, monkeypatch):
    monkeypatch.delenv(CC.CONFIG_ENV_VAR, raising=False)
    assert CoreGamesConfig.from_file()["mode"] is None
    with pytest.raises(InstanceError):
        CoreGamesConfig.from_file(str(tmp_path / "nope.yml"))


def test_text_include(tmp_path):
    (tmp_path / "labels.txt").write_text("a")
    document = tmp_path / "doc.yml"
    document.write_text("players: 2\nnote: !text_from_file labels.txt\n")
    assert load_yml(str(document)) == {"players": 2, "note": "a"}


def test_invalid_log_level():
    with pytest.raises(ValueError):
        configure_logging("LOUD")
