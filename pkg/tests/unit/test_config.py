import configparser
import os
from fractions import Fraction

import mock
import pytest

from canonstrip import config as config_module
from canonstrip.config import Config, config_locations

PACKAGED_INI = os.path.join(os.path.dirname(config_module.__file__), "canonstrip.ini")


class TestConfig:
    @staticmethod
    def _assert_locations(environment, user_ini):
        with mock.patch.dict("os.environ", environment, clear=True):
            assert config_locations() == [PACKAGED_INI, user_ini, "canonstrip.ini"]

    def test_custom__extra_values_set(self):
        config = Config("DEFAULT", user1="foo", user2="bar")
        assert config.custom == {"user1": "foo", "user2": "bar"}

    def test_custom__no_extra_values_set(self):
        config = Config("DEFAULT")
        assert config.custom == {}

    def test_defaults(self):
        config = Config("DEFAULT")
        assert config.approx_tolerance == Fraction(1, 10**12)
        assert config.approx_iteration_cap == 1000
        assert config.facet_subset_cap == 10_000_000
        assert config.max_workers == 4
        assert config.batch_size == 32
        assert config.svg_panel_width == 4.0
        assert config.svg_panel_height == 3.5
        assert config.lemma_cases == 200
        assert config.lemma_max_degree == 10
        assert config.lemma_s_values == [1, Fraction(3, 2), 2, 3, 4]
        assert config.lemma_seed == 7
        assert config.timestamp is True

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("canonstrip_max_workers", "9")
        assert Config("DEFAULT").max_workers == 9
        assert Config("DEFAULT", max_workers=2).max_workers == 2

    def test_timestamp__environment_override(self, monkeypatch):
        monkeypatch.setenv("canonstrip_timestamp", "no")
        assert Config("DEFAULT").timestamp is False
        assert Config("DEFAULT", timestamp=True).timestamp is True
        assert "timestamp" not in Config("DEFAULT").custom

    def test_settings(self):
        config = Config(
            "DEFAULT",
            approx_tolerance="1/1000",
            lemma_s_values=[1, "5/2"],
            lemma_seed=3,
        )
        assert config.approx_tolerance == Fraction(1, 1000)
        assert config.lemma_s_values == [1, Fraction(5, 2)]
        assert config.lemma_seed == 3

    def test_incorrect_type(self):
        with pytest.raises(ValueError) as excinfo:
            Config("DEFAULT", max_workers="zero")
        assert str(excinfo.value) == (
            "An incorrect config type was given for option max_workers. The expected"
            " type is positive int, but the given value is zero."
        )

    def test_non_positive_values(self):
        for settings in [
            {"approx_tolerance": "0"},
            {"batch_size": -1},
            {"lemma_s_values": ""},
            {"svg_panel_width": "wide"},
        ]:
            with pytest.raises(ValueError):
                Config("DEFAULT", **settings)

    def test_timestamp__false(self):
        for value in [False, "False", "no", "other"]:
            config = Config("DEFAULT", timestamp=value)
            assert config.timestamp is False

    def test_timestamp__true(self):
        for value in [True, "1", "true", "YES", "on"]:
            config = Config("DEFAULT", timestamp=value)
            assert config.timestamp is True

    def test_locations__appdata(self):
        self._assert_locations(
            {"APPDATA": "/MOCK", "HOME": "/home"}, "/MOCK/canonstrip.ini"
        )

    def test_locations__home(self):
        self._assert_locations({"HOME": "/MOCK"}, "/MOCK/.config/canonstrip.ini")

    def test_locations__xdg_config_home(self):
        self._assert_locations(
            {"XDG_CONFIG_HOME": "/MOCK", "HOME": "/home"}, "/MOCK/canonstrip.ini"
        )

    def test_locations__no_config_directory(self):
        with mock.patch.dict("os.environ", {}, clear=True):
            assert config_locations() == [PACKAGED_INI, "canonstrip.ini"]

    @mock.patch("configparser.ConfigParser")
    def test_load_config__reads_locations(self, mock_config):
        Config.CONFIG = None  # Force config file reload
        with mock.patch.dict("os.environ", {}, clear=True):
            Config._load_config("basic")
        mock_config.return_value.read.assert_called_with(
            [PACKAGED_INI, "canonstrip.ini"]
        )
        interpolation = mock_config.call_args[1]["interpolation"]
        assert isinstance(interpolation, configparser.BasicInterpolation)
        assert Config.CONFIG is mock_config.return_value
        Config.CONFIG = None

    def test_catalog_path__not_set(self):
        config = Config("DEFAULT")
        assert config.catalog_path is Config.CONFIG_NOT_SET
        assert str(config.catalog_path) == "NotSet"
        assert not config.catalog_path

    def test_catalog_path__environment(self, monkeypatch):
        monkeypatch.setenv("canonstrip_catalog_path", "/srv/catalogs")
        assert Config("DEFAULT").catalog_path == "/srv/catalogs"


class TestConfigInterpolation:
    def test_no_interpolation(self):
        Config.CONFIG = None  # Force config file reload
        with mock.patch.dict(
            "os.environ",
            {
                "APPDATA": os.path.dirname(__file__),
                "XDG_CONFIG_HOME": os.path.dirname(__file__),
            },
        ):
            config = Config("INTERPOLATION")
            assert config.custom["basic_interpolation"] == "%(catalog_root)s"
            assert config.custom["extended_interpolation"] == "${catalog_root}"

    def test_basic_interpolation(self):
        Config.CONFIG = None  # Force config file reload
        with mock.patch.dict(
            "os.environ",
            {
                "APPDATA": os.path.dirname(__file__),
                "XDG_CONFIG_HOME": os.path.dirname(__file__),
            },
        ):
            config = Config("INTERPOLATION", config_interpolation="basic")
            assert config.custom["basic_interpolation"] == "/opt/catalogs"
            assert config.custom["extended_interpolation"] == "${catalog_root}"

    def test_extended_interpolation(self):
        Config.CONFIG = None  # Force config file reload
        with mock.patch.dict(
            "os.environ",
            {
                "APPDATA": os.path.dirname(__file__),
                "XDG_CONFIG_HOME": os.path.dirname(__file__),
            },
        ):
            config = Config("INTERPOLATION", config_interpolation="extended")
            assert config.custom["basic_interpolation"] == "%(catalog_root)s"
            assert config.custom["extended_interpolation"] == "/opt/catalogs"
