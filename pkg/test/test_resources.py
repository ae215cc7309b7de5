"""Tests of config discovery, validation and the scan and catalog settings."""
from contextlib import nullcontext as does_not_raise
from logging import CRITICAL, DEBUG, INFO

import pytest

from hororigid.resources import Resources, shape_list

from .conftest import FIXTURE_FILES, log_check


@pytest.fixture()
def config_file_list():

    return [
        "[scan]",
        "rank_ceiling = 8",
        "max_rank = 3",
        "max_a1 = 2",
        "shapes = G0xG1, G0",
        "[catalog]",
        "max_rank = 6",
        "max_a1 = 4",
        "[output]",
        "format = json",
    ]


@pytest.fixture()
def config_file_dict():

    return {
        "scan": {
            "rank_ceiling": 8,
            "max_rank": 3,
            "max_a1": 2,
            "shapes": ["G0xG1", "G0"],
        },
        "catalog": {"max_rank": 6, "max_a1": 4},
        "output": {"format": "json"},
    }


def nested_set(dic, keys, value):
    """Set a value in a nested config dict, creating sections as needed."""
    for key in keys[:-1]:
        dic = dic.setdefault(key, {})
    dic[keys[-1]] = value


def test_resources_values(config_file_list, config_file_dict):
    """Both config formats give the same validated values."""

    for config in (config_file_list, config_file_dict):
        res = Resources(config)
        assert res.scan.rank_ceiling == 8
        assert res.scan.max_rank == 3
        assert res.scan.max_a1 == 2
        # Shapes are returned in canonical order
        assert res.scan.shapes == ["G0", "G0xG1"]
        assert res.catalog.max_rank == 6
        assert res.catalog.override is None
        assert res.output.format == "json"


@pytest.mark.parametrize(
    "config", ["config_file_dict", "config_file_list"], ids=("cfgdict", "cfglist")
)
@pytest.mark.parametrize(
    "dict_mod, list_mod, expected_exception, expected_log",
    [
        (
            tuple(),
            tuple(),
            does_not_raise(),
            (
                (INFO, "Configuring Resources"),
                (INFO, "Configuring resources from init "),
            ),
        ),
        # Unknown shape name
        (
            ((["scan", "shapes"], ["G0", "G3"]),),
            ((4, "shapes = G0, G3"),),
            pytest.raises(RuntimeError),
            (
                (INFO, "Configuring Resources"),
                (INFO, "Configuring resources from init "),
                (CRITICAL, "Configuration issues"),
                (CRITICAL, "In config 'scan.shapes'"),
            ),
        ),
        # Ceiling above the supported maximum
        (
            ((["scan", "rank_ceiling"], 12),),
            ((1, "rank_ceiling = 12"),),
            pytest.raises(RuntimeError),
            (
                (INFO, "Configuring Resources"),
                (INFO, "Configuring resources from init "),
                (CRITICAL, "Configuration issues"),
                (CRITICAL, "In config 'scan.rank_ceiling'"),
            ),
        ),
        # Unknown output format
        (
            ((["output", "format"], "xml"),),
            ((9, "format = xml"),),
            pytest.raises(RuntimeError),
            (
                (INFO, "Configuring Resources"),
                (INFO, "Configuring resources from init "),
                (CRITICAL, "Configuration issues"),
                (CRITICAL, "In config 'output.format'"),
            ),
        ),
        # Catalog rank above the ceiling
        (
            ((["catalog", "max_rank"], 9),),
            ((6, "max_rank = 9"),),
            pytest.raises(ValueError),
            (
                (INFO, "Configuring Resources"),
                (INFO, "Configuring resources from init "),
                (CRITICAL, "is above the rank ceiling"),
            ),
        ),
        # Missing override file
        (
            ((["catalog", "override"], FIXTURE_FILES.mf),),
            ((7, f"override = {FIXTURE_FILES.mf}"),),
            pytest.raises(OSError),
            (
                (INFO, "Configuring Resources"),
                (INFO, "Configuring resources from init "),
                (INFO, "Using catalog override file"),
                (CRITICAL, "Catalog override file not found"),
            ),
        ),
    ],
)
def test_resources_validation(
    caplog, request, config, dict_mod, list_mod, expected_exception, expected_log
):
    """Modifications of a valid config give the expected failures."""

    config = request.getfixturevalue(config)

    if isinstance(config, dict):
        for keys, value in dict_mod:
            nested_set(config, keys, value)
    else:
        for idx, line in list_mod:
            config[idx] = line

    with expected_exception:
        Resources(config)

    log_check(caplog, expected_log)


def test_resources_defaults(caplog, config_filesystem):
    """With no config files, the built in defaults are used."""

    res = Resources()

    assert res.config_type == "defaults"
    assert res.config_source is None
    assert res.scan.max_rank == 4
    assert res.scan.max_a1 == 3
    assert res.scan.shapes == ["G0", "G0xG1", "G0xG1xG2"]
    assert res.catalog.max_rank == 9
    assert res.catalog.max_a1 == 6
    assert res.output.format == "text"

    log_check(
        caplog,
        (
            (INFO, "Configuring Resources"),
            (DEBUG, "No user config in"),
            (DEBUG, "No site config in"),
            (INFO, "Configuring resources from defaults"),
        ),
    )


@pytest.mark.parametrize(
    "files, config_type",
    [
        (("user_config",), "user file"),
        (("site_config",), "site file"),
        (("user_config", "site_config"), "user file"),
    ],
)
def test_resources_discovery(config_filesystem, files, config_type):
    """User config files take precedence over site config files."""

    for name in files:
        config_filesystem.create_file(
            FIXTURE_FILES.vf[name], contents="[scan]\nmax_a1 = 1\n"
        )

    res = Resources()
    assert res.config_type == config_type
    assert res.config_source == FIXTURE_FILES.vf[files[0]]
    assert res.scan.max_a1 == 1


def test_resources_init_file(caplog, config_filesystem):
    """A config file can be passed by path, and a missing path fails."""

    config_filesystem.create_file(
        FIXTURE_FILES.vf.init_config, contents="[catalog]\nmax_a1 = 2\n"
    )

    res = Resources(FIXTURE_FILES.vf.init_config)
    assert res.config_type == "init file"
    assert res.catalog.max_a1 == 2

    with pytest.raises(OSError):
        Resources(FIXTURE_FILES.mf)


def test_resources_override(config_filesystem):
    """An existing override file is kept and an empty value means none."""

    config_filesystem.create_file(FIXTURE_FILES.vf.override, contents="")

    res = Resources({"catalog": {"override": FIXTURE_FILES.vf.override}})
    assert res.catalog.override == FIXTURE_FILES.vf.override

    res = Resources({"catalog": {"override": ""}})
    assert res.catalog.override is None


def test_resources_bad_type():
    """Configurations must be a path, a list or a dict."""

    with pytest.raises(TypeError):
        Resources(42)


@pytest.mark.parametrize(
    "value, expected",
    [
        ("G0", ["G0"]),
        (["G0xG1xG2", "G0"], ["G0", "G0xG1xG2"]),
    ],
)
def test_shape_list(value, expected):
    """Shape lists are returned in canonical order."""
    assert shape_list(value, "1", "3") == expected
