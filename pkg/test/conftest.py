"""Shared fixtures, paths and hypothesis settings for the hororigid tests."""
import os

import appdirs
import pytest
from dotmap import DotMap
from hypothesis import HealthCheck, settings

from hororigid.catalog import load_catalog
from hororigid.logger import CONSOLE_HANDLER, reset_log


def fixture_files():
    """Paths used by the tests.

    `rf` holds files shipped in the repository, `vf` holds files that tests
    create inside the pyfakefs file system and `mf` is a path that never exists.
    """

    root_dir = os.path.dirname(os.path.dirname(__file__))

    real_files = {
        "hirzebruch_script": os.path.join(
            root_dir, "additional_scripts", "hirzebruch_tangent_cech.py"
        ),
    }

    virtual_files = {
        "user_config": os.path.join(
            appdirs.user_config_dir(), "hororigid", "hororigid.cfg"
        ),
        "site_config": os.path.join(
            appdirs.site_config_dir(), "hororigid", "hororigid.cfg"
        ),
        "init_config": os.path.join(root_dir, "hororigid_test.cfg"),
        "override": os.path.join(root_dir, "catalog_override.cfg"),
    }

    return DotMap(
        dict(
            rf=real_files,
            vf=virtual_files,
            mf=os.path.join(root_dir, "thisfiledoesnotexist"),
        )
    )


FIXTURE_FILES = fixture_files()
"""DotMap: Module level so that parametrize lists can use the paths too."""

PROPERTY_SETTINGS = settings(
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
"""settings: Shared by the property tests, which also use the function scoped
autouse log fixture.
"""

BOTT_SETTINGS = settings(PROPERTY_SETTINGS, max_examples=1000, deadline=None)
"""settings: The larger sample for pick order independence of Bott reduction,
applied to each root system separately.
"""


def log_check(caplog, expected_log):
    """Compare captured records with (level, message fragment) pairs, in order.

    Arguments:
        caplog: The pytest caplog fixture.
        expected_log: A sequence of `(levelno, text)` pairs. Each text must occur
            in the message of the record at the same position.
    """

    records = caplog.records
    assert len(records) == len(expected_log), [rec.message for rec in records]

    for (level, text), rec in zip(expected_log, records):
        assert rec.levelno == level, rec.message
        assert text in rec.message


@pytest.fixture(autouse=True)
def clean_log():
    """Clear the package log and restore the console level around each test."""

    reset_log()
    yield
    reset_log()
    CONSOLE_HANDLER.setLevel("INFO")


@pytest.fixture(scope="session")
def catalog():
    """The built in catalog records, loaded once per session."""
    return load_catalog()


@pytest.fixture()
def config_filesystem(fs):
    """A pyfakefs file system with empty user and site config directories.

    Args:
        fs: The pyfakefs fixture.

    Yields:
        The pyfakefs fixture, for tests to add config and override files.
    """

    for path in (FIXTURE_FILES.vf.user_config, FIXTURE_FILES.vf.site_config):
        fs.create_dir(os.path.dirname(path))

    yield fs
