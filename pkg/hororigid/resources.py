"""Load and check run configuration.

The `hororigid` package runs without any configuration, but the ranges swept by
catalog reproduction and brute force scans, the default output format and an
optional catalog override file can be set in a configuration file:

-   scan: the rank ceiling, the maximum rank and `a1` of brute force scans and the
    group shapes they sweep (`G0`, `G0xG1` and `G0xG1xG2`).

-   catalog: the maximum rank and `a1` used to sweep catalog families, and the path
    of an optional catalog override file.

-   output: the default output format, `text` or `json`.

The [Resources][hororigid.resources.Resources] class is used to locate and
validate the configuration and provides it to the other components of the
package. A configuration can be passed when creating an instance; otherwise an
attempt is made to load configuration files in the user and then site config
locations defined by the `appdirs` package, before falling back to the defaults
in `CONFIGSPEC`.
"""

import os
from typing import Optional, Union

import appdirs
from configobj import ConfigObj, flatten_errors
from dotmap import DotMap
from validate import Validator, VdtParamError, VdtValueError, is_list

from hororigid.logger import LOGGER, log_and_raise, loggerinfo_push_pop, nested

SCAN_SHAPES = ("G0", "G0xG1", "G0xG1xG2")
"""tuple: The group shapes that can be swept by a brute force scan."""

CONFIGSPEC = {
    "scan": {
        "rank_ceiling": "integer(min=1, max=9, default=9)",
        "max_rank": "integer(min=1, default=4)",
        "max_a1": "integer(min=0, default=3)",
        "shapes": "shape_list(min=1, max=3, default=list(G0, G0xG1, G0xG1xG2))",
    },
    "catalog": {
        "max_rank": "integer(min=1, default=9)",
        "max_a1": "integer(min=0, default=6)",
        "override": "string(default=None)",
    },
    "output": {"format": "option(text, json, default=text)"},
}
"""dict: The configobj validation spec for run configuration. Validation converts
types and fills in every missing value, so a run with no config file at all uses
these defaults.
"""


def shape_list(value: Union[str, list], min: str, max: str) -> list[str]:
    """Validate config lists of scan group shapes.

    Registered with the configobj Validator as `shape_list`. Returns the shapes in
    the `SCAN_SHAPES` order without repeats.

    Args:
        value: The shape names, as a list or a comma separated string
        min: The fewest shapes allowed, as a string
        max: The most shapes allowed, as a string
    """
    try:
        min_int = int(min)
    except ValueError:
        raise VdtParamError("min", min)
    try:
        max_int = int(max)
    except ValueError:
        raise VdtParamError("max", max)

    value = is_list(value, min=min_int, max=max_int)

    for entry in value:
        if entry not in SCAN_SHAPES:
            raise VdtValueError(entry)

    return [shape for shape in SCAN_SHAPES if shape in value]


@loggerinfo_push_pop("Configuring Resources")
class Resources:
    """Load and check run configuration.

    Creating an instance of this class locates and validates the configuration
    for the `hororigid` package, either from the provided configuration details,
    from the user and then site config locations defined by the appdirs package,
    or from the built in defaults.

    Args:
        config: A path to a configuration file, or a dict or list providing
            configuration details. The list format should provide a list of
            strings, each representing a line in the configuration file. The dict
            format is a dictionary with the required nested dictionary structure
            and values.

    Attributes:
        config_type: The method used to specify the configuration. One of
            'init file', 'init list', 'init dict', 'user file', 'site file' or
            'defaults'.
        config_source: The path to the configuration file, if one was used
        scan: A DotMap of brute force scan settings
        catalog: A DotMap of catalog settings
        output: A DotMap of output settings
    """

    def __init__(self, config: Optional[Union[str, list, dict]] = None) -> None:

        user_cfg_file = os.path.join(
            appdirs.user_config_dir(), "hororigid", "hororigid.cfg"
        )
        site_cfg_file = os.path.join(
            appdirs.site_config_dir(), "hororigid", "hororigid.cfg"
        )

        config_source = None
        if config is not None:
            if isinstance(config, str):
                config_type = "init file"
                config_source = config
                if not os.path.isfile(config):
                    log_and_raise(f"Config file not found: {config}", OSError)
            elif isinstance(config, list):
                config_type = "init list"
            elif isinstance(config, dict):
                config_type = "init dict"
            else:
                log_and_raise("Unknown configuration format", TypeError)
        elif os.path.isfile(user_cfg_file):
            config = config_source = user_cfg_file
            config_type = "user file"
        elif os.path.isfile(site_cfg_file):
            config = config_source = site_cfg_file
            config_type = "site file"
        else:
            LOGGER.debug(f"No user config in {user_cfg_file}")
            LOGGER.debug(f"No site config in {site_cfg_file}")
            config = {}
            config_type = "defaults"

        msg = f"Configuring resources from {config_type}"
        if config_source is not None:
            msg += f": {config_source}"
        LOGGER.info(msg)

        config_loaded = self._load_config(config)

        self.config_type = config_type
        self.config_source = config_source
        self.scan = config_loaded.scan
        self.catalog = config_loaded.catalog
        self.output = config_loaded.output

        self._validate_ranks()
        self._validate_override()

    @staticmethod
    def _load_config(config: Union[str, list, dict]) -> DotMap:
        """Load and validate a configuration.

        Args:
            config: A file path, a list of config lines or a nested dict.

        Returns:
             A DotMap of config parameters, with defaults filled in.
        """

        cf_validator = Validator({"shape_list": shape_list})

        config_obj = ConfigObj(config, configspec=CONFIGSPEC)
        valid = config_obj.validate(cf_validator, preserve_errors=True)

        if isinstance(valid, dict):
            LOGGER.critical("Configuration issues: ")
            with nested():
                for sec, key, err in flatten_errors(config_obj, valid):
                    sec.append(key)
                    LOGGER.critical(f"In config '{'.'.join(sec)}': {err}")
            raise RuntimeError("Configuration failure")

        return DotMap(config_obj.dict())

    def _validate_ranks(self) -> None:
        """Check the sweep ranks against the rank ceiling."""

        ceiling = self.scan.rank_ceiling
        for section in ("scan", "catalog"):
            max_rank = getattr(self, section).max_rank
            if max_rank > ceiling:
                log_and_raise(
                    f"Config '{section}.max_rank' of {max_rank} is above the rank "
                    f"ceiling of {ceiling}",
                    ValueError,
                )

    def _validate_override(self) -> None:
        """Check that a catalog override file exists."""

        override = self.catalog.override
        if override is None or override == "":
            self.catalog.override = None
            return

        LOGGER.info(f"Using catalog override file: {override}")
        if not os.path.isfile(override):
            log_and_raise("Catalog override file not found", OSError)
