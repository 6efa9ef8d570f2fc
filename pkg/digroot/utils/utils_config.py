from typing import Any, Dict

import toml

from digroot.paths import CONFIG_DIR
from digroot.utils.utils_io import get_logger

logger = get_logger()

_CONFIG_CACHE: Dict[str, Dict[str, Any]] = {}


def load_config(config_filename: str = "settings.toml") -> Dict[str, Any]:
    """
    Load configurations from a TOML file in the config directory.

    :param config_filename: The name of the configuration file. Default is 'settings.toml'.
    :return: A dictionary representing the configuration, empty if the file does not exist.
    """
    if config_filename not in _CONFIG_CACHE:
        config_path = CONFIG_DIR / config_filename
        if config_path.exists():
            _CONFIG_CACHE[config_filename] = toml.load(config_path)
        else:
            logger.warning(f"No configuration found at {config_path}, using built-in defaults.")
            _CONFIG_CACHE[config_filename] = {}
    return _CONFIG_CACHE[config_filename]


def get_setting(section: str, key: str, default: Any, config_filename: str = "settings.toml") -> Any:
    """Return `[section] key` from the configuration, or `default` when it is not set."""
    return load_config(config_filename).get(section, {}).get(key, default)
