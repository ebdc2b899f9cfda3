"""Project configuration read from an INI file."""

import logging
from configparser import ConfigParser
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

__all__ = ["ChoiceToolsConfig", "load_config", "DEFAULT_CONFIG_PATH"]

# configuration file looked for when no path is given, relative to the working directory
DEFAULT_CONFIG_PATH = Path("config") / "config.ini"


@dataclass(frozen=True)
class ChoiceToolsConfig:
    """Run defaults; every value can be overridden on the command line."""

    log_level: str = "INFO"
    sample_count: int = 1_000_000
    seed: int = 42
    shards: int = 1
    max_exhaustive_n: int = 3


def load_config(path: Optional[Union[str, Path]] = None) -> ChoiceToolsConfig:
    """
    Read configuration from an INI file with ``[DEFAULT]`` and ``[sweep]`` sections.

    .. code-block:: ini

        [DEFAULT]
        LOG_LEVEL = INFO

        [sweep]
        SAMPLE_COUNT = 1000000
        SEED = 42
        SHARDS = 1
        MAX_EXHAUSTIVE_N = 3

    Args:
        path: Path to the INI file. If not provided, ``./config/config.ini`` is used when it exists.

    Returns:
        Configuration with built-in defaults for anything missing.
    """
    defaults = ChoiceToolsConfig()

    if path is None:
        path = DEFAULT_CONFIG_PATH
        if not path.exists():
            return defaults
    else:
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f'Cannot locate configuration file at "{path}".')

    config = ConfigParser()
    config.read(path)
    logging.getLogger(__name__).debug(f'Read configuration from "{path}"')

    sweep = config["sweep"] if config.has_section("sweep") else config["DEFAULT"]

    return ChoiceToolsConfig(
        log_level=config.get("DEFAULT", "LOG_LEVEL", fallback=defaults.log_level).upper(),
        sample_count=sweep.getint("SAMPLE_COUNT", fallback=defaults.sample_count),
        seed=sweep.getint("SEED", fallback=defaults.seed),
        shards=sweep.getint("SHARDS", fallback=defaults.shards),
        max_exhaustive_n=sweep.getint("MAX_EXHAUSTIVE_N", fallback=defaults.max_exhaustive_n),
    )
