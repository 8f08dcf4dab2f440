"""Exception types shared across the package.

The CLI maps ConfigError (and plain ValueError) to exit code 2 and
SizeLimitError to exit code 3.
"""


class ConfigError(ValueError):
    """Bad parameters, malformed config files, or inconsistent inputs."""


class StatisticsError(ConfigError):
    """Not enough samples for the requested statistic."""


class SizeLimitError(RuntimeError):
    """Problem exceeds the configured memory/enumeration cap."""
