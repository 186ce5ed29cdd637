"""Exception types shared across the package."""


class TabsimError(Exception):
    """Base class for errors raised by this package."""


class ConfigError(TabsimError):
    """Invalid configuration or usage (CLI exit code 2)."""


class DataError(TabsimError):
    """Malformed or inconsistent input data (CLI exit code 3)."""
