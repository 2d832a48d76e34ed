"""Exception types shared across the package."""


class HuesegError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(HuesegError):
    """A byte stream is not a valid P6/P5 file.

    ``offset`` is the byte position at which the problem was detected.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class ConfigError(HuesegError):
    """A configuration value violates its invariants (e.g. even median kernel)."""


class StripTooThickError(ConfigError):
    """Border strips of the requested thickness would cover the whole image."""


class DimensionMismatchError(HuesegError):
    """Two rasters that must share dimensions do not."""
