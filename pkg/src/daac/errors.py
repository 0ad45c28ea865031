"""Exception types raised by the daac package."""


class DaacError(Exception):
    """Base class for all daac errors."""


class DictionaryError(DaacError):
    """Invalid pattern dictionary (empty/duplicate patterns, bad file)."""


class EncodingError(DaacError):
    """Text cannot be encoded under the requested scheme."""


class ConfigError(DaacError):
    """Invalid combination of build options."""


class BuildError(DaacError):
    """Double-array construction failed (e.g. state id overflow)."""


class ArchiveError(DaacError):
    """Malformed, truncated, or inconsistent automaton archive."""
