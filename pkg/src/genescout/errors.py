"""Exception hierarchy shared across the package.

The CLI maps error classes onto process exit codes, so new exceptions
should subclass one of the three roots: ConfigError (bad invocation or
configuration), DataError (input violates a format or value contract),
DivergenceError (training produced non-finite numbers).
"""


class GenescoutError(Exception):
    pass


class ConfigError(GenescoutError):
    """Invalid configuration value, unknown key, or bad command arguments."""


class DataError(GenescoutError):
    """Input data violates a format or value contract."""


class FormatError(DataError):
    """Malformed FASTA/CSV/TSV content; message carries file/line context."""


class SchemaError(DataError):
    """A required column is missing or misnamed."""


class DuplicateIdError(DataError):
    """The same record id appears twice in one dataset."""


class EmptySequenceError(DataError):
    """A sequence is empty (possibly after cleaning)."""


class ShortSequenceError(DataError):
    """A sequence is too short for the requested window size."""


class DegenerateSequenceError(DataError):
    """A sequence has no informative (non-N) bases."""


class StratificationError(DataError):
    """A class is too small to split with stratification."""


class SingleClassError(DataError):
    """Training labels contain only one class."""


class DimensionError(DataError):
    """A feature row or tensor does not match the expected shape."""


class DivergenceError(GenescoutError):
    """Training loss or gradients became non-finite."""
