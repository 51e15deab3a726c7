"""Exception taxonomy shared by all modules.

Every error raised by this package derives from :class:`BasedError`, so
callers (the CLI in particular) can separate expected failures from bugs.
"""


class BasedError(Exception):
    """Base class for all package errors."""


class IoError(BasedError):
    """Missing or unreadable file."""


class FormatError(BasedError):
    """File exists but is not a decodable 8-bit PNG."""


class DimensionError(BasedError):
    """Array shapes violate an operation's contract."""


class ParamError(BasedError):
    """Invalid numeric parameter (even kernel size, non-positive sigma, ...)."""


class HighpassError(BasedError):
    """Image too small for the requested frequency cutoff."""


class SizeError(BasedError):
    """Image smaller than the analysis window."""


class IdenticalError(BasedError):
    """Inputs are identical where a difference is required (PSNR with MSE=0)."""


class DegenerateError(BasedError):
    """Statistic undefined on this input (zero variance, disconnected graph)."""


class LengthError(BasedError):
    """Paired vectors of unequal or insufficient length."""


class ConvergenceError(BasedError):
    """Iterative solver exhausted its iteration budget."""


class DataError(BasedError):
    """Training/evaluation data empty, non-finite, or otherwise unusable."""


class ConfigError(BasedError):
    """Invalid training or evaluation configuration."""


class ValidationError(BasedError):
    """Manifest or CSV content violates its schema."""


class SchemaError(BasedError):
    """Serialized model file does not conform to the model schema."""
