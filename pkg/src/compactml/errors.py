"""Exception and warning types shared across the package."""


class CompactMLError(Exception):
    """Base class for every error this package raises deliberately."""


class SchemaError(CompactMLError):
    """A required CSV column is missing or appears twice."""


class ParseError(CompactMLError):
    """A CSV cell could not be parsed as a plain decimal number."""


class EmptyInputError(CompactMLError):
    """The input has no data rows."""


class ValidationError(CompactMLError):
    """A value violates a hard domain invariant (non-finite or negative)."""


class ConfigurationError(CompactMLError):
    """A plan, spec or run parameter is outside its legal range."""


class ShapeError(CompactMLError):
    """Vector lengths or matrix widths do not line up."""


class UndefinedMetricError(CompactMLError):
    """The requested score is undefined for the inputs (constant targets)."""


class NumericError(CompactMLError):
    """A numeric computation produced non-finite intermediate values."""


class CompactMLWarning(UserWarning):
    """Base class for warnings emitted by this package."""


class DataQualityWarning(CompactMLWarning):
    """A soft data invariant was violated; the row is kept."""


class ModelFitWarning(CompactMLWarning):
    """A model hyperparameter had to be adjusted to fit the data."""
