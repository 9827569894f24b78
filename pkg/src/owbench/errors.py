"""Shared exception types."""


class OWBenchError(Exception):
    """Base class for all toolkit errors."""


class ShapeMismatchError(OWBenchError, ValueError):
    """Operands have non-conformable shapes for the requested op."""


class NonFiniteError(OWBenchError, ValueError):
    """A value that must be finite contains NaN or Inf."""


class TapeError(OWBenchError, RuntimeError):
    """Backward pass requested on a value that is not a recorded scalar."""


class MissingGradientError(OWBenchError, KeyError):
    """An optimizer step was asked to update a parameter with no gradient."""


class DataError(OWBenchError, ValueError):
    """Invalid dataset contents (empty, labels out of range, bad pixel range)."""


class ConfigError(OWBenchError, ValueError):
    """Invalid experiment configuration."""


class FormatError(OWBenchError, ValueError):
    """Serialized artifact is corrupt, truncated, or has the wrong magic/version."""


class CalibrationError(OWBenchError, RuntimeError):
    """Detector used before fit/calibration, or calibration impossible."""
