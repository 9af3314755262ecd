"""Exception types raised by the pipeline.

Every error the public API can raise is defined here so callers can catch
one base class (AtlasError) or the precise failure they care about.
"""


class AtlasError(Exception):
    """Base class for all pipeline errors."""


class MalformedFile(AtlasError):
    """Input file could not be parsed at all (bad JSON, bad encoding, truncation)."""


class SchemaViolation(AtlasError):
    """A parsed record is missing a field or holds an invalid value.

    The message carries a path to the offending record, e.g.
    ``researchers[3].publications[7].year``.
    """


class DuplicateId(AtlasError):
    """Two researcher records share an id."""


class UnsupportedSource(AtlasError):
    """Profile-source descriptor names a scheme the fetcher does not speak."""


class NetworkUnavailable(AtlasError):
    """The network profile source could not be reached. Never raised by file sources."""


class EmptyCorpus(AtlasError):
    """Every document in the corpus is empty; no vocabulary can be built."""


class UnknownTerm(AtlasError):
    """A token bag contains a term outside the vocabulary it is scored against."""


class IndexOutOfRange(AtlasError):
    """A researcher index falls outside [0, n_docs)."""


class DegenerateInput(AtlasError):
    """Input lacks the variation an algorithm needs (too few usable points/documents)."""


class InvalidK(AtlasError):
    """Requested component count is outside [1, number of points]."""


class NonPositiveDefinite(AtlasError):
    """A covariance matrix is not symmetric positive-definite."""


class IoError(AtlasError):
    """Reading or writing an artifact file failed at the OS level."""


class SchemaVersionMismatch(AtlasError):
    """A bundle file declares a schema version this code does not understand."""


class InvariantViolation(AtlasError):
    """A loaded bundle breaks one of the documented structural invariants."""
