"""Exception hierarchy.

Two families matter to callers (and to the CLI exit-code contract):

* ``UsageError`` -- the caller asked for something outside an operation's
  domain (bad range, bad column, index past the cap).  CLI exit code 2.
* ``ConsistencyError`` -- an internal cross-check failed.  These signal a
  bug or corrupted data, never a bad argument.  CLI exit code 1.
"""


class PadkitError(Exception):
    """Base class for every error raised by this package."""


class UsageError(PadkitError):
    """Arguments outside an operation's domain."""


class ConsistencyError(PadkitError):
    """An internal exactness cross-check failed."""


class IndexCapExceeded(UsageError):
    """Requested index magnitude exceeds the configured cap."""


class InvalidRange(UsageError):
    """Empty or malformed index range."""


class InvalidIndex(UsageError):
    """Index outside an operation's domain."""


class InvalidStep(UsageError):
    """Step size outside an operation's domain."""


class InvalidColumn(UsageError):
    """Column index outside [1, a]."""


class InvalidDimensions(UsageError):
    """Non-positive table dimensions."""


class FormulaDisagreement(ConsistencyError):
    """The closed forms for a step coefficient did not agree."""


class CertificateMismatch(ConsistencyError):
    """A reduction certificate failed its verification."""


class DivisibilityViolation(ConsistencyError):
    """A quantity guaranteed divisible was not."""


class ParityViolation(ConsistencyError):
    """A folded pair whose sum and difference must be even was odd."""


class DigestMismatch(ConsistencyError):
    """Benchmark strategies disagreed on a value."""
