"""Exception types shared across the package.

Two families matter to callers: ``ValidationError`` covers bad inputs and
schema problems (the CLI maps these to exit code 2), ``NumericalError``
covers failures of the linear-algebra machinery itself (exit code 3).
"""


class LocalFisherError(Exception):
    """Base class for all errors raised by this package."""


class NumericalError(LocalFisherError):
    """A numerical routine failed on an otherwise valid input."""


class NotPositiveDefinite(NumericalError):
    """Cholesky factorization hit a non-positive pivot.

    Raised by :func:`localfisher.matcore.cholesky` and propagated by the
    generalized eigensolver once its ridge escalation is exhausted.
    """


class ConvergenceFailure(NumericalError):
    """The symmetric eigensolver did not converge."""


class ValidationError(LocalFisherError):
    """An input violates a documented precondition."""


class NonFiniteInput(ValidationError):
    """A data matrix contains NaN or infinite entries."""


class BadRank(ValidationError):
    """Requested embedding dimension is out of range."""


class BadK(ValidationError):
    """Neighbor count outside 1 <= k <= n-1."""


class BadSigma(ValidationError):
    """Kernel bandwidth is not a positive finite number."""


class BadBeta(ValidationError):
    """Supervision blend weight outside [0, 1]."""


class MissingLabel(ValidationError):
    """An operation that requires full labels saw a missing one."""


class TooFewLabeledPerClass(ValidationError):
    """A labeled class has fewer observations than the configured minimum."""


class DimMismatch(ValidationError):
    """New data does not match the feature dimension a model was fit on."""


class KernelModelNotTransformable(ValidationError):
    """A kernel model fit without stored training data cannot embed new rows."""


class ModelFormatError(ValidationError):
    """A model file is unreadable, corrupt, or has an unsupported version."""


class DatasetError(ValidationError):
    """A CSV input is malformed; the message names file, row, and column."""
