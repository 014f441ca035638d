"""Error types shared across the package.

Every failure mode carries a stable machine-readable ``code`` so the CLI
can surface module errors as structured JSON on stderr.
"""


class HurwitzTauError(Exception):
    """Base class for all package errors."""

    code = "error"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class UsageError(HurwitzTauError):
    """Caller violated a precondition (bad flag, mismatched sizes, ...)."""

    code = "usage"


class SingularSeriesError(HurwitzTauError):
    """Series operation undefined (inverting a series with zero constant term)."""

    code = "singular-series"


class SingularParameterError(HurwitzTauError):
    """Exact evaluation hit a pole or a vanishing factor."""

    code = "singular-parameter"


class SingularInputError(HurwitzTauError):
    """Degenerate numeric input (coincident or zero evaluation points)."""

    code = "singular-input"


class ScaleGuardError(HurwitzTauError):
    """A brute-force oracle was asked to run beyond its intended size."""

    code = "scale-guard"
