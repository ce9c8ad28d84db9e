"""Exception types shared across the package."""


class DeformedU2Error(Exception):
    """Base class for all library-specific errors."""


class NonCoprimeError(DeformedU2Error):
    """Frequency ratio m:n with gcd(m, n) > 1; levels would be reducible."""


class ShapeMismatchError(DeformedU2Error):
    """Representation matrices are not square matrices of one common size."""


class NotDivisibleError(DeformedU2Error):
    """Structure function does not admit the requested factorization."""


class WrongRatioError(DeformedU2Error):
    """Operation is defined only for a specific frequency ratio."""


class TruncationTooSmallError(DeformedU2Error):
    """Requested eigenspace touches the Fock-space truncation boundary."""


class NotAnEigenvalueError(DeformedU2Error):
    """Value fails the eigenvalue condition of the recurrence endpoint."""
