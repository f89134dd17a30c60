"""Exception types shared across the package."""


class OscmeanError(Exception):
    """Base class for every error this package raises on purpose."""


class NonPositiveArgument(OscmeanError):
    """An argument that must be strictly positive was not."""


class BadDimension(OscmeanError):
    """Curve or system dimensions are out of range or inconsistent."""


class BadOrder(OscmeanError):
    """A derivative order is outside the defined range."""


class BadIndex(OscmeanError):
    """A component or mean index is out of range."""


class BadParameter(OscmeanError):
    """A configuration value (precision bits, trial count, ...) is invalid."""


class SingularSystem(OscmeanError):
    """A linear system has no numerically meaningful solution."""


class NoBracket(OscmeanError):
    """A root finder was handed an interval without a sign change."""


class DistinctnessViolation(OscmeanError):
    """Input values that must be pairwise distinct contain a repeat."""


class DomainError(OscmeanError):
    """Inputs lie outside the domain where an operation is defined."""
