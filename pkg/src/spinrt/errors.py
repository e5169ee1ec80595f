"""Exception hierarchy."""


class SpinRTError(Exception):
    """Base class for all library errors."""


class InvalidColor(SpinRTError, ValueError):
    """A module label outside (C minus Z) union rZ, or a degree clash."""


class NotScalar(SpinRTError):
    """A morphism that was expected to act by a scalar does not."""


class DiagramParseError(SpinRTError, ValueError):
    """Malformed Morse word.  ``index`` is the offending event (0-based)."""

    def __init__(self, message, index=None):
        if index is not None:
            message = f"event {index}: {message}"
        super().__init__(message)
        self.index = index


class InvalidOpening(SpinRTError):
    """The requested component cannot be cut open."""


class NotRenormalizable(SpinRTError):
    """No component carries a color in (C minus Z) union rZ."""


class NotComputable(SpinRTError):
    """The presentation is not computable (some surgery color is integral)."""


class ResourceGuard(SpinRTError):
    """A configured size limit (contraction width, number of terms) was hit."""


class NoSpinSolution(SpinRTError):
    """The characteristic equation has no solution; ``row`` is the obstruction."""

    def __init__(self, message, row=None):
        super().__init__(message)
        self.row = row


class InvalidPresentation(SpinRTError, ValueError):
    """A link presentation violates one of its defining conditions."""

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class MoveError(SpinRTError):
    """A Kirby-type move was requested where it does not apply."""
