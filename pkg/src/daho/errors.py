"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside its physically meaningful domain."""


class NoBoundStatesError(DomainError):
    """Quantization was requested at zero rotation rate.

    Without rotation the quartic coupling of the radial potential vanishes,
    the series solutions cannot terminate, and no bound states exist.
    """


class InconsistencyError(ValueError):
    """Inputs that must satisfy a quantization condition do not.

    Raised when a supplied frequency violates the termination condition it
    is supposed to encode, or when an internally produced level fails its
    own termination self-check.
    """


class NoRealRootsError(RuntimeError):
    """The termination polynomial has no real roots at the given (n, l)."""


class ConfinementError(DomainError):
    """The grid cutoff is too small for the requested spectrum.

    Carries ``suggested_r_max``, a cutoff at which the confinement margin
    would hold.
    """

    def __init__(self, message: str, suggested_r_max: float):
        super().__init__(message)
        self.suggested_r_max = suggested_r_max
