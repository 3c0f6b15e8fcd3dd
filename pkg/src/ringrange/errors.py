"""Exception types shared across the package."""


class RingSpecError(ValueError):
    """Malformed ring construction recipe or unparseable spec string."""


class MixedRingError(ValueError):
    """Operands belong to different rings."""


class NotVonNeumannRegularError(ValueError):
    """Element admits no x with a*x*a == a."""


class NotSemihereditaryError(ValueError):
    """Annihilator of the element is not generated by an idempotent.

    Carries the offending annihilator as evidence.
    """

    def __init__(self, message, annihilator=None):
        super().__init__(message)
        self.annihilator = annihilator


class NotBezoutError(ValueError):
    """No single element generates the ideal sum of the given pair."""


class PreconditionError(ValueError):
    """A witness-transforming construction was called outside its hypothesis."""


class CapExceededError(RuntimeError):
    """Exhaustive search was refused because the ring exceeds the size cap."""
