"""Exception hierarchy shared by every module."""


class PantsGraphError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSurfaceError(PantsGraphError, ValueError):
    pass


class InvalidChordError(PantsGraphError, ValueError):
    pass


class MalformedCoordinatesError(PantsGraphError, ValueError):
    pass


class NotACurveError(PantsGraphError, ValueError):
    """Coordinates describe more than one component."""


class InessentialCurveError(PantsGraphError, ValueError):
    """The curve bounds a disk or a once-punctured disk."""


class ModelMismatchError(PantsGraphError, ValueError):
    pass


class MulticurveError(PantsGraphError, ValueError):
    """Curves are repeated or intersect."""


class NotAdjacentError(PantsGraphError, ValueError):
    pass


class UnsupportedError(PantsGraphError, ValueError):
    pass


class BudgetExceededError(PantsGraphError, RuntimeError):
    def __init__(self, projected: int, budget: int):
        super().__init__(f"projected vertex count {projected} exceeds budget {budget}")
        self.projected = projected
        self.budget = budget


class InvariantViolation(PantsGraphError, AssertionError):
    """An internal invariant of an algorithm failed; always a bug or a false claim."""
