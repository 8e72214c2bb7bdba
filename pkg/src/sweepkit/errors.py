"""Exception hierarchy shared by every sweepkit module."""


class SweepkitError(Exception):
    """Base class for all library errors."""


class InvalidEdge(SweepkitError):
    pass


class EmptyGraph(SweepkitError):
    pass


class TooLarge(SweepkitError):
    pass


class InvalidBag(SweepkitError):
    pass


class EmptyDecomposition(SweepkitError):
    pass


class DomainError(SweepkitError):
    """Arguments fall outside the range where a formula or construction is stated."""


class InvalidLayout(SweepkitError):
    pass


class IllegalAction(SweepkitError):
    """A search action cannot be applied in the current state.

    ``step`` is filled in by strategy replay so callers can report where a
    certificate went wrong.
    """

    def __init__(self, kind: str, reason: str, step: int | None = None):
        self.kind = kind
        self.reason = reason
        self.step = step
        where = f" at step {step}" if step is not None else ""
        super().__init__(f"illegal {kind}{where}: {reason}")


class InconsistentBounds(SweepkitError):
    pass


class StaleCertificate(SweepkitError):
    pass


class GraphFormatError(SweepkitError):
    pass
