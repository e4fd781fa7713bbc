"""Exception hierarchy shared by the LRM modules."""


class LrmError(ValueError):
    """Base class for every error raised by this package."""


class TiedWindow(LrmError):
    """Two cells inside one window carry the same charge level."""

    def __init__(self, window: int, cells: tuple[int, int]):
        self.window = window
        self.cells = cells
        super().__init__(f"window {window} has tied cells {cells[0]} and {cells[1]}")


class InconsistentOverlap(LrmError):
    """Two windows disagree on the relative order of a shared pair of cells."""


class NotRealizable(LrmError):
    """No charge configuration demodulates to the given base-word."""


class SuccessionViolation(LrmError):
    """A (1,3,n) base-word has a symbol that cannot follow its predecessor."""


class IllegalCodeword(LrmError):
    """A ternary codeword that does not decode to any base-word.

    ``reason`` is ``"all-ones"`` or ``"parity-mismatch"``.
    """

    def __init__(self, reason: str, message: str = ""):
        self.reason = reason
        super().__init__(message or reason)


class UnsupportedN(LrmError):
    """The requested length is outside the range an operation supports."""


class BudgetExceeded(LrmError):
    """An exhaustive search or enumeration would exceed its work budget."""
