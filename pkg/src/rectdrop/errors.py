"""Exception types shared across the package."""


class BoardError(ValueError):
    """Base class for invalid board geometry or arguments."""


class OutOfBoardError(BoardError):
    """A rectangle or footprint does not fit between the board walls."""


class OverlapError(BoardError):
    """Two rectangle interiors intersect."""


class WidthExceedsBoardError(OutOfBoardError):
    """A queried rectangle is wider than the board."""


class ScriptError(ValueError):
    """An op-script line failed to parse.

    Carries the 1-based line number for diagnostics.
    """

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class InstanceError(ValueError):
    """A set-family instance file or value is malformed."""
