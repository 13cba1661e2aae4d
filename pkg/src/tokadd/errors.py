"""Exception types shared across the package."""


class EmptyInputError(ValueError):
    """Raised when an operand string is empty."""


class InvalidDigitError(ValueError):
    """Raised when an operand contains a character outside '0'..'9'."""

    def __init__(self, char: str, offset: int):
        super().__init__(f"invalid digit {char!r} at offset {offset}")
        self.char = char
        self.offset = offset


class ZeroInputError(ValueError):
    """Raised by operations that are undefined for a zero operand."""


class WorkerPoolFailure(RuntimeError):
    """Raised when a parallel worker terminates abnormally."""
