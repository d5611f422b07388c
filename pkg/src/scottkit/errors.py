class ScottkitError(Exception):
    pass


class InvalidArgument(ScottkitError, ValueError):
    """Unknown element, malformed input, or a violated parameter side-condition."""


class OutOfRange(InvalidArgument):
    """A column index too large to materialise as an integer."""


class PreconditionViolation(ScottkitError, ValueError):
    pass


class OracleNotScottOpen(ScottkitError, RuntimeError):
    """An open-set oracle failed the accessibility-by-directed-sups contract.

    Raised by the constructive procedures when they cannot find an ideal
    member inside the oracle although the ideal's supremum is inside it.
    """

    def __init__(self, message, *, ideal=None, stage=None):
        super().__init__(message)
        self.ideal = ideal
        self.stage = stage
