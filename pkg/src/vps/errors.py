"""Exception hierarchy shared by every module."""


class VpsError(Exception):
    """Base class; the CLI maps it to exit status 1."""


class ParseError(VpsError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.message = message
        self.offset = offset


class RingMismatch(VpsError):
    pass


class FieldMismatch(VpsError):
    pass


class DivisionByZero(VpsError, ZeroDivisionError):
    pass


class NonHomogeneous(VpsError):
    pass


class DegenerateForm(VpsError):
    pass


class NotApolar(VpsError):
    pass


class DegeneratePoints(VpsError):
    pass


class NoDecomposition(VpsError):
    pass


class WrongDimension(VpsError):
    pass


class CayleySingular(VpsError):
    pass


class NotAssociative(VpsError):
    pass


class NotLocal(VpsError):
    pass


class NotInChart(VpsError):
    pass


class NotOnChart(VpsError):
    pass


class OutOfRange(VpsError):
    pass


class Unsupported(VpsError):
    pass


class NotOnVariety(VpsError):
    pass


class TooLarge(VpsError):
    pass


class ZeroVector(VpsError):
    """A vector or linear form that must be nonzero is zero."""


class NotDirectSum(VpsError):
    """Two subspaces do not decompose the ambient space."""


class NotUnique(VpsError):
    """A pencil has no unique common apolar scheme."""


class NonIntegral(VpsError):
    """A quantity that must be an integer came out fractional."""
