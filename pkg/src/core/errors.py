"""
Domain Errors
Exception hierarchy shared by every geometric module
"""


class DlabError(ValueError):
    """Base class for all domain errors raised by the library."""


class OutOfDimension(DlabError):
    """A vector is supported outside the coordinates of its space."""


class InvalidDescriptor(DlabError):
    """A space descriptor violates its construction invariants."""


class SizeLimit(DlabError):
    """An instance exceeds the desk-scale caps of an algorithm."""


class NumericalError(DlabError):
    """Pivoting or a numerical routine failed to converge."""


class EmptySlice(DlabError):
    """The requested slice of a unit ball has no points."""


class NotPolyhedral(DlabError):
    """A finite vertex description is required but the ball is not a polytope."""


class NotInBall(DlabError):
    """An input that must lie in a closed unit ball lies outside it."""


class NegativeFirstCoordinate(DlabError):
    """A dual decomposition was requested for a functional with z*(e1) < 0."""


class BadIndex(DlabError):
    """A coordinate index is invalid for the requested construction."""


class NotOnSphere(DlabError):
    """A point that must have norm one does not."""


class SearchExhausted(DlabError):
    """A witness search ran out of candidates."""


class SpaceParseError(DlabError):
    """A JSON space description or a vector literal could not be parsed."""
