"""Exception hierarchy.

Every domain error derives from :class:`MixedTensorError`; the CLI maps these
to exit code 3 and prints the class name.
"""


class MixedTensorError(Exception):
    """Base class for domain errors."""


class ParseError(MixedTensorError, ValueError):
    pass


class NotHook(MixedTensorError):
    pass


class NotCross(MixedTensorError):
    pass


class NotDominant(MixedTensorError):
    pass


class MalformedDiagram(MixedTensorError):
    pass


class DifferentBlock(MixedTensorError):
    pass


class NotInImage(MixedTensorError):
    pass


class NotPositive(MixedTensorError):
    pass


class NotMaximalAtypical(MixedTensorError):
    pass


class NotKostant(MixedTensorError):
    pass


class TooAtypical(MixedTensorError):
    pass


class NotTypical(MixedTensorError):
    pass


class NotRecognizable(MixedTensorError):
    pass


class UnsupportedRank(MixedTensorError):
    """Raised for (m, n) with m < n, which the diagram calculus does not cover."""
