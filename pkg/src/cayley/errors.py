"""Exception hierarchy shared by all modules."""


class CayleyError(ValueError):
    """Base class for every error raised by this package."""


class InvalidTree(CayleyError):
    pass


class EdgeOutOfRange(InvalidTree):
    pass


class SelfLoop(InvalidTree):
    pass


class DuplicateEdge(InvalidTree):
    pass


class WrongEdgeCount(InvalidTree):
    pass


class Disconnected(InvalidTree):
    pass


class VertexOutOfRange(CayleyError):
    pass


class MalformedCode(CayleyError):
    pass


class MalformedTrace(CayleyError):
    pass


class MalformedSequence(CayleyError):
    pass


class RankOutOfRange(CayleyError):
    pass


class SizeLimitExceeded(CayleyError):
    pass


class FormatError(CayleyError):
    """Text input that does not follow the tree, graph or code formats."""
