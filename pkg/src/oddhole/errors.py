"""Exception hierarchy shared by every module of the package."""


class OddHoleError(ValueError):
    """Base class for all precondition and input errors raised here."""


class InvalidVertex(OddHoleError):
    pass


class InvalidEdge(OddHoleError):
    pass


class NoSuchEdge(OddHoleError):
    pass


class EmptySource(OddHoleError):
    pass


class SourceNotConnected(OddHoleError):
    pass


class NotInFamily(OddHoleError):
    pass


class Disconnected(OddHoleError):
    pass


class LayerNotBipartite(OddHoleError):
    """A distance layer turned out non-bipartite where the theory forbids it.

    Raising this on a family member means a theorem-level contradiction was
    observed, so the odd-cycle witness is kept for the report.
    """

    def __init__(self, message, layer_index=None, odd_cycle=None):
        super().__init__(message)
        self.layer_index = layer_index
        self.odd_cycle = odd_cycle


class ImproperColoring(OddHoleError):
    pass


class NotAFiveHole(OddHoleError):
    pass


class HypothesisViolated(OddHoleError):
    def __init__(self, clause: str):
        super().__init__(f"hypothesis violated: {clause}")
        self.clause = clause


class InvalidEmbedding(OddHoleError):
    pass


class UnknownStatement(OddHoleError):
    pass


class MalformedGraph6(OddHoleError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (byte {position})")
        self.detail = message
        self.position = position


class MalformedEdgeList(OddHoleError):
    pass


class BudgetExceeded(Exception):
    """Raised cooperatively when a per-graph time budget runs out."""
