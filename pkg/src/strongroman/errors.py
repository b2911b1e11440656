"""Exception hierarchy shared by every module."""

from __future__ import annotations


class StrongRomanError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(StrongRomanError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class SizeMismatch(StrongRomanError, ValueError):
    pass


class IsolatedVertexInGraph(StrongRomanError, ValueError):
    """A total variant was requested on a graph with an isolated vertex."""


class InstanceTooLarge(StrongRomanError, ValueError):
    pass


class InvalidFamilyParams(StrongRomanError, ValueError):
    pass


class NoClosedForm(StrongRomanError, LookupError):
    pass


class ConstructionError(StrongRomanError, ValueError):
    """Base for construction precondition failures."""


class StarInput(ConstructionError):
    pass


class TooSmall(ConstructionError):
    pass


class WrongDiameter(ConstructionError):
    pass


class MinDegreeTooSmall(ConstructionError):
    pass


class AcyclicInput(ConstructionError):
    pass


class GirthTooSmall(ConstructionError):
    pass


class NotDominatingSet(ConstructionError):
    pass


class NotTotalDominatingSet(ConstructionError):
    pass


class NotConnected(ConstructionError):
    pass


class NotATree(StrongRomanError, ValueError):
    pass


class CertificateFailure(StrongRomanError, AssertionError):
    """A construction produced a labeling that does not certify its bound."""


class MalformedGraph6(StrongRomanError, ValueError):
    pass


class ParseError(StrongRomanError, ValueError):
    pass
