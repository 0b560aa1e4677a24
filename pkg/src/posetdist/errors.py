"""Exception types shared across the package.

Every rejection the library performs has a dedicated class so callers can
react to the exact failure; all of them derive from :class:`PosetDistError`.
"""


class PosetDistError(Exception):
    """Base class for every error raised by this package."""


class AntisymmetryViolation(PosetDistError):
    """An order relation contains p <= q and q <= p for distinct p, q."""


class NotWeaklyConnected(PosetDistError):
    """The graph has no undirected path between some pair of nodes."""


class DegeneratePoset(PosetDistError):
    """The order relation yields no edges, so the distance is undefined."""


class CycleDetected(PosetDistError):
    """A directed cycle was found where an acyclic graph is required."""


class NotSimple(PosetDistError):
    """The graph contains a self-loop."""


class KindMismatch(PosetDistError):
    """Two graphs of different kinds were passed to an isomorphism check."""


class PropertyViolation(PosetDistError):
    """An input lacks a structural property (weakly connected / simple /
    oriented) required by the operation."""


class NotTransitivelyClosed(PosetDistError):
    """A solver requiring transitively closed inputs got an open one."""


class LabelClassNotPath(PosetDistError):
    """Some label class does not induce a single directed chain."""


class SizeCapExceeded(PosetDistError):
    """An input is larger than the configured brute-force guard."""


class InvalidMatching(PosetDistError):
    """A node matching is not an injective, label-respecting pair set."""


class PairNotTwisted(PosetDistError):
    """untwist() was asked to swap a pair that is not actually twisted."""


class DegenerateInput(PosetDistError):
    """A distance was requested for a graph with an empty edge set."""


class ParseError(PosetDistError):
    """A graph or poset file is syntactically malformed."""

    def __init__(self, message, *, path=None, line=None, field=None):
        loc = []
        if path is not None:
            loc.append(str(path))
        if line is not None:
            loc.append(f"line {line}")
        if field is not None:
            loc.append(f"field {field}")
        prefix = ": ".join(loc)
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.path = path
        self.line = line
        self.field = field


class ValidationError(PosetDistError):
    """A file parsed but the resulting graph failed structural validation."""

    def __init__(self, message, cause=None):
        super().__init__(message)
        self.cause = cause


class InfeasibleParameters(PosetDistError):
    """The random-instance generator cannot satisfy the requested shape."""


class SolverDisagreement(PosetDistError):
    """Two exact solvers returned different values for the same instance."""
