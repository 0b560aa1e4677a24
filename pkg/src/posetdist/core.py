"""Node-labeled digraphs, structural predicates, and order utilities.

The whole package works on two graph value types defined here:
:class:`LabeledDigraph` (directed, node-labeled) and
:class:`UndirectedGraph` (plain, unlabeled).  Both are immutable after
construction and iterate nodes/edges in deterministic insertion order, so
every algorithm downstream is reproducible run to run.

Commodity graph work (connectivity, topological order, transitive
closure/reduction, reachability) is delegated to networkx; everything that
carries domain meaning lives in this package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping

import networkx as nx

from .errors import (
    AntisymmetryViolation,
    CycleDetected,
    DegeneratePoset,
    NotSimple,
    NotTransitivelyClosed,
    NotWeaklyConnected,
    PropertyViolation,
)

NodeId = str
Edge = tuple[NodeId, NodeId]


@dataclass(frozen=True)
class LabeledDigraph:
    """A finite digraph with a label on every node.

    Parameters
    ----------
    nodes : sequence of str
        Node ids, unique, kept in insertion order.
    node_labels : mapping id -> str
        A label for every declared node.
    edges : iterable of (str, str)
        Directed edges between declared nodes.  Duplicates are dropped
        (the edge container has set semantics); the first occurrence fixes
        iteration order.

    Self-loops and 2-cycles are representable; they are reported (not
    rejected) by :func:`validate_properties` and rejected only by the
    operations whose contracts require their absence.
    """

    nodes: tuple[NodeId, ...]
    node_labels: dict[NodeId, str]
    edges: tuple[Edge, ...]

    def __init__(
        self,
        nodes: Iterable[NodeId],
        node_labels: Mapping[NodeId, str],
        edges: Iterable[tuple[NodeId, NodeId]],
    ):
        node_tup = tuple(nodes)
        if len(set(node_tup)) != len(node_tup):
            raise ValueError("duplicate node ids")
        node_set = set(node_tup)
        labels = {v: node_labels[v] for v in node_tup}  # KeyError = missing label
        seen: set[Edge] = set()
        edge_list: list[Edge] = []
        for u, v in edges:
            if u not in node_set or v not in node_set:
                raise ValueError(f"edge ({u!r}, {v!r}) references an undeclared node")
            if (u, v) not in seen:
                seen.add((u, v))
                edge_list.append((u, v))
        object.__setattr__(self, "nodes", node_tup)
        object.__setattr__(self, "node_labels", labels)
        object.__setattr__(self, "edges", tuple(edge_list))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def out_neighbors(self) -> dict[NodeId, tuple[NodeId, ...]]:
        adj: dict[NodeId, list[NodeId]] = {v: [] for v in self.nodes}
        for u, v in self.edges:
            adj[u].append(v)
        return {v: tuple(ws) for v, ws in adj.items()}

    @cached_property
    def in_neighbors(self) -> dict[NodeId, tuple[NodeId, ...]]:
        adj: dict[NodeId, list[NodeId]] = {v: [] for v in self.nodes}
        for u, v in self.edges:
            adj[v].append(u)
        return {v: tuple(ws) for v, ws in adj.items()}

    @cached_property
    def label_classes(self) -> dict[str, tuple[NodeId, ...]]:
        """Nodes grouped by label, insertion order inside each class."""
        classes: dict[str, list[NodeId]] = {}
        for v in self.nodes:
            classes.setdefault(self.node_labels[v], []).append(v)
        return {a: tuple(vs) for a, vs in classes.items()}

    def _nx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.nodes)
        g.add_edges_from(self.edges)
        return g

    def relabel(self, mapping: Mapping[NodeId, NodeId]) -> "LabeledDigraph":
        """Rename nodes by a bijective id mapping, labels carried along."""
        return LabeledDigraph(
            [mapping[v] for v in self.nodes],
            {mapping[v]: self.node_labels[v] for v in self.nodes},
            [(mapping[u], mapping[v]) for u, v in self.edges],
        )


@dataclass(frozen=True)
class UndirectedGraph:
    """A simple undirected graph; nodes are arbitrary hashables.

    Edges are stored as sorted 2-tuples.  Self-loops are rejected and
    duplicate edges collapse, matching the set semantics of the directed
    type.
    """

    nodes: tuple[Hashable, ...]
    edges: tuple[tuple[Hashable, Hashable], ...]

    def __init__(self, nodes: Iterable[Hashable], edges: Iterable[tuple]):
        node_tup = tuple(nodes)
        if len(set(node_tup)) != len(node_tup):
            raise ValueError("duplicate node ids")
        node_set = set(node_tup)
        seen: set[tuple] = set()
        edge_list: list[tuple] = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on {u!r}")
            if u not in node_set or v not in node_set:
                raise ValueError(f"edge ({u!r}, {v!r}) references an undeclared node")
            key = tuple(sorted((u, v)))
            if key not in seen:
                seen.add(key)
                edge_list.append(key)
        object.__setattr__(self, "nodes", node_tup)
        object.__setattr__(self, "edges", tuple(edge_list))

    @cached_property
    def edge_set(self) -> frozenset[tuple]:
        return frozenset(self.edges)

    @cached_property
    def neighbors(self) -> dict[Hashable, tuple]:
        adj: dict[Hashable, list] = {v: [] for v in self.nodes}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(ws) for v, ws in adj.items()}

    def has_edge(self, u, v) -> bool:
        return tuple(sorted((u, v))) in self.edge_set


@dataclass(frozen=True)
class PropertyReport:
    """Structural facts about a :class:`LabeledDigraph`, computed exactly."""

    is_finite: bool
    is_weakly_connected: bool
    is_simple: bool
    is_oriented: bool
    is_acyclic: bool
    is_transitively_closed: bool
    per_label_path: bool

    @property
    def is_wso(self) -> bool:
        return self.is_weakly_connected and self.is_simple and self.is_oriented


@dataclass(frozen=True)
class PosetDigraph:
    """A digraph proven to come from a labeled partial order.

    Wraps a :class:`LabeledDigraph` that is weakly connected, simple,
    oriented, acyclic, transitively closed, and has at least one edge.
    Build one with :func:`build_poset_digraph` or
    :meth:`PosetDigraph.from_closure`.
    """

    graph: LabeledDigraph

    def __post_init__(self):
        report = validate_properties(self.graph)
        if not report.is_simple:
            raise PropertyViolation("poset digraph must be simple")
        if not report.is_oriented:
            raise AntisymmetryViolation("order relation contains a 2-cycle")
        if not report.is_acyclic:
            raise CycleDetected("order relation contains a directed cycle")
        if not report.is_transitively_closed:
            raise NotTransitivelyClosed("poset digraph must be transitively closed")
        if not report.is_weakly_connected:
            raise NotWeaklyConnected("poset digraph must be weakly connected")
        if not self.graph.edges:
            raise DegeneratePoset("order relation yields no edges")

    @classmethod
    def from_closure(cls, g: LabeledDigraph) -> "PosetDigraph":
        """Validate an existing transitively closed graph as a poset digraph."""
        return cls(g)

    @property
    def per_label_path(self) -> bool:
        return validate_properties(self.graph).per_label_path


def validate_properties(g: LabeledDigraph) -> PropertyReport:
    """Compute the structural report for ``g``; never rejects.

    Flags, each checked from the definition:

    - weakly connected: an undirected path joins every node pair;
    - simple: no self-loops (duplicate edges cannot be represented);
    - oriented: no pair of opposing edges (u,v), (v,u);
    - acyclic: no directed cycle;
    - transitively closed: (u,v), (v,w) in the edge set with u != w
      implies (u,w) is too;
    - per_label_path: every label class induces an acyclic subgraph whose
      transitive reduction is a single directed chain covering the class
      (a literal path and the closure of a path both qualify).
    """
    nxg = g._nx()
    n = len(g.nodes)
    simple = all(u != v for u, v in g.edges)
    oriented = simple and all((v, u) not in g.edge_set for u, v in g.edges)
    weakly = n <= 1 or nx.is_weakly_connected(nxg)
    acyclic = nx.is_directed_acyclic_graph(nxg)
    closed = _is_transitively_closed(g)
    per_label = all(
        _induces_chain(g, class_nodes) for class_nodes in g.label_classes.values()
    )
    return PropertyReport(
        is_finite=True,
        is_weakly_connected=weakly,
        is_simple=simple,
        is_oriented=oriented,
        is_acyclic=acyclic,
        is_transitively_closed=closed,
        per_label_path=per_label,
    )


def _is_transitively_closed(g: LabeledDigraph) -> bool:
    out = {v: set(ws) for v, ws in g.out_neighbors.items()}
    for u, v in g.edges:
        for w in out[v]:
            if w != u and (u, w) not in g.edge_set:
                return False
    return True


def _induced_subgraph(g: LabeledDigraph, keep: Iterable[NodeId]) -> LabeledDigraph:
    keep_set = set(keep)
    return LabeledDigraph(
        [v for v in g.nodes if v in keep_set],
        {v: g.node_labels[v] for v in g.nodes if v in keep_set},
        [(u, v) for u, v in g.edges if u in keep_set and v in keep_set],
    )


def _induces_chain(g: LabeledDigraph, class_nodes: tuple[NodeId, ...]) -> bool:
    """True iff the induced subgraph on ``class_nodes`` is acyclic and its
    transitive reduction is a directed path through every class node."""
    if len(class_nodes) <= 1:
        return True
    sub = _induced_subgraph(g, class_nodes)
    nxg = sub._nx()
    if not nx.is_directed_acyclic_graph(nxg):
        return False
    red = nx.transitive_reduction(nxg)
    if red.number_of_edges() != len(class_nodes) - 1:
        return False
    degrees_ok = all(
        red.out_degree(v) <= 1 and red.in_degree(v) <= 1 for v in class_nodes
    )
    return degrees_ok and nx.is_weakly_connected(red)


def induced_subgraph(g: LabeledDigraph, keep: Iterable[NodeId]) -> LabeledDigraph:
    """Node-induced subgraph on ``keep`` (order inherited from ``g``)."""
    return _induced_subgraph(g, keep)


def build_poset_digraph(
    elements: Iterable[tuple[NodeId, str]],
    relations: Iterable[tuple[NodeId, NodeId]],
) -> PosetDigraph:
    """Build the digraph of a labeled partial order.

    ``relations`` lists pairs (p, q) meaning p <= q.  Reflexive pairs are
    stripped, the relation is completed to its transitive closure, and an
    edge (p, q) is created for every p <= q with p != q.

    Raises
    ------
    AntisymmetryViolation
        if the closure relates two distinct elements both ways.
    NotWeaklyConnected
        if the resulting digraph is not weakly connected.
    DegeneratePoset
        if no edges remain after stripping reflexivity.
    """
    elems = list(elements)
    ids = [e for e, _ in elems]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate element ids")
    id_set = set(ids)
    pairs = set()
    for p, q in relations:
        if p not in id_set or q not in id_set:
            raise ValueError(f"relation ({p!r}, {q!r}) references an undeclared element")
        if p != q:
            pairs.add((p, q))
    nxg = nx.DiGraph()
    nxg.add_nodes_from(ids)
    nxg.add_edges_from(sorted(pairs))
    closure = nx.transitive_closure(nxg, reflexive=False)
    for p, q in closure.edges:
        if closure.has_edge(q, p):
            raise AntisymmetryViolation(f"{p!r} <= {q!r} and {q!r} <= {p!r}")
    edges = sorted(closure.edges)
    if not edges:
        raise DegeneratePoset("order relation yields no edges")
    g = LabeledDigraph(ids, dict(elems), edges)
    if not (len(g.nodes) <= 1 or nx.is_weakly_connected(g._nx())):
        raise NotWeaklyConnected("order relation does not connect all elements")
    return PosetDigraph(g)


def structure(g: LabeledDigraph) -> UndirectedGraph:
    """Forget directions and labels: edge {u, v} iff either orientation
    is present.  Requires a simple, oriented input so the map edge ->
    undirected edge is one to one."""
    report = validate_properties(g)
    if not (report.is_simple and report.is_oriented):
        raise PropertyViolation("structure() requires a simple, oriented digraph")
    return UndirectedGraph(g.nodes, g.edges)


def line_graph(g: UndirectedGraph) -> UndirectedGraph:
    """The line graph: one node per edge of ``g``, adjacent iff the edges
    share an endpoint."""
    lg = nx.line_graph(_nx_undirected(g))
    nodes = sorted(tuple(sorted(e)) for e in g.edges)
    edges = sorted(
        tuple(sorted((tuple(sorted(a)), tuple(sorted(b))))) for a, b in lg.edges
    )
    return UndirectedGraph(nodes, edges)


def _nx_undirected(g: UndirectedGraph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(g.nodes)
    nxg.add_edges_from(g.edges)
    return nxg


def predecessors(g: LabeledDigraph, v: NodeId) -> frozenset[NodeId]:
    """All nodes u != v with a directed path from u to v (full reachability,
    not merely in-neighbors; the two coincide on transitive closures)."""
    if v not in g.node_labels:
        raise ValueError(f"unknown node {v!r}")
    return frozenset(nx.ancestors(g._nx(), v))


def topological_sort(g: LabeledDigraph) -> list[NodeId]:
    """Kahn's method with smallest-id tie-break; raises CycleDetected."""
    try:
        return list(nx.lexicographical_topological_sort(g._nx()))
    except nx.NetworkXUnfeasible:
        raise CycleDetected("graph contains a directed cycle") from None


def transitive_closure(g: LabeledDigraph) -> LabeledDigraph:
    """Add (u, w) for every directed path u -> ... -> w.  Edges of the
    result are emitted in sorted order, so equal closures compare equal."""
    nxg = g._nx()
    if not nx.is_directed_acyclic_graph(nxg):
        raise CycleDetected("transitive closure requires an acyclic graph")
    closed = nx.transitive_closure_dag(nxg)
    return LabeledDigraph(g.nodes, g.node_labels, sorted(closed.edges))


def transitive_reduction(g: LabeledDigraph) -> LabeledDigraph:
    """Remove every edge implied by a longer path (the covering relation)."""
    nxg = g._nx()
    if not nx.is_directed_acyclic_graph(nxg):
        raise CycleDetected("transitive reduction requires an acyclic graph")
    red = nx.transitive_reduction(nxg)
    return LabeledDigraph(g.nodes, g.node_labels, sorted(red.edges))
