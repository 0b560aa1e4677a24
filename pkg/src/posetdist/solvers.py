"""Direct solvers for the maximum common directed edge overlap.

Given node-labeled digraphs G and G', a feasible solution is an injective,
label-respecting partial map phi from nodes of G to nodes of G'.  Its score
is the number of ordered pairs (v1, v2) that are an edge in G while
(phi(v1), phi(v2)) is an edge in G'.  The optimum over all feasible
solutions is the quantity every solver here computes:

- :func:`dmces_bruteforce` enumerates every feasible solution with no
  pruning at all; it is the oracle the other solvers are tested against.
- :func:`dmces_alg1` prunes by per-label cardinality: some optimum matches
  exactly min(|class|, |class'|) nodes of every label, so a node may be
  skipped only while that target stays reachable.
- :func:`dmces_alg2` additionally explores only order-respecting solutions;
  on transitive closures every optimum is order-respecting, because
  swapping the images of a twisted same-label pair strictly increases the
  score there.
- :func:`dmces_alg3` additionally tracks permanently unusable image nodes
  when every label class is a chain, cutting branches whose remaining
  image supply cannot reach the per-label target.

All three recursive solvers also carry an admissible score bound (a branch
is cut when even deciding every remaining edge in its favor cannot beat
the best score already found).  The bound never changes the value or the
reported witness; it only skips work.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping, Optional

from .core import (
    LabeledDigraph,
    PosetDigraph,
    topological_sort,
    validate_properties,
)
from .errors import (
    InvalidMatching,
    LabelClassNotPath,
    NotTransitivelyClosed,
    PairNotTwisted,
    PropertyViolation,
    SizeCapExceeded,
)


class Solver(str, Enum):
    BRUTE = "brute"
    ALG1 = "alg1"
    ALG2 = "alg2"
    ALG3 = "alg3"
    CLIQUE = "clique"

    def __str__(self) -> str:  # argparse/json friendliness
        return self.value


@dataclass(frozen=True)
class NodeMatching:
    """An injective, label-respecting pair set; pairs sorted by domain id."""

    pairs: tuple[tuple[str, str], ...]

    def __init__(self, pairs: Iterable[tuple[str, str]]):
        object.__setattr__(self, "pairs", tuple(sorted(pairs)))

    @cached_property
    def mapping(self) -> dict[str, str]:
        return dict(self.pairs)

    @property
    def domain(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.pairs)

    @property
    def image(self) -> tuple[str, ...]:
        return tuple(w for _, w in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class LabelBudget:
    """Per-label matchable node counts: min of the two class sizes."""

    per_label: dict[str, int]
    total: int


@dataclass(frozen=True)
class DmcesOutcome:
    """A solver result: optimal value, one optimal matching, the edge pairs
    it realizes, and which solver produced it."""

    value: int
    witness: NodeMatching
    matched_edges: frozenset[tuple[tuple[str, str], tuple[str, str]]]
    solver: Solver


def _check_matching(g: LabeledDigraph, g2: LabeledDigraph, phi: NodeMatching) -> None:
    seen_dom: set[str] = set()
    seen_img: set[str] = set()
    for v, w in phi.pairs:
        if v not in g.node_labels:
            raise InvalidMatching(f"{v!r} is not a node of the first graph")
        if w not in g2.node_labels:
            raise InvalidMatching(f"{w!r} is not a node of the second graph")
        if v in seen_dom or w in seen_img:
            raise InvalidMatching("matching is not injective")
        seen_dom.add(v)
        seen_img.add(w)
        if g.node_labels[v] != g2.node_labels[w]:
            raise InvalidMatching(f"label mismatch on pair ({v!r}, {w!r})")


def score(g: LabeledDigraph, g2: LabeledDigraph, phi: NodeMatching) -> int:
    """Number of edges (v1, v2) of ``g`` whose image (phi(v1), phi(v2)) is
    an edge of ``g2``."""
    _check_matching(g, g2, phi)
    m = phi.mapping
    return sum(
        1
        for a, b in g.edges
        if a in m and b in m and (m[a], m[b]) in g2.edge_set
    )


def matched_edges(
    g: LabeledDigraph, g2: LabeledDigraph, phi: NodeMatching
) -> frozenset[tuple[tuple[str, str], tuple[str, str]]]:
    """The edge pairs realized by ``phi``; its size equals score()."""
    m = phi.mapping
    return frozenset(
        ((a, b), (m[a], m[b]))
        for a, b in g.edges
        if a in m and b in m and (m[a], m[b]) in g2.edge_set
    )


def label_budget(g: LabeledDigraph, g2: LabeledDigraph) -> LabelBudget:
    """min(|class|, |class'|) per label over the union of both alphabets."""
    sizes = {a: len(vs) for a, vs in g.label_classes.items()}
    sizes2 = {a: len(vs) for a, vs in g2.label_classes.items()}
    per = {
        a: min(sizes.get(a, 0), sizes2.get(a, 0))
        for a in sorted(set(sizes) | set(sizes2))
    }
    return LabelBudget(per, sum(per.values()))


def respects_order_on_labels(
    g: LabeledDigraph, g2: LabeledDigraph, phi: NodeMatching
) -> frozenset[frozenset[str]]:
    """The twisted pairs of ``phi``: same-labeled v1, v2 with (v1, v2) an
    edge of ``g`` while (phi(v2), phi(v1)) is an edge of ``g2``.  An empty
    result means the matching respects order on labels."""
    _check_matching(g, g2, phi)
    m = phi.mapping
    out: set[frozenset[str]] = set()
    for v1, v2 in g.edges:
        if (
            v1 in m
            and v2 in m
            and g.node_labels[v1] == g.node_labels[v2]
            and (m[v2], m[v1]) in g2.edge_set
        ):
            out.add(frozenset((v1, v2)))
    return frozenset(out)


def untwist(
    g: LabeledDigraph,
    g2: LabeledDigraph,
    phi: NodeMatching,
    pair: Iterable[str],
) -> NodeMatching:
    """Swap the images of one twisted pair.  The swap resolves that pair
    (on an oriented second graph it cannot stay twisted, so re-applying
    raises).  Raises :class:`PairNotTwisted` if the pair is not in the
    violation set of ``phi``."""
    key = frozenset(pair)
    if len(key) != 2:
        raise PairNotTwisted("pair must contain two distinct nodes")
    if key not in respects_order_on_labels(g, g2, phi):
        raise PairNotTwisted(f"{set(pair)!r} is not twisted under this matching")
    u, v = sorted(key)
    m = phi.mapping
    swapped = dict(m)
    swapped[u], swapped[v] = m[v], m[u]
    return NodeMatching(tuple(swapped.items()))


def _outcome(
    g: LabeledDigraph, g2: LabeledDigraph, phi: NodeMatching, solver: Solver
) -> DmcesOutcome:
    edges = matched_edges(g, g2, phi)
    return DmcesOutcome(len(edges), phi, edges, solver)


def dmces_bruteforce(
    g: LabeledDigraph, g2: LabeledDigraph, *, node_cap: int = 12
) -> DmcesOutcome:
    """Exhaustive search over every feasible solution, no pruning.

    Every node of ``g`` is either skipped or mapped to any unused node of
    ``g2`` with the same label; the best score wins, first-found on ties.
    This is the oracle the pruned solvers are validated against, so it
    stays deliberately naive; ``node_cap`` guards against accidental use
    on large inputs.
    """
    if len(g.nodes) > node_cap or len(g2.nodes) > node_cap:
        raise SizeCapExceeded(
            f"brute force capped at {node_cap} nodes "
            f"(got {len(g.nodes)} and {len(g2.nodes)})"
        )
    by_label: dict[str, list[str]] = {
        a: sorted(vs) for a, vs in g2.label_classes.items()
    }
    order = list(g.nodes)
    used: set[str] = set()
    current: dict[str, str] = {}
    best = -1
    best_phi: dict[str, str] = {}

    def recurse(i: int) -> None:
        nonlocal best, best_phi
        if i == len(order):
            value = _raw_score(g, g2, current)
            if value > best:
                best = value
                best_phi = dict(current)
            return
        m = order[i]
        for n in by_label.get(g.node_labels[m], ()):
            if n in used:
                continue
            current[m] = n
            used.add(n)
            recurse(i + 1)
            used.discard(n)
            del current[m]
        recurse(i + 1)  # skip m

    recurse(0)
    return _outcome(g, g2, NodeMatching(tuple(best_phi.items())), Solver.BRUTE)


def _raw_score(g: LabeledDigraph, g2: LabeledDigraph, m: Mapping[str, str]) -> int:
    return sum(
        1
        for a, b in g.edges
        if a in m and b in m and (m[a], m[b]) in g2.edge_set
    )


def _require_wso(g: LabeledDigraph, which: str) -> None:
    report = validate_properties(g)
    if not report.is_wso:
        raise PropertyViolation(
            f"{which} graph must be weakly connected, simple, and oriented"
        )


def _require_closure(g: LabeledDigraph | PosetDigraph, which: str) -> LabeledDigraph:
    if isinstance(g, PosetDigraph):
        return g.graph
    report = validate_properties(g)
    if not report.is_wso:
        raise PropertyViolation(
            f"{which} graph must be weakly connected, simple, and oriented"
        )
    if not report.is_transitively_closed:
        raise NotTransitivelyClosed(f"{which} graph is not transitively closed")
    return g


def _require_label_paths(g: LabeledDigraph, which: str) -> None:
    if not validate_properties(g).per_label_path:
        raise LabelClassNotPath(
            f"some label class of the {which} graph is not a directed chain"
        )


def dmces_alg1(g: LabeledDigraph, g2: LabeledDigraph) -> DmcesOutcome:
    """Recursive search with per-label cardinality pruning; inputs must be
    weakly connected, simple, and oriented."""
    _require_wso(g, "first")
    _require_wso(g2, "second")
    phi = _pick_nodes(g, g2, order_filter=False, path_budget=False)
    return _outcome(g, g2, phi, Solver.ALG1)


def dmces_alg2(
    g: LabeledDigraph | PosetDigraph, g2: LabeledDigraph | PosetDigraph
) -> DmcesOutcome:
    """Alg 1 plus order-respecting pruning; inputs must be transitive
    closures (weakly connected, simple, oriented)."""
    ga = _require_closure(g, "first")
    gb = _require_closure(g2, "second")
    phi = _pick_nodes(ga, gb, order_filter=True, path_budget=False)
    return _outcome(ga, gb, phi, Solver.ALG2)


def dmces_alg3(
    g: LabeledDigraph | PosetDigraph, g2: LabeledDigraph | PosetDigraph
) -> DmcesOutcome:
    """Alg 2 plus dead-image tracking; inputs must be transitive closures
    whose label classes are directed chains."""
    ga = _require_closure(g, "first")
    gb = _require_closure(g2, "second")
    _require_label_paths(ga, "first")
    _require_label_paths(gb, "second")
    phi = _pick_nodes(ga, gb, order_filter=True, path_budget=True)
    return _outcome(ga, gb, phi, Solver.ALG3)


def _pick_nodes(
    g: LabeledDigraph,
    g2: LabeledDigraph,
    *,
    order_filter: bool,
    path_budget: bool,
) -> NodeMatching:
    """The shared recursion behind the three pruned solvers.

    Nodes of ``g`` are processed in a fixed order (topological when the
    order filter is on); each is mapped to a candidate image (ascending id)
    or skipped, and skipping is allowed only while the per-label target
    stays reachable.  Each edge of ``g`` is decided exactly once, at the
    moment its later-processed endpoint is handled: realized (score),
    or dead (an endpoint skipped, or the image pair is not an edge).
    ``n_edges - dead`` is therefore an upper bound on any completion of the
    current branch, and branches that cannot strictly beat the incumbent
    are cut.
    """
    order = topological_sort(g) if order_filter else list(g.nodes)
    labels = g.node_labels
    target = label_budget(g, g2).per_label
    candidates_by_label = {a: sorted(vs) for a, vs in g2.label_classes.items()}
    class2_size = {a: len(vs) for a, vs in g2.label_classes.items()}
    in_nb = g.in_neighbors
    out_nb = g.out_neighbors
    in_nb2 = {v: frozenset(ws) for v, ws in g2.in_neighbors.items()}
    edge_set2 = g2.edge_set
    label2 = g2.node_labels
    n_edges = len(g.edges)

    remaining = {a: len(vs) for a, vs in g.label_classes.items()}
    phi: dict[str, str] = {}
    used: set[str] = set()
    matched_count: dict[str, int] = {a: 0 for a in remaining}
    skipped: set[str] = set()
    dead_images: set[str] = set()  # alg3's permanently unusable image nodes

    best = -1
    best_phi: dict[str, str] = {}

    def decide_edges(m: str, n: Optional[str]) -> tuple[int, int]:
        """Score/dead deltas for processing ``m`` (mapped to ``n``, or
        skipped when ``n`` is None), counting only edges between ``m`` and
        already-processed nodes."""
        gained = 0
        lost = 0
        for u in in_nb[m]:
            if u in phi:
                if n is not None and (phi[u], n) in edge_set2:
                    gained += 1
                else:
                    lost += 1
            elif u in skipped:
                lost += 1
        for u in out_nb[m]:
            if u in phi:
                if n is not None and (n, phi[u]) in edge_set2:
                    gained += 1
                else:
                    lost += 1
            elif u in skipped:
                lost += 1
        return gained, lost

    def recurse(i: int, current_score: int, dead: int) -> None:
        nonlocal best, best_phi
        if i == len(order):
            if current_score > best:
                best = current_score
                best_phi = dict(phi)
            return
        m = order[i]
        lab = labels[m]
        remaining[lab] -= 1

        if order_filter:
            cross: set[str] = set()
            for u in in_nb[m]:
                if u in phi and labels[u] == lab:
                    cross |= in_nb2[phi[u]]
        for n in candidates_by_label.get(lab, ()):
            if n in used or n in dead_images:
                continue
            if order_filter and n in cross:
                continue
            if path_budget:
                fresh = [
                    v
                    for v in in_nb2[n]
                    if v not in used and v not in dead_images and label2[v] == lab
                ]
                killed = len(fresh) + sum(
                    1 for v in dead_images if label2[v] == lab
                )
                if target[lab] > class2_size[lab] - killed:
                    continue
            gained, lost = decide_edges(m, n)
            if n_edges - (dead + lost) <= best:
                continue
            phi[m] = n
            used.add(n)
            matched_count[lab] += 1
            if path_budget:
                dead_images.update(fresh)
            recurse(i + 1, current_score + gained, dead + lost)
            if path_budget:
                dead_images.difference_update(fresh)
            matched_count[lab] -= 1
            used.discard(n)
            del phi[m]

        if matched_count[lab] + remaining[lab] + 1 > target[lab]:
            _, lost = decide_edges(m, None)
            if n_edges - (dead + lost) > best:
                skipped.add(m)
                recurse(i + 1, current_score, dead + lost)
                skipped.discard(m)

        remaining[lab] += 1

    recurse(0, 0, 0)
    if best < 0:
        raise RuntimeError("search produced no feasible solution")  # unreachable
    return NodeMatching(tuple(best_phi.items()))
