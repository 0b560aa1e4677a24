"""Distances built on the edge-overlap optimum.

``d_e`` compares two weakly connected, simple, oriented node-labeled
digraphs: one minus the maximum number of simultaneously matchable edges,
normalized by the larger edge count.  ``d_n`` is the node-level analogue
(one minus the maximum common node-induced subgraph size over the larger
node count).  ``poset_distance`` applies ``d_e`` to the digraphs of two
labeled partial orders.

Distances are exact :class:`fractions.Fraction` values internally; render
them as decimals at the edge of the system, never compare floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .clique import dmces_via_clique, mcis
from .core import LabeledDigraph, PosetDigraph, validate_properties
from .errors import DegenerateInput, PropertyViolation
from .solvers import (
    DmcesOutcome,
    NodeMatching,
    Solver,
    dmces_alg1,
    dmces_alg2,
    dmces_alg3,
    dmces_bruteforce,
)

AUTO = "auto"
_CLIQUE_AUTO_LIMIT = 10_000  # |D| * |D'| above this, clique reduction is a bad idea


@dataclass(frozen=True)
class DistanceResult:
    """An edge-overlap distance with its ingredients.

    distance = 1 - dmces_value / normalizer, where the normalizer is the
    larger of the two edge counts; always within [0, 1].
    """

    dmces_value: int
    normalizer: int
    distance: Fraction
    witness: NodeMatching
    solver: Solver

    def __post_init__(self):
        if self.normalizer < 1:
            raise ValueError("normalizer must be positive")
        if not 0 <= self.dmces_value <= self.normalizer:
            raise ValueError("value outside [0, normalizer]")
        if self.distance != 1 - Fraction(self.dmces_value, self.normalizer):
            raise ValueError("distance does not match value/normalizer")


def _solve(
    g: LabeledDigraph, g2: LabeledDigraph, solver: Union[Solver, str]
) -> DmcesOutcome:
    solver = Solver(solver) if not isinstance(solver, Solver) else solver
    if solver is Solver.BRUTE:
        return dmces_bruteforce(g, g2)
    if solver is Solver.ALG1:
        return dmces_alg1(g, g2)
    if solver is Solver.ALG2:
        return dmces_alg2(g, g2)
    if solver is Solver.ALG3:
        return dmces_alg3(g, g2)
    return dmces_via_clique(g, g2)


def choose_solver(g: LabeledDigraph, g2: LabeledDigraph) -> Solver:
    """The `auto` policy: the most-pruned solver whose preconditions hold,
    clique reduction for small edge products, plain recursion otherwise."""
    ra, rb = validate_properties(g), validate_properties(g2)
    closures = (
        ra.is_acyclic
        and rb.is_acyclic
        and ra.is_transitively_closed
        and rb.is_transitively_closed
    )
    if closures and ra.per_label_path and rb.per_label_path:
        return Solver.ALG3
    if closures:
        return Solver.ALG2
    if len(g.edges) * len(g2.edges) <= _CLIQUE_AUTO_LIMIT:
        return Solver.CLIQUE
    return Solver.ALG1


def d_e(
    g: LabeledDigraph,
    g2: LabeledDigraph,
    solver: Union[Solver, str] = AUTO,
) -> DistanceResult:
    """Edge-overlap distance between two weakly connected, simple,
    oriented node-labeled digraphs, each with at least one edge."""
    for which, graph in (("first", g), ("second", g2)):
        if not validate_properties(graph).is_wso:
            raise PropertyViolation(
                f"{which} graph must be weakly connected, simple, and oriented"
            )
        if not graph.edges:
            raise DegenerateInput(f"{which} graph has no edges")
    if solver == AUTO:
        solver = choose_solver(g, g2)
    outcome = _solve(g, g2, solver)
    normalizer = max(len(g.edges), len(g2.edges))
    return DistanceResult(
        dmces_value=outcome.value,
        normalizer=normalizer,
        distance=1 - Fraction(outcome.value, normalizer),
        witness=outcome.witness,
        solver=outcome.solver,
    )


def d_n(g, g2) -> Fraction:
    """Node-overlap distance: one minus the maximum common node-induced
    subgraph size over the larger node count.  Accepts any labeled
    digraphs, including extended line digraphs (edge labels respected).
    Two empty graphs are at distance 0."""
    n = max(len(g.nodes), len(g2.nodes))
    if n == 0:
        return Fraction(0)
    size, _ = mcis(g, g2)
    return 1 - Fraction(size, n)


def poset_distance(p: PosetDigraph, p2: PosetDigraph) -> DistanceResult:
    """Distance between two labeled partial orders, via their digraphs.
    Uses the chain-aware solver when every label class is a chain in both,
    the order-respecting solver otherwise."""
    if p.per_label_path and p2.per_label_path:
        return d_e(p.graph, p2.graph, Solver.ALG3)
    return d_e(p.graph, p2.graph, Solver.ALG2)
