"""Cheap certificates that settle balanceability without exhaustive search.

Positive conditions hand back a witness vertex set:

* an independent set I whose degree sum hits the half band works outright,
  because X = I crosses exactly that sum and W = V minus I keeps the rest;
* a single vertex with degree exactly m/2 is the singleton case of that;
* a bipartite d-regular graph on 4t vertices always yields such an I by
  taking t vertices of one part (degree sum d*t = m/2).

Negative conditions are parity arguments: with all degrees even every cut
is even, so an even m with odd m/2 is unreachable; for regular graphs the
same test depends on (d, n) alone.

Every report keeps the invariant: it carries a witness exactly when its
outcome is implies-balanceable.  These checks are advisory shortcuts;
the exhaustive oracle stays the ground truth.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graphs import Graph, VertexSet, basic_predicates
from .oracle import BudgetExceeded, DEFAULT_BUDGET, half_edge_targets, parity_obstruction

__all__ = [
    "independent_degree_sum",
    "big_vertex",
    "bipartite_regular_4n",
    "regular_obstruction",
    "parity_obstruction",
    "ConditionId",
    "ConditionReport",
    "condition_reports",
]


def independent_degree_sum(
    g: Graph, target: int, *, node_budget: int = DEFAULT_BUDGET
) -> VertexSet | None:
    """First independent set (in index-sequence order) with degree sum ``target``.

    Branch and bound over vertices in ascending order, include before
    exclude, so the first hit is the lexicographically smallest witness as
    an index sequence.  Pruned by remaining degree mass and by overshoot.
    Raises BudgetExceeded after ``node_budget`` search nodes.
    """
    if target < 0:
        raise ValueError("target must be nonnegative")
    if target == 0:
        return VertexSet(g.n, 0)
    n, adj, degs = g.n, g.adj, g.degrees()
    suffix = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] + degs[v]
    chosen: list[int] = []
    nodes = 0

    def walk(v: int, remaining: int, forbidden: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded("independent-set", node_budget)
        if remaining == 0:
            return True
        if v == n or suffix[v] < remaining:
            return False
        if not forbidden >> v & 1 and degs[v] <= remaining:
            chosen.append(v)
            if walk(v + 1, remaining - degs[v], forbidden | adj[v]):
                return True
            chosen.pop()
        return walk(v + 1, remaining, forbidden)

    if walk(0, target, 0):
        return VertexSet.from_indices(n, chosen)
    return None


def big_vertex(g: Graph) -> int | None:
    """Smallest vertex with degree exactly m/2, for even m."""
    if g.m % 2:
        return None
    half = g.m // 2
    for v, d in enumerate(g.degrees()):
        if d == half:
            return v
    return None


def bipartite_regular_4n(g: Graph) -> VertexSet | None:
    """For bipartite regular graphs on 4t vertices: t vertices of one part.

    With degree d >= 1 both parts hold exactly n/2 vertices, and any t of
    one part form an independent set with degree sum d*t = m/2.  Returns
    the t smallest vertices of the part containing vertex 0, or None when
    the shape does not apply.
    """
    if g.n == 0 or g.n % 4:
        return None
    facts = basic_predicates(g)
    if not facts.is_bipartite or not facts.is_regular:
        return None
    picked = facts.parts[0].indices()[: g.n // 4]
    return VertexSet.from_indices(g.n, picked)


def regular_obstruction(d: int, n: int) -> bool:
    """Whether every d-regular graph on n vertices lacks a half cut.

    This is the parity argument specialized to m = d*n/2: true exactly
    when d = 2 mod 4 and n = 2 mod 4, or d = 4 mod 8 and n odd.  The
    preconditions pin the regime where the question is well-posed.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if not 0 <= d < n:
        raise ValueError(f"degree {d} impossible on {n} vertices")
    if d % 2:
        raise ValueError("degree must be even")
    if (d * n // 2) % 2:
        raise ValueError(f"{d}-regular on {n} vertices has an odd edge count")
    return (d % 4 == 2 and n % 4 == 2) or (d % 8 == 4 and n % 2 == 1)


class ConditionId(enum.Enum):
    DEGREE_HALF_EDGES = "DegreeHalfEdges"
    BIG_VERTEX = "BigVertex"
    PARITY_EULERIAN = "ParityEulerian"
    REGULAR_OBSTRUCTION = "RegularObstruction"
    BIPARTITE_REGULAR_4N = "BipartiteRegular4n"


IMPLIES_BALANCEABLE = "implies-balanceable"
IMPLIES_NOT_BALANCEABLE = "implies-not-balanceable"
INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class ConditionReport:
    condition: ConditionId
    outcome: str
    witness: VertexSet | None
    note: str


def condition_reports(
    g: Graph, *, node_budget: int = DEFAULT_BUDGET
) -> tuple[ConditionReport, ...]:
    """Evaluate every condition against ``g``, in a fixed order."""
    lo, hi = half_edge_targets(g.m)
    band = f"{lo}..{hi}" if lo != hi else str(lo)
    reports = []

    try:
        ind = independent_degree_sum(g, lo, node_budget=node_budget)
        if ind is None and hi != lo:
            ind = independent_degree_sum(g, hi, node_budget=node_budget)
        note = (
            f"independent set {list(ind.indices())} has degree sum in {band}"
            if ind is not None
            else f"no independent set reaches degree sum {band}"
        )
    except BudgetExceeded as exc:
        ind = None
        note = str(exc)
    reports.append(
        ConditionReport(
            condition=ConditionId.DEGREE_HALF_EDGES,
            outcome=IMPLIES_BALANCEABLE if ind is not None else INAPPLICABLE,
            witness=ind,
            note=note,
        )
    )

    v = big_vertex(g)
    reports.append(
        ConditionReport(
            condition=ConditionId.BIG_VERTEX,
            outcome=IMPLIES_BALANCEABLE if v is not None else INAPPLICABLE,
            witness=VertexSet.from_indices(g.n, [v]) if v is not None else None,
            note=(
                f"vertex {v} has degree {g.degree(v)} = m/2"
                if v is not None
                else "no vertex has degree exactly m/2"
            ),
        )
    )

    parity = parity_obstruction(g)
    reports.append(
        ConditionReport(
            condition=ConditionId.PARITY_EULERIAN,
            outcome=IMPLIES_NOT_BALANCEABLE if parity is not None else INAPPLICABLE,
            witness=None,
            note=parity.detail if parity is not None else "degree parities do not block half cuts",
        )
    )

    facts = basic_predicates(g)
    blocked = False
    if facts.is_regular and g.n > 0 and facts.regular_degree % 2 == 0 and g.m % 2 == 0:
        blocked = regular_obstruction(facts.regular_degree, g.n)
    reports.append(
        ConditionReport(
            condition=ConditionId.REGULAR_OBSTRUCTION,
            outcome=IMPLIES_NOT_BALANCEABLE if blocked else INAPPLICABLE,
            witness=None,
            note=(
                f"{facts.regular_degree}-regular on {g.n} vertices has m = 2 mod 4"
                if blocked
                else "regular-degree parity does not apply"
            ),
        )
    )

    quarter = bipartite_regular_4n(g)
    reports.append(
        ConditionReport(
            condition=ConditionId.BIPARTITE_REGULAR_4N,
            outcome=IMPLIES_BALANCEABLE if quarter is not None else INAPPLICABLE,
            witness=quarter,
            note=(
                "bipartite regular on 4t vertices: t vertices of one part"
                if quarter is not None
                else "not a bipartite regular graph on 4t vertices"
            ),
        )
    )
    return tuple(reports)
