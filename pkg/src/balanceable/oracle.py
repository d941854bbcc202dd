"""Exhaustive search for half cuts and half-sized induced edge sets.

A graph with m edges is *balanceable* when both of these exist:

* a cut (X, Y) whose crossing-edge count lands in {floor(m/2), ceil(m/2)};
* a vertex set W with e(G[W]) in the same band.

The searches enumerate candidate sets as ascending bitmask integers,
maintaining the running edge count incrementally (a binary-counter step
touches O(1) bits amortized).  Because masks are visited in increasing
numeric order, the first hit is also the smallest-mask witness, which keeps
every answer deterministic and lets tests pin exact witnesses.

Cut sides are canonicalized by keeping vertex 0 inside X, which halves the
space; induced sets are unrestricted.  An explicit subset budget bounds
each scan: exceeding it raises BudgetExceeded (or surfaces as an Undecided
verdict) rather than returning a wrong answer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graphs import Graph, VertexSet, e_cut, e_induced

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "half_edge_targets",
    "find_half_cut",
    "find_half_induced",
    "parity_obstruction",
    "BalanceWitness",
    "ObstructionKind",
    "Obstruction",
    "Verdict",
    "decide_balanceable",
]

DEFAULT_BUDGET = 1 << 28


class BudgetExceeded(Exception):
    """Raised when a search would need more nodes or subsets than allowed."""

    def __init__(self, scan: str, budget: int):
        super().__init__(f"{scan} search exhausted its budget of {budget}")
        self.scan = scan
        self.budget = budget


def half_edge_targets(m: int) -> tuple[int, int]:
    """Acceptable edge-count band (floor(m/2), ceil(m/2))."""
    return m // 2, (m + 1) // 2


def _scan_half_cut(g: Graph, lo: int, hi: int, budget: int) -> VertexSet | None:
    n, adj, deg = g.n, g.adj, g.degrees()
    if n == 0:
        return VertexSet(0, 0) if lo <= 0 <= hi else None
    x = 1
    cut = deg[0]
    if lo <= cut <= hi:
        return VertexSet(n, x)
    seen = 1
    for sub in range(1, 1 << (n - 1)):
        if seen >= budget:
            raise BudgetExceeded("cut", budget)
        seen += 1
        t = (sub & -sub).bit_length() - 1
        # counter bit b stands for vertex b + 1; vertex 0 stays inside X
        for b in range(t):
            v = b + 1
            x &= ~(1 << v)
            cut += 2 * (adj[v] & x).bit_count() - deg[v]
        v = t + 1
        cut += deg[v] - 2 * (adj[v] & x).bit_count()
        x |= 1 << v
        if lo <= cut <= hi:
            return VertexSet(n, x)
    return None


def _scan_half_induced(g: Graph, lo: int, hi: int, budget: int) -> VertexSet | None:
    if lo <= 0 <= hi:
        return VertexSet(g.n, 0)
    n, adj = g.n, g.adj
    x = 0
    inside = 0
    seen = 1
    for sub in range(1, 1 << n):
        if seen >= budget:
            raise BudgetExceeded("induced", budget)
        seen += 1
        t = (sub & -sub).bit_length() - 1
        for b in range(t):
            x &= ~(1 << b)
            inside -= (adj[b] & x).bit_count()
        inside += (adj[t] & x).bit_count()
        x |= 1 << t
        if lo <= inside <= hi:
            return VertexSet(n, x)
    return None


def find_half_cut(g: Graph, *, budget: int = DEFAULT_BUDGET) -> VertexSet | None:
    """Smallest-mask X containing vertex 0 whose cut lands in the half band."""
    lo, hi = half_edge_targets(g.m)
    return _scan_half_cut(g, lo, hi, budget)


def find_half_induced(g: Graph, *, budget: int = DEFAULT_BUDGET) -> VertexSet | None:
    """Smallest-mask W with e(G[W]) in the half band."""
    lo, hi = half_edge_targets(g.m)
    return _scan_half_induced(g, lo, hi, budget)


class ObstructionKind(enum.Enum):
    NO_HALF_CUT = "NoHalfCut"
    NO_HALF_INDUCED = "NoHalfInduced"
    PARITY = "ParityEulerian"
    BOTH = "Both"


@dataclass(frozen=True)
class Obstruction:
    kind: ObstructionKind
    detail: str


def parity_obstruction(g: Graph) -> Obstruction | None:
    """Parity reason (if any) why no cut can reach m/2.

    When every degree is even, e(X, Y) = sum of deg over X minus twice
    e(G[X]) is even for every X.  With m even and m/2 odd, the half band
    is the single odd value m/2, so no cut attains it.
    """
    if any(d % 2 for d in g.degrees()):
        return None
    if g.m % 2 or (g.m // 2) % 2 == 0:
        return None
    return Obstruction(
        ObstructionKind.PARITY,
        f"all degrees even forces even cuts, but the half target {g.m // 2} is odd",
    )


@dataclass(frozen=True)
class BalanceWitness:
    """Certificate: a cut side and an induced set, with their edge counts."""

    cut_side: VertexSet
    induced_set: VertexSet
    cut_edges: int
    induced_edges: int

    def verify(self, g: Graph) -> bool:
        lo, hi = half_edge_targets(g.m)
        return (
            self.cut_side.n == g.n
            and self.induced_set.n == g.n
            and e_cut(g, self.cut_side) == self.cut_edges
            and e_induced(g, self.induced_set) == self.induced_edges
            and lo <= self.cut_edges <= hi
            and lo <= self.induced_edges <= hi
        )


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: BalanceWitness | None = None
    obstruction: Obstruction | None = None
    reason: str | None = None

    @property
    def is_balanceable(self) -> bool:
        return self.status == "Balanceable"

    @classmethod
    def balanceable(cls, witness: BalanceWitness) -> "Verdict":
        return cls(status="Balanceable", witness=witness)

    @classmethod
    def not_balanceable(cls, obstruction: Obstruction) -> "Verdict":
        return cls(status="NotBalanceable", obstruction=obstruction)

    @classmethod
    def undecided(cls, reason: str) -> "Verdict":
        return cls(status="Undecided", reason=reason)


def decide_balanceable(g: Graph, *, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Decide balanceability outright; each scan gets its own budget.

    The even-degree parity shortcut runs first, so large eulerian graphs
    with m/2 odd never pay for a doomed cut scan.  When the cut scan
    completes empty, the induced scan still runs (budget permitting) so
    the obstruction can name both missing halves.
    """
    lo, hi = half_edge_targets(g.m)
    band = f"{lo}..{hi}" if lo != hi else str(lo)
    parity = parity_obstruction(g)
    if parity is not None:
        return Verdict.not_balanceable(parity)
    try:
        x = _scan_half_cut(g, lo, hi, budget)
    except BudgetExceeded as exc:
        return Verdict.undecided(str(exc))
    if x is None:
        kind = ObstructionKind.NO_HALF_CUT
        detail = f"no cut attains {band} crossing edges"
        try:
            if _scan_half_induced(g, lo, hi, budget) is None:
                kind = ObstructionKind.BOTH
                detail = f"no cut and no induced subgraph attains {band} edges"
        except BudgetExceeded:
            pass
        return Verdict.not_balanceable(Obstruction(kind, detail))
    try:
        w = _scan_half_induced(g, lo, hi, budget)
    except BudgetExceeded as exc:
        return Verdict.undecided(str(exc))
    if w is None:
        return Verdict.not_balanceable(
            Obstruction(
                ObstructionKind.NO_HALF_INDUCED,
                f"no induced subgraph attains {band} edges",
            )
        )
    return Verdict.balanceable(
        BalanceWitness(
            cut_side=x,
            induced_set=w,
            cut_edges=e_cut(g, x),
            induced_edges=e_induced(g, w),
        )
    )
