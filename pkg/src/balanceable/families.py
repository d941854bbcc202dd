"""Generators for the graph families the analyses target.

Labeling conventions matter here because the closed-form witness
constructions quote concrete vertex indices:

* cycles and circulants: ``u_0 .. u_{k-1}`` in cyclic order;
* rectangular grids: row-major, ``(row r, col c) -> r * cols + c``;
* triangular grids: rows counted from the apex, row ``j`` holding ``j``
  vertices, with 1-based ``(row j, pos i) -> (j-1)j/2 + (i-1)``;
* wheels: rim ``0 .. rim-1`` in cyclic order, hub last;
* stars: hub 0, leaves after it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph

__all__ = [
    "FamilyParams",
    "build_family",
    "parse_family_spec",
    "graph_from_spec",
    "cycle",
    "path",
    "complete",
    "wheel",
    "star",
    "circulant",
    "chorded_cycle",
    "rect_grid",
    "tri_grid",
    "tri_vertex",
    "moebius",
    "antiprism",
]


def cycle(k: int) -> Graph:
    """Cycle on ``k >= 3`` vertices."""
    if k < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {k}")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path(edge_count: int) -> Graph:
    """Path with ``edge_count >= 0`` edges (so ``edge_count + 1`` vertices)."""
    if edge_count < 0:
        raise ValueError("path length must be nonnegative")
    return Graph(edge_count + 1, [(i, i + 1) for i in range(edge_count)])


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("order must be nonnegative")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def wheel(rim: int) -> Graph:
    """Cycle on ``rim >= 3`` vertices plus a hub (vertex ``rim``) joined to all."""
    if rim < 3:
        raise ValueError(f"wheel rim needs at least 3 vertices, got {rim}")
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph(rim + 1, edges)


def star(leaves: int) -> Graph:
    """Hub (vertex 0) joined to ``leaves >= 0`` leaves."""
    if leaves < 0:
        raise ValueError("leaf count must be nonnegative")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def circulant(k: int, steps: tuple[int, ...]) -> Graph:
    """Vertices ``0..k-1`` with ``i ~ i+j (mod k)`` for every step ``j``.

    Steps must be distinct and lie in ``1..k//2``; the step ``k/2`` (when k
    is even) contributes ``k/2`` edges, every other step contributes ``k``.
    """
    if k < 1:
        raise ValueError("order must be positive")
    seen = set()
    for j in steps:
        if not 1 <= j <= k // 2:
            raise ValueError(f"step {j} outside 1..{k // 2} for order {k}")
        if j in seen:
            raise ValueError(f"duplicate step {j}")
        seen.add(j)
    edges = set()
    for j in steps:
        for i in range(k):
            b = (i + j) % k
            edges.add((min(i, b), max(i, b)))
    return Graph(k, sorted(edges))


def chorded_cycle(k: int, ell: int) -> Graph:
    """Cycle on ``k > 3`` vertices plus all chords ``u_i u_{i+ell}``.

    A chord distance of ``ell`` and of ``k - ell`` describe the same graph,
    so the distance is mirrored into ``2..k/2`` before building.  With
    ``ell = k/2`` the graph is 3-regular with ``3k/2`` edges; otherwise it is
    4-regular with ``2k`` edges.
    """
    if k <= 3:
        raise ValueError(f"chorded cycle needs k > 3, got {k}")
    if not 2 <= ell <= k - 2:
        raise ValueError(f"chord distance must lie in 2..{k - 2}, got {ell}")
    return circulant(k, (1, min(ell, k - ell)))


def rect_grid(rows: int, cols: int) -> Graph:
    """Rectangular grid, ``rows x cols`` vertices, row-major labels."""
    if rows < 2 or cols < 2:
        raise ValueError("grid sides must be at least 2")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def tri_vertex(row: int, pos: int) -> int:
    """Label of the triangular-grid vertex at 1-based ``(row, pos)``."""
    return (row - 1) * row // 2 + (pos - 1)


def tri_grid(h: int) -> Graph:
    """Triangular grid with ``h`` vertices per side.

    Row ``j`` (from the apex, 1-based) holds ``j`` vertices; each vertex is
    joined to its row neighbors and to the two vertices below it.  Corners
    have degree 2, other boundary vertices 4, interior vertices 6, so the
    graph is always eulerian; the edge count is ``3 h (h-1) / 2``.
    """
    if h < 1:
        raise ValueError("side length must be positive")
    edges = []
    for row in range(1, h + 1):
        for pos in range(1, row + 1):
            v = tri_vertex(row, pos)
            if pos < row:
                edges.append((v, tri_vertex(row, pos + 1)))
            if row < h:
                edges.append((v, tri_vertex(row + 1, pos)))
                edges.append((v, tri_vertex(row + 1, pos + 1)))
    return Graph(h * (h + 1) // 2, edges)


def moebius(n: int) -> Graph:
    """Cycle on even ``n >= 4`` vertices plus all antipodal chords."""
    if n < 4 or n % 2:
        raise ValueError(f"antipodal-chord cycle needs even order >= 4, got {n}")
    return chorded_cycle(n, n // 2)


def antiprism(k: int) -> Graph:
    """The ``k``-antiprism, ``k >= 3``: order ``2k`` circulant with steps 1, 2."""
    if k < 3:
        raise ValueError(f"antiprism needs at least 3 rim pairs, got {k}")
    return circulant(2 * k, (1, 2))


@dataclass(frozen=True)
class FamilyParams:
    """Parsed family request: a kind tag plus the parameters it uses."""

    kind: str
    k: int | None = None
    ell: int | None = None
    steps: tuple[int, ...] | None = None
    h: int | None = None
    rows: int | None = None
    cols: int | None = None


def build_family(params: FamilyParams) -> Graph:
    kind = params.kind
    if kind == "cycle":
        return cycle(params.k)
    if kind == "path":
        return path(params.k)
    if kind == "complete":
        return complete(params.k)
    if kind == "wheel":
        return wheel(params.k)
    if kind == "star":
        return star(params.k)
    if kind == "circulant":
        return circulant(params.k, params.steps)
    if kind == "chorded-cycle":
        return chorded_cycle(params.k, params.ell)
    if kind == "rect-grid":
        return rect_grid(params.rows, params.cols)
    if kind == "tri-grid":
        return tri_grid(params.h)
    if kind == "moebius":
        return moebius(params.k)
    if kind == "antiprism":
        return antiprism(params.k)
    raise ValueError(f"unknown family kind {kind!r}")


_SINGLE_INT = {
    "cycle": "cycle",
    "path": "path",
    "complete": "complete",
    "wheel": "wheel",
    "star": "star",
    "tri": "tri-grid",
    "moebius": "moebius",
    "antiprism": "antiprism",
}


def parse_family_spec(text: str) -> FamilyParams:
    """Parse specs like ``cycle:12``, ``circulant:38,1+8``, ``chorded:38,8``,
    ``grid:4x8``, ``tri:9``, ``moebius:12``, ``antiprism:6``."""
    kind, sep, rest = text.strip().partition(":")
    kind = kind.strip().lower()
    rest = rest.strip()
    if not sep or not rest:
        raise ValueError(f"family spec {text!r}: expected '<family>:<params>'")

    def as_int(token: str, label: str) -> int:
        try:
            return int(token)
        except ValueError:
            raise ValueError(f"family spec {text!r}: {label} must be an integer") from None

    if kind in _SINGLE_INT:
        value = as_int(rest, "parameter")
        target = _SINGLE_INT[kind]
        if target == "tri-grid":
            return FamilyParams(kind=target, h=value)
        return FamilyParams(kind=target, k=value)
    if kind == "grid":
        parts = rest.lower().split("x")
        if len(parts) != 2:
            raise ValueError(f"family spec {text!r}: expected 'grid:<rows>x<cols>'")
        return FamilyParams(
            kind="rect-grid",
            rows=as_int(parts[0], "rows"),
            cols=as_int(parts[1], "cols"),
        )
    if kind == "chorded":
        parts = rest.split(",")
        if len(parts) != 2:
            raise ValueError(f"family spec {text!r}: expected 'chorded:<k>,<distance>'")
        return FamilyParams(
            kind="chorded-cycle",
            k=as_int(parts[0], "order"),
            ell=as_int(parts[1], "chord distance"),
        )
    if kind == "circulant":
        parts = rest.split(",")
        if len(parts) != 2:
            raise ValueError(f"family spec {text!r}: expected 'circulant:<k>,<step>+<step>...'")
        steps = tuple(as_int(tok, "step") for tok in parts[1].split("+") if tok)
        if not steps:
            raise ValueError(f"family spec {text!r}: at least one step required")
        return FamilyParams(kind="circulant", k=as_int(parts[0], "order"), steps=steps)
    raise ValueError(f"family spec {text!r}: unknown family {kind!r}")


def graph_from_spec(text: str) -> Graph:
    return build_family(parse_family_spec(text))
