"""Simple undirected graphs with a stable edge order.

Edges are indexed by position in the edge list; every matrix in this
package is indexed by those edge indices.  Only simple graphs are
accepted: no loops, no parallel edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, vertex_count: int, edges) -> None:
        if vertex_count < 0:
            raise GraphError("vertex_count must be non-negative")
        norm = []
        seen = set()
        for e in edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge {e} out of range for {vertex_count} vertices")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def incident_edges(self, v: int) -> list[int]:
        return [i for i, (a, b) in enumerate(self.edges) if v in (a, b)]

    def edges_adjacent(self, i: int, j: int) -> bool:
        a = self.edges[i]
        b = self.edges[j]
        return bool(set(a) & set(b))


@dataclass(frozen=True)
class EdgePair:
    i: int
    j: int
    kind: str  # "adjacent" | "independent"


def independent_pairs(g: Graph) -> list[EdgePair]:
    """All unordered pairs of edges sharing no vertex, lexicographic by (i, j)."""
    out = []
    m = g.edge_count
    for i in range(m):
        for j in range(i + 1, m):
            if not g.edges_adjacent(i, j):
                out.append(EdgePair(i, j, "independent"))
    return out


def all_pairs(g: Graph) -> list[EdgePair]:
    out = []
    m = g.edge_count
    for i in range(m):
        for j in range(i + 1, m):
            kind = "adjacent" if g.edges_adjacent(i, j) else "independent"
            out.append(EdgePair(i, j, kind))
    return out


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete_graph needs n >= 1")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, edges)


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError("complete_bipartite needs m, n >= 1")
    edges = [(u, m + v) for u in range(m) for v in range(n)]
    return Graph(m + n, edges)


def parse_graph(text: str) -> Graph:
    """Parse the graph text format: `graph <n>` then one `u v` line per edge."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError("empty graph file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "graph":
        raise GraphError(f"bad graph header: {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise GraphError(f"bad vertex count: {head[1]!r}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"graph {g.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
