"""Simple undirected labeled graphs and the matrices built from them.

Vertices are ``0..order-1``; vertex 0 is the distinguished vertex whose
row and column are removed to form the reduced Laplacians.  Edges are
kept sorted lexicographically and that order fixes the column order of
incidence matrices and the vertex labels of line graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    EmptyEdgeSet,
    InvalidOrder,
    LoopEdge,
    NotUnicyclic,
    OrientationLengthMismatch,
    VertexOutOfRange,
)
from .matrix import IntMatrix

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    order: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.order < 0:
            raise InvalidOrder(f"order must be non-negative, got {self.order}")
        seen = set()
        prev = None
        for u, v in self.edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{self.order - 1}")
            if u > v:
                raise ValueError(f"edge ({u}, {v}) not normalized; use from_edge_list")
            if (u, v) in seen:
                raise DuplicateEdge(f"edge ({u}, {v}) repeated")
            if prev is not None and (u, v) < prev:
                raise ValueError("edges must be sorted; use from_edge_list")
            seen.add((u, v))
            prev = (u, v)

    @property
    def size(self) -> int:
        """Number of edges, e(G)."""
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.order)

    def edge_index(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        return self.edges.index(key)

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def __str__(self) -> str:
        return f"Graph(n={self.order}, e={self.size})"


@dataclass(frozen=True)
class Orientation:
    """Per-edge direction flags; ``True`` orients edge ``(u, v)`` (u < v) as u -> v."""

    flags: tuple[bool, ...]

    @classmethod
    def default(cls, g: Graph) -> Orientation:
        return cls((True,) * g.size)


def from_edge_list(order: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a canonical graph; repeated pairs are rejected, not merged."""
    if order < 1:
        raise InvalidOrder(f"order must be at least 1, got {order}")
    seen: set[Edge] = set()
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{order - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge {key} given twice")
        seen.add(key)
    return Graph(order, tuple(sorted(seen)))


def line_graph(g: Graph) -> Graph:
    incident: list[list[int]] = [[] for _ in range(g.order)]
    for j, (u, v) in enumerate(g.edges):
        incident[u].append(j)
        incident[v].append(j)
    pairs = set()
    for edge_ids in incident:
        for a in range(len(edge_ids)):
            for b in range(a + 1, len(edge_ids)):
                pairs.add((edge_ids[a], edge_ids[b]))
    return Graph(g.size, tuple(sorted(pairs)))


def incidence_unoriented(g: Graph) -> IntMatrix:
    """0/1 vertex-edge incidence matrix X (n x e)."""
    if g.size == 0:
        raise EmptyEdgeSet("incidence matrix needs at least one edge")
    flat = [0] * (g.order * g.size)
    for j, (u, v) in enumerate(g.edges):
        flat[u * g.size + j] = 1
        flat[v * g.size + j] = 1
    return IntMatrix(g.order, g.size, tuple(flat))


def incidence_oriented(g: Graph, o: Orientation | None = None) -> IntMatrix:
    """0/+-1 incidence matrix D: +1 at the tail, -1 at the head of each edge."""
    if g.size == 0:
        raise EmptyEdgeSet("incidence matrix needs at least one edge")
    if o is None:
        o = Orientation.default(g)
    if len(o.flags) != g.size:
        raise OrientationLengthMismatch(
            f"{len(o.flags)} orientation flags for {g.size} edges"
        )
    flat = [0] * (g.order * g.size)
    for j, ((u, v), forward) in enumerate(zip(g.edges, o.flags)):
        tail, head = (u, v) if forward else (v, u)
        flat[tail * g.size + j] = 1
        flat[head * g.size + j] = -1
    return IntMatrix(g.order, g.size, tuple(flat))


def adjacency(g: Graph) -> IntMatrix:
    n = g.order
    flat = [0] * (n * n)
    for u, v in g.edges:
        flat[u * n + v] = 1
        flat[v * n + u] = 1
    return IntMatrix(n, n, tuple(flat))


def _degree_plus(g: Graph, sign: int) -> IntMatrix:
    n = g.order
    flat = [0] * (n * n)
    for u, v in g.edges:
        flat[u * n + u] += 1
        flat[v * n + v] += 1
        flat[u * n + v] = sign
        flat[v * n + u] = sign
    return IntMatrix(n, n, tuple(flat))


def laplacian(g: Graph) -> IntMatrix:
    return _degree_plus(g, -1)


def signless_laplacian(g: Graph) -> IntMatrix:
    return _degree_plus(g, 1)


def delete_vertex_row_col(m: IntMatrix, v: int = 0) -> IntMatrix:
    """Remove row ``v`` and column ``v`` (L1, Q1 for v = 0)."""
    keep = [i for i in range(m.rows) if i != v]
    flat = tuple(m.entries[i * m.cols + j] for i in keep for j in keep)
    return IntMatrix(len(keep), len(keep), flat)


# -- structure queries -------------------------------------------------------

def components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by least vertex."""
    adj = g.neighbors()
    seen = [False] * g.order
    parts = []
    for start in range(g.order):
        if seen[start]:
            continue
        seen[start] = True
        part = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    part.append(y)
                    queue.append(y)
        parts.append(sorted(part))
    return parts


def is_connected(g: Graph) -> bool:
    return g.order >= 1 and len(components(g)) == 1


def _two_coloring(g: Graph) -> list[int] | None:
    adj = g.neighbors()
    color = [-1] * g.order
    for start in range(g.order):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return _two_coloring(g) is not None


def bipartite_component_count(g: Graph) -> int:
    count = 0
    for part in components(g):
        sub = induced_subgraph(g, part)
        if is_bipartite(sub):
            count += 1
    return count


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    relabel = {v: i for i, v in enumerate(sorted(vertices))}
    pairs = [(relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel]
    return Graph(len(relabel), tuple(sorted(pairs)))


def is_tree(g: Graph) -> bool:
    return g.size == g.order - 1 and is_connected(g)


def is_unicyclic(g: Graph) -> bool:
    return g.order >= 3 and g.size == g.order and is_connected(g)


def cycle_length_of_unicyclic(g: Graph) -> int:
    """Length of the unique cycle, found by repeatedly stripping leaves."""
    if not is_unicyclic(g):
        raise NotUnicyclic(f"{g} is not a connected graph with e = n")
    adj = [set(a) for a in g.neighbors()]
    deg = [len(a) for a in adj]
    alive = [True] * g.order
    leaves = deque(v for v in range(g.order) if deg[v] == 1)
    while leaves:
        v = leaves.popleft()
        alive[v] = False
        for w in adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    return sum(alive)
