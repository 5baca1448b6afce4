"""Standard and seeded random graph families.

Every random generator takes an explicit integer seed and draws from its
own ``random.Random`` instance, so identical seeds give identical graphs.
"""

from __future__ import annotations

import heapq
import random

from .errors import InvalidOrder
from .graph import Graph, from_edge_list, is_connected


def _check_order(n: int, minimum: int = 1) -> None:
    if n < minimum:
        raise InvalidOrder(f"order must be at least {minimum}, got {n}")


def complete_graph(n: int) -> Graph:
    _check_order(n)
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle(n: int) -> Graph:
    _check_order(n, 3)
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _check_order(n)
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    _check_order(n)
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree on ``n`` vertices with Prufer sequence ``seq``."""
    if len(seq) != n - 2:
        raise ValueError(f"Prufer sequence for n={n} must have length {n - 2}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree via a random Prufer sequence."""
    _check_order(n)
    if n == 1:
        return Graph(1, ())
    if n == 2:
        return Graph(2, ((0, 1),))
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return from_edge_list(n, prufer_decode(seq, n))


def random_graph(n: int, edge_prob: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); may be disconnected."""
    _check_order(n)
    rng = random.Random(seed)
    return _gnp(n, edge_prob, rng)


def _gnp(n: int, p: float, rng: random.Random) -> Graph:
    edges = tuple((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p)
    return Graph(n, edges)


def random_connected(n: int, edge_prob: float, seed: int) -> Graph:
    """G(n, p) redrawn until connected."""
    _check_order(n)
    if n > 1 and edge_prob <= 0:
        raise ValueError("edge_prob must be positive for n > 1")
    rng = random.Random(seed)
    while True:
        g = _gnp(n, edge_prob, rng)
        if is_connected(g):
            return g


def random_unicyclic(n: int, seed: int) -> Graph:
    """Random tree plus one uniformly chosen non-edge."""
    _check_order(n, 3)
    rng = random.Random(seed)
    tree = random_tree(n, rng.getrandbits(64))
    present = set(tree.edges)
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present]
    extra = rng.choice(non_edges)
    return from_edge_list(n, list(tree.edges) + [extra])
