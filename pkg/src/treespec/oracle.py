"""Brute-force enumeration of forests and TU-subgraphs.

A TU-subgraph is an edge subset whose components are trees or unicyclic
graphs with an odd cycle.  Its weight is ``4**c * prod(1 + e(T))`` over
its c odd-unicyclic components and its trees T.  The restricted weight
relative to a vertex v1 replaces the factor of the component containing
v1 by 0 (odd unicyclic) or 1 (tree).

Signed sums of these weights by edge count give the characteristic
polynomial coefficients of L, Q and of L, Q with the row and column of
v1 deleted.  Nothing here touches a matrix, which is the point: these
are oracles for the linear algebra route.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import TooLarge, ZeroTrees
from .graph import Graph

MAX_EDGES = 24

# (c_1, ..., c_k): c_j is the signed weight sum over subsets with j edges
WeightedCount = tuple[int, ...]


class Kind(enum.Enum):
    TREE = "tree"
    ODD_UNICYCLIC = "odd_unicyclic"


@dataclass(frozen=True)
class Component:
    vertices: frozenset[int]
    edge_count: int
    kind: Kind


@dataclass(frozen=True)
class TUSubgraph:
    edge_subset: frozenset[int]
    components: tuple[Component, ...]

    @property
    def vertex_support(self) -> frozenset[int]:
        out: set[int] = set()
        for comp in self.components:
            out |= comp.vertices
        return frozenset(out)

    @property
    def unicyclic_count(self) -> int:
        return sum(comp.kind is Kind.ODD_UNICYCLIC for comp in self.components)

    @property
    def trees(self) -> list[Component]:
        return [comp for comp in self.components if comp.kind is Kind.TREE]

    @property
    def is_forest(self) -> bool:
        return self.unicyclic_count == 0


def edge_subset_components(g: Graph, edge_subset: Iterable[int]) -> list[tuple[frozenset[int], list[int]]]:
    """Components of the subgraph spanned by an edge subset as (vertices, edge ids).

    Vertices not touched by the subset are not components.
    """
    edge_ids = sorted(set(edge_subset))
    adj: dict[int, list[tuple[int, int]]] = {}
    for j in edge_ids:
        u, v = g.edges[j]
        adj.setdefault(u, []).append((v, j))
        adj.setdefault(v, []).append((u, j))
    seen: set[int] = set()
    out = []
    for start in sorted(adj):
        if start in seen:
            continue
        seen.add(start)
        stack = [start]
        verts, comp_edges = {start}, set()
        while stack:
            x = stack.pop()
            for y, j in adj[x]:
                comp_edges.add(j)
                if y not in seen:
                    seen.add(y)
                    verts.add(y)
                    stack.append(y)
        out.append((frozenset(verts), sorted(comp_edges)))
    return out


def has_odd_cycle(g: Graph, vertices: frozenset[int], edge_ids: list[int]) -> bool:
    color: dict[int, int] = {}
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for j in edge_ids:
        u, v = g.edges[j]
        adj[u].append(v)
        adj[v].append(u)
    for start in vertices:
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return True
    return False


def classify_subgraph(g: Graph, edge_subset: Iterable[int]) -> TUSubgraph | None:
    """Classify the components of an edge subset; ``None`` means not a TU-subgraph."""
    subset = frozenset(edge_subset)
    comps = []
    for verts, edge_ids in edge_subset_components(g, subset):
        k, v = len(edge_ids), len(verts)
        if k == v - 1:
            kind = Kind.TREE
        elif k == v and has_odd_cycle(g, verts, edge_ids):
            kind = Kind.ODD_UNICYCLIC
        else:
            return None
        comps.append(Component(verts, k, kind))
    return TUSubgraph(subset, tuple(comps))


def weight_W(h: TUSubgraph) -> int:
    w = 1
    for comp in h.components:
        w *= 4 if comp.kind is Kind.ODD_UNICYCLIC else 1 + comp.edge_count
    return w


def weight_W1(h: TUSubgraph, v1: int = 0) -> int:
    w = 1
    for comp in h.components:
        if comp.kind is Kind.ODD_UNICYCLIC:
            w *= 0 if v1 in comp.vertices else 4
        else:
            w *= 1 if v1 in comp.vertices else 1 + comp.edge_count
    return w


# -- pruned enumeration ----------------------------------------------------------

@dataclass
class _Totals:
    weight: list[int]              # sum of W by edge count
    count: list[int]               # number of subsets by edge count
    restricted: dict[int, list[int]]  # v1 -> sum of W1 by edge count


def _enumerate(g: Graph, allow_odd_cycles: bool, v1s: Iterable[int] = ()) -> _Totals:
    """Walk every forest (or TU) edge subset once, as increasing edge sequences.

    Components are tracked in a union-find with parity and undo.  Both
    properties are closed under taking subsets, so a branch is cut as
    soon as it stops qualifying: a cycle in forest mode; an even cycle
    or a second cycle in a component in TU mode.
    """
    if g.size > MAX_EDGES:
        raise TooLarge(f"enumeration capped at {MAX_EDGES} edges, graph has {g.size}")
    n, edges = g.order, g.edges
    parent = list(range(n))
    parity = [0] * n       # parity of the path to the parent
    size = [1] * n
    ecount = [0] * n       # edges per component (valid at roots)
    cyclic = [False] * n   # component carries its odd cycle (valid at roots)
    v1s = sorted(set(v1s))

    totals = _Totals([0] * (n + 1), [0] * (n + 1), {v: [0] * (n + 1) for v in v1s})
    weight = 1  # product over roots of 4 (odd unicyclic) or 1 + edges (tree)

    def find(x):
        p = 0
        while parent[x] != x:
            p ^= parity[x]
            x = parent[x]
        return x, p

    def factor(root):
        return 4 if cyclic[root] else 1 + ecount[root]

    def record(j):
        totals.weight[j] += weight
        totals.count[j] += 1
        for v in v1s:
            root, _ = find(v)
            if not cyclic[root]:
                totals.restricted[v][j] += weight // (1 + ecount[root])

    def visit(start, j):
        nonlocal weight
        record(j)
        for i in range(start, len(edges)):
            u, v = edges[i]
            ru, pu = find(u)
            rv, pv = find(v)
            saved = weight
            if ru != rv:
                if cyclic[ru] and cyclic[rv]:
                    continue
                if size[ru] < size[rv]:
                    ru, rv = rv, ru
                weight = weight // (factor(ru) * factor(rv))
                old = (ecount[ru], cyclic[ru])
                parent[rv] = ru
                parity[rv] = pu ^ pv ^ 1
                size[ru] += size[rv]
                ecount[ru] += ecount[rv] + 1
                cyclic[ru] = cyclic[ru] or cyclic[rv]
                weight *= factor(ru)
                visit(i + 1, j + 1)
                ecount[ru], cyclic[ru] = old
                size[ru] -= size[rv]
                parent[rv] = rv
                parity[rv] = 0
            else:
                # same component: the edge closes a cycle, odd iff endpoints share parity
                if not allow_odd_cycles or cyclic[ru] or pu != pv:
                    continue
                weight = weight // factor(ru)
                ecount[ru] += 1
                cyclic[ru] = True
                weight *= factor(ru)
                visit(i + 1, j + 1)
                ecount[ru] -= 1
                cyclic[ru] = False
            weight = saved

    visit(0, 0)
    return totals


def _signed(sums: list[int], upto: int) -> WeightedCount:
    return tuple((-1) ** j * sums[j] for j in range(1, upto + 1))


def laplacian_coeffs_bruteforce(g: Graph) -> WeightedCount:
    """(l_1, ..., l_{n-1}) from weighted sums over acyclic edge subsets."""
    totals = _enumerate(g, allow_odd_cycles=False)
    return _signed(totals.weight, g.order - 1)


def signless_coeffs_bruteforce(g: Graph) -> WeightedCount:
    """(p_1, ..., p_n) from weighted sums over TU-subgraphs."""
    totals = _enumerate(g, allow_odd_cycles=True)
    return _signed(totals.weight, g.order)


@dataclass(frozen=True)
class ReducedCoefficients:
    """Coefficient tables for L and Q with the row and column of ``v1`` removed."""

    v1: int
    laplacian: WeightedCount
    signless: WeightedCount


def reduced_coeffs_all(g: Graph, v1s: Iterable[int] | None = None) -> dict[int, ReducedCoefficients]:
    """Restricted-weight tables for several distinguished vertices in two passes."""
    v1s = list(range(g.order)) if v1s is None else sorted(set(v1s))
    forests = _enumerate(g, allow_odd_cycles=False, v1s=v1s)
    tu = _enumerate(g, allow_odd_cycles=True, v1s=v1s)
    upto = g.order - 1
    return {
        v: ReducedCoefficients(
            v,
            _signed(forests.restricted[v], upto),
            _signed(tu.restricted[v], upto),
        )
        for v in v1s
    }


def reduced_coeffs_bruteforce(g: Graph, v1: int = 0) -> ReducedCoefficients:
    return reduced_coeffs_all(g, [v1])[v1]


def spanning_tree_count_bruteforce(g: Graph) -> int:
    if g.order == 0:
        return 0
    totals = _enumerate(g, allow_odd_cycles=False)
    return totals.count[g.order - 1]


@dataclass(frozen=True)
class TreeCountFactored:
    """tau = 2**t * s with s odd."""

    tau: int
    t: int
    s: int


def factor_tree_count(tau: int) -> TreeCountFactored:
    if tau < 1:
        raise ZeroTrees(f"spanning tree count must be positive, got {tau}")
    t = (tau & -tau).bit_length() - 1
    return TreeCountFactored(tau, t, tau >> t)
