"""Girth, degrees, connectivity, planarity, edge colouring, snarks.

Exactness over speed throughout: these run on desk-scale graphs (the
bundled fixtures, generated platypuses, ingested snark lists), so
brute-force enumeration is acceptable wherever it is simplest.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from platykit.graph import Graph
from platykit.hamiltonicity import PropertyReport
from platykit.kernels import props as _props

INFINITY = float("inf")


@dataclass(frozen=True)
class InvariantSummary:
    girth: float  # positive integer or INFINITY (acyclic)
    min_degree: int
    max_degree: int
    vertex_connectivity: int
    planar: bool
    cubic: bool


def girth(g: Graph) -> float:
    """Length of a shortest cycle; INFINITY for forests."""
    if g.n <= 64:
        got = _props.girth(g.words1(), g.n)
    else:
        got = _props.girth_w(g.words(), g.n)
    return INFINITY if got >= _props.INF_GIRTH else int(got)


def _max_flow_vertex(g: Graph, s: int, t: int, cap: Optional[int] = None) -> int:
    """Max number of internally vertex-disjoint s-t paths (s,t non-adjacent).

    Unit-capacity vertex-split network, BFS augmentation.  ``cap``
    short-circuits once that many paths are found.
    """
    n = g.n
    # node 2v = v_in, 2v+1 = v_out; arcs: v_in->v_out (cap 1, infinite at s,t),
    # u_out->v_in for each edge.
    limit = cap if cap is not None else n
    flow_used = [False] * n  # vertex capacity consumed (not for s,t)
    # residual bookkeeping via path augmentation on the fly: store matching
    # of interior vertices to predecessor paths is complex; simpler to run
    # BFS on an explicit residual adjacency.
    arcs: dict = {}

    def add(a: int, b: int, c: int) -> None:
        arcs.setdefault(a, {})[b] = arcs.get(a, {}).get(b, 0) + c
        arcs.setdefault(b, {}).setdefault(a, 0)

    big = n + 1
    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        add(2 * u + 1, 2 * v, big)
        add(2 * v + 1, 2 * u, big)
    source, sink = 2 * s + 1, 2 * t
    total = 0
    while total < limit:
        prev = {source: None}
        q = deque([source])
        while q and sink not in prev:
            x = q.popleft()
            for y, c in arcs.get(x, {}).items():
                if c > 0 and y not in prev:
                    prev[y] = x
                    q.append(y)
        if sink not in prev:
            break
        y = sink
        while prev[y] is not None:
            x = prev[y]
            arcs[x][y] -= 1
            arcs[y][x] += 1
            y = x
        total += 1
    return total


def vertex_connectivity(g: Graph, upper_bound: Optional[int] = None) -> int:
    """Exact kappa(g); kappa(K_n) = n - 1.

    Even-style reduction: with v0 of minimum degree, kappa is the
    minimum flow between v0 and its non-neighbours and between pairs of
    v0's neighbours, so only O(n + deg^2) flow runs are needed.
    """
    if g.n < 2:
        raise ValueError("connectivity needs at least 2 vertices")
    degs = g.degrees()
    if g.num_edges() == g.n * (g.n - 1) // 2:
        return g.n - 1
    v0 = min(range(g.n), key=lambda v: degs[v])
    best = degs[v0]
    if upper_bound is not None:
        best = min(best, upper_bound + 1)
    for t in range(g.n):
        if t != v0 and not g.has_edge(v0, t):
            best = min(best, _max_flow_vertex(g, v0, t, cap=best))
            if best == 0:
                return 0
    for a, b in combinations(g.neighbors(v0), 2):
        if not g.has_edge(a, b):
            best = min(best, _max_flow_vertex(g, a, b, cap=best))
            if best == 0:
                return 0
    return best


def is_planar(g: Graph) -> bool:
    """Planarity predicate (left-right criterion via networkx)."""
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    ok, _ = nx.check_planarity(G, counterexample=False)
    return bool(ok)


def is_three_edge_colorable(g: Graph) -> bool:
    """Proper 3-edge-colouring existence for cubic graphs.

    Backtracking over edges in BFS order; at a cubic vertex two
    coloured edges force the third, which the used-colour masks encode
    implicitly as branching factor one.
    """
    if not g.is_cubic():
        raise ValueError("3-edge-colorability check expects a cubic graph")
    # BFS edge order keeps the coloured region connected, maximizing forcing.
    order = []
    seen_e = set()
    seen_v = [False] * g.n
    for root in range(g.n):
        if seen_v[root]:
            continue
        q = deque([root])
        seen_v[root] = True
        while q:
            u = q.popleft()
            for v in g.neighbors(u):
                e = (min(u, v), max(u, v))
                if e not in seen_e:
                    seen_e.add(e)
                    order.append(e)
                if not seen_v[v]:
                    seen_v[v] = True
                    q.append(v)
    used = [0] * g.n  # bitmask of colours at each vertex
    m = len(order)

    def place(i: int) -> bool:
        if i == m:
            return True
        u, v = order[i]
        free = ~(used[u] | used[v]) & 0b111
        while free:
            low = free & -free
            free ^= low
            used[u] |= low
            used[v] |= low
            if place(i + 1):
                return True
            used[u] ^= low
            used[v] ^= low
        return False

    return place(0)


def cyclic_edge_connectivity_at_least(g: Graph, c: int) -> bool:
    """No edge cut of size < c leaves two parts that both contain a cycle.

    Exhaustive over edge subsets of size < c (c <= 4 keeps this tiny);
    a component contains a cycle iff it has at least as many edges as
    vertices.  Vacuously true when no cyclic cut exists at all.
    """
    if not g.is_cubic():
        raise ValueError("cyclic edge connectivity check expects a cubic graph")
    if c > 4:
        raise ValueError("only the snark threshold c <= 4 is supported")
    if g.n <= 64 and not _props.is_connected(g.words1(), g.n):
        raise ValueError("cyclic edge connectivity check expects a connected graph")
    edges = list(g.edges())
    for size in range(1, c):
        for cut in combinations(edges, size):
            remaining = [e for e in edges if e not in cut]
            comp = _components(g.n, remaining)
            if len(comp) < 2:
                continue
            cyclic = 0
            for verts in comp:
                vs = set(verts)
                ec = sum(1 for a, b in remaining if a in vs)
                if ec >= len(verts):
                    cyclic += 1
            if cyclic >= 2:
                return False
    return True


def _components(n: int, edges) -> list:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def is_snark(g: Graph) -> PropertyReport:
    """Cubic, girth >= 5, cyclically 4-edge-connected, chromatic index 4.

    The report names the first failing clause.
    """
    name = "snark"
    if not g.is_cubic():
        return PropertyReport(name, False, None, 0, "failing clause: cubic")
    if girth(g) < 5:
        return PropertyReport(name, False, None, 0, "failing clause: girth")
    if not cyclic_edge_connectivity_at_least(g, 4):
        return PropertyReport(
            name, False, None, 0, "failing clause: cyclic 4-edge-connectivity"
        )
    if is_three_edge_colorable(g):
        return PropertyReport(
            name, False, None, 0, "failing clause: chromatic index (3-edge-colorable)"
        )
    return PropertyReport(name, True)


def summary(g: Graph) -> InvariantSummary:
    degs = g.degrees()
    return InvariantSummary(
        girth=girth(g),
        min_degree=min(degs),
        max_degree=max(degs),
        vertex_connectivity=vertex_connectivity(g) if g.n >= 2 else 0,
        planar=is_planar(g),
        cubic=g.is_cubic(),
    )
