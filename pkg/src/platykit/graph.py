"""Immutable simple-graph value type plus vertex/edge surgery.

A :class:`Graph` stores one neighbour bitset per vertex.  Rows are plain
Python integers (arbitrary width), so the same API covers the common
word-sized case (n <= 64) and the wide case needed by the larger
Petersen prisms (n up to 256).  Kernels receive the rows packed into
uint64 word arrays via :meth:`Graph.words`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple

import numpy as np

MAX_VERTICES = 256


class GraphError(ValueError):
    """Raised when an operation's preconditions on a graph are violated."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitset rows."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(rows) != n:
            raise GraphError("row count does not match vertex count")
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {i} has bits >= n set")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
        for i, row in enumerate(rows):
            for j in _bits(row):
                if not rows[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "_hash", hash((n, self.rows)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges()})"

    # -- accessors ----------------------------------------------------

    def degree(self, v: int) -> int:
        return bin(self.rows[v]).count("1")

    def degrees(self) -> Tuple[int, ...]:
        return tuple(self.degree(v) for v in range(self.n))

    def max_degree(self) -> int:
        return max(self.degrees())

    def min_degree(self) -> int:
        return min(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(_bits(self.rows[v]))

    def edges(self) -> Iterator[Tuple[int, int]]:
        for v in range(self.n):
            for u in _bits(self.rows[v] & ((1 << v) - 1)):
                yield (u, v)

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def is_cubic(self) -> bool:
        return all(d == 3 for d in self.degrees())

    def words(self, pad: int = 0) -> np.ndarray:
        """Adjacency rows packed as an (n, w) uint64 array.

        ``pad`` adds extra all-zero columns, used by kernels that append
        a virtual vertex for path queries.
        """
        w = max(1, (self.n + pad + 63) >> 6)
        out = np.zeros((self.n, w), dtype=np.uint64)
        for i, row in enumerate(self.rows):
            for k in range(w):
                out[i, k] = (row >> (64 * k)) & 0xFFFFFFFFFFFFFFFF
        return out

    def words1(self) -> np.ndarray:
        """Single-word rows for the n <= 64 kernels."""
        if self.n > 64:
            raise GraphError("graph too large for single-word kernels")
        return np.array(self.rows, dtype=np.uint64)

    # -- functional edits ---------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        _check_pair(self.n, u, v)
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"edge {{{u},{v}}} not present")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under vertex -> perm[vertex]."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation")
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n, rows)


@dataclass(frozen=True)
class EdgeMultiset:
    """Loop- and parallel-edge-capable edge collection.

    Produced by :func:`suppress_degree_two`; endpoints refer to the
    relabelled anchor vertices 0..n-1.
    """

    n: int
    edges: Tuple[Tuple[int, int], ...]  # sorted pairs (u, v) with u <= v

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u <= v < self.n):
                raise GraphError(f"edge ({u},{v}) endpoint outside 0..{self.n - 1}")

    def degree(self, v: int) -> int:
        d = 0
        for u, w in self.edges:
            if u == v:
                d += 1
            if w == v:
                d += 1  # loops count twice
        return d

    def num_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class HamWitness:
    """A hamiltonian cycle or path given as an explicit vertex sequence."""

    kind: str  # "cycle" or "path"
    vertices: Tuple[int, ...]

    def is_valid_for(self, g: Graph) -> bool:
        seq = self.vertices
        if len(seq) != g.n or len(set(seq)) != g.n:
            return False
        for a, b in zip(seq, seq[1:]):
            if not g.has_edge(a, b):
                return False
        if self.kind == "cycle":
            return g.n >= 3 and g.has_edge(seq[-1], seq[0])
        return self.kind == "path"


def _check_pair(n: int, u: int, v: int) -> None:
    if u == v:
        raise GraphError(f"loop pair ({u},{v}) not allowed in a simple graph")
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge endpoint outside 0..{n - 1}: ({u},{v})")


def from_edge_list(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Build a Graph from unordered vertex pairs; rejects loops and duplicates."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        if rows[u] >> v & 1:
            raise GraphError(f"duplicate edge {{{u},{v}}}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Induced subgraph on V minus {v}, relabelled by stable compaction."""
    if g.n < 2:
        raise GraphError("cannot delete the only vertex")
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    low = (1 << v) - 1
    rows = []
    for i, row in enumerate(g.rows):
        if i == v:
            continue
        rows.append((row & low) | ((row >> (v + 1)) << v))
    return Graph(g.n - 1, rows)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~row & ~(1 << i) for i, row in enumerate(g.rows)])


def suppress_degree_two(g: Graph) -> EdgeMultiset:
    """Collapse every maximal chain of degree-2 vertices to a single edge.

    Anchors are the vertices of degree != 2; each chain between anchors
    u, w becomes one edge uw (a loop when u = w).  Chains forming a
    cycle with no anchor at all are rejected.
    """
    deg = g.degrees()
    anchors = [v for v in range(g.n) if deg[v] != 2]
    if not anchors:
        raise GraphError("every vertex has degree 2: no anchor to suppress onto")
    new_id = {v: i for i, v in enumerate(anchors)}

    edges = []
    seen_inner = set()
    for a in anchors:
        for b in g.neighbors(a):
            if deg[b] != 2:
                if a < b:  # anchor-anchor edge kept as-is
                    edges.append((new_id[a], new_id[b]))
                continue
            # walk the degree-2 chain starting with edge (a, b)
            if (a, b) in seen_inner:
                continue
            prev, cur = a, b
            chain = [b]
            while deg[cur] == 2:
                nxt = next(x for x in g.neighbors(cur) if x != prev)
                prev, cur = cur, nxt
                if deg[cur] == 2:
                    chain.append(cur)
            seen_inner.add((cur, prev))  # suppress the reverse walk
            u, w = new_id[a], new_id[cur]
            edges.append((min(u, w), max(u, w)))
    # a component that is a bare cycle of degree-2 vertices has no anchor
    inner = set()
    for a in anchors:
        stack = [a]
        inner.add(a)
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in inner:
                    inner.add(y)
                    stack.append(y)
    if any(deg[v] == 2 and v not in inner for v in range(g.n)):
        raise GraphError("component consisting only of degree-2 vertices")
    return EdgeMultiset(len(anchors), tuple(sorted(edges)))
