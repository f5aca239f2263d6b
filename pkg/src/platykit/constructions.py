"""Graph families, local transformations, and bundled fixture graphs.

Vertex numbering conventions (fixed so isomorphism tests have
deterministic targets):

* ``generalized_petersen(n, k)``: outer u_0..u_{n-1} are 0..n-1,
  inner v_i = n + i.
* ``petersen_prism(n, k)``: u_i = i, v_i = n + i, then the two spoke
  subdivision vertices w1_i = 2n + i and w2_i = 3n + i.
* ``dotted_prism(g)``: top copy keeps g's labels, bottom copy is
  n + i, the midpoint over vertex i is 2n + i.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Sequence, Tuple

from platykit.graph import Graph, GraphError, from_edge_list

FIXTURE_NAMES = (
    "petersen",
    "tietze",
    "fig7_left",
    "fig7_right",
    "fig8a_poly21",
    "fig8b_poly28",
    "fig9a_poly22",
    "fig9b_poly23",
)

# Guards against silent drift of the bundled edge lists.
_FIXTURES_SHA256 = "a4a118625928233c705fbfddf043201e6863cc0ce067930795dacfdadd9d5783"

_fixture_cache: Dict[str, Graph] = {}


@dataclass(frozen=True)
class Ear:
    """A k-ear: path whose interior has degree 2 and whose endpoints
    form a 2-cut of the host; maximal by construction."""

    vertices: Tuple[int, ...]

    @property
    def endpoints(self) -> Tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def interior(self) -> Tuple[int, ...]:
        return self.vertices[1:-1]

    @property
    def k(self) -> int:
        return len(self.vertices)


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer n-cycle, spokes, inner star polygon of step k."""
    if n < 5 or not 1 <= k < n / 2:
        raise ValueError(f"GP({n},{k}) needs n >= 5 and 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return from_edge_list(2 * n, edges)


def petersen_prism(n: int, k: int) -> Graph:
    """PP(n, k): GP(n, k) with two extra vertices on every spoke."""
    if n < 5 or not 1 <= k < n / 2:
        raise ValueError(f"PP({n},{k}) needs n >= 5 and 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, 2 * n + i))
        edges.append((2 * n + i, 3 * n + i))
        edges.append((3 * n + i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return from_edge_list(4 * n, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def dotted_prism(g: Graph) -> Graph:
    """Two copies of g joined vertexwise through fresh midpoints."""
    n = g.n
    edges: List[Tuple[int, int]] = []
    for u, v in g.edges():
        edges.append((u, v))
        edges.append((n + u, n + v))
    for i in range(n):
        edges.append((i, 2 * n + i))
        edges.append((2 * n + i, n + i))
    return from_edge_list(3 * n, edges)


def list_ears(g: Graph) -> List[Ear]:
    """All maximal ears, sorted lexicographically by vertex sequence.

    Interior vertices have degree 2; walking is greedy through
    degree-2 chains, so no ear is contained in a longer one.  Chains
    whose two anchors coincide are not ears and are skipped.
    """
    from platykit.kernels.props import is_two_connected

    if g.n > 64 or not is_two_connected(g.words1(), g.n):
        raise GraphError("ears are defined on 2-connected graphs (n <= 64)")
    deg = g.degrees()
    ears = []
    seen = set()
    for a in range(g.n):
        if deg[a] == 2:
            continue
        for b in g.neighbors(a):
            if deg[b] != 2 or (a, b) in seen:
                continue
            prev, cur = a, b
            path = [a, b]
            while deg[cur] == 2:
                nxt = next(x for x in g.neighbors(cur) if x != prev)
                prev, cur = cur, nxt
                path.append(cur)
            seen.add((cur, prev))
            if path[0] == path[-1]:
                continue  # both ends on the same anchor: not an ear
            if path[-1] < path[0]:
                path.reverse()
            ears.append(Ear(tuple(path)))
    ears.sort(key=lambda e: e.vertices)
    return ears


def replace_ear(g: Graph, ear: Ear, new_k: int) -> Graph:
    """Swap the interior of an ear for a fresh path of new_k - 2 vertices.

    Removed interior labels are compacted away (stable order); the new
    interior occupies the highest labels.
    """
    if new_k < 3:
        raise ValueError("an ear has at least 3 vertices")
    v, w = ear.endpoints
    if not all(0 <= x < g.n for x in ear.vertices):
        raise GraphError("ear does not fit the host graph")
    for a, b in zip(ear.vertices, ear.vertices[1:]):
        if not g.has_edge(a, b):
            raise GraphError("ear path is not present in the host graph")
    if any(g.degree(x) != 2 for x in ear.interior):
        raise GraphError("ear interior must have degree 2 in the host graph")
    old = set(ear.interior)
    keep = [x for x in range(g.n) if x not in old]
    relabel = {x: i for i, x in enumerate(keep)}
    edges = [
        (relabel[a], relabel[b])
        for a, b in g.edges()
        if a not in old and b not in old
    ]
    n_new = len(keep) + (new_k - 2)
    chain = [relabel[v]] + list(range(len(keep), n_new)) + [relabel[w]]
    edges.extend(zip(chain, chain[1:]))
    return from_edge_list(n_new, edges)


def d_operation(g: Graph) -> Graph:
    """Replace every 3-ear with a 4-ear."""
    out = g
    while True:
        three = [e for e in list_ears(out) if e.k == 3]
        if not three:
            return out
        out = replace_ear(out, three[0], 4)


def apply_triangle_T(g: Graph, triangle: Sequence[int]) -> Graph:
    """Two-vertex triangle expansion.

    For a triangle v1 v2 v3 of cubic vertices: drop edges v1v3 and
    v2v3, add fresh vertices a (= n) and b (= n + 1), and wire
    v1-a, v2-b, a-b, a-v3, b-v3.  The output contains the triangle
    (v3, a, b), so the transformation can be iterated.
    """
    v1, v2, v3 = triangle
    for x, y in ((v1, v2), (v1, v3), (v2, v3)):
        if not g.has_edge(x, y):
            raise GraphError(f"vertices {triangle} do not induce a triangle")
    for x in (v1, v2, v3):
        if g.degree(x) != 3:
            raise GraphError(f"triangle vertex {x} is not cubic")
    a, b = g.n, g.n + 1
    edges = [e for e in g.edges() if set(e) not in ({v1, v3}, {v2, v3})]
    edges += [(v1, a), (v2, b), (a, b), (a, v3), (b, v3)]
    return from_edge_list(g.n + 2, edges)


def find_cubic_triangle(g: Graph) -> Tuple[int, int, int]:
    """Smallest (lexicographic) triangle whose vertices are all cubic."""
    for v1 in range(g.n):
        if g.degree(v1) != 3:
            continue
        for v2 in g.neighbors(v1):
            if v2 <= v1 or g.degree(v2) != 3:
                continue
            common = g.rows[v1] & g.rows[v2]
            while common:
                low = common & -common
                v3 = low.bit_length() - 1
                common ^= low
                if v3 > v2 and g.degree(v3) == 3:
                    return (v1, v2, v3)
    raise GraphError("no triangle with three cubic vertices")


def expand_vertex_to_triangle(g: Graph, v: int) -> Graph:
    """Replace a cubic vertex by a triangle, one former edge per corner.

    The three new vertices take over v's edges in ascending neighbour
    order and receive the labels n-1, n, n+1 of the compacted graph.
    """
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    if g.degree(v) != 3:
        raise GraphError(f"vertex {v} has degree {g.degree(v)}, expected 3")
    nbrs = sorted(g.neighbors(v))
    relabel = {x: (x if x < v else x - 1) for x in range(g.n) if x != v}
    edges = [
        (relabel[a], relabel[b]) for a, b in g.edges() if v not in (a, b)
    ]
    base = g.n - 1
    t = [base, base + 1, base + 2]
    edges += [(relabel[x], t[i]) for i, x in enumerate(nbrs)]
    edges += [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
    return from_edge_list(g.n + 2, edges)


def _load_fixtures() -> Dict[str, Graph]:
    data = resources.files("platykit.data").joinpath("fixtures.txt").read_bytes()
    digest = hashlib.sha256(data).hexdigest()
    if digest != _FIXTURES_SHA256:
        raise RuntimeError(
            f"fixture data file checksum mismatch: {digest} (transcription drift?)"
        )
    graphs: Dict[str, Graph] = {}
    lines = [
        ln for ln in data.decode().splitlines() if ln and not ln.startswith("#")
    ]
    i = 0
    while i < len(lines):
        name, n, m = lines[i].split()
        n, m = int(n), int(m)
        edges = [tuple(map(int, lines[i + 1 + j].split())) for j in range(m)]
        graphs[name] = from_edge_list(n, edges)
        i += 1 + m
    if set(graphs) != set(FIXTURE_NAMES):
        raise RuntimeError("fixture data file does not match the expected names")
    return graphs


def fixture(name: str) -> Graph:
    """A bundled named graph; see FIXTURE_NAMES."""
    if not _fixture_cache:
        _fixture_cache.update(_load_fixtures())
    try:
        return _fixture_cache[name]
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
