"""Single-word predicate kernels: connectivity, girth, platypus checks.

All functions here take an (n,) uint64 adjacency array for graphs on at
most 64 vertices (path queries internally append a virtual vertex, so
callers route n = 64 free-endpoint queries to the wide kernels).
Hamiltonian path queries reduce to cycle queries on an augmented graph:
a virtual vertex adjacent to everything (free endpoints) or to exactly
the two pinned endpoints.
"""

import numpy as np

from platykit.accel import njit
from platykit.kernels.bitset import BIT, LOWMASK, U0, U1, ctz, popcount
from platykit.kernels.ham import BUDGET_EXCEEDED, FOUND, ham_cycle, ham_cycle_w

INF_GIRTH = 1 << 30


@njit
def reach_mask(adj, inside, start):
    """Vertices reachable from ``start`` walking only inside ``inside``."""
    reach = BIT[start]
    frontier = reach
    while frontier != U0:
        nxt = U0
        x = frontier
        while x != U0:
            v = ctz(x)
            x &= x - U1
            nxt |= adj[v]
        frontier = nxt & inside & ~reach
        reach |= frontier
    return reach


@njit
def is_connected(adj, n):
    full = LOWMASK[n]
    return reach_mask(adj, full, 0) == full


@njit
def is_two_connected(adj, n):
    if n < 3:
        return False
    full = LOWMASK[n]
    if reach_mask(adj, full, 0) != full:
        return False
    for v in range(n):
        inside = full & ~BIT[v]
        start = ctz(inside)
        if reach_mask(adj, inside, start) != inside:
            return False
    return True


@njit
def bfs_dist(adj, s, t, cap):
    """Distance from s to t, or INF_GIRTH if it exceeds ``cap``."""
    if s == t:
        return 0
    seen = BIT[s]
    frontier = seen
    d = 0
    while frontier != U0 and d < cap:
        d += 1
        nxt = U0
        x = frontier
        while x != U0:
            v = ctz(x)
            x &= x - U1
            nxt |= adj[v]
        frontier = nxt & ~seen
        if (frontier >> np.uint64(t)) & U1 != U0:
            return d
        seen |= frontier
    return INF_GIRTH


@njit
def girth(adj, n):
    """Exact girth; INF_GIRTH for forests.  BFS from every vertex."""
    best = INF_GIRTH
    dist = np.empty(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for root in range(n):
        for i in range(n):
            dist[i] = -1
        dist[root] = 0
        parent[root] = -1
        queue[0] = root
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            if 2 * dist[u] >= best - 1:
                break
            x = adj[u]
            while x != U0:
                v = ctz(x)
                x &= x - U1
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue[tail] = v
                    tail += 1
                elif v != parent[u]:
                    c = dist[u] + dist[v] + 1
                    if c < best:
                        best = c
    return best


@njit
def max_deg2_neighbours(adj, n):
    """Largest number of degree-2 neighbours over all vertices."""
    deg2 = U0
    for v in range(n):
        if popcount(adj[v]) == 2:
            deg2 |= BIT[v]
    worst = 0
    for v in range(n):
        c = popcount(adj[v] & deg2)
        if c > worst:
            worst = c
    return worst


@njit
def delete_compact(adj, n, v, out):
    """Adjacency of the vertex-deleted subgraph, stable relabelling."""
    k = 0
    low = LOWMASK[v]
    for u in range(n):
        if u == v:
            continue
        row = adj[u]
        out[k] = (row & low) | ((row >> np.uint64(v + 1)) << np.uint64(v))
        k += 1
    return k


@njit
def path_free(adj, n, budget):
    """Hamiltonian path with free endpoints; n + 1 <= 64.

    Returns (status, path, nodes) where path is the augmented cycle
    (contains the virtual vertex n); callers strip it.
    """
    aug = np.empty(n + 1, dtype=np.uint64)
    for v in range(n):
        aug[v] = adj[v] | BIT[n]
    aug[n] = LOWMASK[n]
    return ham_cycle(aug, n + 1, -1, -1, budget)


@njit
def traceable_free(adj, n, budget):
    """Does a hamiltonian path (free endpoints) exist?  n + 1 <= 64."""
    if n == 1:
        return FOUND, 0
    status, _, nodes = path_free(adj, n, budget)
    return status, nodes


@njit
def path_between(adj, n, s, t, budget):
    """Hamiltonian path with pinned endpoints s and t; n + 1 <= 64."""
    aug = np.empty(n + 1, dtype=np.uint64)
    for v in range(n):
        aug[v] = adj[v]
    aug[n] = BIT[s] | BIT[t]
    aug[s] |= BIT[n]
    aug[t] |= BIT[n]
    status, path, nodes = ham_cycle(aug, n + 1, n, -1, budget)
    return status, path, nodes


@njit
def path_from(adj, n, s, budget):
    """Hamiltonian path starting at s, other endpoint free; n + 1 <= 64."""
    aug = np.empty(n + 1, dtype=np.uint64)
    for v in range(n):
        aug[v] = adj[v] | BIT[n]
    aug[n] = LOWMASK[n]
    status, path, nodes = ham_cycle(aug, n + 1, n, s, budget)
    return status, path, nodes


@njit
def platypus_check(adj, n, check_ham, budget):
    """Platypus verdict.

    Returns (verdict, detail, nodes): verdict 1 yes / 0 no /
    BUDGET_EXCEEDED; detail is -2 when a hamiltonian cycle exists,
    otherwise the vertex whose deletion is non-traceable (-1 if none).
    """
    nodes = 0
    if n < 3:
        return 0, -1, 0
    if check_ham:
        status, _, nd = ham_cycle(adj, n, -1, -1, budget)
        nodes += nd
        if status == FOUND:
            return 0, -2, nodes
        if status == BUDGET_EXCEEDED:
            return BUDGET_EXCEEDED, -1, nodes
    sub = np.empty(n - 1, dtype=np.uint64)
    for v in range(n):
        delete_compact(adj, n, v, sub)
        status, nd = traceable_free(sub, n - 1, budget)
        nodes += nd
        if status == BUDGET_EXCEEDED:
            return BUDGET_EXCEEDED, v, nodes
        if status != FOUND:
            return 0, v, nodes
    return 1, -1, nodes


# ---------------------------------------------------------------------------
# Wide (multi-word) variants for n > 64.

@njit
def girth_w(adj, n):
    best = INF_GIRTH
    dist = np.empty(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    w = adj.shape[1]
    for root in range(n):
        for i in range(n):
            dist[i] = -1
        dist[root] = 0
        parent[root] = -1
        queue[0] = root
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            if 2 * dist[u] >= best - 1:
                break
            for k in range(w):
                x = adj[u, k]
                while x != U0:
                    v = (k << 6) + ctz(x)
                    x &= x - U1
                    if dist[v] < 0:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        queue[tail] = v
                        tail += 1
                    elif v != parent[u]:
                        c = dist[u] + dist[v] + 1
                        if c < best:
                            best = c
    return best


@njit
def delete_compact_w(adj, n, v, out):
    """Wide vertex deletion with stable relabelling; ``out`` is zeroed."""
    w = out.shape[1]
    for i in range(n - 1):
        for k in range(w):
            out[i, k] = U0
    k = 0
    for u in range(n):
        if u == v:
            continue
        t = 0
        for x in range(n):
            if x == v:
                continue
            if (adj[u, x >> 6] >> np.uint64(x & 63)) & U1 != U0:
                out[k, t >> 6] |= BIT[t & 63]
            t += 1
        k += 1
    return k


@njit
def path_free_w(adj, n, budget):
    w = (n + 64) >> 6
    aug = np.zeros((n + 1, w), dtype=np.uint64)
    for v in range(n):
        for k in range(min(w, adj.shape[1])):
            aug[v, k] = adj[v, k]
        aug[v, n >> 6] |= BIT[n & 63]
        aug[n, v >> 6] |= BIT[v & 63]
    return ham_cycle_w(aug, n + 1, -1, -1, budget)


@njit
def traceable_free_w(adj, n, budget):
    if n == 1:
        return FOUND, 0
    status, _, nodes = path_free_w(adj, n, budget)
    return status, nodes


@njit
def path_between_w(adj, n, s, t, budget):
    w = (n + 64) >> 6
    aug = np.zeros((n + 1, w), dtype=np.uint64)
    for v in range(n):
        for k in range(min(w, adj.shape[1])):
            aug[v, k] = adj[v, k]
    aug[n, s >> 6] |= BIT[s & 63]
    aug[n, t >> 6] |= BIT[t & 63]
    aug[s, n >> 6] |= BIT[n & 63]
    aug[t, n >> 6] |= BIT[n & 63]
    status, path, nodes = ham_cycle_w(aug, n + 1, n, -1, budget)
    return status, path, nodes


@njit
def path_from_w(adj, n, s, budget):
    w = (n + 64) >> 6
    aug = np.zeros((n + 1, w), dtype=np.uint64)
    for v in range(n):
        for k in range(min(w, adj.shape[1])):
            aug[v, k] = adj[v, k]
        aug[v, n >> 6] |= BIT[n & 63]
        aug[n, v >> 6] |= BIT[v & 63]
    status, path, nodes = ham_cycle_w(aug, n + 1, n, s, budget)
    return status, path, nodes


@njit
def platypus_check_w(adj, n, check_ham, budget):
    nodes = 0
    if n < 3:
        return 0, -1, 0
    if check_ham:
        status, _, nd = ham_cycle_w(adj, n, -1, -1, budget)
        nodes += nd
        if status == FOUND:
            return 0, -2, nodes
        if status == BUDGET_EXCEEDED:
            return BUDGET_EXCEEDED, -1, nodes
    w = adj.shape[1]
    sub = np.zeros((n - 1, w), dtype=np.uint64)
    for v in range(n):
        delete_compact_w(adj, n, v, sub)
        status, nd = traceable_free_w(sub, n - 1, budget)
        nodes += nd
        if status == BUDGET_EXCEEDED:
            return BUDGET_EXCEEDED, v, nodes
        if status != FOUND:
            return 0, v, nodes
    return 1, -1, nodes


PRED_HAMILTONIAN = 1
PRED_TRACEABLE = 2
PRED_PLATYPUS = 4
PRED_HYPOHAMILTONIAN = 8
PRED_HYPOTRACEABLE = 16
PRED_HOMOG_TRACEABLE = 32
PRED_MAX_NONHAM = 64


@njit
def predicate_bits(adj, n, budget):
    """Bitfield of hamiltonicity-derived class predicates (audit helper)."""
    bits = 0
    st, _, _ = ham_cycle(adj, n, -1, -1, budget)
    hamiltonian = st == FOUND
    if hamiltonian:
        bits |= PRED_HAMILTONIAN
    st, _ = traceable_free(adj, n, budget)
    traceable = st == FOUND
    if traceable:
        bits |= PRED_TRACEABLE

    sub = np.empty(max(n - 1, 1), dtype=np.uint64)
    all_del_trace = True
    all_del_ham = True
    if n >= 2:
        for v in range(n):
            delete_compact(adj, n, v, sub)
            if all_del_trace:
                st, _ = traceable_free(sub, n - 1, budget)
                if st != FOUND:
                    all_del_trace = False
            if all_del_ham:
                st, _, _ = ham_cycle(sub, n - 1, -1, -1, budget)
                if st != FOUND:
                    all_del_ham = False
            if not (all_del_trace or all_del_ham):
                break
    if n >= 3 and not hamiltonian and all_del_trace:
        bits |= PRED_PLATYPUS
    if n >= 3 and not hamiltonian and all_del_ham:
        bits |= PRED_HYPOHAMILTONIAN
    if n >= 3 and not traceable and all_del_trace:
        bits |= PRED_HYPOTRACEABLE

    homog = True
    for v in range(n):
        if n == 1:
            break
        st, _, _ = path_from(adj, n, v, budget)
        if st != FOUND:
            homog = False
            break
    if homog and n >= 2:
        bits |= PRED_HOMOG_TRACEABLE

    if n >= 3 and not hamiltonian:
        mnh = True
        for s in range(n):
            for t in range(s + 1, n):
                if (adj[s] >> np.uint64(t)) & U1 != U0:
                    continue
                st, _, _ = path_between(adj, n, s, t, budget)
                if st != FOUND:
                    mnh = False
                    break
            if not mnh:
                break
        if mnh:
            bits |= PRED_MAX_NONHAM
    return bits
