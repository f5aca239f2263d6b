"""Hamiltonian cycle search kernels.

Depth-first extension of a path with two growing arms anchored at a
root vertex.  At each node the endpoint with the fewest usable
continuations is extended (ties to the smaller vertex id), candidates
in ascending vertex order, so results are deterministic.  Pruning:

* every unvisited vertex needs at least 2 usable connections
  (unvisited neighbours plus adjacency to the two endpoints);
* at most one unvisited vertex may rely on both endpoints, and only
  as the final vertex;
* the unvisited region plus both endpoints must stay connected.

Path queries are reduced to cycle queries by the callers via a virtual
vertex (see :mod:`platykit.hamiltonicity`).  The ``*_w`` variants are
the wide (multi-word) versions for graphs on more than 64 vertices.
"""

import numpy as np

from platykit.accel import njit
from platykit.kernels.bitset import BIT, LOWMASK, U0, U1, ctz, popcount

FOUND = 1
NOT_FOUND = 0
BUDGET_EXCEEDED = -1


@njit
def pick_root(adj, n):
    """Smallest vertex id of minimum degree."""
    best = 0
    bestdeg = popcount(adj[0])
    for v in range(1, n):
        d = popcount(adj[v])
        if d < bestdeg:
            best = v
            bestdeg = d
    return best


@njit
def _corridor_connected(adj, corridor, start):
    reach = BIT[start]
    frontier = reach
    while frontier != U0:
        nxt = U0
        x = frontier
        while x != U0:
            v = ctz(x)
            x &= x - U1
            nxt |= adj[v]
        frontier = nxt & corridor & ~reach
        reach |= frontier
    return reach == corridor


@njit
def ham_cycle(adj, n, root, forced_first, budget):
    """Search for a hamiltonian cycle.

    Returns (status, path, nodes).  ``path`` is the cycle as a vertex
    sequence of length n when status == FOUND (arbitrary content
    otherwise).  ``root`` < 0 picks the min-degree rule; when
    ``forced_first`` >= 0 the first extension from the root is pinned
    to that neighbour.  ``budget`` < 0 means unlimited.
    """
    out = np.empty(n, dtype=np.int64)
    if n < 3:
        return NOT_FOUND, out, 0
    full = LOWMASK[n]
    for v in range(n):
        if popcount(adj[v] & full) < 2:
            return NOT_FOUND, out, 0
    if root < 0:
        root = pick_root(adj, n)

    arm_a = np.empty(n, dtype=np.int64)
    arm_b = np.empty(n, dtype=np.int64)
    cand_stack = np.empty(n + 1, dtype=np.uint64)
    side_stack = np.empty(n + 1, dtype=np.int64)
    la = 0
    lb = 0
    depth = 0
    visited = BIT[root]
    nodes = 0
    entering = True

    while True:
        if entering:
            nodes += 1
            if budget >= 0 and nodes > budget:
                return BUDGET_EXCEEDED, out, nodes
            a = arm_a[la - 1] if la > 0 else root
            b = arm_b[lb - 1] if lb > 0 else root
            if visited == full:
                if a != b and (adj[a] >> np.uint64(b)) & U1 != U0:
                    k = 0
                    out[k] = root
                    k += 1
                    for i in range(la):
                        out[k] = arm_a[i]
                        k += 1
                    for i in range(lb - 1, -1, -1):
                        out[k] = arm_b[i]
                        k += 1
                    return FOUND, out, nodes
                ok = False
            else:
                ok = True
                unvis = full & ~visited
                mustpass = 0
                x = unvis
                while x != U0:
                    v = ctz(x)
                    x &= x - U1
                    row = adj[v]
                    c = popcount(row & unvis)
                    tot = c
                    if (row >> np.uint64(a)) & U1 != U0:
                        tot += 1
                    if a != b and (row >> np.uint64(b)) & U1 != U0:
                        tot += 1
                    if tot < 2:
                        ok = False
                        break
                    if a != b and c == 0 and tot == 2:
                        mustpass += 1
                if ok and mustpass >= 1 and popcount(unvis) > 1:
                    ok = False
                if ok:
                    corridor = unvis | BIT[a] | BIT[b]
                    ok = _corridor_connected(adj, corridor, a)
            if ok:
                if depth == 0 and forced_first >= 0:
                    side = 0
                    cands = BIT[forced_first]
                else:
                    ca = adj[a] & ~visited
                    cb = adj[b] & ~visited
                    if a == b:
                        side = 0
                        cands = ca
                    elif popcount(ca) <= popcount(cb):
                        if popcount(ca) == popcount(cb) and b < a:
                            side = 1
                            cands = cb
                        else:
                            side = 0
                            cands = ca
                    else:
                        side = 1
                        cands = cb
                if cands == U0:
                    ok = False
                else:
                    side_stack[depth] = side
                    cand_stack[depth] = cands
            if not ok:
                if depth == 0:
                    return NOT_FOUND, out, nodes
                depth -= 1
                if side_stack[depth] == 0:
                    la -= 1
                    visited &= ~BIT[arm_a[la]]
                else:
                    lb -= 1
                    visited &= ~BIT[arm_b[lb]]
                entering = False
                continue
        cands = cand_stack[depth]
        if cands == U0:
            if depth == 0:
                return NOT_FOUND, out, nodes
            depth -= 1
            if side_stack[depth] == 0:
                la -= 1
                visited &= ~BIT[arm_a[la]]
            else:
                lb -= 1
                visited &= ~BIT[arm_b[lb]]
            entering = False
            continue
        v = ctz(cands)
        cand_stack[depth] = cands & (cands - U1)
        if side_stack[depth] == 0:
            arm_a[la] = v
            la += 1
        else:
            arm_b[lb] = v
            lb += 1
        visited |= BIT[v]
        depth += 1
        entering = True


# ---------------------------------------------------------------------------
# Wide (multi-word) variants for n > 64.

@njit
def _w_get(mask, v):
    return (mask[v >> 6] >> np.uint64(v & 63)) & U1


@njit
def _w_popcount(mask):
    c = 0
    for k in range(mask.shape[0]):
        c += popcount(mask[k])
    return c


@njit
def _w_iszero(mask):
    for k in range(mask.shape[0]):
        if mask[k] != U0:
            return False
    return True


@njit
def pick_root_w(adj, n):
    best = 0
    bestdeg = _w_popcount(adj[0])
    for v in range(1, n):
        d = _w_popcount(adj[v])
        if d < bestdeg:
            best = v
            bestdeg = d
    return best


@njit
def _corridor_connected_w(adj, corridor, start, reach, frontier, nxt):
    w = corridor.shape[0]
    for k in range(w):
        reach[k] = U0
        frontier[k] = U0
    reach[start >> 6] = BIT[start & 63]
    frontier[start >> 6] = BIT[start & 63]
    while not _w_iszero(frontier):
        for k in range(w):
            nxt[k] = U0
        for k in range(w):
            x = frontier[k]
            while x != U0:
                v = (k << 6) + ctz(x)
                x &= x - U1
                for kk in range(w):
                    nxt[kk] |= adj[v, kk]
        for k in range(w):
            frontier[k] = nxt[k] & corridor[k] & ~reach[k]
            reach[k] |= frontier[k]
    for k in range(w):
        if reach[k] != corridor[k]:
            return False
    return True


@njit
def ham_cycle_w(adj, n, root, forced_first, budget):
    """Wide version of :func:`ham_cycle`; adj is an (n, w) uint64 array."""
    w = adj.shape[1]
    out = np.empty(n, dtype=np.int64)
    if n < 3:
        return NOT_FOUND, out, 0
    for v in range(n):
        if _w_popcount(adj[v]) < 2:
            return NOT_FOUND, out, 0
    if root < 0:
        root = pick_root_w(adj, n)

    arm_a = np.empty(n, dtype=np.int64)
    arm_b = np.empty(n, dtype=np.int64)
    cand_stack = np.empty((n + 1, w), dtype=np.uint64)
    side_stack = np.empty(n + 1, dtype=np.int64)
    visited = np.zeros(w, dtype=np.uint64)
    unvis = np.empty(w, dtype=np.uint64)
    corridor = np.empty(w, dtype=np.uint64)
    scratch1 = np.empty(w, dtype=np.uint64)
    scratch2 = np.empty(w, dtype=np.uint64)
    scratch3 = np.empty(w, dtype=np.uint64)
    full = np.empty(w, dtype=np.uint64)
    for k in range(w):
        full[k] = U0
    for v in range(n):
        full[v >> 6] |= BIT[v & 63]

    la = 0
    lb = 0
    depth = 0
    visited[root >> 6] = BIT[root & 63]
    nodes = 0
    entering = True

    while True:
        if entering:
            nodes += 1
            if budget >= 0 and nodes > budget:
                return BUDGET_EXCEEDED, out, nodes
            a = arm_a[la - 1] if la > 0 else root
            b = arm_b[lb - 1] if lb > 0 else root
            done = True
            for k in range(w):
                if visited[k] != full[k]:
                    done = False
                    break
            if done:
                if a != b and _w_get(adj[a], b) != U0:
                    k = 0
                    out[k] = root
                    k += 1
                    for i in range(la):
                        out[k] = arm_a[i]
                        k += 1
                    for i in range(lb - 1, -1, -1):
                        out[k] = arm_b[i]
                        k += 1
                    return FOUND, out, nodes
                ok = False
            else:
                ok = True
                for k in range(w):
                    unvis[k] = full[k] & ~visited[k]
                mustpass = 0
                nunvis = 0
                for k in range(w):
                    x = unvis[k]
                    while x != U0:
                        v = (k << 6) + ctz(x)
                        x &= x - U1
                        nunvis += 1
                        c = 0
                        for kk in range(w):
                            c += popcount(adj[v, kk] & unvis[kk])
                        tot = c
                        if _w_get(adj[v], a) != U0:
                            tot += 1
                        if a != b and _w_get(adj[v], b) != U0:
                            tot += 1
                        if tot < 2:
                            ok = False
                            break
                        if a != b and c == 0 and tot == 2:
                            mustpass += 1
                    if not ok:
                        break
                if ok and mustpass >= 1 and nunvis > 1:
                    ok = False
                if ok:
                    for k in range(w):
                        corridor[k] = unvis[k]
                    corridor[a >> 6] |= BIT[a & 63]
                    corridor[b >> 6] |= BIT[b & 63]
                    ok = _corridor_connected_w(
                        adj, corridor, a, scratch1, scratch2, scratch3
                    )
            if ok:
                if depth == 0 and forced_first >= 0:
                    side = 0
                    for k in range(w):
                        cand_stack[depth, k] = U0
                    cand_stack[depth, forced_first >> 6] = BIT[forced_first & 63]
                else:
                    ca = 0
                    cb = 0
                    for k in range(w):
                        ca += popcount(adj[a, k] & ~visited[k] & full[k])
                        cb += popcount(adj[b, k] & ~visited[k] & full[k])
                    if a == b or ca < cb or (ca == cb and a < b):
                        side = 0
                        src = a
                    else:
                        side = 1
                        src = b
                    for k in range(w):
                        cand_stack[depth, k] = adj[src, k] & ~visited[k] & full[k]
                if _w_iszero(cand_stack[depth]):
                    ok = False
                else:
                    side_stack[depth] = side
            if not ok:
                if depth == 0:
                    return NOT_FOUND, out, nodes
                depth -= 1
                if side_stack[depth] == 0:
                    la -= 1
                    u = arm_a[la]
                else:
                    lb -= 1
                    u = arm_b[lb]
                visited[u >> 6] &= ~BIT[u & 63]
                entering = False
                continue
        v = -1
        for k in range(w):
            if cand_stack[depth, k] != U0:
                v = (k << 6) + ctz(cand_stack[depth, k])
                cand_stack[depth, k] &= cand_stack[depth, k] - U1
                break
        if v < 0:
            if depth == 0:
                return NOT_FOUND, out, nodes
            depth -= 1
            if side_stack[depth] == 0:
                la -= 1
                u = arm_a[la]
            else:
                lb -= 1
                u = arm_b[lb]
            visited[u >> 6] &= ~BIT[u & 63]
            entering = False
            continue
        if side_stack[depth] == 0:
            arm_a[la] = v
            la += 1
        else:
            arm_b[lb] = v
            lb += 1
        visited[v >> 6] |= BIT[v & 63]
        depth += 1
        entering = True
