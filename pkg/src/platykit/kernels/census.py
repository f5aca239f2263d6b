"""Orderly-generation census walk.

Fixed vertex count n; edges are added in strictly increasing colex
order, each candidate passing (in this order) the degree prune, the
girth prune, the canonicity acceptance test, and (platypus mode) the
hamiltonicity prune.  Every accepted node is one isomorphism class.
The three prunes are monotone under edge addition at fixed n, so no
graph whose final form satisfies the target constraints is lost:

* supergraphs of hamiltonian graphs are hamiltonian (platypuses are not);
* girth never increases when edges are added;
* degrees never decrease (platypuses have max degree <= n - 4).

A subtree walk can stop at ``emit_depth`` and hand the frontier states
to workers, which makes parallel sharding trivial; output lists get
sorted downstream, so worker scheduling cannot affect results.
"""

import numpy as np

from platykit.accel import njit
from platykit.kernels.bitset import BIT, U0, popcount
from platykit.kernels.ham import FOUND, ham_cycle
from platykit.kernels.props import (
    INF_GIRTH,
    bfs_dist,
    girth,
    is_two_connected,
    max_deg2_neighbours,
    platypus_check,
)
from platykit.kernels.rfcanon import MAX_GENS, rf_is_canonical

# stats slots
S_NODES = 0
S_CANDS = 1
S_CANON_REJECT = 2
S_DEG_PRUNE = 3
S_GIRTH_PRUNE = 4
S_HAM_PRUNE = 5
S_LEAF_CHECKS = 6
S_FOUND = 7

OK = 0
OUT_OVERFLOW = 1
ROOTS_OVERFLOW = 2


@njit
def _maxused(adj, n):
    for v in range(n - 1, -1, -1):
        if adj[v] != U0:
            return v
    return 0


@njit
def _process_node(
    adj, n, m, maxused, target_platypus, min_girth, prune_ham, prune_girth,
    use_filters, collect, out_buf, out_count, stats,
):
    """Count/collect one accepted class.  Returns (classes, out_count, status)."""
    stats[S_NODES] += 1
    if not target_platypus:
        if collect:
            if out_count >= out_buf.shape[0]:
                return 1, out_count, OUT_OVERFLOW
            for v in range(n):
                out_buf[out_count, v] = adj[v]
            out_count += 1
        return 1, out_count, OK
    # platypus evaluation
    if maxused != n - 1 or m < n:
        return 1, out_count, OK
    if use_filters:
        if not is_two_connected(adj, n):
            return 1, out_count, OK
        if max_deg2_neighbours(adj, n) > 1:
            return 1, out_count, OK
    if min_girth > 3 and not prune_girth:
        if girth(adj, n) < min_girth:
            return 1, out_count, OK
    stats[S_LEAF_CHECKS] += 1
    check_ham = not prune_ham
    verdict, _, _ = platypus_check(adj, n, check_ham, -1)
    if verdict == 1:
        stats[S_FOUND] += 1
        if out_count >= out_buf.shape[0]:
            return 1, out_count, OUT_OVERFLOW
        for v in range(n):
            out_buf[out_count, v] = adj[v]
        out_count += 1
    return 1, out_count, OK


@njit
def census_walk(
    n,
    min_girth,
    target_platypus,
    prune_ham,
    prune_girth,
    prune_deg,
    use_filters,
    collect,
    adj0,
    m0,
    last0,
    emit_depth,
    process_root,
    ei,
    ej,
    off,
    out_buf,
    roots_buf,
    stats,
):
    """Walk the subtree rooted at (adj0, m0, last0).

    Returns (classes, out_count, roots_count, status).  Children at
    relative depth == emit_depth are appended to roots_buf (with their
    m/last/maxused in the three trailing columns) instead of being
    processed; emit_depth < 0 walks the whole subtree.
    """
    M = n * (n - 1) // 2
    adj = np.empty(n, dtype=np.uint64)
    deg = np.empty(n, dtype=np.int64)
    for v in range(n):
        adj[v] = adj0[v]
        deg[v] = popcount(adj0[v])
    m = m0
    maxused = _maxused(adj, n)
    deg_cap = n - 4 if (target_platypus and prune_deg) else n - 1

    # scratch for the canonicity test
    placed = np.empty(n, dtype=np.int64)
    backmask = np.empty(n, dtype=np.uint64)
    cand_stack = np.empty(n + 1, dtype=np.uint64)
    tried_stack = np.empty(n + 1, dtype=np.uint64)
    parent = np.empty(n, dtype=np.int64)
    gens = np.empty((MAX_GENS, n), dtype=np.int64)

    classes = 0
    out_count = 0
    roots_count = 0

    if process_root:
        c, out_count, status = _process_node(
            adj, n, m, maxused, target_platypus, min_girth, prune_ham,
            prune_girth, use_filters, collect, out_buf, out_count, stats,
        )
        classes += c
        if status != OK:
            return classes, out_count, roots_count, status

    depth_cap = M - m0 + 2
    next_idx = np.empty(depth_cap, dtype=np.int64)
    edge_at = np.empty(depth_cap, dtype=np.int64)
    maxused_at = np.empty(depth_cap, dtype=np.int64)

    depth = 0
    next_idx[0] = last0 + 1
    maxused_at[0] = maxused

    while depth >= 0:
        # Candidates keep the support 0..maxused contiguous: either the new
        # edge's top endpoint is at most maxused+1, or it is the fresh pair
        # (maxused+1, maxused+2) -- the only way a canonical graph grows by
        # two vertices at once (e.g. adding a new matching edge).
        idx = next_idx[depth]
        mu = maxused_at[depth]
        lim_j = mu + 2
        if lim_j > n:
            lim_j = n
        lim = off[lim_j]
        extra = off[mu + 2] + mu + 1 if mu + 2 <= n - 1 else -1
        if idx >= lim:
            if extra >= 0 and idx <= extra:
                idx = extra
            else:
                # subtree of this node exhausted: undo its edge and pop
                depth -= 1
                if depth >= 0:
                    e = edge_at[depth]
                    i = ei[e]
                    j = ej[e]
                    adj[i] &= ~BIT[j]
                    adj[j] &= ~BIT[i]
                    deg[i] -= 1
                    deg[j] -= 1
                    m -= 1
                continue
        next_idx[depth] = idx + 1
        i = ei[idx]
        j = ej[idx]
        stats[S_CANDS] += 1
        if deg[i] + 1 > deg_cap or deg[j] + 1 > deg_cap:
            stats[S_DEG_PRUNE] += 1
            continue
        if prune_girth and min_girth > 3:
            if bfs_dist(adj, i, j, min_girth - 2) != INF_GIRTH:
                stats[S_GIRTH_PRUNE] += 1
                continue
        # tentatively add the edge
        adj[i] |= BIT[j]
        adj[j] |= BIT[i]
        deg[i] += 1
        deg[j] += 1
        m += 1
        new_maxused = maxused_at[depth]
        if j > new_maxused:
            new_maxused = j
        if rf_is_canonical(adj, new_maxused + 1, placed, backmask, cand_stack, tried_stack, gens, parent) == 0:
            stats[S_CANON_REJECT] += 1
            adj[i] &= ~BIT[j]
            adj[j] &= ~BIT[i]
            deg[i] -= 1
            deg[j] -= 1
            m -= 1
            continue
        if target_platypus and prune_ham and new_maxused == n - 1 and m >= n:
            status, _, _ = ham_cycle(adj, n, -1, -1, -1)
            if status == FOUND:
                stats[S_HAM_PRUNE] += 1
                adj[i] &= ~BIT[j]
                adj[j] &= ~BIT[i]
                deg[i] -= 1
                deg[j] -= 1
                m -= 1
                continue
        if emit_depth >= 0 and depth + 1 >= emit_depth:
            if roots_count >= roots_buf.shape[0]:
                return classes, out_count, roots_count, ROOTS_OVERFLOW
            for v in range(n):
                roots_buf[roots_count, v] = adj[v]
            roots_buf[roots_count, n] = np.uint64(m)
            roots_buf[roots_count, n + 1] = np.uint64(idx)
            roots_buf[roots_count, n + 2] = np.uint64(new_maxused)
            roots_count += 1
            adj[i] &= ~BIT[j]
            adj[j] &= ~BIT[i]
            deg[i] -= 1
            deg[j] -= 1
            m -= 1
            continue
        c, out_count, status = _process_node(
            adj, n, m, new_maxused, target_platypus, min_girth, prune_ham,
            prune_girth, use_filters, collect, out_buf, out_count, stats,
        )
        classes += c
        if status != OK:
            return classes, out_count, roots_count, status
        # descend
        edge_at[depth] = idx
        depth += 1
        next_idx[depth] = idx + 1
        maxused_at[depth] = new_maxused

    return classes, out_count, roots_count, OK
