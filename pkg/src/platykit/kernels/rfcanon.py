"""Canonicity acceptance test for orderly (edge-augmentation) generation.

A labeled graph's code is its edge list sorted by colex index
(idx(i,j) = j(j-1)/2 + i), compared lexicographically.  The generator
accepts a graph iff no relabelling yields a smaller code; the accepted
representative minus its largest edge is then itself accepted (the
hereditary property that makes edge augmentation exhaustive), because
inserting the image of the removed edge into any smaller relabelled
prefix would contradict minimality of the parent.

The test walks permutation prefixes whose per-position "back-adjacency"
blocks stay equal to the identity labeling's blocks; a strictly smaller
block anywhere proves non-canonicity.  Complete equal labelings are
automorphisms; they prune sibling candidates orbit-wise, which keeps
highly symmetric graphs (matchings, unions of paths) polynomial.

Only the support 0..s-1 is permuted: every accepted graph keeps its
isolated vertices at the top labels, and moving an isolated vertex
below a non-isolated one can only increase the code.
"""

import numpy as np

from platykit.accel import njit
from platykit.kernels.bitset import BIT, LOWMASK, U0, U1, ctz

MAX_GENS = 128


@njit
def _orbit_skip(u, level, tried, placed, gens, gen_count, parent, s):
    """Is u in one discovered-automorphism orbit (fixing the placed
    prefix pointwise) with an already-tried candidate?"""
    for i in range(s):
        parent[i] = i
    any_gen = False
    for gi in range(gen_count):
        ok = True
        for i in range(level):
            if gens[gi, placed[i]] != placed[i]:
                ok = False
                break
        if not ok:
            continue
        any_gen = True
        for a in range(s):
            ra = a
            while parent[ra] != ra:
                parent[ra] = parent[parent[ra]]
                ra = parent[ra]
            rb = gens[gi, a]
            while parent[rb] != rb:
                parent[rb] = parent[parent[rb]]
                rb = parent[rb]
            if ra != rb:
                parent[ra] = rb
    if not any_gen:
        return False
    ru = u
    while parent[ru] != ru:
        ru = parent[ru]
    t = tried
    while t != U0:
        v = ctz(t)
        t &= t - U1
        rv = v
        while parent[rv] != rv:
            rv = parent[rv]
        if rv == ru:
            return True
    return False


@njit
def rf_is_canonical(adj, s, placed, backmask, cand_stack, tried_stack, gens, parent):
    """1 if the labeled graph on support 0..s-1 has the minimal edge-list
    code over all support relabellings, else 0.  Scratch arrays are
    caller-provided so the census loop allocates nothing per call."""
    if s <= 1:
        return 1
    gen_count = 0
    for v in range(s):
        backmask[v] = U0
    used = U0
    level = 0
    cand_stack[0] = LOWMASK[s]
    tried_stack[0] = U0
    support = LOWMASK[s]

    while True:
        descended = False
        cands = cand_stack[level]
        while cands != U0:
            u = ctz(cands)
            ub = BIT[u]
            cands &= cands - U1
            if (
                tried_stack[level] != U0
                and gen_count > 0
                and _orbit_skip(u, level, tried_stack[level], placed, gens, gen_count, parent, s)
            ):
                tried_stack[level] |= ub
                continue
            block = backmask[u]
            ident = adj[level] & LOWMASK[level]
            d = block ^ ident
            if d != U0:
                if (d & (U0 - d)) & block != U0:
                    return 0  # strictly smaller labeling exists
                tried_stack[level] |= ub  # larger block: dead subtree
                continue
            # equal block: descend
            cand_stack[level] = cands
            tried_stack[level] |= ub
            placed[level] = u
            used |= ub
            rest = support & ~used
            x = rest
            while x != U0:
                w = ctz(x)
                x &= x - U1
                if (adj[u] >> np.uint64(w)) & U1 != U0:
                    backmask[w] |= BIT[level]
            level += 1
            if level == s:
                is_id = True
                for i in range(s):
                    if placed[i] != i:
                        is_id = False
                        break
                if not is_id and gen_count < MAX_GENS:
                    for i in range(s):
                        gens[gen_count, placed[i]] = i
                    gen_count += 1
                # pop straight back to continue with this level's siblings
                level -= 1
                pu = placed[level]
                used &= ~BIT[pu]
                x = support & ~used
                while x != U0:
                    w = ctz(x)
                    x &= x - U1
                    backmask[w] &= ~BIT[level]
                cands = cand_stack[level]
                continue
            cand_stack[level] = support & ~used
            tried_stack[level] = U0
            descended = True
            break
        if descended:
            continue
        if level == 0:
            return 1
        level -= 1
        pu = placed[level]
        used &= ~BIT[pu]
        x = support & ~used
        while x != U0:
            w = ctz(x)
            x &= x - U1
            backmask[w] &= ~BIT[level]
        cands = U0  # parent loop refetches cand_stack[level]
