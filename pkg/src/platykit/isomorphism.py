"""Canonical labeling, isomorphism testing, automorphism group order.

Canonical form: iterated equitable refinement (split cells by
neighbour counts) plus individualize-and-refine backtracking, keeping
the labeling whose adjacency bitstring (colex order, as in graph6) is
lexicographically smallest among refinement-respecting labelings.
Automorphisms discovered as equal-code leaves prune the search, so
highly symmetric graphs stay tractable.

The group order is computed separately by an orbit-stabilizer chain:
|Aut| is the product of orbit sizes of successively individualized
vertices, each orbit established by explicit automorphism searches.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from platykit.graph import Graph
from platykit.graph6 import encode_graph6


@dataclass(frozen=True)
class CanonicalForm:
    graph6: str
    relabeling: Tuple[int, ...]  # input vertex -> canonical position
    aut_order: int


def _refine(rows: Sequence[int], cells: List[List[int]]) -> List[List[int]]:
    """Equitable ordered-partition refinement; deterministic cell order."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for w in cells:
            wmask = 0
            for v in w:
                wmask |= 1 << v
            new_cells: List[List[int]] = []
            for c in cells:
                if len(c) == 1:
                    new_cells.append(c)
                    continue
                groups: dict = {}
                for v in c:
                    groups.setdefault((rows[v] & wmask).bit_count(), []).append(v)
                if len(groups) == 1:
                    new_cells.append(c)
                else:
                    for key in sorted(groups):
                        new_cells.append(groups[key])
                    changed = True
            if changed:
                cells = new_cells
                break
            cells = new_cells
    return cells


def _individualize(cells: List[List[int]], cell_idx: int, v: int) -> List[List[int]]:
    out = []
    for i, c in enumerate(cells):
        if i == cell_idx:
            out.append([v])
            out.append([x for x in c if x != v])
        else:
            out.append(list(c))
    return out


def _code_int(rows: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = rows[order[j]]
        chunk = 0
        for i in range(j):
            chunk = (chunk << 1) | ((row >> order[i]) & 1)
        code = (code << j) | chunk
    return code


def _same_orbit(v: int, u: int, prefix: List[int], auts: List[Tuple[int, ...]], n: int) -> bool:
    """Are v and u in one orbit of the discovered automorphisms that fix
    every prefix vertex pointwise?"""
    if not auts:
        return False
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in auts:
        if all(p[q] == q for q in prefix):
            for a in range(n):
                ra, rb = find(a), find(p[a])
                if ra != rb:
                    parent[ra] = rb
    return find(v) == find(u)


def _canonical_order(g: Graph) -> List[int]:
    rows, n = g.rows, g.n
    best_code: Optional[int] = None
    best_order: Optional[List[int]] = None
    auts: List[Tuple[int, ...]] = []
    prefix: List[int] = []

    def dfs(cells: List[List[int]]) -> None:
        nonlocal best_code, best_order
        cells = _refine(rows, cells)
        target = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                target = i
                break
        if target < 0:
            order = [c[0] for c in cells]
            code = _code_int(rows, order)
            if best_code is None or code < best_code:
                best_code, best_order = code, order
            elif code == best_code and best_order is not None:
                sigma = [0] * n
                for i in range(n):
                    sigma[best_order[i]] = order[i]
                if any(sigma[i] != i for i in range(n)):
                    auts.append(tuple(sigma))
            return
        tried: List[int] = []
        for v in sorted(cells[target]):
            if any(_same_orbit(v, u, prefix, auts, n) for u in tried):
                continue
            tried.append(v)
            prefix.append(v)
            dfs(_individualize(cells, target, v))
            prefix.pop()

    dfs([list(range(n))])
    assert best_order is not None
    return best_order


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical graph6 string, the relabeling producing it, and |Aut|."""
    order = _canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    canon = g.relabel(perm)
    return CanonicalForm(encode_graph6(canon), tuple(perm), automorphism_group_order(g))


def canonical_graph6(g: Graph) -> str:
    """Canonical string only (skips the group-order computation)."""
    order = _canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return encode_graph6(g.relabel(perm))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.num_edges() != b.num_edges():
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_graph6(a) == canonical_graph6(b)


def _pair_refine(rows, cells_a, cells_b):
    """Refine two aligned ordered partitions in lockstep.

    Returns (cells_a, cells_b) or None when their shapes diverge, which
    proves no pin-respecting automorphism exists.
    """
    cells_a = [list(c) for c in cells_a]
    cells_b = [list(c) for c in cells_b]
    changed = True
    while changed:
        changed = False
        for idx in range(len(cells_a)):
            wa = 0
            for v in cells_a[idx]:
                wa |= 1 << v
            wb = 0
            for v in cells_b[idx]:
                wb |= 1 << v
            new_a, new_b = [], []
            for ca, cb in zip(cells_a, cells_b):
                if len(ca) == 1:
                    new_a.append(ca)
                    new_b.append(cb)
                    continue
                ga: dict = {}
                for v in ca:
                    ga.setdefault((rows[v] & wa).bit_count(), []).append(v)
                gb: dict = {}
                for v in cb:
                    gb.setdefault((rows[v] & wb).bit_count(), []).append(v)
                if sorted(ga) != sorted(gb):
                    return None
                for key in sorted(ga):
                    if len(ga[key]) != len(gb[key]):
                        return None
                    new_a.append(ga[key])
                    new_b.append(gb[key])
                if len(ga) > 1:
                    changed = True
            cells_a, cells_b = new_a, new_b
            if changed:
                break
    return cells_a, cells_b


def _aut_exists(rows, n, pins) -> bool:
    """Is there an automorphism with source->target as pinned?"""
    cells_a = [list(range(n))]
    cells_b = [list(range(n))]
    for s, t in pins:
        cells_a = [[s]] + [[x for x in c if x != s] for c in cells_a]
        cells_b = [[t]] + [[x for x in c if x != t] for c in cells_b]
        cells_a = [c for c in cells_a if c]
        cells_b = [c for c in cells_b if c]

    def search(ca, cb) -> bool:
        refined = _pair_refine(rows, ca, cb)
        if refined is None:
            return False
        ca, cb = refined
        target = -1
        for i, c in enumerate(ca):
            if len(c) > 1:
                target = i
                break
        if target < 0:
            perm = [0] * n
            for sa, sb in zip(ca, cb):
                perm[sa[0]] = sb[0]
            for v in range(n):
                img = 0
                row = rows[v]
                while row:
                    low = row & -row
                    img |= 1 << perm[low.bit_length() - 1]
                    row ^= low
                if img != rows[perm[v]]:
                    return False
            return True
        v = ca[target][0]
        for u in cb[target]:
            if search(
                _individualize(ca, target, v), _individualize(cb, target, u)
            ):
                return True
        return False

    return search(cells_a, cells_b)


def automorphism_group_order(g: Graph) -> int:
    """Exact |Aut(g)| by an orbit-stabilizer chain."""
    rows, n = g.rows, g.n
    order = 1
    pins: List[Tuple[int, int]] = []
    cells = _refine(rows, [list(range(n))])
    while True:
        target = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                target = i
                break
        if target < 0:
            return order
        cell = cells[target]
        v = cell[0]
        orbit = 1
        for u in cell[1:]:
            if _aut_exists(rows, n, pins + [(v, u)]):
                orbit += 1
        order *= orbit
        pins.append((v, v))
        cells = _refine(rows, _individualize(cells, target, v))
