"""Isomorph-free exhaustive generation and theorem-level audits.

``generate_all_graphs`` enumerates one representative per isomorphism
class (optionally girth-bounded); ``generate_platypuses`` runs the same
orderly walk with the platypus-targeted prunes and per-class platypus
evaluation.  Output lists are canonical graph6 strings, sorted, so
runs are reproducible across worker counts.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from platykit import isomorphism
from platykit.graph import Graph
from platykit.hamiltonicity import is_maximally_non_hamiltonian, is_platypus
from platykit.kernels import census as _census
from platykit.kernels import props as _props

GUARD_ENV = "PLATYKIT_GUARD_OVERRIDE"
MAX_PLATYPUS_ORDER = 16
MAX_ALLGRAPH_ORDER = 11


class ResourceGuardError(RuntimeError):
    """Census size guard tripped; override via PLATYKIT_GUARD_OVERRIDE=1."""


@dataclass(frozen=True)
class GenSpec:
    """Constraints for a census run."""

    order: int
    min_girth: int = 3
    target: str = "platypuses"  # or "all_graphs"
    audits: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.min_girth < 3:
            raise ValueError("min_girth is at least 3 (3 means unconstrained)")
        if self.target not in ("platypuses", "all_graphs"):
            raise ValueError(f"unknown target {self.target!r}")


@dataclass(frozen=True)
class GenResult:
    count: int
    canonical_list: Optional[Tuple[str, ...]]
    stats: dict

    def __post_init__(self):
        if self.canonical_list is not None:
            if self.count != len(self.canonical_list):
                raise ValueError("count does not match list length")
            if list(self.canonical_list) != sorted(set(self.canonical_list)):
                raise ValueError("canonical list must be strictly sorted")


@dataclass(frozen=True)
class Prunes:
    """Switches for the three sound prunes plus the leaf filters
    (necessary platypus conditions checked before the full test)."""

    hamiltonian: bool = True
    girth: bool = True
    degree: bool = True
    leaf_filters: bool = True


def _edge_tables(n: int):
    M = n * (n - 1) // 2
    ei = np.empty(M, dtype=np.int64)
    ej = np.empty(M, dtype=np.int64)
    off = np.empty(n + 1, dtype=np.int64)
    k = 0
    for j in range(n):
        off[j] = k
        for i in range(j):
            ei[k] = i
            ej[k] = j
            k += 1
    off[n] = M
    return ei, ej, off


def _guard(n: int, limit: int, override: bool) -> None:
    if n > limit and not (override or os.environ.get(GUARD_ENV) == "1"):
        raise ResourceGuardError(
            f"order {n} exceeds the resource guard ({limit}); "
            f"set {GUARD_ENV}=1 or pass guard_override=True"
        )


_STATS_NAMES = (
    "nodes", "candidates", "canon_rejects", "degree_prunes",
    "girth_prunes", "hamiltonian_prunes", "leaf_checks", "platypuses_found",
)


def _walk_args(n, spec_girth, platypus, prunes, collect, out_cap):
    out_buf = np.empty((out_cap, n), dtype=np.uint64)
    stats = np.zeros(10, dtype=np.int64)
    return out_buf, stats


def _subtree_job(args):
    """Worker: walk one batch of subtree roots (module-level for pickling)."""
    (n, min_girth, platypus, prunes, collect, roots, out_cap) = args
    ei, ej, off = _edge_tables(n)
    out_buf = np.empty((out_cap, n), dtype=np.uint64)
    stats = np.zeros(10, dtype=np.int64)
    dummy_roots = np.empty((1, n + 3), dtype=np.uint64)
    classes = 0
    outs: List[np.ndarray] = []
    for row in roots:
        adj0 = row[:n].copy()
        m0 = int(row[n])
        last0 = int(row[n + 1])
        c, oc, _, status = _census.census_walk(
            n, min_girth, platypus,
            prunes.hamiltonian, prunes.girth, prunes.degree, prunes.leaf_filters,
            collect, adj0, m0, last0, -1, True,
            ei, ej, off, out_buf, dummy_roots, stats,
        )
        if status != _census.OK:
            raise RuntimeError("census output buffer overflow in worker")
        classes += c
        if oc:
            outs.append(out_buf[:oc].copy())
    merged = np.concatenate(outs, axis=0) if outs else np.empty((0, n), dtype=np.uint64)
    return classes, merged, stats


def _rows_to_graphs(rows: np.ndarray, n: int) -> List[Graph]:
    return [Graph(n, [int(rows[r, v]) for v in range(n)]) for r in range(rows.shape[0])]


def _run_census(
    n: int,
    min_girth: int,
    platypus: bool,
    prunes: Prunes,
    collect: bool,
    jobs: int = 1,
    out_cap: int = 1 << 17,
    split_depth: int = 6,
) -> Tuple[int, List[Graph], dict]:
    ei, ej, off = _edge_tables(n)
    empty = np.zeros(n, dtype=np.uint64)
    stats = np.zeros(10, dtype=np.int64)
    t0 = time.time()
    if jobs <= 1:
        out_buf = np.empty((out_cap, n), dtype=np.uint64)
        dummy_roots = np.empty((1, n + 3), dtype=np.uint64)
        classes, oc, _, status = _census.census_walk(
            n, min_girth, platypus,
            prunes.hamiltonian, prunes.girth, prunes.degree, prunes.leaf_filters,
            collect, empty, 0, -1, -1, True,
            ei, ej, off, out_buf, dummy_roots, stats,
        )
        if status != _census.OK:
            raise RuntimeError("census output buffer overflow; raise out_cap")
        rows = out_buf[:oc]
    else:
        out_buf = np.empty((out_cap, n), dtype=np.uint64)
        roots_buf = np.empty((1 << 20, n + 3), dtype=np.uint64)
        classes, oc, rc, status = _census.census_walk(
            n, min_girth, platypus,
            prunes.hamiltonian, prunes.girth, prunes.degree, prunes.leaf_filters,
            collect, empty, 0, -1, split_depth, True,
            ei, ej, off, out_buf, roots_buf, stats,
        )
        if status != _census.OK:
            raise RuntimeError("census shallow phase overflow")
        parts = [out_buf[:oc]]
        batches = np.array_split(roots_buf[:rc], max(1, min(rc, jobs * 8)))
        payload = [
            (n, min_girth, platypus, prunes, collect, batch, out_cap)
            for batch in batches if len(batch)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for c, merged, wstats in pool.map(_subtree_job, payload):
                classes += c
                stats += wstats
                if len(merged):
                    parts.append(merged)
        rows = np.concatenate(parts, axis=0) if parts else np.empty((0, n), np.uint64)
    wall = time.time() - t0
    info = dict(zip(_STATS_NAMES, (int(x) for x in stats[:8])))
    info["wall_seconds"] = wall
    info["classes"] = int(classes)
    return int(classes), _rows_to_graphs(rows, n), info


def generate_all_graphs(
    n: int,
    min_girth: int = 3,
    collect: Optional[bool] = None,
    jobs: int = 1,
    guard_override: bool = False,
) -> GenResult:
    """One representative per isomorphism class with girth >= min_girth."""
    if n < 1:
        raise ValueError("order must be positive")
    _guard(n, MAX_ALLGRAPH_ORDER, guard_override)
    if collect is None:
        collect = n <= 8
    cap = 1 << 17 if collect else 1
    count, graphs, info = _run_census(
        n, min_girth, platypus=False, prunes=Prunes(), collect=collect,
        jobs=jobs, out_cap=cap,
    )
    canon = None
    if collect:
        canon = tuple(sorted(isomorphism.canonical_graph6(g) for g in graphs))
    return GenResult(count if not collect else len(canon), canon, info)


def all_graphs_raw(
    n: int, min_girth: int = 3, jobs: int = 1, guard_override: bool = False
) -> List[Graph]:
    """All isomorphism classes as Graph objects (no canonicalization).

    Materializing lists beyond n = 9 (about 275k classes) is deliberately
    unsupported; use counts or per-cell platypus output instead.
    """
    _guard(n, min(MAX_ALLGRAPH_ORDER, 9), guard_override)
    _, graphs, _ = _run_census(
        n, min_girth, platypus=False, prunes=Prunes(), collect=True, jobs=jobs,
        out_cap=1 << 19,
    )
    return graphs


def generate_platypuses(
    spec: GenSpec,
    jobs: int = 1,
    prunes: Prunes = Prunes(),
    guard_override: bool = False,
) -> GenResult:
    """Exactly the platypus isomorphism classes of the given order/girth."""
    if spec.target != "platypuses":
        raise ValueError("use generate_all_graphs for target='all_graphs'")
    _guard(spec.order, MAX_PLATYPUS_ORDER, guard_override)
    _, graphs, info = _run_census(
        spec.order, spec.min_girth, platypus=True, prunes=prunes, collect=True,
        jobs=jobs,
    )
    canon = tuple(sorted(isomorphism.canonical_graph6(g) for g in graphs))
    if len(canon) != len(graphs):
        raise AssertionError("duplicate classes in census output")
    info["count"] = len(canon)
    return GenResult(len(canon), canon, info)


@dataclass
class AuditReport:
    checked: int = 0
    skipped: List[Tuple[str, str]] = field(default_factory=list)  # (canon, reason)
    violations: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def audit_stream(graphs: Iterable[Graph], audits: Sequence[str] = ()) -> AuditReport:
    """Check the structural platypus theorems on every platypus of a stream.

    Verified per platypus: max degree <= n - 4 (hence never n-1, n-2 or
    n-3); the degree-(n-4) vertices induce a complete graph;
    2-connectivity; at most one degree-2 neighbour per vertex; planar
    ones have girth <= 9 and suppress to an anchor multigraph of min
    degree >= 3; Lemma-2 consistency on maximally non-hamiltonian ones.
    Non-platypuses are reported as skipped.
    """
    from platykit.graph import suppress_degree_two
    from platykit.invariants import girth as girth_of
    from platykit.invariants import is_planar

    report = AuditReport()
    for g in graphs:
        canon = isomorphism.canonical_graph6(g)
        if not is_platypus(g).verdict:
            report.skipped.append((canon, "not a platypus"))
            continue
        report.checked += 1
        n = g.n
        degs = g.degrees()

        def blame(msg: str) -> None:
            report.violations.append((canon, msg))

        if max(degs) > n - 4:
            blame(f"max degree {max(degs)} exceeds n-4={n - 4}")
        if max(degs) in (n - 1, n - 2, n - 3):
            blame(f"platypus with forbidden max degree {max(degs)}")
        heavy = [v for v in range(n) if degs[v] == n - 4]
        for a in range(len(heavy)):
            for b in range(a + 1, len(heavy)):
                if not g.has_edge(heavy[a], heavy[b]):
                    blame(f"degree-(n-4) vertices {heavy[a]},{heavy[b]} non-adjacent")
        if g.n <= 64 and not _props.is_two_connected(g.words1(), g.n):
            blame("not 2-connected")
        if g.n <= 64 and _props.max_deg2_neighbours(g.words1(), g.n) > 1:
            blame("vertex with two degree-2 neighbours")
        if is_planar(g):
            if girth_of(g) > 9:
                blame(f"planar platypus of girth {girth_of(g)}")
            em = suppress_degree_two(g)
            if em.n and min(em.degree(v) for v in range(em.n)) < 3:
                blame("suppression anchor of degree < 3")
        if is_maximally_non_hamiltonian(g).verdict and not max(degs) < n - 1:
            blame("MNH platypus with max degree n-1")
    return report


def platypus_filter_mask(graphs: Sequence[Graph]) -> List[bool]:
    """Definition-level platypus filter used by the oracle-equivalence tests."""
    out = []
    for g in graphs:
        verdict, _, _ = _props.platypus_check(g.words1(), g.n, True, -1)
        out.append(verdict == 1)
    return out
