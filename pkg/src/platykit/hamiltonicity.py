"""Hamiltonian cycle/path search with witnesses, and the class predicates
derived from them (platypus, hypohamiltonian, hypotraceable, homogeneously
traceable, maximally non-hamiltonian).

Every witness returned by this module is validated against the host
graph before it leaves the kernel boundary.  Searches are exact; a
``budget`` (node count) may be supplied to bound long-running queries,
in which case exceeding it raises :class:`SearchBudgetExceeded` rather
than returning a possibly-wrong verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from platykit.graph import Graph, HamWitness, delete_vertex
from platykit.kernels import ham as _ham
from platykit.kernels import props as _props

Counterexample = Union[HamWitness, int, Tuple[int, int], str, None]


class SearchBudgetExceeded(RuntimeError):
    """A bounded search ran out of its node budget before deciding."""


@dataclass(frozen=True)
class PropertyReport:
    """Structured result of a predicate evaluation."""

    predicate: str
    verdict: bool
    witness: Counterexample = None
    nodes_searched: int = 0
    detail: str = ""

    def __bool__(self) -> bool:
        return self.verdict


def _validated(g: Graph, kind: str, seq) -> HamWitness:
    wit = HamWitness(kind, tuple(int(v) for v in seq))
    if not wit.is_valid_for(g):
        raise AssertionError(f"kernel produced an invalid {kind} witness: {wit.vertices}")
    return wit


def _status_check(status: int, what: str) -> None:
    if status == _ham.BUDGET_EXCEEDED:
        raise SearchBudgetExceeded(f"{what}: node budget exhausted")


def _dirac(g: Graph) -> bool:
    return g.n >= 3 and 2 * g.min_degree() >= g.n


def find_hamiltonian_cycle(g: Graph, budget: int = -1) -> Optional[HamWitness]:
    """A hamiltonian cycle witness, or None if the graph has none.

    Graphs meeting the Dirac bound (min degree >= n/2) are known
    hamiltonian up front; the search still runs to produce the witness
    and is quick on such dense graphs.
    """
    if g.n < 3:
        raise ValueError("hamiltonian cycles need at least 3 vertices")
    if g.n <= 64:
        status, path, _ = _ham.ham_cycle(g.words1(), g.n, -1, -1, budget)
    else:
        status, path, _ = _ham.ham_cycle_w(g.words(), g.n, -1, -1, budget)
    _status_check(status, "hamiltonian cycle search")
    if status != _ham.FOUND:
        assert not _dirac(g), "Dirac-dense graph reported non-hamiltonian"
        return None
    return _validated(g, "cycle", path)


def is_hamiltonian(g: Graph, budget: int = -1) -> bool:
    return find_hamiltonian_cycle(g, budget) is not None


def _strip_virtual(path, n) -> Tuple[int, ...]:
    seq = [int(v) for v in path]
    i = seq.index(n)
    return tuple(seq[i + 1:] + seq[:i])


def find_hamiltonian_path(
    g: Graph, endpoints: Optional[Tuple[int, int]] = None, budget: int = -1
) -> Optional[HamWitness]:
    """A spanning-path witness, optionally between two pinned endpoints.

    Reduction: a virtual vertex adjacent to everything (free endpoints)
    or to exactly the pinned pair turns the path query into a cycle
    query on n + 1 vertices.
    """
    if g.n < 2:
        if endpoints is not None:
            raise ValueError("endpoints make no sense on a single vertex")
        return HamWitness("path", (0,))
    if endpoints is not None:
        s, t = endpoints
        if s == t or not (0 <= s < g.n and 0 <= t < g.n):
            raise ValueError(f"invalid endpoint pair ({s},{t})")
    if g.n + 1 <= 64:
        adj = g.words1()
        if endpoints is None:
            status, path, _ = _props.path_free(adj, g.n, budget)
        else:
            status, path, _ = _props.path_between(adj, g.n, s, t, budget)
    else:
        adj = g.words()
        if endpoints is None:
            status, path, _ = _props.path_free_w(adj, g.n, budget)
        else:
            status, path, _ = _props.path_between_w(adj, g.n, s, t, budget)
    _status_check(status, "hamiltonian path search")
    if status != _ham.FOUND:
        return None
    wit = _validated(g, "path", _strip_virtual(path, g.n))
    if endpoints is not None and {wit.vertices[0], wit.vertices[-1]} != {s, t}:
        raise AssertionError("path witness does not respect pinned endpoints")
    return wit


def is_traceable(g: Graph, budget: int = -1) -> bool:
    return find_hamiltonian_path(g, None, budget) is not None


def is_platypus(g: Graph, budget: int = -1) -> PropertyReport:
    """Non-hamiltonian with every vertex-deleted subgraph traceable.

    The trivial platypus on two vertices is excluded by definition.
    A False verdict carries its certificate: a hamiltonian cycle, a
    vertex whose deletion is non-traceable, or the reason "n < 3".
    """
    name = "platypus"
    if g.n < 3:
        return PropertyReport(name, False, "n < 3", 0, "trivial platypus excluded")
    if g.n <= 64:
        verdict, bad, nodes = _props.platypus_check(g.words1(), g.n, True, budget)
    else:
        verdict, bad, nodes = _props.platypus_check_w(g.words(), g.n, True, budget)
    _status_check(verdict, "platypus check")
    if verdict == 1:
        return PropertyReport(name, True, None, nodes)
    if bad == -2:
        wit = find_hamiltonian_cycle(g, budget)
        return PropertyReport(name, False, wit, nodes, "hamiltonian cycle exists")
    return PropertyReport(
        name, False, int(bad), nodes, f"deleting vertex {bad} leaves a non-traceable graph"
    )


def is_hypohamiltonian(g: Graph, budget: int = -1) -> PropertyReport:
    """Non-hamiltonian, but every vertex-deleted subgraph is hamiltonian."""
    name = "hypohamiltonian"
    if g.n < 3:
        raise ValueError("needs at least 3 vertices")
    if is_hamiltonian(g, budget):
        return PropertyReport(name, False, None, 0, "hamiltonian")
    for v in range(g.n):
        sub = delete_vertex(g, v)
        if sub.n < 3 or not is_hamiltonian(sub, budget):
            return PropertyReport(name, False, v, 0, f"G - {v} is not hamiltonian")
    return PropertyReport(name, True)


def is_hypotraceable(g: Graph, budget: int = -1) -> PropertyReport:
    """Non-traceable, but every vertex-deleted subgraph is traceable."""
    name = "hypotraceable"
    if g.n < 3:
        raise ValueError("needs at least 3 vertices")
    if is_traceable(g, budget):
        return PropertyReport(name, False, None, 0, "traceable")
    for v in range(g.n):
        if not is_traceable(delete_vertex(g, v), budget):
            return PropertyReport(name, False, v, 0, f"G - {v} is not traceable")
    return PropertyReport(name, True)


def is_homogeneously_traceable(g: Graph, budget: int = -1) -> PropertyReport:
    """Every vertex is an end-vertex of some hamiltonian path."""
    name = "homogeneously_traceable"
    if g.n < 2:
        raise ValueError("needs at least 2 vertices")
    for v in range(g.n):
        if g.n + 1 <= 64:
            status, _, _ = _props.path_from(g.words1(), g.n, v, budget)
        else:
            status, _, _ = _props.path_from_w(g.words(), g.n, v, budget)
        _status_check(status, "endpoint path search")
        if status != _ham.FOUND:
            return PropertyReport(name, False, v, 0, f"no hamiltonian path starts at {v}")
    return PropertyReport(name, True)


def is_maximally_non_hamiltonian(g: Graph, budget: int = -1) -> PropertyReport:
    """Non-hamiltonian and every non-adjacent pair is joined by a spanning path."""
    name = "maximally_non_hamiltonian"
    if g.n < 3:
        raise ValueError("needs at least 3 vertices")
    wit = find_hamiltonian_cycle(g, budget)
    if wit is not None:
        return PropertyReport(name, False, wit, 0, "hamiltonian")
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if g.has_edge(s, t):
                continue
            if find_hamiltonian_path(g, (s, t), budget) is None:
                return PropertyReport(
                    name, False, (s, t), 0, f"no hamiltonian path joins {s} and {t}"
                )
    return PropertyReport(name, True)


def lemma2_audit(g: Graph, budget: int = -1) -> PropertyReport:
    """Consistency check: an MNH graph is a platypus iff its maximum
    degree is below n - 1.  Not applicable to non-MNH graphs."""
    name = "lemma2_audit"
    if g.n < 3:
        raise ValueError("needs at least 3 vertices")
    if not is_maximally_non_hamiltonian(g, budget).verdict:
        return PropertyReport(name, True, None, 0, "not applicable: not MNH")
    plat = is_platypus(g, budget).verdict
    small_delta = g.max_degree() < g.n - 1
    if plat == small_delta:
        side = "platypus" if plat else "not a platypus"
        return PropertyReport(name, True, None, 0, f"consistent: {side}")
    return PropertyReport(
        name, False, None, 0,
        f"violation: platypus={plat} but max degree {g.max_degree()} vs n-1={g.n - 1}",
    )
