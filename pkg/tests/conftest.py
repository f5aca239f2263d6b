import random

import pytest

from platykit.constructions import complete, cycle, fixture
from platykit.graph import Graph, from_edge_list


@pytest.fixture(scope="session")
def petersen():
    return fixture("petersen")


@pytest.fixture(scope="session")
def tietze():
    return fixture("tietze")


@pytest.fixture(scope="session")
def k4():
    return complete(4)


@pytest.fixture(scope="session")
def c5():
    return cycle(5)


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return from_edge_list(n, edges)


def glued_cliques(p: int, q: int) -> Graph:
    """K_p and K_q sharing one vertex (the classic MNH non-platypus)."""
    first = list(range(p))
    second = [p - 1] + list(range(p, p + q - 1))
    edges = set()
    for clique in (first, second):
        for i, x in enumerate(clique):
            for y in clique[i + 1:]:
                edges.add((min(x, y), max(x, y)))
    return from_edge_list(p + q - 1, sorted(edges))


def flower_snark(k: int) -> Graph:
    """Isaacs flower snark J_k (k odd >= 5): hubs joined to an x-cycle
    and a single 2k-cycle through the y and z vertices.  Used as
    ingestible snark test data."""
    # h_i = i, x_i = k + i, y_i = 2k + i, z_i = 3k + i
    edges = []
    for i in range(k):
        edges += [(i, k + i), (i, 2 * k + i), (i, 3 * k + i)]
        edges.append((k + i, k + (i + 1) % k))
    loop = [2 * k + i for i in range(k)] + [3 * k + i for i in range(k)]
    for idx in range(2 * k):
        a, b = loop[idx], loop[(idx + 1) % (2 * k)]
        edges.append((min(a, b), max(a, b)))
    return from_edge_list(4 * k, sorted({(min(a, b), max(a, b)) for a, b in edges}))
