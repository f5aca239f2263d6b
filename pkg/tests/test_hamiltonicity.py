import random

import pytest

from platykit.constructions import cycle, dotted_prism, fixture, petersen_prism
from platykit.generation import all_graphs_raw
from platykit.graph import from_edge_list
from platykit.hamiltonicity import (
    find_hamiltonian_cycle,
    find_hamiltonian_path,
    is_hamiltonian,
    is_homogeneously_traceable,
    is_hypohamiltonian,
    is_hypotraceable,
    is_maximally_non_hamiltonian,
    is_platypus,
    lemma2_audit,
)
from platykit.kernels import props as _props

from conftest import glued_cliques, random_graph
from _oracles import naive_cycle_exists, naive_path_exists, naive_platypus


def test_cycle_on_c5(c5):
    wit = find_hamiltonian_cycle(c5)
    assert wit is not None and wit.kind == "cycle"
    assert wit.is_valid_for(c5)


def test_cycle_requires_three_vertices():
    with pytest.raises(ValueError):
        find_hamiltonian_cycle(from_edge_list(2, [(0, 1)]))


def test_petersen_non_hamiltonian(petersen):
    assert find_hamiltonian_cycle(petersen) is None


def test_pp72_non_hamiltonian():
    assert find_hamiltonian_cycle(petersen_prism(7, 2)) is None


def test_path_endpoints_on_c5(c5):
    wit = find_hamiltonian_path(c5, (0, 1))
    assert wit is not None and {wit.vertices[0], wit.vertices[-1]} == {0, 1}
    assert find_hamiltonian_path(c5, (0, 2)) is None


def test_path_free_petersen(petersen):
    wit = find_hamiltonian_path(petersen)
    assert wit is not None and wit.is_valid_for(petersen)


def test_path_invalid_endpoints(c5):
    with pytest.raises(ValueError):
        find_hamiltonian_path(c5, (0, 0))
    with pytest.raises(ValueError):
        find_hamiltonian_path(c5, (0, 9))


def test_is_platypus_examples(petersen, k4):
    assert is_platypus(petersen).verdict
    rep = is_platypus(k4)
    assert not rep.verdict and rep.witness is not None and rep.witness.is_valid_for(k4)
    assert is_platypus(petersen_prism(9, 2)).verdict


def test_is_platypus_small_reason():
    rep = is_platypus(from_edge_list(2, [(0, 1)]))
    assert not rep.verdict and rep.witness == "n < 3"


def test_is_platypus_counterexample_vertex():
    # a star: deleting the centre leaves isolated vertices
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    rep = is_platypus(star)
    assert not rep.verdict and isinstance(rep.witness, int)


def test_fig7_pair():
    assert is_platypus(fixture("fig7_left")).verdict
    assert not is_platypus(fixture("fig7_right")).verdict


def test_hypohamiltonian(petersen, k4):
    assert is_hypohamiltonian(petersen).verdict
    assert not is_hypohamiltonian(k4).verdict
    assert not is_hypotraceable(k4).verdict


def test_dotted_prism_c3_platypus_not_hypo():
    g = dotted_prism(cycle(3))
    assert g.n == 9 and g.num_edges() == 12
    assert is_platypus(g).verdict
    assert not is_hypohamiltonian(g).verdict


def test_homogeneously_traceable(petersen, c5):
    assert is_homogeneously_traceable(petersen).verdict
    assert is_homogeneously_traceable(c5).verdict
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    assert not is_homogeneously_traceable(star).verdict


def test_mnh(petersen, tietze, c5, k4):
    assert is_maximally_non_hamiltonian(petersen).verdict
    assert is_maximally_non_hamiltonian(tietze).verdict
    assert not is_maximally_non_hamiltonian(c5).verdict
    assert not is_maximally_non_hamiltonian(k4).verdict


def test_lemma2_audit(petersen, c5):
    rep = lemma2_audit(petersen)
    assert rep.verdict and "platypus" in rep.detail
    rep = lemma2_audit(glued_cliques(4, 4))
    assert rep.verdict and "not a platypus" in rep.detail
    rep = lemma2_audit(c5)
    assert rep.verdict and "not applicable" in rep.detail


def test_monotonicity_under_edge_addition():
    rng = random.Random(11)
    for _ in range(80):
        n = rng.randint(4, 12)
        g = random_graph(rng, n, 0.35)
        if not is_hamiltonian(g):
            continue
        non_edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if not g.has_edge(i, j)
        ]
        if not non_edges:
            continue
        u, v = rng.choice(non_edges)
        assert is_hamiltonian(g.with_edge(u, v))


def test_witnesses_are_validated():
    rng = random.Random(23)
    for _ in range(60):
        g = random_graph(rng, rng.randint(3, 14), 0.5)
        wit = find_hamiltonian_cycle(g)
        if wit is not None:
            assert wit.is_valid_for(g)
        pw = find_hamiltonian_path(g)
        if pw is not None:
            assert pw.is_valid_for(g)


def test_oracle_agreement_random():
    """Production search agrees with the naive permutation oracle."""
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(3, 9)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6]))
        adj = g.words1()
        assert (find_hamiltonian_cycle(g) is not None) == naive_cycle_exists(adj, n)
        assert (find_hamiltonian_path(g) is not None) == naive_path_exists(adj, n, -1, -1)
        s, t = rng.sample(range(n), 2)
        assert (find_hamiltonian_path(g, (s, t)) is not None) == naive_path_exists(adj, n, s, t)


def test_platypus_oracle_agreement_n7():
    """is_platypus matches the naive oracle class-for-class for n <= 7."""
    for n in range(3, 8):
        for g in all_graphs_raw(n):
            adj = g.words1()
            verdict, _, _ = _props.platypus_check(adj, n, True, -1)
            assert (verdict == 1) == naive_platypus(adj, n), (n, list(g.edges()))


@pytest.mark.slow
def test_platypus_oracle_agreement_n8():
    graphs = all_graphs_raw(8)
    assert len(graphs) == 12346
    plat = 0
    for g in graphs:
        adj = g.words1()
        verdict, _, _ = _props.platypus_check(adj, 8, True, -1)
        assert (verdict == 1) == naive_platypus(adj, 8)
        plat += verdict == 1
    assert plat == 0


def test_class_inclusions_n8():
    """hypohamiltonian => platypus; hypotraceable => platypus;
    homogeneously traceable and non-hamiltonian => platypus."""
    for n in range(3, 9):
        for g in all_graphs_raw(n):
            bits = _props.predicate_bits(g.words1(), n, -1)
            ham = bool(bits & _props.PRED_HAMILTONIAN)
            plat = bool(bits & _props.PRED_PLATYPUS)
            if bits & _props.PRED_HYPOHAMILTONIAN:
                assert plat
            if bits & _props.PRED_HYPOTRACEABLE:
                assert plat
            if bits & _props.PRED_HOMOG_TRACEABLE and not ham:
                assert plat


def test_platypus_structural_necessities():
    """Accepted platypuses are 2-connected, have max degree <= n-4 and
    at most one degree-2 neighbour per vertex (n <= 8 has none, so use
    known platypuses)."""
    from platykit.kernels.props import is_two_connected, max_deg2_neighbours

    pets = [fixture("petersen"), fixture("tietze"), dotted_prism(cycle(3)),
            dotted_prism(cycle(5)), petersen_prism(5, 2), fixture("fig7_left")]
    for g in pets:
        assert is_platypus(g).verdict
        assert is_two_connected(g.words1(), g.n)
        assert g.max_degree() <= g.n - 4
        assert max_deg2_neighbours(g.words1(), g.n) <= 1


def test_wide_narrow_consistency():
    """Wide kernels agree with single-word kernels on mid-size graphs."""
    from platykit.kernels.ham import ham_cycle, ham_cycle_w

    rng = random.Random(9)
    for _ in range(40):
        n = rng.randint(5, 20)
        g = random_graph(rng, n, 0.3)
        narrow, _, _ = ham_cycle(g.words1(), n, -1, -1, -1)
        wide, _, _ = ham_cycle_w(g.words(pad=70), n, -1, -1, -1)
        assert narrow == wide
