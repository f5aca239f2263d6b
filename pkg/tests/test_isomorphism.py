import itertools
import math
import random
from collections import Counter

from platykit.constructions import complete, cycle, generalized_petersen
from platykit.graph import Graph, from_edge_list
from platykit.graph6 import encode_graph6
from platykit.isomorphism import (
    are_isomorphic,
    automorphism_group_order,
    canonical_form,
    canonical_graph6,
)

from conftest import random_graph
from _oracles import edge_perm_table, mask_to_graph, orbit_dedup_masks


def test_canonical_petersen_relabeling(petersen):
    rng = random.Random(2)
    base = canonical_form(petersen)
    for _ in range(10):
        perm = list(range(10))
        rng.shuffle(perm)
        assert canonical_graph6(petersen.relabel(perm)) == base.graph6


def test_canonical_distinguishes(c5):
    p5 = from_edge_list(5, [(i, i + 1) for i in range(4)])
    assert canonical_graph6(c5) != canonical_graph6(p5)


def test_canonical_n4_all_classes():
    pairs = list(itertools.combinations(range(4), 2))
    seen = set()
    for bits in range(1 << 6):
        g = from_edge_list(4, [e for k, e in enumerate(pairs) if bits >> k & 1])
        seen.add(canonical_graph6(g))
    assert len(seen) == 11


def test_relabeling_field_applies(petersen):
    cf = canonical_form(petersen)
    assert encode_graph6(petersen.relabel(cf.relabeling)) == cf.graph6
    assert cf.aut_order == 120


def test_are_isomorphic_examples(petersen, tietze):
    assert are_isomorphic(generalized_petersen(5, 2), petersen)
    c6 = cycle(6)
    k33_minus = from_edge_list(
        6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]
    )
    assert are_isomorphic(c6, k33_minus)
    assert not are_isomorphic(petersen, tietze)


def test_aut_orders():
    assert automorphism_group_order(cycle(5)) == 10
    assert automorphism_group_order(complete(4)) == 24
    assert automorphism_group_order(generalized_petersen(5, 2)) == 120
    assert automorphism_group_order(Graph(1, [0])) == 1
    assert automorphism_group_order(Graph(7, [0] * 7)) == math.factorial(7)
    path = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert automorphism_group_order(path) == 2


def test_invariance_500_random_graphs():
    rng = random.Random(77)
    for trial in range(500):
        n = rng.randint(1, 11)
        g = random_graph(rng, n, rng.choice([0.15, 0.3, 0.5, 0.8]))
        cf = canonical_form(g)
        for _ in range(2):
            perm = list(range(n))
            rng.shuffle(perm)
            cf2 = canonical_form(g.relabel(perm))
            assert cf2.graph6 == cf.graph6
            assert cf2.aut_order == cf.aut_order


def test_labeled_class_counts_and_orbit_stabilizer():
    """Over all labeled graphs on n <= 6 vertices: the number of distinct
    canonical strings is 1, 2, 4, 11, 34, 156 and |Aut| times the number
    of labeled copies equals n! for every class."""
    expected = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
    for n, classes in expected.items():
        pairs = list(itertools.combinations(range(n), 2))
        counts = Counter()
        rep = {}
        for bits in range(1 << len(pairs)):
            g = from_edge_list(n, [e for k, e in enumerate(pairs) if bits >> k & 1])
            key = canonical_graph6(g)
            counts[key] += 1
            rep.setdefault(key, g)
        assert len(counts) == classes
        for key, copies in counts.items():
            assert automorphism_group_order(rep[key]) * copies == math.factorial(n)


def test_against_permutation_oracle_n6():
    """are_isomorphic agrees with brute-force permutation search."""
    for n in (4, 5):
        emap = edge_perm_table(n)
        reps = orbit_dedup_masks(n, emap)
        graphs = [mask_to_graph(n, int(m)) for m in reps]
        # all representatives pairwise non-isomorphic
        strings = {canonical_graph6(g) for g in graphs}
        assert len(strings) == len(graphs)
        # random relabelings map back to their class
        rng = random.Random(4)
        for g in graphs[:40]:
            perm = list(range(n))
            rng.shuffle(perm)
            assert are_isomorphic(g, g.relabel(perm))
