from collections import Counter
from itertools import product

import pytest

from treespec.errors import InvalidOrder
from treespec.generators import (
    complete_graph,
    cycle,
    path,
    prufer_decode,
    random_connected,
    random_graph,
    random_tree,
    random_unicyclic,
)
from treespec.graph import cycle_length_of_unicyclic, from_edge_list, is_connected, is_tree, is_unicyclic
from treespec.oracle import spanning_tree_count_bruteforce


def test_complete_graph():
    k4 = complete_graph(4)
    assert k4.size == 6 and k4.degrees() == [3, 3, 3, 3]


def test_cycle_and_path():
    assert cycle(5).degrees() == [2] * 5
    assert path(1).size == 0 and path(4).size == 3


@pytest.mark.parametrize("build,n", [(cycle, 2), (complete_graph, 0), (path, 0),
                                     (lambda n: random_unicyclic(n, 1), 2),
                                     (lambda n: random_tree(n, 1), 0)])
def test_invalid_orders(build, n):
    with pytest.raises(InvalidOrder):
        build(n)


def test_random_tree_invariants():
    t = random_tree(8, seed=42)
    assert t.size == 7 and is_tree(t)


@pytest.mark.parametrize("n", [1, 2, 3, 9, 20])
def test_random_tree_sizes(n):
    for seed in range(5):
        assert is_tree(random_tree(n, seed))


def test_random_unicyclic_invariants():
    g = random_unicyclic(6, seed=7)
    assert g.size == 6 and is_connected(g) and is_unicyclic(g)
    assert 3 <= cycle_length_of_unicyclic(g) <= 6


def test_random_connected():
    for seed in range(10):
        g = random_connected(7, 0.3, seed)
        assert is_connected(g) and g.order == 7


def test_seeds_are_reproducible():
    assert random_tree(12, 5) == random_tree(12, 5)
    assert random_unicyclic(9, 5) == random_unicyclic(9, 5)
    assert random_connected(8, 0.4, 5) == random_connected(8, 0.4, 5)
    assert random_graph(8, 0.4, 5) == random_graph(8, 0.4, 5)
    assert random_tree(12, 5) != random_tree(12, 6)


def test_prufer_is_a_bijection_onto_labeled_trees():
    # Cayley: 5^3 sequences map onto 125 distinct labeled trees on 5 vertices
    n = 5
    trees = {from_edge_list(n, prufer_decode(list(seq), n)) for seq in product(range(n), repeat=n - 2)}
    assert len(trees) == n ** (n - 2)
    assert all(is_tree(t) for t in trees)
    assert len(trees) == spanning_tree_count_bruteforce(complete_graph(n))


def test_prufer_known_sequence():
    assert sorted(prufer_decode([3, 3, 3], 5)) == [(0, 3), (1, 3), (2, 3), (3, 4)]


def test_random_tree_is_roughly_uniform():
    # 16 labeled trees on 4 vertices; 3200 draws -> about 200 each
    counts = Counter(random_tree(4, seed) for seed in range(3200))
    assert len(counts) == 16
    assert min(counts.values()) > 130 and max(counts.values()) < 270
