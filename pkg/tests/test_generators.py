"""Instance generators: completeness, determinism, and advertised guarantees."""

from math import comb

import pytest

from turancover.errors import ParameterError, ResourceLimitError
from turancover.generators import (
    combinatorial_lines,
    complete,
    f_free_random,
    greedy_hard_setsystem,
    random_hypergraph,
    simplify_reduction,
    three_tent,
)
from turancover.hypergraph import Hypergraph, is_simple
from turancover.oracles import (
    brute_tau,
    contains_subhypergraph,
    find_tents,
    max_independent_set,
)
from turancover.setcover import greedy_set_cover, is_simple_system


def test_complete_counts():
    assert complete(4, 3).m == 4
    assert complete(5, 3).m == 10
    assert complete(5, 4).m == 5
    assert complete(3, 3).m == 1


def test_complete_is_lexicographic():
    G = complete(4, 3)
    assert G.edges[0] == (0, 1, 2)
    assert G.edges[-1] == (1, 2, 3)


def test_random_hypergraph_deterministic():
    a = random_hypergraph(10, 3, 0.3, seed=6)
    b = random_hypergraph(10, 3, 0.3, seed=6)
    assert a == b
    assert a != random_hypergraph(10, 3, 0.3, seed=7)


def test_random_hypergraph_extreme_probabilities():
    assert random_hypergraph(6, 3, 1.0, seed=0) == complete(6, 3)
    assert random_hypergraph(6, 3, 0.0, seed=0).m == 0


def test_random_hypergraph_rejects_bad_probability():
    with pytest.raises(ParameterError):
        random_hypergraph(6, 3, 1.5, seed=0)


def test_three_tent_shape():
    tent = three_tent()
    assert tent.t == 3 and tent.n == 7 and tent.m == 4
    assert find_tents(tent) == [(0, 1, 2, 3)]


def test_f_free_removes_every_tent_copy():
    family = [three_tent()]
    for seed in range(6):
        G = f_free_random(12, 3, family, seed=seed)
        assert contains_subhypergraph(G, three_tent()) is None


def test_f_free_explicit_probability_bypasses_density():
    # a single-edge pattern has no density value, but an explicit p works
    family = [Hypergraph(3, 3, [(0, 1, 2)])]
    G = f_free_random(8, 3, family, p=0.5, seed=3)
    assert G.m == 0  # every edge contains the pattern, so everything dies


def test_f_free_needs_three_uniform_default_probability():
    # the default p comes from the family's density, so the family sets it
    family = [three_tent()]
    G = f_free_random(12, 3, family, seed=1)
    out_density = G.m / comb(12, 3)
    assert 0 <= out_density < 0.2


def test_lines_counts_by_dimension():
    assert combinatorial_lines(1).m == 1
    assert combinatorial_lines(2).m == 7
    assert combinatorial_lines(3).m == 37
    assert combinatorial_lines(2).n == 9
    assert combinatorial_lines(3).n == 27


def test_lines_are_tent_free():
    assert find_tents(combinatorial_lines(2)) == []


def test_lines_small_cover_and_independence():
    L = combinatorial_lines(2)
    assert brute_tau(L) == 3
    assert max_independent_set(L) == 6


def test_lines_guard():
    with pytest.raises(ResourceLimitError):
        combinatorial_lines(8)
    # explicit limit unlocks moderately larger boards
    assert combinatorial_lines(3, limit=10**7).m == 37


def test_hard_setsystem_small_instance():
    sys_ = greedy_hard_setsystem(2)
    assert sys_.n == 4
    assert sys_.sets == ((1, 3), (0, 1), (2, 3))


def test_hard_setsystem_structure():
    k = 6
    sys_ = greedy_hard_setsystem(k)
    assert sys_.n == k * k
    assert is_simple_system(sys_)
    blocks = sys_.sets[-k:]
    covered = set()
    for b in blocks:
        assert len(b) == k
        covered.update(b)
    assert covered == set(range(k * k))
    # greedy must burn through well over k sets
    assert len(greedy_set_cover(sys_).picked) > k


def test_simplify_reduction_output_is_simple():
    G = complete(5, 3)
    for seed in range(5):
        H = simplify_reduction(G, B=4, P=3, seed=seed)
        assert is_simple(H)
        assert H.t == G.t
        assert H.n == G.n * 4


def test_simplify_reduction_frozen_shape():
    H = simplify_reduction(complete(5, 3), B=5, P=3, seed=9)
    assert (H.n, H.m) == (25, 21)


def test_simplify_reduction_deterministic():
    G = complete(5, 3)
    assert simplify_reduction(G, 4, 2, seed=5) == simplify_reduction(G, 4, 2, seed=5)


def test_simplify_parameter_checks():
    with pytest.raises(ParameterError):
        simplify_reduction(complete(4, 3), B=0, P=2, seed=0)
    with pytest.raises(ParameterError):
        simplify_reduction(complete(4, 3), B=3, P=0, seed=0)
