"""Exact and float LP solves plus the optimal-pair certificate checks."""

import os
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from turancover.errors import ParameterError, ResourceLimitError, VerificationError
from turancover.generators import complete, random_hypergraph
from turancover.hypergraph import Hypergraph, blow_up
from turancover.lp import (
    LPSolution,
    check_complementary_slackness,
    solve_matching_lp,
    solve_vc_lp,
)


def test_single_edge_optimum_is_one():
    H = Hypergraph(3, 3, [(0, 1, 2)])
    primal = solve_vc_lp(H)
    dual = solve_matching_lp(H)
    assert primal.objective == 1
    assert dual.objective == 1
    assert len(primal.support) == 1


def test_complete_triples_fractional_optimum():
    # all four triples of a 4-set force weight 1/3 everywhere
    G = complete(4, 3)
    primal = solve_vc_lp(G)
    assert primal.objective == Fraction(4, 3)
    assert solve_matching_lp(G).objective == Fraction(4, 3)


def test_edgeless_instance_solves_to_zero():
    H = Hypergraph(3, 6, [])
    assert solve_vc_lp(H).objective == 0
    assert solve_matching_lp(H).objective == 0
    assert solve_vc_lp(H).support == ()


def test_values_are_fractions_in_exact_mode():
    G = complete(4, 3)
    sol = solve_vc_lp(G, mode="exact")
    assert all(isinstance(x, Fraction) for x in sol.values.values())
    assert isinstance(sol.objective, Fraction)


def test_float_mode_matches_exact_objective():
    for seed in range(12):
        G = random_hypergraph(9, 3, 0.4, seed)
        exact = solve_vc_lp(G, mode="exact").objective
        approx = solve_vc_lp(G, mode="float").objective
        assert abs(float(exact) - approx) < 1e-6


def test_float_matching_agrees_too():
    G = complete(5, 3)
    exact = solve_matching_lp(G, mode="exact").objective
    approx = solve_matching_lp(G, mode="float").objective
    assert abs(float(exact) - approx) < 1e-6


def test_unknown_mode_rejected():
    with pytest.raises(ParameterError):
        solve_vc_lp(complete(4, 3), mode="fast")


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 4), st.integers(5, 10))
def test_strong_duality_and_support_bound(seed, t, n):
    G = random_hypergraph(n, t, 0.45, seed)
    primal = solve_vc_lp(G)
    dual = solve_matching_lp(G)
    assert primal.objective == dual.objective
    assert len(primal.support) <= G.t * primal.objective
    report = check_complementary_slackness(primal, dual, G)
    assert report.support_size == len(primal.support)
    assert report.objective == primal.objective


def test_primal_feasible_and_dual_feasible():
    G = random_hypergraph(10, 3, 0.35, seed=77)
    primal = solve_vc_lp(G)
    dual = solve_matching_lp(G)
    for e in G.edges:
        assert sum(primal.value(v) for v in e) >= 1
    loads = {}
    for ei, e in enumerate(G.edges):
        for v in e:
            loads[v] = loads.get(v, Fraction(0)) + dual.value(ei)
    assert all(load <= 1 for load in loads.values())


def test_slackness_rejects_perturbed_primal():
    """A feasible but non-optimal primal must be called out by vertex name."""
    H = Hypergraph(3, 5, [(0, 1, 2), (0, 3, 4)])
    dual = solve_matching_lp(H)
    bad = LPSolution(
        kind="primal",
        values={0: Fraction(1), 1: Fraction(1, 3)},
        objective=Fraction(4, 3),
        mode="exact",
    )
    with pytest.raises(VerificationError, match="vertex 1 has positive weight"):
        check_complementary_slackness(bad, dual, H)


def test_slackness_rejects_undercovered_primal():
    H = Hypergraph(3, 3, [(0, 1, 2)])
    dual = solve_matching_lp(H)
    bad = LPSolution("primal", {0: Fraction(1, 2)}, Fraction(1, 2), "exact")
    with pytest.raises(VerificationError, match="undercovered"):
        check_complementary_slackness(bad, dual, H)


def test_slackness_requires_exact_mode():
    G = complete(4, 3)
    primal = solve_vc_lp(G, mode="float")
    dual = solve_matching_lp(G, mode="exact")
    with pytest.raises(ParameterError, match="exact"):
        check_complementary_slackness(primal, dual, G)


def test_size_guard_blocks_large_exact_solves():
    G = complete(15, 7)  # 15 vertices times 6435 edges is over the default cap
    with pytest.raises(ResourceLimitError):
        solve_vc_lp(G, mode="exact")
    # an explicit override unblocks it
    sol = solve_vc_lp(G, mode="exact", size_guard=200_000)
    assert sol.objective == Fraction(15, 7)


def test_size_guard_env_override(monkeypatch):
    monkeypatch.setenv("TURANCOVER_SIZE_GUARD", "10")
    with pytest.raises(ResourceLimitError):
        solve_vc_lp(complete(4, 3), mode="exact")
    # explicit argument wins over the environment
    assert solve_vc_lp(complete(4, 3), mode="exact", size_guard=1000).objective == Fraction(4, 3)


def test_blow_up_lp_known_value():
    B = blow_up(complete(4, 3), 2)
    primal = solve_vc_lp(B.hyper)
    assert primal.objective == 2
