import pytest

from hyperlambda.constraints import check, span
from hyperlambda.core import validate
from hyperlambda.families import (
    cartesian_product,
    complete_graph,
    complete_hypergraph,
    complete_uniform,
    cycle_graph,
    hyperpath,
    line_graph,
    path_graph,
    s_section,
    star_hypergraph,
)
from hyperlambda.solver import (
    SolveBudget,
    chromatic_number_graph,
    find_colouring_at_span,
    greedy_colouring,
    lambda_exact,
    strong_chromatic_exact,
    strong_independence_exact,
    strong_partition_exact,
    strong_stable_set_exact,
)


def test_lambda_complete_graph_is_h_times_n_minus_1():
    assert lambda_exact(complete_graph(3), 2, 1).optimum == 4
    assert lambda_exact(complete_graph(4), 2, 1).optimum == 6
    assert lambda_exact(complete_uniform(4, 3), 3, 1).optimum == 9


def test_lambda_star_and_path():
    assert lambda_exact(star_hypergraph(3, 1, 2), 2, 1).optimum == 5
    assert lambda_exact(path_graph(3), 2, 1).optimum == 3


def test_lambda_witness_validates():
    for h in (complete_graph(4), star_hypergraph(3, 1, 2), hyperpath(3, 2)):
        res = lambda_exact(h, 2, 1)
        report = check(h, 2, 1, res.witness)
        assert report.valid and report.span == res.optimum


def test_lambda_equals_on_sections():
    h = star_hypergraph(4, 2, 2)
    base = lambda_exact(h, 2, 1).optimum
    assert lambda_exact(s_section(h, 2), 2, 1).optimum == base
    assert lambda_exact(s_section(h, 3), 2, 1).optimum == base


def test_lambda_monotone_in_h_and_k():
    h = star_hypergraph(3, 1, 2)
    values = {
        (hh, kk): lambda_exact(h, hh, kk).optimum
        for hh in (1, 2, 3)
        for kk in (0, 1, 2)
        if hh > kk
    }
    assert values[(2, 1)] <= values[(3, 1)]
    assert values[(2, 0)] <= values[(2, 1)]
    assert values[(1, 0)] <= values[(2, 0)]
    assert values[(3, 1)] <= values[(3, 2)]


def test_lambda_rejects_bad_hk():
    with pytest.raises(ValueError):
        lambda_exact(complete_graph(3), 1, 1)


def test_chromatic_identity_with_l10():
    for g in (complete_graph(4), cycle_graph(5), path_graph(4)):
        assert chromatic_number_graph(g) - 1 == lambda_exact(g, 1, 0).optimum


def test_chromatic_examples():
    assert chromatic_number_graph(complete_graph(4)) == 4
    assert chromatic_number_graph(cycle_graph(5)) == 3
    assert chromatic_number_graph(line_graph(hyperpath(3, 3))) == 2
    with pytest.raises(ValueError):
        chromatic_number_graph(complete_uniform(4, 3))


def test_strong_chromatic():
    assert strong_chromatic_exact(complete_uniform(4, 3)) == 4
    assert strong_chromatic_exact(star_hypergraph(3, 1, 2)) == 3
    prod = cartesian_product(star_hypergraph(3, 1, 2), complete_hypergraph(3))
    assert strong_chromatic_exact(prod) == 3  # min{n,c} + r - c


def test_strong_partition_classes_hit_edges_at_most_once():
    h = star_hypergraph(3, 1, 2)
    classes = strong_partition_exact(h)
    assert sorted(v for cl in classes for v in cl) == sorted(h.vertices)
    for cl in classes:
        for e in h.edges:
            assert len(set(cl) & set(e)) <= 1


def test_strong_independence():
    assert strong_independence_exact(complete_uniform(5, 3)) == 1
    assert strong_independence_exact(hyperpath(3, 3)) == 3
    assert strong_independence_exact(validate(list("abc"), [["a", "b", "c"]])) == 1
    w = strong_stable_set_exact(hyperpath(3, 3))
    assert len(w) == 3
    for e in hyperpath(3, 3).edges:
        assert len(set(w) & set(e)) <= 1


def test_greedy_is_valid():
    for h in (complete_graph(5), star_hypergraph(4, 2, 3), hyperpath(4, 3)):
        f = greedy_colouring(h, 2, 1)
        assert check(h, 2, 1, f).valid


def test_find_colouring_at_span_decision():
    k3 = complete_graph(3)
    assert find_colouring_at_span(k3, 2, 1, 3) is None
    f = find_colouring_at_span(k3, 2, 1, 4)
    assert f is not None and check(k3, 2, 1, f).valid


def test_budget_exhaustion_returns_bracket():
    h = cartesian_product(complete_hypergraph(4), complete_hypergraph(4))
    res = lambda_exact(h, 2, 1, SolveBudget(node_limit=5))
    assert res.exhausted and res.optimum is None
    assert res.lower_bound <= 15 <= res.upper_bound
    assert check(h, 2, 1, res.witness).valid


def test_max_span_budget_caps_search():
    k4 = complete_graph(4)  # lambda = 6
    res = lambda_exact(k4, 2, 1, SolveBudget(max_span=4))
    assert res.optimum is None
    assert res.lower_bound == 5
    assert res.upper_bound >= 6


def test_solver_deterministic():
    h = star_hypergraph(3, 1, 3)
    a = lambda_exact(h, 2, 1)
    b = lambda_exact(h, 2, 1)
    assert a.witness == b.witness and a.nodes_explored == b.nodes_explored


def test_lambda_edgeless_is_zero():
    h = validate(["a", "b"], [])
    assert lambda_exact(h, 2, 1).optimum == 0
