import pytest

from hyperlambda.constraints import check
from hyperlambda.core import validate
from hyperlambda.families import (
    cartesian_product,
    complete_hypergraph,
    complete_uniform,
    hyperpath,
    hypertree_random,
    star_hypergraph,
)
from hyperlambda.schemes import (
    SchemeError,
    bound_suite,
    injectivity_lower_bound,
    scheme_from_line_colouring,
    scheme_greedy,
    scheme_hyperpath,
    scheme_hypertree,
    scheme_product_complete,
    scheme_product_star_complete,
    scheme_product_star_complete_hk,
    scheme_stable_set,
    scheme_star,
    scheme_strong_partition,
    star_lower_bound,
)
from hyperlambda.solver import (
    lambda_exact,
    strong_partition_exact,
    strong_stable_set_exact,
)


def recheck(outcome, hh=2, kk=1):
    report = check(outcome.hypergraph, hh, kk, outcome.colouring)
    assert report.valid
    assert report.span == outcome.claimed_span
    assert outcome.validated


# --- strong partition / stable set -------------------------------------------

def test_strong_partition_complete_uniform_singletons():
    h = complete_uniform(4, 3)
    out = scheme_strong_partition(h, 2, 1, [[v] for v in h.vertices])
    recheck(out)
    assert out.claimed_span == 6  # h(n-1), sharp for complete uniform


def test_strong_partition_star_three_classes():
    k312 = star_hypergraph(3, 1, 2)
    out = scheme_strong_partition(k312, 2, 1, [["u1"], ["y1", "y2"], ["y3", "y4"]])
    recheck(out)
    assert out.claimed_span == 1 * (5 - 3) + 2 * 2 == 6


def test_strong_partition_single_edge_singletons():
    h = validate(list("abcd"), [["a", "b", "c", "d"]])
    out = scheme_strong_partition(h, 2, 1, [[v] for v in h.vertices])
    assert out.claimed_span == 2 * 3  # h(r-1)


def test_strong_partition_rejects_class_meeting_edge_twice():
    k312 = star_hypergraph(3, 1, 2)
    with pytest.raises(SchemeError):
        scheme_strong_partition(k312, 2, 1, [["u1"], ["y1", "y3"], ["y2", "y4"]])


def test_strong_partition_with_exact_partition():
    for h in (star_hypergraph(4, 2, 2), hyperpath(3, 3)):
        out = scheme_strong_partition(h, 3, 1, strong_partition_exact(h))
        recheck(out, 3, 1)
        assert lambda_exact(h, 3, 1).optimum <= out.claimed_span


def test_stable_set_scheme():
    p32 = hyperpath(3, 2)
    w = strong_stable_set_exact(p32)
    out = scheme_stable_set(p32, 2, 1, w)
    recheck(out)
    assert out.claimed_span == 5 * 2 + 2 * (1 - 2) - 1 == 7


def test_stable_set_singleton_w():
    h = complete_uniform(4, 3)
    out = scheme_stable_set(h, 2, 1, [h.vertices[0]])
    recheck(out)
    assert out.claimed_span == (4 - 1) * 2  # (n-1)h


def test_stable_set_rejects_non_stable():
    h = complete_uniform(4, 3)
    with pytest.raises(SchemeError):
        scheme_stable_set(h, 2, 1, list(h.vertices[:2]))


# --- greedy ------------------------------------------------------------------

def test_greedy_single_edge():
    out = scheme_greedy(validate(list("abc"), [["a", "b", "c"]]))
    recheck(out)
    assert out.claimed_span == 4


def test_greedy_star_within_bound():
    out = scheme_greedy(star_hypergraph(3, 1, 2))
    recheck(out)
    assert 5 <= out.claimed_span <= (3 - 1) * (2 + 1) * 2


# --- star / hyperpath / hypertree ---------------------------------------------

def test_star_scheme_examples():
    assert scheme_star(3, 1, 2).claimed_span == 5
    assert scheme_star(2, 1, 4).claimed_span == 5  # star graph: m + 1
    assert scheme_star(7, 4, 3).claimed_span == 16
    for out in (scheme_star(3, 1, 2), scheme_star(7, 4, 3)):
        recheck(out)


def test_star_scheme_needs_two_edges():
    with pytest.raises(SchemeError):
        scheme_star(3, 1, 1)


def test_star_scheme_matches_exact_on_small_instances():
    for (r, c, m) in [(3, 1, 2), (3, 2, 2), (4, 1, 2), (4, 3, 2), (3, 1, 3)]:
        out = scheme_star(r, c, m)
        assert lambda_exact(out.hypergraph, 2, 1).optimum == out.claimed_span


def test_hyperpath_scheme_spans():
    assert scheme_hyperpath(3, 1).claimed_span == 4
    assert scheme_hyperpath(3, 2).claimed_span == 5
    out = scheme_hyperpath(3, 3)
    recheck(out)
    assert out.claimed_span == 6
    # explicit three-edge assignment from the inductive base
    assert out.colouring["v1"] == 0 and out.colouring["v2"] == 6
    assert scheme_hyperpath(4, 5).claimed_span == 8
    assert scheme_hyperpath(5, 4).claimed_span == 10


def test_hyperpath_scheme_rejects_r2():
    with pytest.raises(SchemeError):
        scheme_hyperpath(2, 3)


def test_hyperpath_matches_exact():
    for (r, m) in [(3, 2), (3, 3), (4, 2), (3, 4)]:
        out = scheme_hyperpath(r, m)
        assert lambda_exact(out.hypergraph, 2, 1).optimum == out.claimed_span


def test_hypertree_scheme_star_input():
    out = scheme_hypertree(star_hypergraph(3, 1, 3))
    recheck(out)
    assert out.claimed_span == 3 * 2 + 1  # D(r-1)+1


def test_hypertree_scheme_hyperpath_input():
    out = scheme_hypertree(hyperpath(3, 3))
    recheck(out)
    assert out.claimed_span == 6  # D(r-1)+2 with D=2, r=3


def test_hypertree_scheme_random_trees_in_theorem_range():
    for seed in range(8):
        t = hypertree_random(3, 4, 3, seed=seed)
        out = scheme_hypertree(t)
        recheck(out)
        from hyperlambda.core import max_degree

        d = max_degree(t)
        assert d * 2 + 1 <= out.claimed_span <= d * 2 + 2


def test_hypertree_scheme_rejects_non_tree():
    with pytest.raises(SchemeError):
        scheme_hypertree(complete_uniform(4, 3))


# --- line-graph lift ----------------------------------------------------------

def test_line_scheme_star():
    out = scheme_from_line_colouring(star_hypergraph(3, 1, 2))
    recheck(out)
    assert out.claimed_span <= 2 * 2 * 3 - 2


def test_line_scheme_hyperpath():
    out = scheme_from_line_colouring(hyperpath(3, 3))
    recheck(out)
    assert out.claimed_span <= 2 * 2 * 3 - 2
    assert lambda_exact(out.hypergraph, 2, 1).optimum <= out.claimed_span


def test_line_scheme_single_edge():
    out = scheme_from_line_colouring(complete_uniform(3, 3))
    assert out.claimed_span == 4  # colours 0,2,4


def test_line_scheme_rejects_nonlinear():
    with pytest.raises(SchemeError):
        scheme_from_line_colouring(complete_uniform(4, 3))


# --- products ------------------------------------------------------------------

def test_product_complete_4_3_exact():
    out = scheme_product_complete(4, 3)
    recheck(out)
    assert out.claimed_span == 11
    assert lambda_exact(out.hypergraph, 2, 1).optimum == 11


def test_product_complete_13_10():
    out = scheme_product_complete(13, 10)
    recheck(out)
    assert out.claimed_span == 129
    assert injectivity_lower_bound(out.hypergraph) == 129


def test_product_complete_2_2_is_a_documented_failure():
    # the 2x2 product is the four-cycle, whose span is 4 > 3
    with pytest.raises(SchemeError):
        scheme_product_complete(2, 2)
    c4 = cartesian_product(complete_hypergraph(2), complete_hypergraph(2))
    assert lambda_exact(c4, 2, 1).optimum == 4


def test_product_star_complete_flagships():
    out = scheme_product_star_complete(7, 4, 3, 14)
    recheck(out)
    assert out.claimed_span == 97

    out = scheme_product_star_complete(3, 1, 2, 3)
    recheck(out)
    assert out.claimed_span == 8
    assert lambda_exact(out.hypergraph, 2, 1).optimum == 8


def test_product_star_complete_r2_needs_wide_complete_factor():
    # with r=2 and n=m+1 the nr-1 value is unattainable: exact span is 6
    with pytest.raises(SchemeError):
        scheme_product_star_complete(2, 1, 2, 3)
    prod = cartesian_product(star_hypergraph(2, 1, 2), complete_hypergraph(3))
    assert lambda_exact(prod, 2, 1).optimum == 6
    # one more column restores the closed form
    out = scheme_product_star_complete(2, 1, 2, 4)
    recheck(out)
    assert out.claimed_span == 7
    assert lambda_exact(out.hypergraph, 2, 1).optimum == 7


def test_product_star_complete_m1_is_complete_product():
    out = scheme_product_star_complete(3, 2, 1, 3)
    recheck(out)
    assert out.claimed_span == 8


def test_product_star_hk_consistent_at_21():
    a = scheme_product_star_complete(3, 1, 2, 3)
    b = scheme_product_star_complete_hk(3, 1, 2, 3, 2, 1)
    assert a.claimed_span == b.claimed_span == 8


def test_product_star_hk_scaled_branch():
    out = scheme_product_star_complete_hk(3, 2, 2, 3, 3, 2)
    report = check(out.hypergraph, 3, 2, out.colouring)
    assert report.valid and out.claimed_span == 2 * 3 * 3 - 2 == 16
    assert lambda_exact(out.hypergraph, 3, 2).optimum == 16


def test_product_star_hk_low_branch_star_graph():
    # kr < h with r = 2: span k(r-1) + h(n-1)
    out = scheme_product_star_complete_hk(2, 1, 2, 4, 3, 1)
    report = check(out.hypergraph, 3, 1, out.colouring)
    assert report.valid and out.claimed_span == 1 + 3 * 3 == 10
    assert lambda_exact(out.hypergraph, 3, 1).optimum == 10


def test_product_star_hk_formula_failure_is_reported():
    # exact spans exceed the closed form once h > 2k on r >= 3 stars;
    # the scheme refuses to fabricate the claimed value
    with pytest.raises(SchemeError):
        scheme_product_star_complete_hk(3, 1, 2, 3, 3, 1)
    prod = cartesian_product(star_hypergraph(3, 1, 2), complete_hypergraph(3))
    assert lambda_exact(prod, 3, 1).optimum == 11  # formula would say 8


# --- certificates and bounds ---------------------------------------------------

def test_injectivity_bound():
    assert injectivity_lower_bound(complete_uniform(4, 3)) == 3
    assert injectivity_lower_bound(hyperpath(3, 3)) is None


def test_star_lower_bound():
    assert star_lower_bound(star_hypergraph(3, 1, 3)) == 3 * 2 + 1
    assert star_lower_bound(hyperpath(3, 3)) == 2 * 2 + 1
    assert star_lower_bound(validate(list("abc"), [["a", "b", "c"]])) == 4


def test_bound_suite_star():
    k312 = star_hypergraph(3, 1, 2)
    reports = {r.name: r for r in bound_suite(k312, 2, 1, lam=5)}
    assert all(r.holds for r in reports.values())
    assert reports["diameter-two"].rhs == ((3 - 1) * 2) ** 2 == 16
    assert reports["greedy-degree"].rhs == (3 - 1) * (2 + 1) * 2 == 12


def test_bound_suite_path_h3():
    from hyperlambda.families import path_graph

    p5 = path_graph(5)
    lam = lambda_exact(p5, 3, 1).optimum
    assert lam == 5
    reports = {r.name: r for r in bound_suite(p5, 3, 1, lam=lam)}
    assert reports["max-degree-h1"].rhs == 4 + 2 * 2 - 2 == 6
    assert all(r.holds for r in reports.values())
