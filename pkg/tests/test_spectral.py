import math
from fractions import Fraction

import numpy as np
import pytest

from hyperlambda.core import validate
from hyperlambda.families import (
    complete_graph,
    complete_uniform,
    cube_graph,
    cycle_graph,
    hyperpath,
    petersen_graph,
    s_section,
    star_hypergraph,
)
from hyperlambda.solver import lambda_exact
from hyperlambda.spectral import (
    adjacency_matrix,
    check_cheeger,
    check_gap_corollary,
    check_gap_corollary_hypergraph,
    check_lambda_expansion,
    expansion_constant_exact,
    regular_degree,
    spectral_gap,
    spectrum,
)


def test_adjacency_matrix_single_triple():
    h = validate(list("abc"), [["a", "b", "c"]])
    a = adjacency_matrix(h)
    assert a.shape == (3, 3)
    assert np.array_equal(a, np.ones((3, 3)) - np.eye(3))


def test_adjacency_matrix_equals_two_section():
    for h in (star_hypergraph(3, 1, 2), hyperpath(3, 3), complete_uniform(4, 3)):
        two = s_section(h, 2)
        reindex = [two.vertices.index(v) for v in h.vertices]
        a2 = adjacency_matrix(two)[np.ix_(reindex, reindex)]
        assert np.array_equal(adjacency_matrix(h), a2)


def test_spectrum_k4():
    mu = spectrum(complete_graph(4)).eigenvalues
    assert np.allclose(mu, [3, -1, -1, -1])


def test_spectrum_c4():
    mu = spectrum(cycle_graph(4)).eigenvalues
    assert np.allclose(mu, [2, 0, 0, -2])


def test_spectrum_petersen():
    mu = spectrum(petersen_graph()).eigenvalues
    assert np.allclose(mu, [3] + [1] * 5 + [-2] * 4)
    assert abs(spectral_gap(petersen_graph()) - 2) < 1e-9


def test_spectrum_sum_is_trace():
    for g in (complete_graph(5), cycle_graph(7), cube_graph()):
        assert abs(sum(spectrum(g).eigenvalues)) < 1e-8


def test_spectral_gap_examples():
    assert abs(spectral_gap(complete_graph(5)) - 5) < 1e-9
    assert abs(spectral_gap(cycle_graph(6)) - 1) < 1e-9
    disconnected = validate(list("abcd"), [["a", "b"], ["c", "d"]])
    assert abs(spectral_gap(disconnected)) < 1e-9


def test_expansion_exact_values():
    assert expansion_constant_exact(complete_graph(4)) == 2
    assert expansion_constant_exact(cycle_graph(6)) == Fraction(2, 3)
    assert expansion_constant_exact(cycle_graph(4)) == 1
    assert expansion_constant_exact(petersen_graph()) == 1


def test_expansion_rejects_bad_inputs():
    with pytest.raises(ValueError):
        expansion_constant_exact(complete_uniform(4, 3))
    with pytest.raises(ValueError):
        expansion_constant_exact(validate(list("abcd"), [["a", "b"], ["c", "d"]]))


def test_expansion_parallel_matches_sequential():
    g = petersen_graph()
    assert expansion_constant_exact(g, jobs=2) == expansion_constant_exact(g)


def test_expansion_invariant_under_relabelling():
    import random

    g = cycle_graph(7)
    rng = random.Random(3)
    perm = dict(zip(g.vertices, rng.sample(g.vertices, len(g.vertices))))
    relabelled = validate(
        sorted(perm.values()),
        sorted(sorted([perm[u], perm[v]]) for u, v in g.edges),
    )
    assert expansion_constant_exact(relabelled) == expansion_constant_exact(g)


def test_cheeger_bounds_hold_on_named_graphs():
    for g in (complete_graph(4), cycle_graph(6), petersen_graph(), cube_graph()):
        for rep in check_cheeger(g):
            assert rep.holds, rep


def test_cheeger_rejects_irregular():
    from hyperlambda.families import path_graph

    with pytest.raises(ValueError):
        check_cheeger(path_graph(4))


def test_span_expansion_inequality():
    k4 = complete_graph(4)
    rep = check_lambda_expansion(k4, lambda_exact(k4, 2, 1).optimum)
    assert rep.holds and abs(rep.rhs - 3 * 6 * math.sqrt(2)) < 1e-9

    c6 = cycle_graph(6)
    assert check_lambda_expansion(c6, lambda_exact(c6, 2, 1).optimum).holds

    pet = petersen_graph()
    rep = check_lambda_expansion(pet, 9)
    assert rep.holds and rep.lhs == 1


def test_gap_corollaries():
    k4 = complete_graph(4)
    rep = check_gap_corollary(k4, 6)
    assert rep.holds and abs(rep.lhs - 4) < 1e-9

    h43 = complete_uniform(4, 3)
    rep = check_gap_corollary_hypergraph(h43, 6)
    assert rep.holds and abs(rep.lhs - 4) < 1e-9
    assert abs(rep.rhs - 2 * 3 * 2 * 6 * math.sqrt(2)) < 1e-9

    c5 = cycle_graph(5)
    rep = check_gap_corollary_hypergraph(c5, 4)
    assert rep.holds
    assert abs(rep.lhs - (2 - 2 * math.cos(2 * math.pi / 5))) < 1e-9


def test_regular_degree():
    assert regular_degree(petersen_graph()) == 3
    assert regular_degree(complete_uniform(4, 3)) == 3
    from hyperlambda.families import path_graph

    assert regular_degree(path_graph(3)) is None
