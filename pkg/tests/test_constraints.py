import pytest

from hyperlambda.constraints import build_constraints, check, holes, span
from hyperlambda.core import validate
from hyperlambda.families import complete_graph, hyperpath, s_section, star_hypergraph


def test_single_triple_both_levels():
    h = validate(list("abc"), [["a", "b", "c"]])
    cs = build_constraints(h)
    pairs = {("a", "b"), ("a", "c"), ("b", "c")}
    assert cs.level_h == pairs
    assert cs.level_k == pairs  # witness: the third vertex of the edge


def test_single_2_edge_has_no_level_k():
    h = validate(list("ab"), [["a", "b"]])
    cs = build_constraints(h)
    assert cs.level_h == {("a", "b")}
    assert cs.level_k == frozenset()


def test_two_triples_sharing_a_vertex():
    # edges {a,b,v} and {v,c,d}: (a,c) is level-k via witness v, not level-h
    h = validate(list("abvcd"), [["a", "b", "v"], ["v", "c", "d"]])
    cs = build_constraints(h)
    assert ("a", "c") in cs.level_k
    assert ("a", "c") not in cs.level_h


def test_requirement_h_dominates():
    h = validate(list("abc"), [["a", "b", "c"]])
    req = build_constraints(h).requirement(2, 1)
    assert set(req.values()) == {2}


def test_check_complete_graph_valid():
    k3 = complete_graph(3)
    f = dict(zip(k3.vertices, (0, 2, 4)))
    report = check(k3, 2, 1, f)
    assert report.valid and report.span == 4
    # literal reading of the hole definition: 1 and 3 are both flanked
    assert report.holes == (1, 3)


def test_check_reports_violation():
    k3 = complete_graph(3)
    f = dict(zip(k3.vertices, (0, 1, 3)))
    report = check(k3, 2, 1, f)
    assert not report.valid
    assert len(report.violations) == 1
    v = report.violations[0]
    assert v.required == 2 and v.actual == 1


def test_check_star_scheme_colours():
    k312 = star_hypergraph(3, 1, 2)
    f = {"u1": 0, "y1": 2, "y3": 4, "y2": 3, "y4": 5}
    report = check(k312, 2, 1, f)
    assert report.valid and report.span == 5
    assert report.holes == (1,)


def test_check_rejects_partial_and_bad_hk():
    k3 = complete_graph(3)
    with pytest.raises(ValueError):
        check(k3, 2, 1, {k3.vertices[0]: 0})
    with pytest.raises(ValueError):
        check(k3, 1, 1, {v: 0 for v in k3.vertices})


def test_check_k_zero_allowed():
    k3 = complete_graph(3)
    f = dict(zip(k3.vertices, (0, 1, 2)))
    assert check(k3, 1, 0, f).valid


def test_holes_literal_definition():
    assert holes({"a": 0, "b": 2}) == [1]
    assert holes({"a": 0, "b": 1, "c": 2}) == []
    assert holes({"a": 0, "b": 3}) == []


def test_span():
    assert span({"a": 2, "b": 7}) == 5
    assert span({}) == 0


def test_two_section_has_identical_constraints():
    for h in (star_hypergraph(3, 1, 2), hyperpath(3, 3), star_hypergraph(4, 2, 2)):
        assert build_constraints(h) == build_constraints(s_section(h, 2))


def test_level_k_minus_level_h_is_distance_two_for_graphs():
    from hyperlambda.core import distance

    g = validate(list("abcde"), [["a", "b"], ["b", "c"], ["c", "d"], ["d", "e"], ["e", "a"]])
    cs = build_constraints(g)
    only_k = cs.level_k - cs.level_h
    expected = {
        (u, v)
        for i, u in enumerate(g.vertices)
        for v in g.vertices[i + 1:]
        if distance(g, u, v) == 2
    }
    assert only_k == expected


def test_perturbing_a_valid_colouring_is_flagged():
    k312 = star_hypergraph(3, 1, 2)
    f = {"u1": 0, "y1": 2, "y3": 4, "y2": 3, "y4": 5}
    assert check(k312, 2, 1, f).valid
    g = dict(f)
    g["y1"] = 1  # breaks the co-edge gap with u1
    report = check(k312, 2, 1, g)
    assert not report.valid
    assert any(v.pair == ("u1", "y1") for v in report.violations)
