import math

import pytest

from hyperlambda.core import (
    Hypergraph,
    InvalidHypergraphError,
    degree,
    diagnose,
    distance,
    from_json_dict,
    star,
    structure_summary,
    to_json_dict,
    validate,
)
from hyperlambda.families import complete_uniform, hyperpath, star_hypergraph


def test_validate_single_edge():
    h = validate(["a", "b", "c"], [["a", "b", "c"]])
    s = structure_summary(h)
    assert s.rank == 3 and s.corank == 3 and s.uniform


def test_validate_rejects_containment():
    problems = diagnose(["a", "b", "c"], [["a", "b"], ["a", "b", "c"]])
    assert any(p.code == "containment" for p in problems)
    with pytest.raises(InvalidHypergraphError):
        validate(["a", "b", "c"], [["a", "b"], ["a", "b", "c"]])


def test_validate_rejects_loop():
    problems = diagnose(["a"], [["a"]])
    assert any(p.code == "small-edge" for p in problems)


def test_validate_rejects_duplicates_and_unknown():
    problems = diagnose(["a", "a", "b"], [["a", "b"], ["a", "b"], ["a", "z"]])
    codes = {p.code for p in problems}
    assert {"duplicate-vertex", "duplicate-edge", "unknown-vertex"} <= codes


def test_degree_star_centre_and_leaf():
    k312 = star_hypergraph(3, 1, 2)
    assert degree(k312, "u1") == 2
    assert degree(k312, "y1") == 1


def test_degree_complete_uniform():
    # a vertex of the complete 3-uniform hypergraph on 4 vertices lies in
    # C(3,2) = 3 triples
    h43 = complete_uniform(4, 3)
    assert all(degree(h43, v) == 3 for v in h43.vertices)


def test_structure_summary_complete34():
    s = structure_summary(complete_uniform(4, 3))
    assert s.rank == 3 and s.corank == 3 and s.uniform
    assert not s.linear
    assert s.connected and s.diameter == 1


def test_structure_summary_hyperpath():
    s = structure_summary(hyperpath(3, 3))
    assert s.rank == 3 and s.corank == 3 and s.uniform and s.linear
    assert s.diameter == 3


def test_structure_summary_disconnected():
    h = validate(list("abcd"), [["a", "b"], ["c", "d"]])
    s = structure_summary(h)
    assert not s.connected
    assert s.diameter == math.inf


def test_star_at_centre_is_whole_star_hypergraph():
    k312 = star_hypergraph(3, 1, 2)
    st = star(k312, "u1")
    assert set(st.vertices) == set(k312.vertices)
    assert set(st.edges) == set(k312.edges)


def test_star_at_leaf_is_single_edge():
    k312 = star_hypergraph(3, 1, 2)
    st = star(k312, "y1")
    assert len(st.edges) == 1


def test_star_at_hyperpath_connector_is_two_edges_sharing_one_vertex():
    p33 = hyperpath(3, 3)
    st = star(p33, "v1")
    assert len(st.edges) == 2
    e1, e2 = (set(e) for e in st.edges)
    assert e1 & e2 == {"v1"}


def test_distance():
    p32 = hyperpath(3, 2)
    # two vertices in one edge
    assert distance(p32, "w1_1", "w1_2") == 1
    # endpoints of distinct edges go through the connector
    assert distance(p32, "w1_1", "w2_1") == 2
    disconnected = validate(list("abcd"), [["a", "b"], ["c", "d"]])
    assert distance(disconnected, "a", "c") == math.inf
    assert distance(p32, "v1", "v1") == 0
    with pytest.raises(KeyError):
        distance(p32, "nope", "v1")


def test_star_edge_count_equals_degree():
    p33 = hyperpath(3, 3)
    for v in p33.vertices:
        assert len(star(p33, v).edges) == degree(p33, v)


def test_json_round_trip_is_canonical():
    h = star_hypergraph(3, 1, 2)
    blob = to_json_dict(h)
    again = from_json_dict(blob)
    assert to_json_dict(again) == blob
    assert blob["edges"] == sorted(blob["edges"])


def test_json_read_is_order_insensitive():
    a = from_json_dict({"vertices": ["b", "a", "c"], "edges": [["c", "a", "b"]]})
    b = from_json_dict({"vertices": ["a", "b", "c"], "edges": [["a", "b", "c"]]})
    assert to_json_dict(a) == to_json_dict(b)
