import pytest

import ferrers


def test_generate_and_recognize():
    g = ferrers.generate("crown", [3])
    assert (g.u_count, g.v_count, g.edge_count) == (3, 3, 6)
    cert = ferrers.is_ferrers(g)
    assert not cert["ferrers"]
    assert cert["witness"] == (0, 1, 1, 0)
    assert ferrers.is_ferrers(ferrers.generate("path", [2]))["ferrers"]


def test_graph_round_trip():
    g = ferrers.Graph(2, 2, [(0, 0), (1, 1), (0, 1)])
    assert g.edges == [(0, 0), (0, 1), (1, 1)]
    assert ferrers.parse_edge_list(g.to_edge_list()) == g
    assert ferrers.parse_matrix(g.to_matrix()) == g
    assert g.edge_id(1, 1) == 2
    assert g.edge_id(1, 0) is None


def test_fp_exact_and_witness():
    g = ferrers.generate("cycle", [8])
    r = ferrers.fp_exact(g)
    assert r["value"] == 3
    assert r["lower"] <= 3 <= r["upper"]
    assert ferrers.verify_partition(g, r["partition"]) == "ok"
    assert ferrers.fp_exact(g, jobs=2)["partition"] == r["partition"]


def test_bounds_and_bruteforce():
    b = ferrers.bounds(ferrers.generate("crown", [4]))
    assert (b["nu_ind"], b["width_u"], b["width_v"], b["chi_conflict"]) == (2, 4, 4, 2)
    assert ferrers.fp_bruteforce(ferrers.generate("path", [5])) == 2


def test_decide_k():
    g = ferrers.generate("crown", [4])
    assert ferrers.decide_k(g, 1) is None
    parts = ferrers.decide_k(g, 2)
    assert len(parts) == 2
    assert ferrers.verify_partition(g, parts) == "ok"


def test_constructions():
    assert len(ferrers.path_partition(13)) == 4
    assert len(ferrers.cycle_partition(14)) == 5
    assert len(ferrers.crown_partition(9)) == 2
    assert len(ferrers.ladder_partition(7)) == 4
    g = ferrers.generate("kmn", [5, 6, 3])
    assert ferrers.verify_partition(g, ferrers.kmn_minus_matching_partition(5, 6, 3)) == "ok"
    u = ferrers.disjoint_union([ferrers.generate("path", [4])] * 2)
    assert ferrers.fp_exact(u)["value"] == 2


def test_errors():
    with pytest.raises(ValueError):
        ferrers.generate("cycle", [7])
    with pytest.raises(ValueError):
        ferrers.Graph(1, 1, [(0, 3)])
    with pytest.raises(ferrers.SizeCapExceeded):
        ferrers.fp_exact(ferrers.generate("crown", [7]))
    g = ferrers.generate("path", [4])
    assert ferrers.verify_partition(g, [[0, 1]]).startswith("missing_edge")
