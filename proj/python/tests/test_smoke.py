import itertools

import networkx as nx
import pytest

import tetradecomp as td


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    return h


def test_graph_round_trip():
    g = td.double_wheel(5)
    assert g.order == 7
    assert g.size == 15
    assert td.Graph.parse(g.serialize("json"), "json") == g
    assert td.Graph.parse(g.serialize()) == g


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        td.Graph.parse("0 0\n")
    with pytest.raises(td.InputError):
        td.Graph([0, 1], [(0, 2)])


def test_connectivity_matches_networkx():
    for seed in range(6):
        g = td.random_k_connected(9, 4, seed)
        assert td.is_k_connected(g, 4)
        assert nx.node_connectivity(to_nx(g)) >= 4


def test_saw_has_no_tetra_separation():
    assert td.tetra_separations(td.circular_saw(10, 4)) == []
    assert td.is_4_angry(td.circular_saw(10, 4))


def test_k4m_separations_and_decomposition():
    g = td.kkm(4, "pure", 6)
    seps = td.tetra_separations(g)
    assert len(seps) == 50
    for a, b in seps:
        assert set(a) | set(b) == set(g.vertices())
    assert td.totally_nested(g) == []
    d = td.decompose(g)
    assert len(d["nodes"]) == 1
    assert d["nodes"][0]["class"]["verdict"] == "SprinkledK4m"


def test_ring_of_cliques_decomposes_along_nested_separations():
    g = td.cycle_of_cliques(4, 6)
    nested = td.totally_nested(g)
    assert nested
    assert nested == td.totally_nested(g, method="oracle")
    d = td.decompose(g)
    assert len(d["edges"]) == len(d["nodes"]) - 1
    angry = td.classify_4_angry(g)
    assert not angry["angry"]
    assert "nestedWitness" in angry


def test_double_wheel_is_angry_with_shape_three():
    r = td.classify_4_angry(td.double_wheel(6))
    assert r["angry"]
    assert 3 in r["shapes"]


def test_tri_decompose_wheel():
    d = td.tri_decompose(td.wheel(6))
    assert [n["class"]["verdict"] for n in d["nodes"]] == ["GeneralisedWheel"]


def test_ydelta_of_prism():
    h = td.ydelta(td.prism())
    assert h.order == 9
    assert nx.node_connectivity(to_nx(h)) == 3


def test_pipeline_reaches_tetra_stage():
    cube = td.Graph.from_edges(
        [(u, v) for u, v in itertools.combinations(range(8), 2) if bin(u ^ v).count("1") == 1]
    )
    report = td.pipeline(cube)
    stages = {n["stage"] for n in report["nodes"]}
    assert "tetra-torso" in stages


def test_bound_raises_capability_error():
    with pytest.raises(td.CapabilityError):
        td.tetra_separations(td.circular_saw(14, 4), max_vertices=20)
