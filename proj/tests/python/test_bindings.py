import itertools

import pytest

import arbor


def brute_force_rooted_mincut(graph):
    n, s = graph.n, graph.source
    best = None
    others = [v for v in range(n) if v != s]
    for size in range(1, len(others) + 1):
        for side in itertools.combinations(others, size):
            inside = set(side)
            rho = sum(c for (u, v, c) in graph.edges() if u not in inside and v in inside)
            best = rho if best is None else min(best, rho)
    return best


def test_from_edges_drops_source_in_arcs_and_loops():
    g = arbor.Graph.from_edges(3, 0, [(1, 0, 1), (0, 1, 2), (1, 1, 1), (1, 2, 1)])
    assert (g.n, g.m, g.source) == (3, 2, 0)
    assert g.edges() == [(0, 1, 2), (1, 2, 1)]


def test_parse_round_trip():
    text = "p dmc 3 2 1\na 1 2 1\na 2 3 4\n"
    g = arbor.Graph.parse(text)
    again = arbor.Graph.parse(g.serialize())
    assert again.edges() == g.edges()


def test_parse_error_raises():
    with pytest.raises(arbor.ArborError, match="parse"):
        arbor.Graph.parse("p dmc 2 1 1\na 1 2 0\n")


def test_generator_kinds():
    assert set(arbor.generator_kinds()) == {
        "random_gnm", "dag_layered", "two_cliques_bridge", "cycle_plus_chords", "known_packing"}
    with pytest.raises(arbor.ArborError):
        arbor.generate("nonexistent")


@pytest.mark.parametrize("seed", range(1, 21))
def test_mincut_matches_enumeration(seed):
    g = arbor.generate("random_gnm", n=7, m=18, max_cap=4, seed=seed)
    exact, side = arbor.exact_rooted_mincut(g)
    assert exact == brute_force_rooted_mincut(g)
    assert g.source not in side
    approx = arbor.approx_rooted_mincut(g, seed=seed)
    assert approx["value"] >= exact
    inside = set(approx["cut"])
    rho = sum(c for (u, v, c) in g.edges() if u not in inside and v in inside)
    assert rho == approx["value"]


def test_hierarchy_is_valid():
    g = arbor.generate("two_cliques_bridge", n=11, bridges=1, seed=3)
    h = arbor.build_hierarchy(g)
    assert h["violation"] is None
    assert h["phi_target"] == "1/8"
    assert len(h["levels"]) >= 2


@pytest.mark.parametrize("seed", range(1, 11))
def test_known_packing_yields_trees(seed):
    g = arbor.generate("known_packing", n=12, m=40, k=3, seed=seed)
    r = arbor.pack(g, 3, seed=seed)
    assert r.is_trees
    assert len(r.trees) == 3
    for tree in r.trees:
        assert arbor.verify_arborescence(g, tree) == (True, "")
    ok, why = arbor.verify_packing(g, r, 3)
    assert ok, why


def test_pack_above_mincut_returns_cut():
    g = arbor.generate("known_packing", n=10, m=20, k=2, seed=5)
    exact, _ = arbor.exact_rooted_mincut(g)
    r = arbor.pack(g, exact + 1)
    assert not r.is_trees
    assert g.source in r.cut
    assert r.cut_delta < exact + 1
    assert arbor.verify_packing(g, r, exact + 1)[0]


def test_pack_rejects_weighted_graph():
    g = arbor.Graph.from_edges(2, 0, [(0, 1, 3)])
    with pytest.raises(arbor.ArborError, match="unsupported"):
        arbor.pack(g, 1)
