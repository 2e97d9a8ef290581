"""Similarity graphs and clique percolation, pinned to a brute-force oracle."""

from itertools import combinations

import numpy as np
import pytest

from valuescope.embedding.model import VectorSet
from valuescope.variation import (
    CommunitySet,
    SimilarityGraph,
    clique_percolation,
    communities_json,
    community_of,
    compare_across,
    compare_json,
    graph_json,
    label_graph,
    maximal_cliques,
    threshold_sweep,
)

from tests.oracles import brute_force_cpm, graph_from_edges, random_graph


def test_cpm_matches_brute_force_oracle():
    rng = np.random.default_rng(101)
    for trial in range(200):
        n = int(rng.integers(2, 13))
        p = float(rng.uniform(0.1, 0.9))
        k = int(rng.integers(2, 5))
        nodes, edges = random_graph(rng, n, p)
        graph = graph_from_edges(nodes, edges)
        got = set(clique_percolation(graph, k).communities)
        expected = brute_force_cpm(nodes, edges, k)
        assert got == expected, f"trial {trial}: n={n} p={p:.2f} k={k}"


def test_k2_equals_connected_components():
    rng = np.random.default_rng(202)
    for trial in range(200):
        n = int(rng.integers(2, 13))
        p = float(rng.uniform(0.05, 0.9))
        nodes, edges = random_graph(rng, n, p)
        graph = graph_from_edges(nodes, edges)
        got = set(clique_percolation(graph, 2).communities)
        # independent component computation over nodes with at least one edge
        from tests.oracles import connected_components

        assert got == connected_components(nodes, edges), f"trial {trial}"


def test_permutation_invariance():
    rng = np.random.default_rng(303)
    nodes, edges = random_graph(rng, 10, 0.4)
    graph = graph_from_edges(nodes, edges)
    base = set(clique_percolation(graph, 3).communities)
    for _ in range(5):
        order = list(nodes)
        rng.shuffle(order)
        shuffled_edges = [(b, a) for a, b in edges]
        rng.shuffle(shuffled_edges)
        graph2 = graph_from_edges(order, shuffled_edges)
        assert set(clique_percolation(graph2, 3).communities) == base


def test_triangle_k3():
    g = graph_from_edges("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    cs = clique_percolation(g, 3)
    assert cs.communities == (frozenset("abc"),)


def test_two_triangles_sharing_vertex_k3():
    edges = [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("d", "e"), ("c", "e")]
    cs = clique_percolation(graph_from_edges("abcde", edges), 3)
    assert set(cs.communities) == {frozenset("abc"), frozenset("cde")}
    # the shared vertex belongs to both
    assert len(community_of(cs, "c")) == 2


def test_every_k_clique_inside_one_community():
    rng = np.random.default_rng(404)
    for _ in range(20):
        nodes, edges = random_graph(rng, 9, 0.5)
        graph = graph_from_edges(nodes, edges)
        for k in (2, 3, 4):
            communities = clique_percolation(graph, k).communities
            edge_set = {frozenset(e) for e in edges}
            for subset in combinations(sorted(nodes), k):
                if all(frozenset(p) in edge_set for p in combinations(subset, 2)):
                    homes = [c for c in communities if set(subset) <= c]
                    assert len(homes) == 1


def test_isolated_and_clique_free_nodes_in_no_community():
    g = graph_from_edges("abcd", [("a", "b")])
    cs = clique_percolation(g, 2)
    assert cs.communities == (frozenset("ab"),)
    assert community_of(cs, "c") == []


def test_k_below_two_rejected():
    g = graph_from_edges("ab", [("a", "b")])
    with pytest.raises(ValueError, match="k must be"):
        clique_percolation(g, 1)


def test_maximal_cliques_pivoting():
    adj = {
        "a": {"b", "c"},
        "b": {"a", "c"},
        "c": {"a", "b", "d"},
        "d": {"c"},
        "e": set(),
    }
    cliques = set(maximal_cliques(adj))
    assert cliques == {frozenset("abc"), frozenset("cd"), frozenset("e")}


# --- label graphs over hand-set vectors ---


def vector_model(vectors):
    tokens = tuple(sorted(vectors))
    U = np.array([vectors[t] for t in tokens], dtype=np.float64)
    return VectorSet(tokens, U, {t: i for i, t in enumerate(tokens)})


HAND_VECTORS = {
    "mother": [1.0, 0.0],
    "brother": [1.0, 0.2],
    "generos": [0.8, 0.6],
    "law": [-1.0, 0.1],
    "know": [0.0, 1.0],
}


def test_label_graph_hand_cosines():
    m = vector_model(HAND_VECTORS)
    g = label_graph(m, list(HAND_VECTORS), 0.5)
    got = {(a, b) for a, b, _ in g.edges}
    # cos(mother,brother)=0.981, cos(mother,generos)=0.8, cos(brother,generos)=0.902,
    # cos(generos,know)=0.6; all others below 0.5
    assert got == {
        ("brother", "mother"),
        ("generos", "mother"),
        ("brother", "generos"),
        ("generos", "know"),
    }
    weights = {(a, b): w for a, b, w in g.edges}
    assert weights[("generos", "mother")] == pytest.approx(0.8)


def test_label_graph_extreme_thresholds():
    m = vector_model(HAND_VECTORS)
    complete = label_graph(m, list(HAND_VECTORS), -1.0)
    assert len(complete.edges) == 10  # C(5,2)
    empty = label_graph(m, list(HAND_VECTORS), 1.0)
    assert empty.edges == ()


def test_label_graph_lists_missing_labels():
    m = vector_model(HAND_VECTORS)
    with pytest.raises(ValueError, match="ghost, wraith"):
        label_graph(m, ["mother", "wraith", "ghost"], 0.5)


def test_label_graph_rejects_bad_theta():
    m = vector_model(HAND_VECTORS)
    with pytest.raises(ValueError, match="theta"):
        label_graph(m, ["mother"], 1.5)


def test_community_of_seed_example():
    g = graph_from_edges(
        ["mother", "brother", "generos"],
        [("mother", "brother"), ("mother", "generos")],
    )
    cs = clique_percolation(g, 2)
    assert community_of(cs, "mother") == [frozenset({"mother", "brother", "generos"})]


def test_compare_across_hand_graphs():
    def cs(corpus_id, edges):
        nodes = {n for e in edges for n in e}
        return clique_percolation(graph_from_edges(nodes, edges, corpus_id), 2)

    germany = cs("germany", [("mother", "brother"), ("mother", "generos")])
    italy = cs("italy", [("mother", "know")])
    portugal = cs("portugal", [("mother", "brother"), ("mother", "know")])
    regions = compare_across([germany, italy, portugal], "mother")
    assert regions == {
        1: ["generos"],  # germany only
        5: ["brother"],  # germany + portugal
        6: ["know"],  # italy + portugal
    }


def test_compare_across_seed_nowhere():
    g = clique_percolation(graph_from_edges("ab", [("a", "b")]), 2)
    assert compare_across([g], "zzz") == {}


def test_compare_across_rejects_mixed_parameters():
    g1 = clique_percolation(graph_from_edges("ab", [("a", "b")], theta=0.5), 2)
    g2 = clique_percolation(graph_from_edges("ab", [("a", "b")], theta=0.7), 2)
    with pytest.raises(ValueError, match="inconsistent"):
        compare_across([g1, g2], "a")


def test_threshold_sweep_hand_vectors():
    m = vector_model(HAND_VECTORS)
    points = threshold_sweep(m, list(HAND_VECTORS), [-1.0, 0.5, 0.95, 1.0])
    assert [p.edge_count for p in points] == [10, 4, 1, 0]
    assert points[0].component_count == 1  # complete graph
    assert points[-1].component_count == 5  # all isolated
    # monotone non-increasing edge counts
    counts = [p.edge_count for p in points]
    assert counts == sorted(counts, reverse=True)


def test_threshold_sweep_validates_grid():
    m = vector_model(HAND_VECTORS)
    with pytest.raises(ValueError, match="empty"):
        threshold_sweep(m, ["mother"], [])
    with pytest.raises(ValueError, match="ascending"):
        threshold_sweep(m, ["mother"], [0.5, 0.1])


def test_json_exports():
    g = graph_from_edges("ab", [("a", "b")], corpus_id="g1", theta=0.4)
    payload = graph_json(g)
    assert payload["nodes"] == ["a", "b"]
    assert payload["edges"] == [{"a": "a", "b": "b", "weight": 1.0}]
    cs = clique_percolation(g, 2)
    assert communities_json(cs) == {
        "corpus_id": "g1",
        "k": 2,
        "theta": 0.4,
        "communities": [["a", "b"]],
    }
    cj = compare_json([cs], "a")
    assert cj["regions"] == {"1": ["b"]}
    assert cj["corpora"] == ["g1"]
