"""Brute-force reference implementations shared by test modules.

These are intentionally naive: correctness over speed, so the production
algorithms can be pinned against them on small random inputs.
"""

from itertools import combinations

from valuescope.variation import SimilarityGraph


def graph_from_edges(nodes, edges, corpus_id="g", theta=0.5):
    weighted = tuple((min(a, b), max(a, b), 1.0) for a, b in edges)
    return SimilarityGraph(corpus_id, theta, tuple(sorted(nodes)), weighted)


def brute_force_cpm(nodes, edge_pairs, k):
    """Enumerate all k-subsets that are cliques; union-find on (k-1)-overlap."""
    edge_set = {frozenset(e) for e in edge_pairs}

    def is_clique(subset):
        return all(frozenset(p) in edge_set for p in combinations(subset, 2))

    k_cliques = [frozenset(s) for s in combinations(sorted(nodes), k) if is_clique(s)]
    parent = list(range(len(k_cliques)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(k_cliques)):
        for j in range(i + 1, len(k_cliques)):
            if len(k_cliques[i] & k_cliques[j]) >= k - 1:
                parent[find(i)] = find(j)
    groups = {}
    for i, clique in enumerate(k_cliques):
        groups.setdefault(find(i), set()).update(clique)
    return {frozenset(c) for c in groups.values()}


def connected_components(nodes, edges):
    """Components with at least one edge, by depth-first search."""
    adj = {n: set() for n in nodes}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen, components = set(), set()
    for start in nodes:
        if start in seen or not adj[start]:
            continue
        stack, comp = [start], set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(adj[v] - comp)
        seen |= comp
        components.add(frozenset(comp))
    return components


def random_graph(rng, n, p):
    nodes = [f"n{i}" for i in range(n)]
    edges = [(a, b) for a, b in combinations(nodes, 2) if rng.random() < p]
    return nodes, edges
