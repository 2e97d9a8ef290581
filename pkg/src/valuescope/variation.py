"""Label similarity graphs, overlapping communities, and cross-corpus comparison.

For one slice, the graph has an edge between two group labels when the
cosine of their target vectors reaches the threshold. Communities come
from clique percolation: unions of k-cliques connected through shared
(k-1)-node overlaps, computed from maximal cliques (pivoting
Bron-Kerbosch) joined when they share at least k-1 vertices. For k=2
this reduces to connected components with at least two nodes.
"""

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from .embedding.model import cosine


@dataclass(frozen=True)
class SimilarityGraph:
    corpus_id: str
    theta: float
    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str, float], ...]  # (a, b, weight), a < b

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {n: set() for n in self.nodes}
        for a, b, _ in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


@dataclass(frozen=True)
class CommunitySet:
    corpus_id: str
    k: int
    theta: float
    communities: tuple[frozenset[str], ...]  # canonical order, see _canonical


def _canonical(communities: Iterable[frozenset[str]]) -> tuple[frozenset[str], ...]:
    return tuple(sorted(communities, key=lambda c: (sorted(c), len(c))))


def label_graph(slice_model, labels: Sequence[str], theta: float) -> SimilarityGraph:
    """Thresholded pairwise-cosine graph over ``labels`` in one slice."""
    if not -1.0 <= theta <= 1.0:
        raise ValueError(f"theta must be in [-1, 1], got {theta}")
    missing = sorted(l for l in labels if l not in _index_of(slice_model))
    if missing:
        raise ValueError(f"labels missing from vocabulary: {', '.join(missing)}")
    nodes = tuple(sorted(set(labels)))
    edges = []
    for i, a in enumerate(nodes):
        for b in nodes[i + 1 :]:
            weight = cosine(slice_model, a, b)
            if weight >= theta:
                edges.append((a, b, weight))
    corpus_id = getattr(slice_model, "corpus_id", "")
    return SimilarityGraph(corpus_id, theta, nodes, tuple(edges))


def _index_of(model) -> Mapping[str, int]:
    vocab = getattr(model, "vocab", None)
    if vocab is not None:
        return vocab.index
    return model.index


def maximal_cliques(adjacency: Mapping[str, set[str]]) -> list[frozenset[str]]:
    """All maximal cliques, via Bron-Kerbosch with pivoting."""
    cliques: list[frozenset[str]] = []

    def expand(include: set[str], candidates: set[str], excluded: set[str]) -> None:
        if not candidates and not excluded:
            cliques.append(frozenset(include))
            return
        pivot = max(candidates | excluded, key=lambda u: len(adjacency[u] & candidates))
        for v in list(candidates - adjacency[pivot]):
            expand(include | {v}, candidates & adjacency[v], excluded & adjacency[v])
            candidates.remove(v)
            excluded.add(v)

    expand(set(), set(adjacency), set())
    return cliques


def _connected_components(adjacency: Mapping[str, set[str]]) -> list[set[str]]:
    seen: set[str] = set()
    components = []
    for start in adjacency:
        if start in seen:
            continue
        stack, component = [start], set()
        while stack:
            node = stack.pop()
            if node in component:
                continue
            component.add(node)
            stack.extend(adjacency[node] - component)
        seen |= component
        components.append(component)
    return components


def clique_percolation(graph: SimilarityGraph, k: int = 2) -> CommunitySet:
    """Overlapping communities of ``graph`` at clique size ``k``."""
    if k < 2:
        raise ValueError(f"k must be ≥ 2, got {k}")
    adjacency = graph.adjacency()
    if k == 2:
        # 2-cliques are edges; percolation joins edges sharing a node
        communities = [
            frozenset(c) for c in _connected_components(adjacency) if len(c) >= 2
        ]
        return CommunitySet(graph.corpus_id, k, graph.theta, _canonical(communities))
    cliques = [c for c in maximal_cliques(adjacency) if len(c) >= k]
    # union-find over maximal cliques joined on (k-1)-node overlaps
    parent = list(range(len(cliques)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(cliques)):
        for j in range(i + 1, len(cliques)):
            if len(cliques[i] & cliques[j]) >= k - 1:
                parent[find(i)] = find(j)
    merged: dict[int, set[str]] = {}
    for i, clique in enumerate(cliques):
        merged.setdefault(find(i), set()).update(clique)
    communities = [frozenset(c) for c in merged.values()]
    return CommunitySet(graph.corpus_id, k, graph.theta, _canonical(communities))


def community_of(community_set: CommunitySet, seed_label: str) -> list[frozenset[str]]:
    """Communities containing ``seed_label`` (empty when it percolates nowhere)."""
    return [c for c in community_set.communities if seed_label in c]


def compare_across(
    community_sets: Sequence[CommunitySet], seed_label: str
) -> dict[int, list[str]]:
    """Partition the seed's co-members by corpus presence.

    Bit ``i`` of a region key means the label co-clusters with the seed
    in ``community_sets[i]``. Requires one (k, theta) across slices.
    """
    if not community_sets:
        return {}
    first = community_sets[0]
    for other in community_sets[1:]:
        if other.k != first.k or other.theta != first.theta:
            raise ValueError(
                f"inconsistent parameters: {other.corpus_id} ran (k={other.k}, "
                f"theta={other.theta}), {first.corpus_id} ran (k={first.k}, "
                f"theta={first.theta})"
            )
    masks: dict[str, int] = {}
    for bit, cs in enumerate(community_sets):
        members: set[str] = set()
        for community in community_of(cs, seed_label):
            members |= community
        members.discard(seed_label)
        for label in members:
            masks[label] = masks.get(label, 0) | (1 << bit)
    regions: dict[int, list[str]] = {}
    for label, mask in masks.items():
        regions.setdefault(mask, []).append(label)
    return {mask: sorted(labels) for mask, labels in sorted(regions.items())}


class SweepPoint(NamedTuple):
    theta: float
    edge_count: int
    component_count: int


def threshold_sweep(
    slice_model, labels: Sequence[str], theta_grid: Sequence[float]
) -> list[SweepPoint]:
    """Edge and component counts of the label graph at each threshold."""
    if not theta_grid:
        raise ValueError("theta grid is empty")
    if list(theta_grid) != sorted(theta_grid):
        raise ValueError("theta grid must be ascending")
    base = label_graph(slice_model, labels, -1.0)
    points = []
    for theta in theta_grid:
        edges = [(a, b, w) for a, b, w in base.edges if w >= theta]
        graph = SimilarityGraph(base.corpus_id, theta, base.nodes, tuple(edges))
        components = _connected_components(graph.adjacency())
        points.append(SweepPoint(theta, len(edges), len(components)))
    return points


def graph_json(graph: SimilarityGraph) -> dict:
    return {
        "corpus_id": graph.corpus_id,
        "theta": graph.theta,
        "nodes": list(graph.nodes),
        "edges": [{"a": a, "b": b, "weight": w} for a, b, w in graph.edges],
    }


def communities_json(community_set: CommunitySet) -> dict:
    return {
        "corpus_id": community_set.corpus_id,
        "k": community_set.k,
        "theta": community_set.theta,
        "communities": [sorted(c) for c in community_set.communities],
    }


def compare_json(community_sets: Sequence[CommunitySet], seed_label: str) -> dict:
    regions = compare_across(community_sets, seed_label)
    return {
        "seed": seed_label,
        "corpora": [cs.corpus_id for cs in community_sets],
        "k": community_sets[0].k if community_sets else None,
        "theta": community_sets[0].theta if community_sets else None,
        "regions": {str(mask): labels for mask, labels in regions.items()},
    }
