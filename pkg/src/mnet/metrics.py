"""Hop-distance analysis: BFS levels, hop profiles, diameter, mean hop."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import LabeledGraph, MGraph


class DisconnectedGraph(ValueError):
    def __init__(self, source: int, reached: frozenset[int], unreached: frozenset[int]):
        self.source = source
        self.reached = reached
        self.unreached = unreached
        super().__init__(
            f"{len(unreached)} node(s) unreachable from {source}: {sorted(unreached)[:10]}"
        )


@dataclass(frozen=True)
class SpanningTree:
    source: int
    parent: dict[int, int]
    level: dict[int, int]

    def levels(self) -> list[list[int]]:
        """Nodes grouped by hop distance, each group ascending. Index 0 is the source."""
        out: list[list[int]] = [[] for _ in range(max(self.level.values()) + 1)]
        for v in sorted(self.level):
            out[self.level[v]].append(v)
        return out

    def edges(self) -> list[tuple[int, int]]:
        return sorted((p, v) for v, p in self.parent.items())


@dataclass(frozen=True)
class HopProfile:
    source: int
    node_count: int
    level_counts: tuple[int, ...]

    @property
    def diameter(self) -> int:
        """Largest hop distance from the source (its eccentricity)."""
        return len(self.level_counts)

    @property
    def reached(self) -> int:
        return sum(self.level_counts)


def bfs_levels(graph: LabeledGraph, source: int) -> SpanningTree:
    """Level-synchronous BFS. Each node's parent is its lowest-labeled
    neighbor on the previous level."""
    _check_node(graph, source)
    level = {source: 0}
    parent: dict[int, int] = {}
    frontier = [source]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for u in frontier:
            for v in graph.neighbors(u):
                if v not in level:
                    level[v] = depth
                    parent[v] = u
                    nxt.append(v)
        frontier = sorted(nxt)
    return SpanningTree(source, parent, level)


def _distances(graph: LabeledGraph, source: int) -> tuple[list[int], list[int]]:
    """Bitset BFS. Returns (distance per node with -1 for unreached, level sizes)."""
    masks = graph.masks
    dist = [-1] * graph.node_count
    dist[source - 1] = 0
    visited = frontier = 1 << (source - 1)
    counts = []
    depth = 0
    while frontier:
        depth += 1
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        nxt &= ~visited
        if not nxt:
            break
        visited |= nxt
        counts.append(nxt.bit_count())
        f = nxt
        while f:
            low = f & -f
            dist[low.bit_length() - 1] = depth
            f ^= low
        frontier = nxt
    return dist, counts


def hop_profile(graph: LabeledGraph, source: int) -> HopProfile:
    _check_node(graph, source)
    dist, counts = _distances(graph, source)
    if -1 in dist:
        _raise_disconnected(source, dist)
    return HopProfile(source, graph.node_count, tuple(counts))


def hop_matrix(graph: LabeledGraph) -> list[list[int]]:
    """All-pairs hop distances, one BFS per source in ascending order.

    Row ``i`` / column ``j`` (0-based) hold the distance from node ``i+1``
    to node ``j+1``.
    """
    rows = []
    for s in graph.nodes:
        dist, _ = _distances(graph, s)
        if -1 in dist:
            _raise_disconnected(s, dist)
        rows.append(dist)
    return rows


def diameter(graph: LabeledGraph) -> int:
    best = 0
    for s in graph.nodes:
        dist, counts = _distances(graph, s)
        if -1 in dist:
            _raise_disconnected(s, dist)
        best = max(best, len(counts))
    return best


def mean_hop_distance(profile: HopProfile) -> Fraction:
    """Sum of ``i * p_i`` where ``p_i`` is the share of the other N-1
    nodes sitting exactly ``i`` hops from the source."""
    others = profile.node_count - 1
    if profile.reached != others:
        raise ValueError("mean hop distance needs a profile that reaches every node")
    return sum((Fraction(i * c, others) for i, c in enumerate(profile.level_counts, 1)), Fraction(0))


def graph_mean_hop(graph: LabeledGraph) -> Fraction:
    """Average hop distance over ordered pairs ``(u, v)``, ``u != v``, with v reachable."""
    total = pairs = 0
    for s in graph.nodes:
        _, counts = _distances(graph, s)
        total += sum(i * c for i, c in enumerate(counts, 1))
        pairs += sum(counts)
    return Fraction(total, pairs) if pairs else Fraction(0)


def is_connected(graph: LabeledGraph) -> bool:
    """Connected (undirected) or strongly connected (directed)."""
    if graph.node_count == 0:
        return True
    sources = graph.nodes if graph.directed else (1,)
    return all(-1 not in _distances(graph, s)[0] for s in sources)


def connectivity_index(graph: MGraph) -> Fraction:
    """Node degree over partition size. 1/2 for every Type II M-graph and 1
    for the complete bipartite graph."""
    return Fraction(min(graph.out_degrees()), graph.n)


def format_fraction(x: Fraction, places: int = 2) -> str:
    return f"{float(x):.{places}f}"


def _check_node(graph: LabeledGraph, v: int) -> None:
    if not 1 <= v <= graph.node_count:
        raise ValueError(f"node {v} out of range 1..{graph.node_count}")


def _raise_disconnected(source: int, dist: list[int]):
    reached = frozenset(v for v, d in enumerate(dist, 1) if d >= 0)
    unreached = frozenset(v for v, d in enumerate(dist, 1) if d < 0)
    raise DisconnectedGraph(source, reached, unreached)
