"""Simple-path enumeration, node-disjoint paths and fault tolerance."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import LabeledGraph, MGraph

DEFAULT_PATH_CAP = 10**7

Path = tuple[int, ...]


class BudgetExceeded(RuntimeError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"path enumeration exceeded the cap of {cap} paths")


class InvalidDistance(ValueError):
    pass


@dataclass(frozen=True)
class PathEnumeration:
    source: int
    destination: int
    paths_by_hops: dict[int, tuple[Path, ...]]

    @property
    def total(self) -> int:
        return sum(len(v) for v in self.paths_by_hops.values())

    def counts(self) -> dict[int, int]:
        return {h: len(ps) for h, ps in self.paths_by_hops.items()}

    def all_paths(self) -> list[Path]:
        return [p for h in sorted(self.paths_by_hops) for p in self.paths_by_hops[h]]


@dataclass(frozen=True)
class DisjointPathSet:
    source: int
    destination: int
    paths: tuple[Path, ...]

    @property
    def count(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class HopClassTolerance:
    hops: int
    path_count: int
    nodes_used: int
    node_failures: int
    edge_failures: int


@dataclass(frozen=True)
class FaultToleranceReport:
    source: int
    destination: int
    classes: tuple[HopClassTolerance, ...]

    def by_hops(self, hops: int) -> HopClassTolerance:
        for c in self.classes:
            if c.hops == hops:
                return c
        raise KeyError(hops)


@dataclass(frozen=True)
class SurvivalResult:
    survives: bool
    path: Path | None


def _check_pair(graph: LabeledGraph, source: int, destination: int) -> None:
    for v in (source, destination):
        if not 1 <= v <= graph.node_count:
            raise ValueError(f"node {v} out of range 1..{graph.node_count}")
    if source == destination:
        raise ValueError("source and destination must differ")


def enumerate_simple_paths(graph: LabeledGraph, source: int, destination: int,
                           max_hops: int | None = None,
                           cap: int = DEFAULT_PATH_CAP) -> PathEnumeration:
    """Every simple path from ``source`` to ``destination``.

    Depth-first with backtracking, neighbors taken in ascending order, so the
    paths come out lexicographically sorted. Hitting ``cap`` raises
    ``BudgetExceeded`` rather than returning a truncated result.
    """
    _check_pair(graph, source, destination)
    limit = graph.node_count - 1 if max_hops is None else max_hops
    adj = graph.adjacency
    found: dict[int, list[Path]] = {}
    total = 0
    path = [source]
    on_path = {source}
    # explicit stack of neighbor iterators avoids recursion limits on big graphs
    stack = [iter(adj[source - 1])]
    while stack:
        v = next(stack[-1], None)
        if v is None:
            stack.pop()
            on_path.discard(path.pop())
            continue
        if v in on_path:
            continue
        if v == destination:
            total += 1
            if total > cap:
                raise BudgetExceeded(cap)
            found.setdefault(len(path), []).append(tuple(path) + (v,))
            continue
        if len(path) < limit:
            path.append(v)
            on_path.add(v)
            stack.append(iter(adj[v - 1]))
    return PathEnumeration(source, destination,
                           {h: tuple(found[h]) for h in sorted(found)})


def max_node_disjoint_paths(graph: LabeledGraph, source: int, destination: int) -> DisjointPathSet:
    """Maximum set of internally node-disjoint paths.

    Max-flow on the node-split network: each node other than the endpoints
    becomes an in/out pair joined by a unit-capacity arc. Augmenting paths
    are found by BFS visiting lower labels first, which makes the witness
    set deterministic.
    """
    _check_pair(graph, source, destination)
    big = graph.node_count + 1

    # split node v: in = 2v, out = 2v + 1; endpoints use a single id (out side)
    def v_in(v):
        return 2 * v + 1 if v in (source, destination) else 2 * v

    def v_out(v):
        return 2 * v + 1

    cap: dict[int, dict[int, int]] = {}

    def add(u, v, c):
        cap.setdefault(u, {}).setdefault(v, 0)
        cap[u][v] += c
        cap.setdefault(v, {}).setdefault(u, 0)

    for v in graph.nodes:
        if v not in (source, destination):
            add(v_in(v), v_out(v), 1)
    for u, v in graph.edges():
        if u == v:
            continue
        add(v_out(u), v_in(v), 1)
        if not graph.directed:
            add(v_out(v), v_in(u), 1)
    order = {u: sorted(nbrs) for u, nbrs in cap.items()}
    s, t = v_out(source), v_out(destination)
    flow_value = 0
    while flow_value < big:
        prev = {s: s}
        queue = deque([s])
        while queue and t not in prev:
            u = queue.popleft()
            for w in order.get(u, ()):
                if w not in prev and cap[u][w] > 0:
                    prev[w] = u
                    queue.append(w)
        if t not in prev:
            break
        w = t
        while w != s:
            u = prev[w]
            cap[u][w] -= 1
            cap[w][u] += 1
            w = u
        flow_value += 1

    # flow pushed along arc u_out -> v_in shows up as residual on its reverse
    def flows(u, v):
        return cap.get(v_in(v), {}).get(v_out(u), 0) > 0

    paths = []
    for first in graph.neighbors(source):
        if first == source or not flows(source, first):
            continue
        path = [source, first]
        while path[-1] != destination:
            u = path[-1]
            # unit throughput: exactly one outgoing arc carries flow
            path.append(next(w for w in graph.neighbors(u) if w != u and flows(u, w)))
        paths.append(tuple(path))
    return DisjointPathSet(source, destination, tuple(sorted(paths, key=lambda p: (len(p), p))))


def disjoint_upper_bound(node_count: int, d: int) -> int:
    """Greatest integer in ``(N - 2) / (d - 1)``."""
    if d < 2:
        raise InvalidDistance(f"hop distance parameter must be >= 2, got {d}")
    if node_count < 2:
        raise ValueError("need at least two nodes")
    return (node_count - 2) // (d - 1)


def vertex_connectivity(graph: LabeledGraph) -> int:
    """Smallest disjoint-path count over non-adjacent pairs, ``N - 1`` when
    every pair is adjacent.

    Only sources ``1..k+1`` are tried, ``k`` being the best value so far: a
    minimum cut misses one of them, and pairing that node with every later
    node crosses the cut.
    """
    best = graph.node_count - 1
    for u in graph.nodes:
        if u > best + 1:
            break
        targets = graph.nodes if graph.directed else range(u + 1, graph.node_count + 1)
        for v in targets:
            if v == u or graph.has_edge(u, v):
                continue
            best = min(best, max_node_disjoint_paths(graph, u, v).count)
            if graph.directed and not graph.has_edge(v, u):
                best = min(best, max_node_disjoint_paths(graph, v, u).count)
    return best


def fault_tolerance_report(enumeration: PathEnumeration, graph: MGraph) -> FaultToleranceReport:
    """Tolerated failures per hop class.

    A working path of ``h`` hops uses ``s = h + 1`` nodes and ``h`` edges, so
    communication survives the loss of every other node (``2n - s``) and
    every other edge (``n*p - s + 1``).
    """
    if not enumeration.total:
        raise ValueError("enumeration holds no paths")
    classes = []
    for h, ps in sorted(enumeration.paths_by_hops.items()):
        if not ps:
            continue
        s = h + 1
        classes.append(HopClassTolerance(
            hops=h,
            path_count=len(ps),
            nodes_used=s,
            node_failures=graph.node_count - s,
            edge_failures=graph.edge_count - s + 1,
        ))
    return FaultToleranceReport(enumeration.source, enumeration.destination, tuple(classes))


def survives_failure(graph: LabeledGraph, failed_nodes: Iterable[int],
                     failed_edges: Iterable[tuple[int, int]],
                     source: int, destination: int) -> SurvivalResult:
    """Shortest surviving path in the residual graph, if any."""
    failed_nodes = set(failed_nodes)
    if source in failed_nodes or destination in failed_nodes:
        raise ValueError("source and destination cannot be failed nodes")
    residual = graph.without(failed_nodes, failed_edges)
    prev = {source: source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == destination:
            break
        for w in residual.neighbors(u):
            if w not in prev:
                prev[w] = u
                queue.append(w)
    if destination not in prev:
        return SurvivalResult(False, None)
    path = [destination]
    while path[-1] != source:
        path.append(prev[path[-1]])
    return SurvivalResult(True, tuple(reversed(path)))


def complement_failure(graph: LabeledGraph, path: Path) -> tuple[set[int], set[tuple[int, int]]]:
    """Every node and edge not on ``path``."""
    on_nodes = set(path)
    on_edges = {tuple(sorted(e)) for e in zip(path, path[1:])}
    nodes = set(graph.nodes) - on_nodes
    edges = {e for e in graph.edges() if tuple(sorted(e)) not in on_edges}
    return nodes, edges
