"""Labeled graphs, the bipartite M-graph, and text exports.

Nodes are always labeled ``1..N``. An M-graph built from an ``n x n``
binary matrix puts matrix rows on nodes ``1..n`` and column ``j`` on node
``n + j``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from .matrix import BinaryMatrix


class GraphError(ValueError):
    pass


class IrregularMatrix(GraphError):
    pass


@dataclass(frozen=True)
class LabeledGraph:
    node_count: int
    adjacency: tuple[tuple[int, ...], ...]
    directed: bool = False
    name: str = "g"

    def __post_init__(self):
        if len(self.adjacency) != self.node_count:
            raise GraphError("adjacency must have one neighbor list per node")
        for v, nbrs in enumerate(self.adjacency, 1):
            if len(set(nbrs)) != len(nbrs):
                raise GraphError(f"multi-edge at node {v}")
            for u in nbrs:
                if not 1 <= u <= self.node_count:
                    raise GraphError(f"node {v} has out-of-range neighbor {u}")
                if u == v and not self.directed:
                    raise GraphError(f"self-loop at node {v}")
        if not self.directed:
            sets = [set(a) for a in self.adjacency]
            for v, nbrs in enumerate(self.adjacency, 1):
                for u in nbrs:
                    if v not in sets[u - 1]:
                        raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[int, int]],
                   directed: bool = False, name: str = "g") -> LabeledGraph:
        nbrs: list[list[int]] = [[] for _ in range(node_count)]
        for u, v in edges:
            nbrs[u - 1].append(v)
            if not directed:
                nbrs[v - 1].append(u)
        return cls(node_count, tuple(tuple(sorted(x)) for x in nbrs), directed, name)

    @property
    def nodes(self) -> range:
        return range(1, self.node_count + 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v - 1]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u - 1]

    def edges(self) -> list[tuple[int, int]]:
        """Undirected: pairs ``(u, v)`` with ``u < v``. Directed: all arcs."""
        out = []
        for u in self.nodes:
            for v in self.adjacency[u - 1]:
                if self.directed or u < v:
                    out.append((u, v))
        return out

    @property
    def edge_count(self) -> int:
        total = sum(len(a) for a in self.adjacency)
        return total if self.directed else total // 2

    def out_degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def in_degrees(self) -> list[int]:
        deg = [0] * self.node_count
        for nbrs in self.adjacency:
            for v in nbrs:
                deg[v - 1] += 1
        return deg

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Out-neighbor sets as bitmasks; node ``v`` is bit ``v - 1``."""
        out = []
        for nbrs in self.adjacency:
            m = 0
            for v in nbrs:
                m |= 1 << (v - 1)
            out.append(m)
        return tuple(out)

    def without(self, nodes: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()) -> LabeledGraph:
        """Residual graph with the given nodes isolated and edges removed."""
        dead = set(nodes)
        cut = set()
        for u, v in edges:
            cut.add((u, v))
            if not self.directed:
                cut.add((v, u))
        adj = tuple(
            () if u in dead else tuple(v for v in nbrs if v not in dead and (u, v) not in cut)
            for u, nbrs in enumerate(self.adjacency, 1)
        )
        return LabeledGraph(self.node_count, adj, self.directed, self.name)


@dataclass(frozen=True)
class MGraph(LabeledGraph):
    """Bipartite graph whose left x right adjacency is a binary matrix."""

    n: int = 0
    binary: BinaryMatrix | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.binary is None:
            super().__post_init__()
            return
        # rows and columns both come from the same 0/1 matrix: symmetric, loop-free
        if self.binary.n != self.n or self.node_count != 2 * self.n or len(self.adjacency) != 2 * self.n:
            raise GraphError("adjacency does not match the binary matrix")

    @property
    def N(self) -> int:
        return 2 * self.n

    @property
    def p(self) -> int:
        return len(self.adjacency[0]) if self.adjacency else 0

    @property
    def left(self) -> range:
        return range(1, self.n + 1)

    @property
    def right(self) -> range:
        return range(self.n + 1, 2 * self.n + 1)

    def biadjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i in self.left:
            for v in self.adjacency[i - 1]:
                a[i - 1, v - self.n - 1] = 1
        return a


def bipartite_graph(binary: BinaryMatrix) -> MGraph:
    """Bipartite graph of any square 0/1 matrix, no regularity check."""
    n = binary.n
    a = binary.entries
    rows = tuple(tuple((np.flatnonzero(a[i]) + n + 1).tolist()) for i in range(n))
    cols = tuple(tuple((np.flatnonzero(a[:, j]) + 1).tolist()) for j in range(n))
    p = int(a[0].sum()) if n else 0
    return MGraph(2 * n, rows + cols, False, f"mnet_{p}_{2 * n}", n=n, binary=binary)


def build_mgraph(binary: BinaryMatrix) -> MGraph:
    """The (p, N) M-graph: requires every row and column sum to be ``n/2``."""
    n = binary.n
    a = binary.entries
    if n % 2:
        raise IrregularMatrix(f"order n={n} is odd; row sums cannot all equal n/2")
    half = n // 2
    rs, cs = a.sum(axis=1), a.sum(axis=0)
    if (rs != half).any():
        i = int(np.flatnonzero(rs != half)[0])
        raise IrregularMatrix(f"row {i + 1} sums to {int(rs[i])}, expected {half}")
    if (cs != half).any():
        j = int(np.flatnonzero(cs != half)[0])
        raise IrregularMatrix(f"column {j + 1} sums to {int(cs[j])}, expected {half}")
    return bipartite_graph(binary)


def complete_bipartite(n: int) -> MGraph:
    return bipartite_graph(BinaryMatrix(n, np.ones((n, n), dtype=np.int64)))


@dataclass(frozen=True)
class RegularityReport:
    degree_histogram: dict[int, int]
    expected_degree: int
    regular: bool
    bipartite: bool
    irregular_nodes: tuple[int, ...] = ()
    offending_edge: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.regular and self.bipartite


def verify_regular_bipartite(graph: MGraph) -> RegularityReport:
    n = graph.n
    deg = graph.out_degrees()
    expected = n // 2
    bad = tuple(v for v, d in enumerate(deg, 1) if d != expected)
    offending = None
    for v in graph.nodes:
        nbrs = graph.adjacency[v - 1]
        if not nbrs:
            continue
        lo, hi = min(nbrs), max(nbrs)
        if v <= n and lo <= n:
            offending = (v, lo)
        elif v > n and hi > n:
            offending = (v, hi)
        if offending:
            break
    return RegularityReport(
        degree_histogram=dict(sorted(Counter(deg).items())),
        expected_degree=expected,
        regular=not bad,
        bipartite=offending is None,
        irregular_nodes=bad,
        offending_edge=offending,
    )


# -- export ----------------------------------------------------------------

EXPORT_FORMATS = ("dot", "adjacency", "edges", "json")


def export_graph(graph: LabeledGraph, fmt: str = "dot") -> str:
    if fmt == "dot":
        return to_dot(graph)
    if fmt == "adjacency":
        return to_adjacency_list(graph)
    if fmt == "edges":
        return "".join(f"{u},{v}\n" for u, v in graph.edges())
    if fmt == "json":
        payload = {
            "schema": 1,
            "name": graph.name,
            "directed": graph.directed,
            "nodes": graph.node_count,
            "adjacency": {str(v): list(graph.neighbors(v)) for v in graph.nodes},
        }
        return json.dumps(payload, indent=2) + "\n"
    raise GraphError(f"unknown export format {fmt!r}; choose from {EXPORT_FORMATS}")


def to_dot(graph: LabeledGraph) -> str:
    kind, arrow = ("digraph", "->") if graph.directed else ("graph", "--")
    lines = [f"{kind} {graph.name} {{"]
    if isinstance(graph, MGraph):
        for side in (graph.left, graph.right):
            lines.append("  { rank=same; " + " ".join(f"{v};" for v in side) + " }")
    for v in graph.nodes:
        lines.append(f"  {v};")
    for u, v in graph.edges():
        lines.append(f"  {u} {arrow} {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_adjacency_list(graph: LabeledGraph) -> str:
    return "".join(
        f"{v}:" + "".join(f" {u}" for u in graph.neighbors(v)) + "\n" for v in graph.nodes
    )


def parse_adjacency_list(text: str, directed: bool = False, name: str = "g") -> LabeledGraph:
    entries: dict[int, tuple[int, ...]] = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        head, _, tail = line.partition(":")
        entries[int(head)] = tuple(int(tok) for tok in tail.split())
    n = len(entries)
    if sorted(entries) != list(range(1, n + 1)):
        raise GraphError("adjacency list must cover nodes 1..N exactly once")
    return LabeledGraph(n, tuple(entries[v] for v in range(1, n + 1)), directed, name)
