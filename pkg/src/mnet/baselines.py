"""Classical interconnection topologies and the side-by-side comparison.

Node labels are 1-based. Word-addressed topologies (hypercube, deBruijn,
ShuffleNet rows) use ``label = address + 1`` where the address is read as
a base-``p`` integer, most significant symbol first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import LabeledGraph, build_mgraph
from .matrix import Variant, check_order, mnet_binary
from .metrics import diameter, graph_mean_hop


class OddDimension(ValueError):
    pass


def build_hypercube(p: int) -> LabeledGraph:
    if p < 1:
        raise ValueError("hypercube dimension must be >= 1")
    size = 1 << p
    adj = tuple(tuple(sorted((a ^ (1 << b)) + 1 for b in range(p))) for a in range(size))
    return LabeledGraph(size, adj, directed=False, name=f"hypercube_{p}")


def build_debruijn(delta: int, D: int) -> LabeledGraph:
    """Shift graph on words of length ``D``: ``x1..xD -> x2..xD y``.

    Self-loops at constant words are kept.
    """
    if delta < 2 or D < 2:
        raise ValueError("deBruijn needs delta >= 2 and D >= 2")
    size = delta**D
    adj = tuple(
        tuple(sorted((a * delta) % size + y + 1 for y in range(delta))) for a in range(size)
    )
    return LabeledGraph(size, adj, directed=True, name=f"debruijn_{delta}_{D}")


def build_shufflenet(p: int, k: int) -> LabeledGraph:
    """``k`` columns of ``p**k`` nodes; column ``c`` feeds column ``c+1 mod k``
    through a perfect shuffle. Node ``(c, r)`` has label ``c * p**k + r + 1``."""
    if p < 2 or k < 1:
        raise ValueError("ShuffleNet needs p >= 2 and k >= 1")
    rows = p**k
    adj = []
    for c in range(k):
        base = ((c + 1) % k) * rows
        for r in range(rows):
            adj.append(tuple(sorted(base + (r * p) % rows + y + 1 for y in range(p))))
    return LabeledGraph(k * rows, tuple(adj), directed=True, name=f"shufflenet_{p}_{k}")


def build_msn(rows: int, cols: int) -> LabeledGraph:
    """Manhattan Street Network on a ``rows x cols`` torus.

    Even rows run east and odd rows west; even columns run south and odd
    columns north. Node ``(r, c)`` has label ``r * cols + c + 1``.
    """
    if rows < 2 or cols < 2 or rows % 2 or cols % 2:
        raise OddDimension(f"MSN needs even dimensions >= 2, got {rows}x{cols}")

    def label(r, c):
        return (r % rows) * cols + (c % cols) + 1

    adj = []
    for r in range(rows):
        for c in range(cols):
            east = label(r, c + 1 if r % 2 == 0 else c - 1)
            south = label(r + 1 if c % 2 == 0 else r - 1, c)
            adj.append(tuple(sorted({east, south})))
    return LabeledGraph(rows * cols, tuple(adj), directed=True, name=f"msn_{rows}_{cols}")


# -- topology specs --------------------------------------------------------


@dataclass(frozen=True)
class Hypercube:
    p: int

    name = "Binary Hypercube"

    def build(self) -> LabeledGraph:
        return build_hypercube(self.p)

    def formula_diameter(self) -> float:
        return float(self.p)

    def formula_mean_hop(self) -> float:
        return float(self.p)

    def label(self) -> str:
        return f"hypercube({self.p})"


@dataclass(frozen=True)
class DeBruijn:
    delta: int
    D: int

    name = "deBruijn"

    def build(self) -> LabeledGraph:
        return build_debruijn(self.delta, self.D)

    def formula_diameter(self) -> float:
        return float(self.D)

    def formula_mean_hop(self) -> float:
        return float(self.D)

    def label(self) -> str:
        return f"debruijn({self.delta},{self.D})"


@dataclass(frozen=True)
class ShuffleNet:
    p: int
    k: int

    name = "ShuffleNet"

    def build(self) -> LabeledGraph:
        return build_shufflenet(self.p, self.k)

    def formula_diameter(self) -> float:
        return float(2 * self.k - 1)

    def formula_mean_hop(self) -> float:
        return math.log(self.k * self.p**self.k, self.p)

    def label(self) -> str:
        return f"shufflenet({self.p},{self.k})"


@dataclass(frozen=True)
class MSN:
    rows: int
    cols: int

    name = "Manhattan Street Network"

    def build(self) -> LabeledGraph:
        return build_msn(self.rows, self.cols)

    def formula_diameter(self) -> float:
        return math.sqrt(self.rows * self.cols)

    def formula_mean_hop(self) -> float:
        return math.sqrt(self.rows * self.cols)

    def label(self) -> str:
        return f"msn({self.rows},{self.cols})"


@dataclass(frozen=True)
class MNetwork:
    n: int

    name = "M-network"

    def __post_init__(self):
        check_order(self.n, Variant.TYPE_II)

    def build(self) -> LabeledGraph:
        return build_mgraph(mnet_binary(self.n))

    def formula_diameter(self) -> float:
        return 4.0

    def formula_mean_hop(self) -> float | None:
        return None

    def label(self) -> str:
        return f"mnet({self.n})"


TopologySpec = Hypercube | DeBruijn | ShuffleNet | MSN | MNetwork


@dataclass(frozen=True)
class ComparisonRow:
    name: str
    label: str
    directed: bool
    degree: int
    size: int
    mean_hop: Fraction
    diameter: int
    formula_mean_hop: float | None
    formula_diameter: float | None


def compare_topologies(specs: list[TopologySpec]) -> list[ComparisonRow]:
    rows = []
    for spec in specs:
        g = spec.build()
        rows.append(ComparisonRow(
            name=spec.name,
            label=spec.label(),
            directed=g.directed,
            degree=max(g.out_degrees()),
            size=g.node_count,
            mean_hop=graph_mean_hop(g),
            diameter=diameter(g),
            formula_mean_hop=spec.formula_mean_hop(),
            formula_diameter=spec.formula_diameter(),
        ))
    return rows
