"""M-matrices, the bipartite M-networks they induce, and their analysis."""

from .graph import LabeledGraph, MGraph, build_mgraph, export_graph, verify_regular_bipartite
from .matrix import (
    BinaryMatrix,
    MnMatrix,
    Polarity,
    SignMatrix,
    Variant,
    build_mn_matrix,
    build_sign_matrix,
    mnet_binary,
    to_binary,
)
from .metrics import (
    bfs_levels,
    connectivity_index,
    diameter,
    hop_matrix,
    hop_profile,
    mean_hop_distance,
)
from .paths import (
    disjoint_upper_bound,
    enumerate_simple_paths,
    fault_tolerance_report,
    max_node_disjoint_paths,
    survives_failure,
)


def mnetwork(n: int, polarity: Polarity = Polarity.ODD_POSITIVE) -> MGraph:
    """Type II M-network on ``2n`` nodes (``n+1`` prime)."""
    return build_mgraph(mnet_binary(n, polarity))
