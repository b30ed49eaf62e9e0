"""Degree, size, diameter and mean hop of each topology family at growing
sizes, to set the constant M-network diameter against the baselines."""

import argparse

from mnet.baselines import MSN, DeBruijn, Hypercube, MNetwork, ShuffleNet, compare_topologies

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--format", choices=["text", "csv"], default="text")
args = ap.parse_args()

specs = (
    [MNetwork(n) for n in (4, 6, 10, 12, 16, 18, 22, 28, 30)]
    + [Hypercube(p) for p in range(3, 9)]
    + [DeBruijn(2, D) for D in range(3, 9)]
    + [ShuffleNet(2, k) for k in range(1, 6)]
    + [MSN(r, r) for r in (4, 6, 8, 10, 12)]
)
rows = compare_topologies(specs)
sep = "," if args.format == "csv" else "\t"
print(sep.join(["instance", "degree", "size", "diameter", "mean_hop"]))
for r in rows:
    print(sep.join([r.label, str(r.degree), str(r.size), str(r.diameter), f"{float(r.mean_hop):.3f}"]))
