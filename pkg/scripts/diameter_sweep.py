"""Measure diameter, hop profile and mean hop for every Type II M-network
up to a prime bound; CSV to stdout."""

import argparse
import csv
import sys
import time

from mnet import mnetwork
from mnet.matrix import valid_type2_orders
from mnet.metrics import diameter, hop_profile, mean_hop_distance

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--max-prime", type=int, default=199)
args = ap.parse_args()

w = csv.writer(sys.stdout, lineterminator="\n")
w.writerow(["n+1", "n", "N", "p", "diameter", "profile", "mean_hop", "seconds"])
for n in valid_type2_orders(args.max_prime):
    t0 = time.perf_counter()
    g = mnetwork(n)
    prof = hop_profile(g, 1)
    d = diameter(g)
    m = mean_hop_distance(prof)
    w.writerow([n + 1, n, g.node_count, g.p, d, " ".join(map(str, prof.level_counts)),
                f"{float(m):.4f}", f"{time.perf_counter() - t0:.3f}"])
