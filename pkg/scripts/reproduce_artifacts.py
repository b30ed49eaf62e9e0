"""Write every matrix, table, path list and DOT file for the small networks
into one directory.

    python scripts/reproduce_artifacts.py --out results/
"""

import argparse
from pathlib import Path

from mnet.cli import main

RUNS = {
    "mn_n4.txt": ["generate", "--n", "4", "--stage", "mn"],
    "sign_n4_even.txt": ["generate", "--n", "4", "--stage", "sign", "--polarity", "even"],
    "binary_n4_even.txt": ["generate", "--n", "4", "--stage", "binary", "--polarity", "even"],
    "mn_n6.txt": ["generate", "--n", "6", "--stage", "mn"],
    "sign_n6.txt": ["generate", "--n", "6", "--stage", "sign"],
    "binary_n6.csv": ["generate", "--n", "6", "--stage", "binary", "--format", "csv"],
    "net24.dot": ["generate", "--n", "12", "--stage", "graph", "--format", "dot"],
    "net12.dot": ["generate", "--n", "6", "--stage", "graph", "--format", "dot"],
    "net56.dot": ["generate", "--n", "28", "--stage", "graph", "--format", "dot"],
    "analyze_n4.txt": ["analyze", "--n", "4", "--tree"],
    "analyze_n6.txt": ["analyze", "--n", "6", "--tree", "--hop-matrix"],
    "hop_profiles.txt": ["analyze", "--table1", "--max-prime", "19"],
    "paths_1_6.txt": ["paths", "--n", "6", "--src", "1", "--dst", "6"],
    "paths_1_6.json": ["paths", "--n", "6", "--src", "1", "--dst", "6", "--format", "json"],
    "disjoint_1_2.txt": ["paths", "--n", "6", "--src", "1", "--dst", "2", "--disjoint"],
    "disjoint_1_7.txt": ["paths", "--n", "6", "--src", "1", "--dst", "7", "--disjoint"],
    "comparison.txt": ["compare", "--shufflenet", "2,2", "--debruijn", "2,3", "--hypercube", "3",
                   "--msn", "4,4", "--mnet", "6"],
    "comparison.csv": ["compare", "--shufflenet", "2,2", "--debruijn", "2,3", "--hypercube", "3",
                   "--msn", "4,4", "--mnet", "6", "--format", "csv"],
}


def run(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    for name, argv in RUNS.items():
        code = main(argv + ["--out", str(out / name)])
        print(f"{'ok ' if code == 0 else 'ERR'} {name}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results", type=Path)
    run(ap.parse_args().out)
