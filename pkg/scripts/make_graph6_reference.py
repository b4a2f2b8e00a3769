"""Regenerate tests/data/graph6_reference.json with networkx as the encoder.

The records are produced by an independent codec so the test suite can check
byte equality of ours against it without networkx installed.
"""

import json
import random
from pathlib import Path

import networkx as nx

SIZES = [0, 1, 2, 3, 4, 5, 6, 7, 9, 12, 13, 17, 25, 40, 62, 63, 64, 70, 100, 129]


def main() -> None:
    rng = random.Random(20240611)
    records = []
    for n in SIZES:
        p = rng.choice([0.1, 0.3, 0.5, 0.7, 0.9])
        g = nx.gnp_random_graph(n, p, seed=rng.randrange(1 << 30))
        code = nx.to_graph6_bytes(g, header=False).decode().strip()
        edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
        records.append({"n": n, "graph6": code, "edges": edges})
    out = Path(__file__).resolve().parents[1] / "tests" / "data" / "graph6_reference.json"
    out.write_text(json.dumps(records, indent=1) + "\n")
    print(f"wrote {len(records)} records to {out}")


if __name__ == "__main__":
    main()
