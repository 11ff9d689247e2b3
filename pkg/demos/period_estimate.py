"""Monte Carlo period of WS3 against the frozen quasi-random reference,
and the refusal of a graph with a divergent subgraph."""

import json
from pathlib import Path

from graphyps.families import wheel
from graphyps.graph import Graph
from graphyps.period import ConvergenceRefused, estimate_period

ref = json.loads((Path(__file__).parent.parent / "tests/fixtures/period_ws3.json").read_text())

for n in (10 ** 4, 10 ** 5, 10 ** 6):
    est = estimate_period(wheel(3), n, seed=42)
    print(f"{n:>8d} samples: {est.mean:.4f} +- {est.standard_error:.4f}")
print(f"quasi-random reference: {ref['value']:.6f}")

# K4 and a triangle joined by three edges: log divergent, but K4 diverges inside it
g = Graph(7, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
              (4, 5), (5, 6), (4, 6), (0, 4), (1, 5), (2, 6)])
try:
    estimate_period(g, 1000, seed=0)
except ConvergenceRefused as exc:
    print("refused:", exc)
