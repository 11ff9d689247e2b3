"""Enumerate primitively log divergent graphs with 3, 4 and 5 loops and
name each class."""

import time

from graphyps.divergence import classify_pld, family_label

for n in (3, 4, 5):
    t0 = time.perf_counter()
    reps = classify_pld(n)
    names = [family_label(g) for g in reps]
    print(f"{n} loops: {len(reps)} class(es) {names}  [{time.perf_counter() - t0:.2f}s]")
