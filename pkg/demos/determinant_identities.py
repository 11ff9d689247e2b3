"""Run the determinant identity self-test on random integer matrices and
the bordered wheel and zigzag matrices."""

from graphyps.coords import ws_matrix, ws_names
from graphyps.identities import BorderedSymMatrix, g_n, selftest

rep = selftest(sizes=range(2, 6), trials=30, seed=1)
for name, r in rep.items():
    print(f"{name:32s} {'ok' if r['passed'] else 'FAILED'}  ({r['cases']} cases)")

m = BorderedSymMatrix(ws_matrix(4), 8)
print("\nG_n of the bordered WS4 matrix:")
print("  ", g_n(m).to_str(ws_names(4)))
