"""The graph polynomial of the zigzag ZZ5, computed as a loop-matrix
determinant and as a spanning-tree sum, then rewritten in A/B names."""

from graphyps.coords import AB_NAMES, to_ab_coords
from graphyps.families import zigzag
from graphyps.graph import betti, spanning_trees
from graphyps.poly import psi_det, psi_trees

g = zigzag(5)
print(f"ZZ5: {g.vertex_count} vertices, {g.num_edges} edges, {betti(g)} loops")

by_det = psi_det(g)
by_trees = psi_trees(g)
print(f"determinant route: {len(by_det.coefficients())} monomials")
print(f"spanning trees:    {sum(1 for _ in spanning_trees(g))}")
print("routes agree:", by_det == by_trees)

ab = to_ab_coords(by_det, "zz5")
print("first terms in A/B coordinates:")
print("  ", ab.to_str(AB_NAMES)[:200], "...")
