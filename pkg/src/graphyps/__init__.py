"""Exact tools for Feynman graph hypersurfaces: graph polynomials,
primitive log divergence, determinant identities, point counts over prime
fields and parametric periods."""

from .divergence import (DivergenceClass, PLDVerdict, classify_pld, divergence_class, is_pld,
                         verify_gluing_closure)
from .families import (catalog, complete, cycle, family, glue, gzz, path, st5, triangle, wheel,
                       xx5, zigzag)
from .graph import (Graph, LoopTable, betti, canonical_form, canonical_key, connected_components,
                    connected_edge_subgraphs, cycle_basis, is_isomorphic, spanning_trees)
from .period import ConvergenceRefused, PeriodEstimate, estimate_period
from .pointcount import (PointCountRecord, affine_zeros, count_projective, fit_count_polynomial,
                         validate)
from .poly import LinearForm, MPoly, SymLinMatrix, det, graph_matrix, psi_det, psi_trees

__version__ = "0.1.0"
