import itertools
from fractions import Fraction

import numpy as np
import pytest

from graphyps.families import triangle, wheel, xx5, zigzag
from graphyps.graph import Graph, random_cycle_basis
from graphyps.pointcount import (BudgetExceeded, PointCountRecord, affine_zeros, count_projective,
                                 fit_count_polynomial, is_prime, validate)
from graphyps.poly import MPoly, psi_det, psi_trees

GRAPHS = {"WS3": wheel(3), "ZZ5": zigzag(5), "XX5": xx5()}


def test_triangle_plane():
    psi = psi_trees(triangle())
    assert affine_zeros(psi, 2) == 4
    for q in (2, 3, 5, 7):
        assert count_projective(triangle(), q).projective_count == q + 1


def test_frozen_oracle_values(frozen_counts):
    for key, want in frozen_counts.items():
        name, q = key.split("/")
        rec = count_projective(GRAPHS[name], int(q))
        assert rec.affine_zero_count == want["affine"], key
        assert rec.projective_count == want["projective"], key


def test_nonprime_and_budget():
    psi = psi_det(wheel(3))
    with pytest.raises(ValueError):
        affine_zeros(psi, 4)
    with pytest.raises(BudgetExceeded):
        affine_zeros(psi, 101, budget=10 ** 6)
    assert affine_zeros(psi, 11, budget=10, force=True) == 162261


def test_not_multilinear_rejected():
    with pytest.raises(ValueError):
        affine_zeros(MPoly.var(0, 2) ** 2 + MPoly.var(1, 2), 3)


def test_constant_polynomials():
    assert affine_zeros(MPoly.const(0, 0), 5) == 1
    assert affine_zeros(MPoly.const(1, 0), 5) == 0


def test_thread_and_chunk_independence():
    psi = psi_det(zigzag(5))
    ref = affine_zeros(psi, 5, threads=1)
    assert affine_zeros(psi, 5, threads=3) == ref
    import graphyps.pointcount as pc
    old = pc.CHUNK_ELEMENTS
    try:
        pc.CHUNK_ELEMENTS = 1 << 8
        assert affine_zeros(psi, 5, threads=2) == ref
    finally:
        pc.CHUNK_ELEMENTS = old


def test_basis_and_label_invariance():
    g = wheel(4)
    rng = np.random.default_rng(0)
    ref = count_projective(g, 5).projective_count
    assert count_projective(psi_det(g, random_cycle_basis(g, rng)), 5).projective_count == ref
    perm = [2, 0, 1, 4, 3]
    assert count_projective(g.relabel(perm), 5).projective_count == ref
    edges = list(g.edges)[::-1]
    assert count_projective(Graph(g.vertex_count, edges), 5).projective_count == ref


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_cone_divisibility(q):
    for g in (wheel(3), wheel(4), zigzag(5)):
        rec = count_projective(g, q)
        assert (rec.affine_zero_count - 1) % (q - 1) == 0
        assert 0 <= rec.projective_count <= (q ** g.num_edges - 1) // (q - 1)


def test_is_prime():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def _rec(q, n, nv=3):
    return PointCountRecord("", q, n, 0, nv)


def test_fit_trivial():
    fit = fit_count_polynomial([_rec(q, q + 1) for q in (2, 3)])
    assert fit.coefficients == (1, 1) and fit.integral
    const = fit_count_polynomial([_rec(q, 7) for q in (2, 3)])
    assert const.coefficients == (7,) and const.degree == 0


def test_fit_needs_points():
    with pytest.raises(ValueError):
        fit_count_polynomial([_rec(2, 3)])


def test_fit_reports_nonintegral():
    fit = fit_count_polynomial([_rec(2, 1), _rec(3, 2), _rec(5, 2)], degree=2)
    assert not fit.integral
    assert fit(2) == 1 and fit(5) == 2


def test_fit_over_degree_is_flagged():
    recs = [_rec(q, q ** 3) for q in (2, 3, 5, 7)]
    fit = fit_count_polynomial(recs, degree=1)
    assert not fit.consistent


def test_ws3_fit_and_holdout():
    recs = [count_projective(wheel(3), q) for q in (2, 3, 5, 7, 11)]
    fit = fit_count_polynomial(recs)
    assert fit.degree_bound == 4 and fit.integral
    assert fit.coefficients == (1, 1, 2, 1, 1)   # q^4 + q^3 + 2q^2 + q + 1
    assert validate(fit, [count_projective(wheel(3), 13)])


def test_validate_detects_mismatch():
    fit = fit_count_polynomial([_rec(q, q + 1) for q in (2, 3)])
    assert not validate(fit, [_rec(5, 7)])


def test_record_json_hides_time():
    rec = count_projective(triangle(), 3)
    assert "wall_time" not in rec.to_json()
    assert "wall_time" in rec.to_json(timing=True)
