import itertools
import random

import pytest

from graphyps.coords import ab, ws_matrix, ws_names, xx5_matrix, zz5_matrix
from graphyps.families import catalog
from graphyps.graph import cycle_basis
from graphyps.identities import (BorderedSymMatrix, HypothesisFailure, I_k, I_sup, Minors, S_t,
                                 border_independent_of, bordered_from_block,
                                 check_border_product_congruence, check_border_square_congruence,
                                 check_bordered_decomposition, check_degenerate_border_congruence,
                                 check_symmetric_condensation, divides, dodgson_check,
                                 dodgson_check_signed, duplicate_row_instance, exact_quotient,
                                 g_n, li_n, minor, prime_degenerate_instance, probably_identity,
                                 random_int_matrix, selftest, xx5_g4_matches, zz5_g4_matches)
from graphyps.poly import MPoly, graph_matrix


def x(i, n=6):
    return MPoly.var(i, n)


def cofactor(m):
    if not m:
        return 1
    return sum((-1) ** j * m[0][j] * cofactor([r[:j] + r[j + 1:] for r in m[1:]])
               for j in range(len(m)) if m[0][j])


def drop(m, rows, cols):
    return [[m[i][j] for j in range(len(m)) if j not in cols] for i in range(len(m)) if i not in rows]


# minors --------------------------------------------------------------------

def test_empty_minor_is_one():
    assert minor([[1, 2], [3, 4]], [0, 1], [0, 1]) == 1


def test_full_minor_is_det():
    m = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    assert I_k(m, 3) == cofactor(m)
    assert I_sup(m, 1, 2) == 11


def test_minor_errors():
    with pytest.raises(IndexError):
        minor([[1]], [1], [0])
    with pytest.raises(ValueError):
        minor([[1, 2], [3, 4]], [0], [])


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_ws_s_minor(n):
    m = ws_matrix(n)
    names = ws_names(n)
    full = S_t(m, n - 2)
    inner = S_t([r[1:] for r in m[1:]], n - 2)
    prod = lambda idx: MPoly({tuple(1 if k in idx else 0 for k in range(2 * n)): 1}, 2 * n)
    assert full == prod(range(0, n - 2))          # A0 ... A_{n-3}
    assert inner == prod(range(1, n - 1))         # A1 ... A_{n-2}


def test_zz5_s_minors():
    m = zz5_matrix()
    assert S_t(m, 3) == ab("A0") * ab("A1") * ab("A2")
    assert S_t(m, 2) == ab("A0") * ab("A1")


# condensation -----------------------------------------------------------------

def test_dodgson_2x2():
    m = [[3, 5], [7, 11]]
    assert dodgson_check(m, 0, 0, 1, 1)


def test_dodgson_against_cofactor_oracle():
    rng = random.Random(2)
    for _ in range(30):
        m = random_int_matrix(rng, 5)
        i, k = sorted(rng.sample(range(5), 2))
        j, t = sorted(rng.sample(range(5), 2))
        lhs = cofactor(drop(m, {i}, {j})) * cofactor(drop(m, {k}, {t})) \
            - cofactor(drop(m, {k}, {j})) * cofactor(drop(m, {i}, {t}))
        assert lhs == cofactor(m) * cofactor(drop(m, {i, k}, {j, t}))
        assert dodgson_check(m, i, j, k, t)


def test_dodgson_crossed_order_needs_sign():
    rng = random.Random(4)
    m = random_int_matrix(rng, 4)
    while cofactor(m) == 0 or cofactor(drop(m, {0, 1}, {0, 1})) == 0:
        m = random_int_matrix(rng, 4)
    assert not dodgson_check(m, 0, 1, 1, 0)
    assert dodgson_check_signed(m, 0, 1, 1, 0)


def test_dodgson_index_errors():
    with pytest.raises(ValueError):
        dodgson_check([[1, 2], [3, 4]], 0, 0, 0, 1)


def test_dodgson_symbolic_ws4():
    g = catalog()["WS4"]
    rows = graph_matrix(g, cycle_basis(g)).as_mpoly()
    for i, k in itertools.combinations(range(4), 2):
        for j, t in itertools.combinations(range(4), 2):
            assert dodgson_check(rows, i, j, k, t)


def test_schwartz_zippel_precheck_catches_false_identity():
    rows = zz5_matrix()
    rng = random.Random(0)
    assert probably_identity(check_symmetric_condensation, rows, 10, rng)
    broken = [list(r) for r in rows]
    broken[0][1] = broken[0][1] + ab("B4")   # no longer symmetric
    assert not probably_identity(check_symmetric_condensation, broken, 10, rng)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_symmetric_condensation_random(n):
    rng = random.Random(n)
    for _ in range(50):
        assert check_symmetric_condensation(random_int_matrix(rng, n, symmetric=True))


def test_symmetric_condensation_needs_symmetry():
    rng = random.Random(9)
    fails = sum(not check_symmetric_condensation(random_int_matrix(rng, 4)) for _ in range(20))
    assert fails > 0


# bordered ------------------------------------------------------------------

def test_bordered_validation():
    a = [x(i, 3) for i in range(3)]
    with pytest.raises(ValueError):
        BorderedSymMatrix([[a[0], a[0]], [a[0], a[0]]], 3)       # border variables repeat
    with pytest.raises(ValueError):
        BorderedSymMatrix([[a[0], a[0] + a[1]], [a[0] + a[1], a[2]]], 3)
    with pytest.raises(ValueError):
        BorderedSymMatrix([[a[0], a[1]], [a[2], a[0]]], 3)


def test_g1_example():
    # [[b0, a0], [a0, a1]] with b0 a fresh variable
    b0, a0, a1 = x(0, 3), x(1, 3), x(2, 3)
    m = BorderedSymMatrix([[b0, a0], [a0, a1]], 3)
    assert g_n(m) == a0 * a0
    assert m.minors.minor() == a1 * b0 - a0 * a0
    assert check_bordered_decomposition(m)


def test_zz5_g4_decomposition():
    assert zz5_g4_matches()


def test_xx5_g4():
    assert xx5_g4_matches()


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_ws_identities(n):
    m = BorderedSymMatrix(ws_matrix(n), 2 * n)
    assert check_symmetric_condensation(m)
    assert check_bordered_decomposition(m)
    r = check_border_square_congruence(m)
    assert r.hypothesis and r.holds


@pytest.mark.parametrize("build", [zz5_matrix, xx5_matrix])
def test_ten_edge_identities(build):
    m = BorderedSymMatrix(build(), 10)
    assert check_symmetric_condensation(m)
    assert check_bordered_decomposition(m)
    assert check_border_square_congruence(m).holds


def test_zz5_square_congruence_explicit():
    m = BorderedSymMatrix(zz5_matrix(), 10)
    mm = m.minors
    i4, i3 = mm.principal(0, 4), mm.principal(0, 3)
    assert divides(i4, i3 * g_n(m) - li_n(m) ** 2)


def test_product_congruence_nonsymmetric():
    rng = random.Random(6)
    for n in (2, 3, 4):
        for _ in range(5):
            m = bordered_from_block(random_int_matrix(rng, n), symmetric=False)
            assert check_border_product_congruence(m).holds


def test_degenerate_prime_example():
    m = bordered_from_block([[10, 5], [5, 3]])
    assert check_degenerate_border_congruence(m).holds
    a0 = MPoly.var(0, 3)
    assert divides(5, g_n(m) - 3 * a0 * a0)


def test_degenerate_random_instances():
    rng = random.Random(8)
    for n in (2, 3, 4):
        inst = prime_degenerate_instance(rng, n)
        assert inst is not None
        assert check_degenerate_border_congruence(inst).holds
    for n in (3, 4, 5):
        inst = duplicate_row_instance(rng, n)
        assert inst.minors.principal(0, n) == 0
        assert check_degenerate_border_congruence(inst).holds


def test_degenerate_hypothesis_reported():
    with pytest.raises(HypothesisFailure):
        check_degenerate_border_congruence(bordered_from_block([[2, 1], [1, 3]]))


def test_independence_predicate():
    m = zz5_matrix()
    assert border_independent_of(m, 3)       # A3 only sits in the border
    assert not border_independent_of(m, 4)   # A4 enters C2


# divisibility ---------------------------------------------------------------

def test_divides_examples():
    a1, a2, a3 = x(1), x(2), x(3)
    assert divides(a1, a1 * (a2 + a3))
    assert divides(a1 + a2, a1 * a1 - a2 * a2)
    assert not divides(a1 + a2, a1 * a1 + a2 * a2)
    assert divides(MPoly.const(3, 6), 6 * a1 - 9)
    assert not divides(MPoly.const(3, 6), 6 * a1 - 8)
    assert divides(MPoly.const(0, 6), MPoly.const(0, 6))
    assert not divides(MPoly.const(0, 6), a1)


def test_divides_nonlinear_divisor():
    a1, a2 = x(1), x(2)
    d = a1 * a1 + a2 * a2 + 1
    assert exact_quotient(d * (a1 - 7 * a2 ** 3), d) == a1 - 7 * a2 ** 3
    assert not divides(d, d * a1 + 1)


def test_selftest_report():
    rep = selftest(sizes=[2, 3, 4], trials=10, seed=1)
    assert all(r["passed"] for r in rep.values())
    assert rep["condensation_integer"]["cases"] == 30
