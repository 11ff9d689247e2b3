"""Renamed (A, B) coordinates for the ten-edge graphs and the named
symmetric matrices built from them.

In these coordinates the graph matrix of ZZ5 or XX5 has single variables
everywhere except one diagonal entry C2, which is a signed sum of A's.
"""

from __future__ import annotations

from .poly import MPoly

AB_NAMES = ["A0", "A1", "A2", "A3", "A4", "A5", "B0", "B1", "B3", "B4"]
_AB = {name: i for i, name in enumerate(AB_NAMES)}


def ab(name: str) -> MPoly:
    return MPoly.var(_AB[name], len(AB_NAMES))


def _lin(coeffs: dict[str, int]) -> MPoly:
    out = MPoly.const(0, len(AB_NAMES))
    for name, c in coeffs.items():
        out = out + ab(name) * c
    return out


# T_k (edge k, 1-based in the drawings) written in A/B coordinates.
ZZ5_T_IN_AB = [
    {"B0": 1, "A5": 1, "A0": -1},
    {"A5": -1},
    {"A0": 1},
    {"B1": 1, "A0": -1, "A1": -1},
    {"A1": 1},
    {"A4": -1},
    {"A2": 1},
    {"B3": 1, "A2": -1, "A3": -1},
    {"A3": 1},
    {"B4": 1, "A5": 1, "A4": 1, "A3": -1},
]

XX5_T_IN_AB = [
    {"B0": 1, "A0": 1, "A4": -1},
    {"A0": -1},
    {"A4": 1},
    {"B1": 1, "A0": 1, "A1": -1},
    {"A1": 1},
    {"A2": 1},
    {"B3": 1, "A2": -1, "A3": 1},
    {"A3": -1},
    {"B4": 1, "A3": 1, "A5": -1},
    {"A5": 1},
]

_SUBS = {"zz5": ZZ5_T_IN_AB, "xx5": XX5_T_IN_AB}


def to_ab_coords(psi: MPoly, which: str) -> MPoly:
    """Rewrite a polynomial in T_1..T_10 in the A/B coordinates of ``which``
    ('zz5' or 'xx5')."""
    try:
        table = _SUBS[which]
    except KeyError:
        raise ValueError(f"no A/B coordinates for {which!r}") from None
    return psi.compose([_lin(s) for s in table])


def zz5_matrix() -> list[list[MPoly]]:
    """ZZ5 graph matrix in A/B coordinates; C2 = A1 + A2 - A4."""
    z = MPoly.const(0, len(AB_NAMES))
    A = [ab(f"A{i}") for i in range(6)]
    c2 = A[1] + A[2] - A[4]
    return [
        [ab("B0"), A[0], z, z, A[5]],
        [A[0], ab("B1"), A[1], z, z],
        [z, A[1], c2, A[2], A[4]],
        [z, z, A[2], ab("B3"), A[3]],
        [A[5], z, A[4], A[3], ab("B4")],
    ]


def xx5_matrix() -> list[list[MPoly]]:
    """XX5 graph matrix in A/B coordinates; C2 = A1 + A2 + A4 + A5."""
    z = MPoly.const(0, len(AB_NAMES))
    A = [ab(f"A{i}") for i in range(6)]
    c2 = A[1] + A[2] + A[4] + A[5]
    return [
        [ab("B0"), A[0], A[4], z, z],
        [A[0], ab("B1"), A[1], z, z],
        [A[4], A[1], c2, A[2], A[5]],
        [z, z, A[2], ab("B3"), A[3]],
        [z, z, A[5], A[3], ab("B4")],
    ]


def ws_names(n: int) -> list[str]:
    return [f"A{i}" for i in range(n)] + [f"B{i}" for i in range(n)]


def ws_matrix(n: int) -> list[list[MPoly]]:
    """Three-diagonal n x n matrix with diagonal B_0..B_{n-1}, off-diagonal
    A_0..A_{n-2} and A_{n-1} in the two corners (the wheel's loop matrix).
    Variables: A_i is i, B_i is n + i."""
    if n < 3:
        raise ValueError("need n >= 3")
    nv = 2 * n
    m = [[MPoly.const(0, nv) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        m[i][i] = MPoly.var(n + i, nv)
    for i in range(n - 1):
        m[i][i + 1] = m[i + 1][i] = MPoly.var(i, nv)
    m[0][n - 1] = m[n - 1][0] = MPoly.var(n - 1, nv)
    return m
