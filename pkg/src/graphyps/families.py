"""Named graphs: wheels, generalized zigzags, the two exceptional ten-edge
graphs, and the gluing operation."""

from __future__ import annotations

import warnings

from .graph import Graph, LoopTable

# Zigzag on five loops, edges numbered and oriented as in the standard
# drawing (vertices left to right along the strip, top row 0, 2, 4).
_ZZ5_EDGES = [(0, 1), (2, 0), (1, 2), (3, 1), (2, 3), (4, 2), (3, 4), (5, 3), (4, 5), (5, 0)]

ZZ5_TABLE = LoopTable([
    [1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 0],
    [0, -1, 0, 0, 0, -1, 0, 0, 1, 1],
])

# XX5 as drawn: corners 0 (bottom left), 1 (bottom right), 2 (top left),
# 3 (top right), side vertices 4 (left) and 5 (right).
_XX5_EDGES = [(1, 0), (0, 4), (4, 1), (0, 2), (2, 4), (5, 2), (2, 3), (3, 5), (3, 1), (1, 5)]

XX5_TABLE = LoopTable([
    [1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 1, 1, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 1, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, -1, 1, 1],
])

# Adjacency matrices from the case analysis of the ten-edge classification.
ADJ_CASE_A = [  # wheel with five spokes
    [0, 1, 1, 1, 1, 1],
    [1, 0, 1, 0, 0, 1],
    [1, 1, 0, 1, 0, 0],
    [1, 0, 1, 0, 1, 0],
    [1, 0, 0, 1, 0, 1],
    [1, 1, 0, 0, 1, 0],
]
ADJ_CASE_B11 = [  # zigzag
    [0, 1, 1, 1, 1, 0],
    [1, 0, 1, 1, 0, 1],
    [1, 1, 0, 0, 0, 1],
    [1, 1, 0, 0, 1, 0],
    [1, 0, 0, 1, 0, 1],
    [0, 1, 1, 0, 1, 0],
]
ADJ_ST5 = [
    [0, 1, 1, 1, 1, 0],
    [1, 0, 1, 1, 1, 0],
    [1, 1, 0, 0, 0, 1],
    [1, 1, 0, 0, 0, 1],
    [1, 1, 0, 0, 0, 1],
    [0, 0, 1, 1, 1, 0],
]
ADJ_XX5 = [
    [0, 0, 1, 1, 1, 1],
    [0, 0, 1, 1, 1, 1],
    [1, 1, 0, 1, 0, 0],
    [1, 1, 1, 0, 0, 0],
    [1, 1, 0, 0, 0, 1],
    [1, 1, 0, 0, 1, 0],
]


class NonSimpleGluingWarning(UserWarning):
    pass


def from_adjacency(adj) -> Graph:
    """Simple graph from a 0/1 symmetric matrix; edges (i, j), i < j, in
    row-major order."""
    n = len(adj)
    for i in range(n):
        if adj[i][i]:
            raise ValueError("adjacency matrix has a self-loop")
        for j in range(n):
            if adj[i][j] != adj[j][i]:
                raise ValueError("adjacency matrix is not symmetric")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if adj[i][j]])


def path(k: int) -> Graph:
    return Graph(k + 1, [(i, i + 1) for i in range(k)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("a simple cycle needs at least 3 edges")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def triangle() -> Graph:
    return cycle(3)


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def wheel(n: int) -> Graph:
    """Wheel with ``n`` spokes: hub 0, rim 1..n.  Rim edges come first
    (ids 0..n-1, edge i joins rim vertices i+1 and i+2), then spokes."""
    if n < 3:
        raise ValueError("wheel needs n >= 3")
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    spokes = [(0, i) for i in range(1, n + 1)]
    return Graph(n + 1, rim + spokes)


def gzz(l) -> Graph:
    """Generalized zigzag graph on the sequence ``l``.

    Vertices u_1..u_{t+2} are 0..t+1; the fan vertices v_ij follow in order.
    Edge order: the path u_1..u_{t+2}, then for each i the path
    u_i, v_i1, ..., u_{i+2} followed by the edges (v_ij, u_{i+1}), and last
    the closing edge (u_1, u_{t+2}).  An entry l_i = 1 contributes the single
    edge (u_i, u_{i+2}).
    """
    l = [int(x) for x in l]
    t = len(l)
    if t < 1:
        raise ValueError("gzz needs at least one entry")
    if any(x < 1 for x in l):
        raise ValueError("gzz entries must be positive")
    if l[0] < 2 or l[-1] < 2:
        raise ValueError("gzz needs l_1 >= 2 and l_t >= 2")
    edges = [(i, i + 1) for i in range(t + 1)]
    nv = t + 2
    for i, li in enumerate(l):
        fan = list(range(nv, nv + li - 1))
        nv += li - 1
        walk = [i] + fan + [i + 2]
        edges += list(zip(walk, walk[1:]))
        edges += [(v, i + 1) for v in fan]
    edges.append((0, t + 1))
    return Graph(nv, edges)


def zigzag(n: int) -> Graph:
    """Zigzag graph with ``n`` loops.  ``zigzag(5)`` uses the standard edge
    numbering (matching ``ZZ5_TABLE``); larger ones are ``gzz([2, 1, ..., 1, 2])``."""
    if n < 5:
        raise ValueError("zigzag needs n >= 5")
    if n == 5:
        return Graph(6, _ZZ5_EDGES)
    return gzz([2] + [1] * (n - 5) + [2])


def xx5() -> Graph:
    """The exceptional graph whose two degree-4 vertices are not adjacent,
    numbered to match ``XX5_TABLE``."""
    return Graph(6, _XX5_EDGES)


def st5() -> Graph:
    """The exceptional graph whose two degree-4 vertices are adjacent."""
    return from_adjacency(ADJ_ST5)


def glue(g1: Graph, e1: int, g2: Graph, e2: int, swap: bool = False) -> Graph:
    """Drop ``e1`` from ``g1`` and ``e2`` from ``g2`` and identify the freed
    endpoints: tail with tail and head with head, or crosswise if ``swap``.

    Vertices of ``g1`` keep their numbers, the other vertices of ``g2``
    follow.  Edges of ``g1`` (minus e1) come first.  A result with parallel
    edges is returned anyway, with a ``NonSimpleGluingWarning``.
    """
    if not 0 <= e1 < g1.num_edges or not 0 <= e2 < g2.num_edges:
        raise IndexError("edge id out of range")
    t1, h1 = g1.edges[e1]
    t2, h2 = g2.edges[e2]
    if swap:
        t2, h2 = h2, t2
    vmap = {t2: t1, h2: h1}
    nxt = g1.vertex_count
    for v in range(g2.vertex_count):
        if v not in vmap:
            vmap[v] = nxt
            nxt += 1
    edges = [e for i, e in enumerate(g1.edges) if i != e1]
    edges += [(vmap[a], vmap[b]) for i, (a, b) in enumerate(g2.edges) if i != e2]
    g = Graph(nxt, edges)
    if not g.is_simple():
        warnings.warn(f"gluing along edges {e1} and {e2} creates parallel edges",
                      NonSimpleGluingWarning, stacklevel=2)
    return g


def catalog() -> dict[str, Graph]:
    """Named graphs used across the tests and demos."""
    return {
        "K4": complete(4),
        "WS3": wheel(3),
        "WS4": wheel(4),
        "WS5": wheel(5),
        "WS6": wheel(6),
        "ZZ5": zigzag(5),
        "ZZ6": zigzag(6),
        "ZZ7": zigzag(7),
        "XX5": xx5(),
        "ST5": st5(),
        "GZZ(3,2,3,4)": gzz([3, 2, 3, 4]),
    }


def family(name: str, params=()) -> Graph:
    """Build a graph by family name: ws n, gzz l1 l2 ..., zz n, xx5, st5,
    k n, cycle n, path n, triangle."""
    name = name.lower()
    params = [int(p) for p in params]

    def one():
        if len(params) != 1:
            raise ValueError(f"family {name} takes exactly one integer parameter")
        return params[0]

    if name in ("ws", "wheel"):
        return wheel(one())
    if name == "gzz":
        return gzz(params)
    if name in ("zz", "zigzag"):
        return zigzag(one())
    if name == "xx5":
        return xx5()
    if name == "st5":
        return st5()
    if name in ("k", "complete"):
        return complete(one())
    if name == "cycle":
        return cycle(one())
    if name == "path":
        return path(one())
    if name == "triangle":
        return triangle()
    raise ValueError(f"unknown family {name!r}")
