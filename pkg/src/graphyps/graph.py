"""Oriented graphs with numbered edges, loop tables, and the combinatorial
enumerators the rest of the package is built on.

Edges are stored as ``(tail, head)`` pairs; the position in the edge list is
the edge id.  Parallel edges are allowed (gluing and contraction produce
them), self-loops are not.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

MAX_SUBGRAPH_EDGES = 20
MAX_ISO_VERTICES = 12


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        for eid, (a, b) in enumerate(edges):
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError(f"edge {eid} = {(a, b)} has a vertex out of range")
            if a == b:
                raise ValueError(f"edge {eid} is a self-loop at vertex {a}")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    def adjacency(self) -> np.ndarray:
        """Symmetric multiplicity matrix (orientation ignored)."""
        adj = np.zeros((self.vertex_count, self.vertex_count), dtype=int)
        for a, b in self.edges:
            adj[a, b] += 1
            adj[b, a] += 1
        return adj

    def is_simple(self) -> bool:
        seen = set()
        for a, b in self.edges:
            key = (min(a, b), max(a, b))
            if key in seen:
                return False
            seen.add(key)
        return True

    def sign(self, eid: int, v: int) -> int:
        """+1 if edge ``eid`` exits ``v``, -1 if it enters ``v``, else 0."""
        a, b = self.edges[eid]
        if v == a:
            return 1
        if v == b:
            return -1
        return 0

    def boundary_matrix(self) -> np.ndarray:
        """|V| x |E| matrix of the boundary map on edge chains."""
        d = np.zeros((self.vertex_count, self.num_edges), dtype=int)
        for eid, (a, b) in enumerate(self.edges):
            d[a, eid] += 1
            d[b, eid] -= 1
        return d

    # derived graphs

    def flip(self, eid: int) -> "Graph":
        edges = list(self.edges)
        a, b = edges[eid]
        edges[eid] = (b, a)
        return Graph(self.vertex_count, edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Rename vertex ``v`` to ``perm[v]``."""
        return Graph(self.vertex_count, [(perm[a], perm[b]) for a, b in self.edges])

    def delete_edge(self, eid: int) -> "Graph":
        return Graph(self.vertex_count, self.edges[:eid] + self.edges[eid + 1:])

    def contract_edge(self, eid: int) -> "Graph":
        """Identify the endpoints of ``eid`` and drop it.

        The merged vertex takes the smaller index; the remaining vertices are
        renumbered consecutively and edge order is kept.
        """
        a, b = self.edges[eid]
        keep, gone = min(a, b), max(a, b)

        def ren(v):
            if v == gone:
                v = keep
            return v - 1 if v > gone else v

        edges = [(ren(x), ren(y)) for i, (x, y) in enumerate(self.edges) if i != eid]
        if any(x == y for x, y in edges):
            raise ValueError(f"contracting edge {eid} creates a self-loop (it has a parallel edge)")
        return Graph(self.vertex_count - 1, edges)

    def edge_subgraph(self, eids) -> "Graph":
        """Subgraph on the given edges; vertices are the endpoints, renumbered
        in increasing order.  Edge order follows ``sorted(eids)``."""
        eids = sorted(eids)
        verts = sorted({v for e in eids for v in self.edges[e]})
        index = {v: i for i, v in enumerate(verts)}
        return Graph(len(verts), [(index[self.edges[e][0]], index[self.edges[e][1]]) for e in eids])

    def induced_subgraph(self, verts) -> "Graph":
        verts = sorted(verts)
        index = {v: i for i, v in enumerate(verts)}
        edges = [(index[a], index[b]) for a, b in self.edges if a in index and b in index]
        return Graph(len(verts), edges)

    # interchange

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data) -> "Graph":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        return cls(int(data["vertices"]), [tuple(e) for e in data["edges"]])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.vertex_count
    return Graph(n + g2.vertex_count, list(g1.edges) + [(a + n, b + n) for a, b in g2.edges])


@dataclass(frozen=True)
class LoopTable:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(x not in (-1, 0, 1) for r in rows for x in r):
            raise ValueError("loop table entries must be -1, 0 or +1")
        if len({len(r) for r in rows}) > 1:
            raise ValueError("loop table rows have different lengths")

    def __len__(self):
        return len(self.rows)

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=int).reshape(len(self.rows), -1)

    def is_valid_for(self, g: Graph) -> bool:
        """Rows lie in the cycle space of ``g`` and form a basis of it."""
        t = self.as_array()
        if len(self.rows) != betti(g):
            return False
        if len(self.rows) == 0:
            return True
        if t.shape[1] != g.num_edges:
            return False
        if np.any(g.boundary_matrix() @ t.T):
            return False
        return _integer_rank(t) == len(self.rows)


def _integer_rank(mat: np.ndarray) -> int:
    """Rank by fraction-free Gaussian elimination on Python ints."""
    rows = [list(map(int, r)) for r in mat]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        for r in range(rank + 1, len(rows)):
            if rows[r][c]:
                f = rows[r][c]
                rows[r] = [p[c] * x - f * y for x, y in zip(rows[r], p)]
        rank += 1
    return rank


def _components(n: int, edges) -> list[int]:
    """Component label per vertex (labels are representative vertices)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return [find(v) for v in range(n)]


def connected_components(g: Graph) -> int:
    return len(set(_components(g.vertex_count, g.edges)))


def is_connected(g: Graph) -> bool:
    return g.vertex_count > 0 and connected_components(g) == 1


def betti(g: Graph) -> int:
    """Rank of the first homology: |E| - |V| + #components."""
    return g.num_edges - g.vertex_count + connected_components(g)


def _table_from_tree(g: Graph, parent_edge: dict[int, int], parent: dict[int, int],
                     depth: dict[int, int]) -> LoopTable:
    tree_edges = set(parent_edge.values())
    rows = []
    for eid, (a, b) in enumerate(g.edges):
        if eid in tree_edges:
            continue
        # Loop traced along eid from a to b, then back through the tree b -> a.
        row = [0] * g.num_edges
        row[eid] = 1
        x, y = b, a
        up_x, up_y = [], []
        while x != y:
            if depth[x] >= depth[y]:
                up_x.append(x)
                x = parent[x]
            else:
                up_y.append(y)
                y = parent[y]
        for v in up_x:  # walking from b towards the meeting point
            e = parent_edge[v]
            row[e] += g.sign(e, v)
        for v in up_y:  # walking from the meeting point down to a
            e = parent_edge[v]
            row[e] -= g.sign(e, v)
        rows.append(row)
    return LoopTable(rows)


def cycle_basis(g: Graph) -> LoopTable:
    """Fundamental cycles of a breadth-first spanning tree rooted at vertex 0.

    Each non-tree edge contributes one row, traced in the direction of that
    edge.  Deterministic given the edge order.
    """
    if not is_connected(g):
        raise ValueError("cycle_basis needs a connected graph")
    inc = [[] for _ in range(g.vertex_count)]
    for eid, (a, b) in enumerate(g.edges):
        inc[a].append((eid, b))
        inc[b].append((eid, a))
    parent, parent_edge, depth = {0: 0}, {}, {0: 0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for eid, w in inc[v]:
            if w not in depth:
                depth[w] = depth[v] + 1
                parent[w] = v
                parent_edge[w] = eid
                queue.append(w)
    return _table_from_tree(g, parent_edge, parent, depth)


def random_cycle_basis(g: Graph, rng: np.random.Generator) -> LoopTable:
    """Fundamental cycles of a randomly grown spanning tree (random root,
    random edge scan order), with randomly reversed tracing directions."""
    if not is_connected(g):
        raise ValueError("random_cycle_basis needs a connected graph")
    inc = [[] for _ in range(g.vertex_count)]
    for eid, (a, b) in enumerate(g.edges):
        inc[a].append((eid, b))
        inc[b].append((eid, a))
    root = int(rng.integers(g.vertex_count))
    parent, parent_edge, depth = {root: root}, {}, {root: 0}
    frontier = [root]
    while frontier:
        v = frontier.pop(int(rng.integers(len(frontier))))
        for k in rng.permutation(len(inc[v])):
            eid, w = inc[v][k]
            if w not in depth:
                depth[w] = depth[v] + 1
                parent[w] = v
                parent_edge[w] = eid
                frontier.append(w)
    table = _table_from_tree(g, parent_edge, parent, depth)
    signs = rng.choice([-1, 1], size=len(table))
    return LoopTable([[s * x for x in row] for s, row in zip(signs, table.rows)])


def _incidence_masks(g: Graph) -> list[int]:
    masks = [0] * g.vertex_count
    for eid, (a, b) in enumerate(g.edges):
        masks[a] |= 1 << eid
        masks[b] |= 1 << eid
    return masks


def connected_edge_masks(g: Graph) -> Iterator[int]:
    """Every nonempty edge set (as a bitmask) whose edges form a connected
    subgraph, each exactly once."""
    if g.num_edges > MAX_SUBGRAPH_EDGES:
        raise ValueError(f"subgraph enumeration limited to {MAX_SUBGRAPH_EDGES} edges")
    inc = _incidence_masks(g)
    ends = [(1 << a) | (1 << b) for a, b in g.edges]

    def boundary(vmask):
        out = 0
        while vmask:
            low = vmask & -vmask
            out |= inc[low.bit_length() - 1]
            vmask ^= low
        return out

    # Branch on one boundary edge at a time: either forbid it or take it.
    for root in range(g.num_edges):
        forbidden0 = (1 << root) - 1
        stack = [(1 << root, ends[root], forbidden0)]
        while stack:
            emask, vmask, forbidden = stack.pop()
            cand = boundary(vmask) & ~emask & ~forbidden
            if not cand:
                yield emask
                continue
            f = cand & -cand
            fid = f.bit_length() - 1
            stack.append((emask, vmask, forbidden | f))
            stack.append((emask | f, vmask | ends[fid], forbidden))


def connected_edge_subgraphs(g: Graph) -> Iterator[Graph]:
    for mask in connected_edge_masks(g):
        yield g.edge_subgraph(i for i in range(g.num_edges) if mask >> i & 1)


def spanning_tree_masks(g: Graph) -> Iterator[int]:
    """Spanning forests (one spanning tree per component) as edge bitmasks.

    Backtracking over edges in id order with a union-find of the chosen
    edges; an edge is skipped only if the remaining edges can still connect
    every component.
    """
    n, m, edges = g.vertex_count, g.num_edges, g.edges
    target = connected_components(g)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def can_finish(i, ncomp):
        p = {}

        def f(x):
            while x in p:
                x = p[x]
            return x

        for j in range(i, m):
            a, b = f(find(edges[j][0])), f(find(edges[j][1]))
            if a != b:
                p[a] = b
                ncomp -= 1
                if ncomp == target:
                    return True
        return ncomp == target

    def rec(i, mask, ncomp):
        if ncomp == target:
            yield mask
            return
        if i == m:
            return
        a, b = find(edges[i][0]), find(edges[i][1])
        if a != b:
            parent[a] = b
            yield from rec(i + 1, mask | (1 << i), ncomp - 1)
            parent[a] = a
            if can_finish(i + 1, ncomp):
                yield from rec(i + 1, mask, ncomp)
        else:
            yield from rec(i + 1, mask, ncomp)

    yield from rec(0, 0, n)


def spanning_trees(g: Graph) -> Iterator[frozenset[int]]:
    for mask in spanning_tree_masks(g):
        yield frozenset(i for i in range(g.num_edges) if mask >> i & 1)


def laplacian(g: Graph) -> np.ndarray:
    adj = g.adjacency()
    return np.diag(adj.sum(axis=1)) - adj


# isomorphism


def _refine_colors(adj: list[list[int]], colors: list) -> list[int]:
    """Colour refinement; returns canonical integer colours."""
    n = len(adj)
    ranks = _rank(colors)
    while True:
        sig = [(ranks[v], tuple(sorted((ranks[w], adj[v][w]) for w in range(n) if adj[v][w])))
               for v in range(n)]
        new = _rank(sig)
        if len(set(new)) == len(set(ranks)):
            return new
        ranks = new


def _rank(values) -> list[int]:
    order = {v: i for i, v in enumerate(sorted(set(values)))}
    return [order[v] for v in values]


def canonical_key(g: Graph) -> bytes:
    """Isomorphism-invariant key: the vertex count followed by the minimal
    upper-triangular adjacency string over orderings that respect the
    refined degree classes.  Orientation and edge numbering are ignored."""
    n = g.vertex_count
    if n > MAX_ISO_VERTICES:
        raise ValueError(f"isomorphism tests limited to {MAX_ISO_VERTICES} vertices")
    adj = g.adjacency().tolist()
    colors = _refine_colors(adj, g.degrees())
    slots = sorted(range(n), key=lambda v: colors[v])
    slot_color = [colors[v] for v in slots]

    best: list | None = None
    order: list[int] = []
    used = [False] * n
    prefix: list[int] = []

    def search(k):
        nonlocal best
        if k == n:
            if best is None or prefix < best:
                best = list(prefix)
            return
        want = slot_color[k]
        options = {}
        for v in range(n):
            if used[v] or colors[v] != want:
                continue
            col = tuple(adj[u][v] for u in order)
            options.setdefault(col, []).append(v)
        col = min(options)
        cands = options[col]
        # twins (same neighbourhood outside the pair) are interchangeable
        picked = []
        for v in cands:
            if any(_twins(adj, v, w, used) for w in picked):
                continue
            picked.append(v)
        base = len(prefix)
        prefix.extend(col)
        if best is not None and prefix > best[:len(prefix)]:
            del prefix[base:]
            return
        for v in picked:
            used[v] = True
            order.append(v)
            search(k + 1)
            order.pop()
            used[v] = False
        del prefix[base:]

    search(0)
    body = bytes([n]) + bytes(slot_color) + bytes(best or [])
    return body


def graph_from_key(key: bytes) -> Graph:
    """The canonically labelled graph encoded by ``canonical_key``."""
    n = key[0]
    body = key[1 + n:]
    edges = []
    pos = 0
    for k in range(n):
        for i in range(k):
            edges += [(i, k)] * body[pos]
            pos += 1
    return Graph(n, edges)


def canonical_form(g: Graph) -> Graph:
    return graph_from_key(canonical_key(g))


def _twins(adj, v, w, used) -> bool:
    n = len(adj)
    return all(adj[v][x] == adj[w][x] for x in range(n) if x != v and x != w)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.vertex_count != g2.vertex_count or g1.num_edges != g2.num_edges:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    return canonical_key(g1) == canonical_key(g2)
