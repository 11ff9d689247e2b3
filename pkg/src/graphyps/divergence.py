"""Power counting: convergent, log divergent and primitively log divergent
(PLD) graphs, the small-loop classification, and gluing closure checks."""

from __future__ import annotations

import enum
import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .graph import (MAX_SUBGRAPH_EDGES, Graph, betti, canonical_form, canonical_key,
                    connected_edge_masks, is_connected, is_isomorphic)

MAX_PLD_VERTICES = 16


class DivergenceClass(enum.Enum):
    CONVERGENT = "convergent"
    LOG_DIVERGENT = "log_divergent"
    SUPERDIVERGENT = "superdivergent"


def divergence_class(g: Graph) -> DivergenceClass:
    n, h = g.num_edges, betti(g)
    if n > 2 * h:
        return DivergenceClass.CONVERGENT
    if n == 2 * h:
        return DivergenceClass.LOG_DIVERGENT
    return DivergenceClass.SUPERDIVERGENT


@dataclass(frozen=True)
class PLDVerdict:
    pld: bool
    witness: Graph | None = None
    witness_edges: tuple[int, ...] | None = None
    reason: str = ""

    def __bool__(self):
        return self.pld

    def to_json(self) -> dict:
        return {"pld": self.pld,
                "witness": self.witness.to_json() if self.witness is not None else None}


def _witness(g: Graph, eids, reason: str) -> PLDVerdict:
    eids = tuple(sorted(eids))
    return PLDVerdict(False, g.edge_subgraph(eids), eids, reason)


def _degree_witness(g: Graph) -> PLDVerdict | None:
    """A divergent proper subgraph at a vertex of degree <= 2, if there is
    an easy one: drop the single edge at a degree-1 vertex, or both edges
    at a degree-2 vertex when the rest stays connected."""
    deg = g.degrees()
    for v in range(g.vertex_count):
        inc = [i for i, (a, b) in enumerate(g.edges) if v in (a, b)]
        if len(inc) not in (1, 2):
            continue
        rest = [i for i in range(g.num_edges) if i not in inc]
        if not rest:
            continue
        sub = g.edge_subgraph(rest)
        if is_connected(sub) and divergence_class(sub) != DivergenceClass.CONVERGENT:
            return _witness(g, rest, f"vertex {v} has degree {deg[v]}")
    return None


def _vertex_scan(g: Graph) -> PLDVerdict | None:
    """Exact search over vertex subsets.  For a connected subgraph on vertex
    set W, 2h - |E| = |E| - 2|W| + 2, which is largest for the induced
    subgraph; so a divergent connected proper subgraph exists iff some
    proper W has a connected induced subgraph with |E(W)| >= 2|W| - 2.
    Returns the smallest such witness."""
    n = g.vertex_count
    full = (1 << n) - 1
    emask = [(1 << a) | (1 << b) for a, b in g.edges]
    best = None
    for size in range(2, n):
        for combo in itertools.combinations(range(n), size):
            w = 0
            for v in combo:
                w |= 1 << v
            if w == full:
                continue
            inside = [i for i, m in enumerate(emask) if m & w == m]
            if len(inside) < 2 * size - 2:
                continue
            sub = g.edge_subgraph(inside)
            if sub.vertex_count == size and is_connected(sub):
                best = inside
                break
        if best is not None:
            return _witness(g, best, "divergent induced subgraph")
    return None


def _edge_scan(g: Graph) -> PLDVerdict | None:
    """Literal check over every connected proper edge subset."""
    full = (1 << g.num_edges) - 1
    vm = [(1 << a) | (1 << b) for a, b in g.edges]
    for mask in connected_edge_masks(g):
        if mask == full:
            continue
        ne = bin(mask).count("1")
        verts = 0
        m, i = mask, 0
        while m:
            if m & 1:
                verts |= vm[i]
            m >>= 1
            i += 1
        h = ne - bin(verts).count("1") + 1
        if ne <= 2 * h:
            return _witness(g, [j for j in range(g.num_edges) if (mask >> j) & 1],
                            "divergent connected subgraph")
    return None


def is_pld(g: Graph, method: str = "vertex") -> PLDVerdict:
    """Primitive log divergence with a witness on failure.

    method="vertex" scans vertex subsets (exact, up to 16 vertices);
    method="edges" enumerates connected edge subsets literally (up to 20
    edges).  A whole-graph failure (disconnected or not log divergent) has
    no witness subgraph.
    """
    if method == "edges":
        if g.num_edges > MAX_SUBGRAPH_EDGES:
            raise ValueError(f"edge-subset search limited to {MAX_SUBGRAPH_EDGES} edges")
    elif method == "vertex":
        if g.vertex_count > MAX_PLD_VERTICES:
            raise ValueError(f"vertex-subset search limited to {MAX_PLD_VERTICES} vertices")
    else:
        raise ValueError(f"unknown method {method!r}")
    if g.num_edges == 0 or not is_connected(g):
        return PLDVerdict(False, reason="graph is not connected")
    cls = divergence_class(g)
    low = [v for v, d in enumerate(g.degrees()) if d < 3]
    if cls != DivergenceClass.LOG_DIVERGENT:
        extra = f"; vertex {low[0]} has degree {g.degrees()[low[0]]}" if low else ""
        return PLDVerdict(False, reason=f"graph is {cls.value}{extra}")
    if low:
        found = _degree_witness(g)
        if found is not None:
            return found
    found = _vertex_scan(g) if method == "vertex" else _edge_scan(g)
    return found if found is not None else PLDVerdict(True)


# classification ---------------------------------------------------------------

def _candidate_ok(m: int, edges) -> bool:
    deg = [0] * m
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    return min(deg) >= 3


def _scan_chunk(args):
    m, n_edges, start, stop = args
    pairs = list(itertools.combinations(range(m), 2))
    found = {}
    for combo in itertools.islice(itertools.combinations(pairs, n_edges), start, stop):
        if not _candidate_ok(m, combo):
            continue
        g = Graph(m, list(combo))
        if not is_connected(g):
            continue
        key = canonical_key(g)
        if key in found:
            continue
        if is_pld(g):
            found[key] = g
    return found


def _vertex_range(n: int, m_min: int | None) -> range:
    lo = n + 1 if m_min is None else m_min
    return range(lo, (4 * n) // 3 + 1)


def classify_pld(n_loops: int, m_min: int | None = None, experimental: bool = False,
                 workers: int = 1) -> list[Graph]:
    """Isomorphism classes of PLD simple connected graphs with n loops.

    Enumerates all simple graphs with 2n edges on m vertices, m from n+1
    (or ``m_min``) to floor(4n/3), keeps those with minimum degree 3 that
    are PLD, and returns one canonically labelled graph per class, sorted
    by canonical key.  n is 3..5, or 6 with ``experimental`` (then only
    m = n + 1, the one vertex count a connected log divergent graph can
    have).
    """
    if n_loops not in (3, 4, 5) and not (experimental and n_loops == 6):
        raise ValueError("classification is available for 3, 4 or 5 loops (6 with experimental)")
    n_edges = 2 * n_loops
    ms = [n_loops + 1] if n_loops == 6 else list(_vertex_range(n_loops, m_min))
    found: dict[bytes, Graph] = {}
    for m in ms:
        total = _comb(m * (m - 1) // 2, n_edges)
        if total == 0:
            continue
        if workers > 1:
            step = -(-total // (workers * 8))
            jobs = [(m, n_edges, s, min(s + step, total)) for s in range(0, total, step)]
            with ProcessPoolExecutor(max_workers=workers) as ex:
                for part in ex.map(_scan_chunk, jobs):
                    for k, g in part.items():
                        found.setdefault(k, g)
        else:
            for k, g in _scan_chunk((m, n_edges, 0, total)).items():
                found.setdefault(k, g)
    return [canonical_form(found[k]) for k in sorted(found)]


def _comb(a: int, b: int) -> int:
    from math import comb
    return comb(a, b) if 0 <= b <= a else 0


def default_workers() -> int:
    env = os.environ.get("GRAPHYPS_THREADS")
    if env:
        return max(1, int(env))
    return 1


# gluing ---------------------------------------------------------------------

@dataclass(frozen=True)
class GluingReport:
    checked: int
    skipped_nonsimple: int
    failures: tuple[tuple[int, int, bool], ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok


def verify_gluing_closure(g1: Graph, g2: Graph, pairs=None, swap_options=(False, True),
                          samples: int | None = None, seed: int = 0) -> GluingReport:
    """Glue along edge pairs and check every simple result is PLD.

    ``pairs`` defaults to all edge pairs; ``samples`` draws that many
    (pair, orientation) choices at random instead.  Non-simple results are
    skipped and counted.
    """
    import warnings

    from .families import NonSimpleGluingWarning, glue

    for g in (g1, g2):
        if not is_pld(g):
            raise ValueError("gluing closure needs PLD inputs")
    if pairs is None:
        pairs = [(a, b) for a in range(g1.num_edges) for b in range(g2.num_edges)]
    choices = [(a, b, s) for a, b in pairs for s in swap_options]
    if samples is not None:
        choices = random.Random(seed).sample(choices, min(samples, len(choices)))
    checked = skipped = 0
    failures = []
    for a, b, s in choices:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NonSimpleGluingWarning)
            g = glue(g1, a, g2, b, swap=s)
        if not g.is_simple():
            skipped += 1
            continue
        checked += 1
        if not is_pld(g):
            failures.append((a, b, s))
    return GluingReport(checked, skipped, tuple(failures))


def family_label(g: Graph) -> str | None:
    """Name of the catalog graph isomorphic to ``g``, if any."""
    from .families import catalog

    if g.vertex_count > 12:
        return None
    for name, h in catalog().items():
        if name == "K4":
            continue
        if h.vertex_count <= 12 and is_isomorphic(g, h):
            return name
    return None
