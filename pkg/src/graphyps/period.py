"""Monte Carlo estimate of the parametric period

    P(G) = integral over the positive simplex of Omega / Psi^2,

computed in an affine chart A_k = 1 as the integral of dA / Psi(A)^2 over
the positive orthant of the remaining N - 1 coordinates.  Only this
projective integral is computed; the rational and pi-power factors that
relate it to the momentum-space period are not applied.

Sampling: A_i = (u_i / (1 - u_i))^p with u_i uniform.  For p = 1 the
estimator has infinite variance on any graph with more than one loop (the
squared weight near the corner where the chart coordinate dominates decays
like the volume element), so the exponent defaults to the loop number,
which keeps the variance finite for PLD graphs.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .divergence import PLDVerdict, is_pld
from .graph import Graph, betti
from .poly import psi_det

BATCH = 1 << 16


class ConvergenceRefused(ValueError):
    """The period integral diverges; carries the PLD verdict and witness."""

    def __init__(self, verdict: PLDVerdict):
        self.verdict = verdict
        msg = "period diverges: graph is not primitively log divergent"
        if verdict.reason:
            msg += f" ({verdict.reason})"
        if verdict.witness_edges is not None:
            msg += f"; divergent subgraph on edges {list(verdict.witness_edges)}"
        super().__init__(msg)


@dataclass(frozen=True)
class PeriodEstimate:
    graph: str
    mean: float
    standard_error: float
    samples: int
    seed: int
    chart: int
    exponent: float
    rejected: int = 0

    def to_json(self) -> dict:
        return asdict(self)


def _monomials(g: Graph) -> np.ndarray:
    psi = psi_det(g)
    if set(psi.coefficients()) != {1}:
        raise ValueError("graph polynomial has coefficients other than 1")
    return np.array([e for e, _ in psi.terms()], dtype=np.float64)


def sample_weights(mono: np.ndarray, chart: int, p: float, n: int,
                   rng: np.random.Generator) -> np.ndarray:
    """n importance weights; non-finite entries mark overflowed samples."""
    nv = mono.shape[1]
    u = rng.random((n, nv - 1))
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        lr = np.log(u) - np.log1p(-u)             # log(u / (1 - u))
        la = p * lr                               # log A_i
        # log dA/du = log p + (p - 1) log(u/(1-u)) - 2 log(1 - u)
        ljac = math.log(p) + (p - 1) * lr - 2 * np.log1p(-u)
        full = np.insert(la, chart, 0.0, axis=1)
        lpsi = np.logaddexp.reduce(full @ mono.T, axis=1)
        return np.exp(ljac.sum(axis=1) - 2 * lpsi)


def _batch(mono: np.ndarray, chart: int, p: float, n: int, rng: np.random.Generator):
    """(count, mean, M2, rejected) of the weights of one batch."""
    w = sample_weights(mono, chart, p, n, rng)
    w = w[np.isfinite(w)]
    if len(w) == 0:
        return 0, 0.0, 0.0, n
    m = float(w.mean())
    return len(w), m, float(((w - m) ** 2).sum()), int(n - len(w))


def estimate_period(g: Graph, samples: int, seed: int, chart: int | None = None,
                    exponent: float | None = None, graph_id: str = "",
                    threads: int | None = None, batch: int = BATCH) -> PeriodEstimate:
    """Unbiased estimate of the period with its standard error.

    Refuses graphs that are not PLD (the integral diverges exactly then).
    Batches draw from independent streams spawned from ``seed`` and are
    combined in batch order, so the result depends only on (graph,
    samples, seed, chart, exponent, batch) and not on the thread count.
    """
    if samples < 2:
        raise ValueError("need at least 2 samples")
    verdict = is_pld(g)
    if not verdict:
        raise ConvergenceRefused(verdict)
    nv = g.num_edges
    chart = nv - 1 if chart is None else chart
    if not 0 <= chart < nv:
        raise ValueError("chart index out of range")
    p = float(betti(g) if exponent is None else exponent)
    if p <= 0:
        raise ValueError("exponent must be positive")
    mono = _monomials(g)
    sizes = [batch] * (samples // batch)
    if samples % batch:
        sizes.append(samples % batch)
    streams = np.random.SeedSequence(seed).spawn(len(sizes))

    def run(i):
        return _batch(mono, chart, p, sizes[i], np.random.default_rng(streams[i]))

    threads = threads or int(os.environ.get("GRAPHYPS_THREADS", "0")) or (os.cpu_count() or 1)
    if threads > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(run, range(len(sizes))))
    else:
        parts = [run(i) for i in range(len(sizes))]

    # Chan et al. pairwise combination, in batch order
    cnt, mean, m2, rej = 0, 0.0, 0.0, 0
    for c, m, q, r in parts:
        rej += r
        if c == 0:
            continue
        tot = cnt + c
        delta = m - mean
        mean += delta * c / tot
        m2 += q + delta * delta * cnt * c / tot
        cnt = tot
    if cnt < 2:
        raise FloatingPointError("no finite samples")
    se = math.sqrt(m2 / (cnt - 1) / cnt)
    return PeriodEstimate(graph_id, mean, se, samples, seed, chart, p, rej)
