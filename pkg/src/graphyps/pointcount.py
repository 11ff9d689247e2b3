"""Point counts of graph hypersurfaces over prime fields and polynomial
fits of the counts in q."""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import Graph
from .poly import MPoly, psi_det

MAX_COUNT_VARS = 12
DEFAULT_BUDGET = 10 ** 10
CHUNK_ELEMENTS = 1 << 21


class BudgetExceeded(RuntimeError):
    pass


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def default_threads() -> int:
    env = os.environ.get("GRAPHYPS_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _dense(p: MPoly, r: int, q: int) -> np.ndarray:
    """Coefficient tensor of a multilinear polynomial in r variables,
    shape (2,)*r, reduced mod q."""
    t = np.zeros(1 << r, dtype=np.int64)
    for exps, c in p.terms():
        idx = 0
        for i in range(r):
            idx = (idx << 1) | exps[i]
        t[idx] = (t[idx] + c) % q
    return t.reshape((2,) * r) if r else t.reshape(())


def _fix(t: np.ndarray, values: Sequence[int], q: int) -> np.ndarray:
    for x in values:
        t = (t[0] + x * t[1]) % q
    return t


def _expand_into(lo: np.ndarray, hi: np.ndarray, xs: np.ndarray, q: int) -> np.ndarray:
    out = np.multiply(xs[None, :, None], hi[:, None, :])
    out += lo[:, None, :]
    np.remainder(out, q, out=out)
    return out


def _expand(t: np.ndarray, q: int) -> np.ndarray:
    """Values of the multilinear form on all of F_q^r, flattened."""
    r = t.ndim
    if r == 0:
        return t.reshape(1)
    dt = np.int32 if q < 46000 else np.int64
    xs = np.arange(q, dtype=dt)
    a = t.astype(dt).reshape(1, 2, -1)
    for k in range(r):
        lo, hi = a[:, 0, :], a[:, 1, :]
        a = _expand_into(lo, hi, xs, q)
        rest = a.shape[2]
        if k < r - 1:
            a = a.reshape(a.shape[0] * q, 2, rest // 2)
        else:
            a = a.reshape(-1)
    return a


def affine_zeros(psi: MPoly, q: int, threads: int | None = None,
                 budget: int = DEFAULT_BUDGET, force: bool = False) -> int:
    """Number of a in F_q^N with psi(a) = 0.

    Writes psi = alpha * x + beta in the last variable; for every
    assignment of the others a point contributes 1 if alpha != 0 and q if
    alpha = beta = 0.
    """
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    n = psi.nvars
    if n > MAX_COUNT_VARS:
        raise ValueError(f"point counting limited to {MAX_COUNT_VARS} variables")
    if not psi.is_multilinear():
        raise ValueError("polynomial is not multilinear")
    if n == 0:
        return 1 if psi.evaluate([], q) == 0 else 0
    steps = q ** (n - 1)
    if steps > budget and not force:
        raise BudgetExceeded(f"{steps} assignments exceed the budget of {budget}")
    r = n - 1
    alpha, beta = psi.split_linear(n - 1)
    ta, tb = _dense(alpha, r, q), _dense(beta, r, q)
    threads = threads or default_threads()

    c = 0
    while c < r and (q ** (r - c) > CHUNK_ELEMENTS or q ** c < 4 * threads):
        c += 1

    def work(idx: int) -> int:
        vals = []
        for _ in range(c):
            idx, v = divmod(idx, q)
            vals.append(v)
        a = _expand(_fix(ta, vals[::-1], q), q)
        b = _expand(_fix(tb, vals[::-1], q), q)
        za = a == 0
        return int(a.size - np.count_nonzero(za)) + q * int(np.count_nonzero(za & (b == 0)))

    jobs = range(q ** c)
    if threads == 1 or len(jobs) == 1:
        return sum(work(j) for j in jobs)
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return sum(ex.map(work, jobs))


@dataclass(frozen=True)
class PointCountRecord:
    graph: str
    q: int
    projective_count: int
    affine_zero_count: int
    nvars: int
    wall_time: float = field(default=0.0, compare=False)

    def to_json(self, timing: bool = False) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("wall_time")
        return d


def count_projective(g: Graph | MPoly, q: int, graph_id: str = "", threads: int | None = None,
                     force: bool = False, budget: int = DEFAULT_BUDGET) -> PointCountRecord:
    """Points of the projective hypersurface psi = 0 over F_q."""
    psi = psi_det(g) if isinstance(g, Graph) else g
    t0 = time.perf_counter()
    aff = affine_zeros(psi, q, threads=threads, budget=budget, force=force)
    elapsed = time.perf_counter() - t0
    if (aff - 1) % (q - 1):
        raise ArithmeticError(f"affine count {aff} - 1 is not divisible by {q - 1}")
    proj = (aff - 1) // (q - 1)
    n = psi.nvars
    if not 0 <= proj <= (q ** n - 1) // (q - 1):
        raise ArithmeticError("projective count out of range")
    return PointCountRecord(graph_id, q, proj, aff, n, elapsed)


@dataclass(frozen=True)
class CountFit:
    """Interpolated count polynomial, coefficients from the constant term up."""

    coefficients: tuple[Fraction, ...]
    degree_bound: int
    primes: tuple[int, ...]

    @property
    def integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def consistent(self) -> bool:
        """The interpolant respects the degree bound."""
        return self.degree <= self.degree_bound

    def __call__(self, q: int) -> Fraction:
        v = Fraction(0)
        for c in reversed(self.coefficients):
            v = v * q + c
        return v

    def to_json(self) -> dict:
        return {
            "coefficients": [str(c) for c in self.coefficients],
            "degree": self.degree,
            "degree_bound": self.degree_bound,
            "integral": self.integral,
            "primes": list(self.primes),
        }


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Newton interpolation, returned in the monomial basis."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        # poly = poly * (x - xs[k]) + dd[k]
        nxt = [Fraction(0)] * n
        for i in range(n - 1):
            nxt[i + 1] += poly[i]
            nxt[i] -= poly[i] * xs[k]
        nxt[0] += dd[k]
        poly = nxt
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def fit_count_polynomial(records: Sequence[PointCountRecord], degree: int | None = None) -> CountFit:
    """Interpolate the projective counts as a polynomial in q.

    The degree bound defaults to N - 2.  All records are interpolated; with
    more points than degree + 1 an over-degree result shows up as
    ``consistent == False``.
    """
    pts = {}
    for r in records:
        if r.q in pts and pts[r.q] != r.projective_count:
            raise ValueError(f"conflicting counts at q={r.q}")
        pts[r.q] = r.projective_count
    if degree is None:
        nv = {r.nvars for r in records}
        if len(nv) != 1:
            raise ValueError("records come from different variable counts")
        degree = max(0, nv.pop() - 2)
    if len(pts) < degree + 1:
        raise ValueError(f"need {degree + 1} distinct primes, have {len(pts)}")
    xs = sorted(pts)
    coeffs = _interpolate(xs, [pts[x] for x in xs])
    return CountFit(tuple(coeffs), degree, tuple(xs))


def validate(fit: CountFit, holdout: Sequence[PointCountRecord]) -> bool:
    """The fit predicts every held-out count exactly."""
    return all(fit(r.q) == r.projective_count for r in holdout)
