"""Minors of bordered symmetric matrices and exact checks of the
determinant identities built on Dodgson condensation.

Notation.  For a square matrix M with indices 0..n, M(R; C) is the
determinant after deleting rows R and columns C (the empty determinant is
1).  I_k is the leading principal k x k minor, I^i_k the principal minor on
indices i..i+k-1, S_t = M(t..n; 0, t+1..n), and I_n(i; j) = M(i, n; j, n).
For a bordered matrix the last row holds a_0..a_n and

    det M = a_n I_n - G_n,
    G_n   = sum_{i,j<n} (-1)^(i+j) a_i a_j I_n(i; j),
    Li_n  = sum_{i<n} (-1)^(i+n-1) a_i I_n(i; n-1).

"Congruent mod I_n" is checked as exact divisibility of the difference.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .poly import MPoly, determinant, _det_int

SZ_PRIME = (1 << 61) - 1


# determinant backends -------------------------------------------------------

def _det_mod(a: list[list[int]], p: int) -> int:
    n = len(a)
    a = [[x % p for x in r] for r in a]
    d = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            d = -d
        d = d * a[k][k] % p
        inv = pow(a[k][k], -1, p)
        for i in range(k + 1, n):
            f = a[i][k] * inv % p
            if f:
                for j in range(k, n):
                    a[i][j] = (a[i][j] - f * a[k][j]) % p
    return d % p


class Minors:
    """Cached minors of one square matrix.

    Entries may be MPoly (exact symbolic), int (exact integer), or ints
    reduced modulo ``modulus`` (fast randomized checks).
    """

    def __init__(self, rows: Sequence[Sequence], modulus: int | None = None,
                 nvars: int | None = None):
        self.rows = [list(r) for r in rows]
        self.size = len(self.rows)
        if any(len(r) != self.size for r in self.rows):
            raise ValueError("matrix is not square")
        self.modulus = modulus
        self.symbolic = any(isinstance(x, MPoly) for r in self.rows for x in r)
        self.nvars = nvars
        if self.symbolic and nvars is None:
            self.nvars = max(x.nvars for r in self.rows for x in r if isinstance(x, MPoly))
        self._cache: dict = {}

    def _check(self, idx):
        for i in idx:
            if not 0 <= i < self.size:
                raise IndexError(f"index {i} out of range for size {self.size}")

    def minor(self, drop_rows: Sequence[int] = (), drop_cols: Sequence[int] = ()):
        """M(drop_rows; drop_cols)."""
        self._check(drop_rows)
        self._check(drop_cols)
        dr, dc = set(drop_rows), set(drop_cols)
        if len(dr) != len(dc):
            raise ValueError("row and column deletion sets differ in size")
        r = tuple(i for i in range(self.size) if i not in dr)
        c = tuple(j for j in range(self.size) if j not in dc)
        key = (r, c)
        if key not in self._cache:
            sub = [[self.rows[i][j] for j in c] for i in r]
            if self.symbolic:
                val = determinant(sub, self.nvars)
            elif self.modulus:
                val = _det_mod(sub, self.modulus) if sub else 1
            else:
                val = _det_int(sub) if sub else 1
            self._cache[key] = val
        return self._cache[key]

    def principal(self, start: int, k: int):
        """I^start_k: principal minor on indices start..start+k-1."""
        if k < 0 or start < 0 or start + k > self.size:
            raise IndexError("principal block out of range")
        keep = set(range(start, start + k))
        drop = [i for i in range(self.size) if i not in keep]
        return self.minor(drop, drop)

    def zero(self):
        return MPoly.const(0, self.nvars) if self.symbolic else 0

    def reduce(self, x):
        return x % self.modulus if self.modulus and not self.symbolic else x


def minor(m, rows: Sequence[int], cols: Sequence[int]):
    """Determinant of ``m`` with ``rows`` and ``cols`` deleted."""
    return Minors(_rows_of(m)).minor(rows, cols)


def I_k(m, k: int):
    return Minors(_rows_of(m)).principal(0, k)


def I_sup(m, i: int, k: int):
    return Minors(_rows_of(m)).principal(i, k)


def S_t(m, t: int):
    """M(t, ..., n; 0, t+1, ..., n): rows 0..t-1 against columns 1..t."""
    mm = Minors(_rows_of(m))
    n = mm.size - 1
    if not 1 <= t <= n:
        raise IndexError("S_t needs 1 <= t <= n")
    return mm.minor(range(t, n + 1), [0] + list(range(t + 1, n + 1)))


def _rows_of(m):
    return m.rows if isinstance(m, BorderedSymMatrix) else m


# bordered matrices ----------------------------------------------------------

def _single_var(p) -> int | None:
    if not isinstance(p, MPoly) or len(p) != 1:
        return None
    (exps, c), = p.terms()
    if c != 1 or sum(exps) != 1:
        return None
    return exps.index(1)


@dataclass
class BorderedSymMatrix:
    """(n+1) x (n+1) matrix whose last row and column carry the border
    "variables" a_0..a_n.  Each nonzero a_i must be a distinct single
    variable.  ``symmetric=False`` relaxes only the interior block (the
    border itself is always symmetric)."""

    rows: list[list[MPoly]]
    nvars: int
    symmetric: bool = True
    names: list[str] | None = None
    _minors: Minors = field(init=False, repr=False)

    def __post_init__(self):
        size = len(self.rows)
        if size < 2:
            raise ValueError("bordered matrix needs size >= 2")
        self.rows = [[x if isinstance(x, MPoly) else MPoly.const(x, self.nvars) for x in r]
                     for r in self.rows]
        if any(len(r) != size for r in self.rows):
            raise ValueError("matrix is not square")
        n = size - 1
        for i in range(size):
            if self.rows[i][n] != self.rows[n][i]:
                raise ValueError("last column is not the transpose of the last row")
        if self.symmetric:
            for i in range(size):
                for j in range(i):
                    if self.rows[i][j] != self.rows[j][i]:
                        raise ValueError(f"not symmetric at ({i},{j})")
        seen = set()
        for a in self.border:
            if not a:
                continue
            v = _single_var(a)
            if v is None:
                raise ValueError("border entries must be single variables or zero")
            if v in seen:
                raise ValueError("border variables must be distinct")
            seen.add(v)
        self._minors = Minors(self.rows, nvars=self.nvars)

    @property
    def n(self) -> int:
        return len(self.rows) - 1

    @property
    def border(self) -> list[MPoly]:
        return list(self.rows[-1])

    @property
    def minors(self) -> Minors:
        return self._minors


def _as_minors(m) -> Minors:
    if isinstance(m, BorderedSymMatrix):
        return m.minors
    if isinstance(m, Minors):
        return m
    return Minors(m)


def _border(mm: Minors) -> list:
    return list(mm.rows[-1])


def g_n(m):
    """G_n = a_n I_n - det M."""
    mm = _as_minors(m)
    n = mm.size - 1
    a = _border(mm)
    out = mm.zero()
    for i in range(n):
        if not a[i]:
            continue
        for j in range(n):
            if not a[j]:
                continue
            term = a[i] * a[j] * mm.minor((i, n), (j, n))
            out = out + (term if (i + j) % 2 == 0 else -term)
    return mm.reduce(out)


def li_n(m):
    mm = _as_minors(m)
    n = mm.size - 1
    a = _border(mm)
    out = mm.zero()
    for i in range(n):
        if a[i]:
            term = a[i] * mm.minor((i, n), (n - 1, n))
            out = out + (term if (i + n - 1) % 2 == 0 else -term)
    return mm.reduce(out)


def li_prime_n(m):
    """Companion of Li_n with rows and columns exchanged in the minors."""
    mm = _as_minors(m)
    n = mm.size - 1
    a = _border(mm)
    out = mm.zero()
    for j in range(n):
        if a[j]:
            term = a[j] * mm.minor((n - 1, n), (j, n))
            out = out + (term if (j + n - 1) % 2 == 0 else -term)
    return mm.reduce(out)


def degenerate_g_n(m):
    """Right-hand side of the congruence for G_n once a_{n-1} drops out:
    sum a_i^2 I_n(i;i) + 2 sum_{i<j} (-1)^(i+j) a_i a_j I_n(i;j), i, j <= n-2."""
    mm = _as_minors(m)
    n = mm.size - 1
    a = _border(mm)
    out = mm.zero()
    for i in range(n - 1):
        if not a[i]:
            continue
        out = out + a[i] * a[i] * mm.minor((i, n), (i, n))
        for j in range(i + 1, n - 1):
            if a[j]:
                term = a[i] * a[j] * mm.minor((i, n), (j, n)) * 2
                out = out + (term if (i + j) % 2 == 0 else -term)
    return mm.reduce(out)


def border_independent_of(m, var: int) -> bool:
    """True iff no interior entry involves variable ``var`` (the algebraic
    precondition that lets a_{n-1} be treated as a free coordinate)."""
    rows = _rows_of(m)
    n = len(rows) - 1
    for i in range(n):
        for j in range(n):
            x = rows[i][j]
            if isinstance(x, MPoly) and var in x.variables():
                return False
    return True


# divisibility ---------------------------------------------------------------

def _coeffs_in(p: MPoly, var: int) -> dict[int, MPoly]:
    """p as a polynomial in x_var: exponent -> coefficient polynomial."""
    from .poly import BITS, _DMASK
    shift = BITS * var
    out: dict[int, dict] = {}
    for k, c in p.packed_terms().items():
        e = (k >> shift) & _DMASK
        out.setdefault(e, {})[k - (e << shift)] = c
    return {e: MPoly._raw(t, p.nvars) for e, t in out.items()}


def exact_quotient(p: MPoly, d: MPoly) -> MPoly | None:
    """p / d if d divides p in Z[x], else None.

    Division by the leading coefficient in one variable, recursing on the
    leading coefficients; exact in a UFD, so no precondition on d beyond
    being nonzero.
    """
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    nv = max(p.nvars, d.nvars)
    if not p:
        return MPoly.const(0, nv)
    dvars = d.variables()
    if not dvars:
        (_, c), = d.terms()
        t = {}
        for k, a in p.packed_terms().items():
            if a % c:
                return None
            t[k] = a // c
        return MPoly._raw(t, nv)
    x = min(dvars, key=lambda v: (d.degree_in(v), v))
    dm = d.degree_in(x)
    dc = _coeffs_in(d, x)
    lead = dc[dm]
    xpow = lambda e: MPoly.var(x, nv) ** e
    q = MPoly.const(0, nv)
    r = p
    while r:
        k = r.degree_in(x)
        if k < dm:
            return None
        lc = _coeffs_in(r, x)[k]
        qc = exact_quotient(lc, lead)
        if qc is None:
            return None
        step = qc * xpow(k - dm)
        q = q + step
        r = r - step * d
    return q


def divides(d, p) -> bool:
    """Whether d divides p.  Zero divides only zero; integer arguments are
    allowed."""
    if isinstance(d, int) and isinstance(p, int):
        return p == 0 if d == 0 else p % d == 0
    if isinstance(d, int):
        d = MPoly.const(d, p.nvars)
    if isinstance(p, int):
        p = MPoly.const(p, d.nvars)
    if not d:
        return not p
    return exact_quotient(p, d) is not None


# the checks -----------------------------------------------------------------

def dodgson_check(m, i: int, j: int, k: int, t: int) -> bool:
    """M(i;j) M(k;t) - M(k;j) M(i;t) == M * M(i,k; j,t), exactly.

    The identity as written holds for i < k, j < t (and for i > k, j > t);
    with one pair in each order the right side changes sign.
    """
    mm = _as_minors(m)
    if i == k or j == t:
        raise ValueError("need i != k and j != t")
    if mm.size < 2:
        raise ValueError("need at least a 2 x 2 matrix")
    lhs = mm.minor((i,), (j,)) * mm.minor((k,), (t,)) - mm.minor((k,), (j,)) * mm.minor((i,), (t,))
    rhs = mm.minor() * mm.minor((i, k), (j, t))
    return mm.reduce(lhs - rhs) == 0


def dodgson_sign(i: int, j: int, k: int, t: int) -> int:
    return 1 if (i < k) == (j < t) else -1


def dodgson_check_signed(m, i: int, j: int, k: int, t: int) -> bool:
    """Condensation identity for any index order, with the sign made explicit."""
    mm = _as_minors(m)
    if i == k or j == t:
        raise ValueError("need i != k and j != t")
    lhs = mm.minor((i,), (j,)) * mm.minor((k,), (t,)) - mm.minor((k,), (j,)) * mm.minor((i,), (t,))
    rhs = mm.minor() * mm.minor((i, k), (j, t))
    if dodgson_sign(i, j, k, t) < 0:
        rhs = -rhs
    return mm.reduce(lhs - rhs) == 0


def symmetric_condensation_residual(m):
    """I_n I^1_n - I^1_{n-1} I_{n+1} - S_n^2; zero for symmetric M."""
    mm = _as_minors(m)
    n = mm.size - 1
    if n < 1:
        raise ValueError("need at least a 2 x 2 matrix")
    s = mm.minor((n,), (0,))
    res = mm.principal(0, n) * mm.principal(1, n) - mm.principal(1, n - 1) * mm.principal(0, n + 1) - s * s
    return mm.reduce(res)


def check_symmetric_condensation(m) -> bool:
    return symmetric_condensation_residual(m) == 0


def check_bordered_decomposition(m) -> bool:
    """det M == a_n I_n - G_n."""
    mm = _as_minors(m)
    n = mm.size - 1
    a_n = mm.rows[n][n]
    res = mm.principal(0, n + 1) - (a_n * mm.principal(0, n) - g_n(mm))
    return mm.reduce(res) == 0


class HypothesisFailure(Exception):
    """A check's hypothesis does not hold for the given matrix."""


@dataclass
class CongruenceResult:
    holds: bool
    hypothesis: bool
    detail: str = ""

    def __bool__(self):
        return self.holds


def check_border_square_congruence(m) -> CongruenceResult:
    """I_n divides I_{n-1} G_n - Li_n^2 (symmetric M).

    ``hypothesis`` records whether I_{n-1} is nonzero mod I_n, the case the
    statement is made for; the divisibility itself is tested regardless.
    """
    mm = _as_minors(m)
    n = mm.size - 1
    if n < 1:
        raise ValueError("need at least a 2 x 2 matrix")
    i_n, i_n1 = mm.principal(0, n), mm.principal(0, n - 1)
    li = li_n(mm)
    diff = i_n1 * g_n(mm) - li * li
    return CongruenceResult(divides(i_n, diff), not divides(i_n, i_n1))


def check_border_product_congruence(m) -> CongruenceResult:
    """I_n divides I_{n-1} G_n - Li_n Li'_n (interior need not be symmetric)."""
    mm = _as_minors(m)
    n = mm.size - 1
    if n < 1:
        raise ValueError("need at least a 2 x 2 matrix")
    i_n, i_n1 = mm.principal(0, n), mm.principal(0, n - 1)
    diff = i_n1 * g_n(mm) - li_n(mm) * li_prime_n(mm)
    return CongruenceResult(divides(i_n, diff), not divides(i_n, i_n1))


def check_degenerate_border_congruence(m) -> CongruenceResult:
    """When I_n divides I_{n-1} (and the quotient by I_n is a domain),
    G_n is congruent mod I_n to the same form with a_{n-1} dropped.

    Raises HypothesisFailure if I_n does not divide I_{n-1}.  The domain
    condition is the caller's responsibility.
    """
    mm = _as_minors(m)
    n = mm.size - 1
    if n < 2:
        raise ValueError("need at least a 3 x 3 matrix")
    i_n, i_n1 = mm.principal(0, n), mm.principal(0, n - 1)
    if not divides(i_n, i_n1):
        raise HypothesisFailure("I_n does not divide I_{n-1}")
    diff = g_n(mm) - degenerate_g_n(mm)
    return CongruenceResult(divides(i_n, diff), True)


# randomized pre-check -------------------------------------------------------

def eval_matrix(rows, point: Sequence[int], modulus: int) -> list[list[int]]:
    return [[x.evaluate(point, modulus) if isinstance(x, MPoly) else x % modulus for x in r]
            for r in rows]


def probably_identity(check: Callable[[Minors], bool], rows, nvars: int,
                      rng: random.Random, trials: int = 3, modulus: int = SZ_PRIME) -> bool:
    """Schwartz-Zippel: run ``check`` on random evaluations mod a large prime.
    False means the identity certainly fails; True is probabilistic."""
    for _ in range(trials):
        point = [rng.randrange(modulus) for _ in range(nvars)]
        if not check(Minors(eval_matrix(rows, point, modulus), modulus=modulus)):
            return False
    return True


# random instances -----------------------------------------------------------

def random_int_matrix(rng: random.Random, n: int, lo: int = -9, hi: int = 9,
                      symmetric: bool = False) -> list[list[int]]:
    m = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]
    if symmetric:
        for i in range(n):
            for j in range(i):
                m[i][j] = m[j][i]
    return m


def bordered_from_block(block: Sequence[Sequence], symmetric: bool = True) -> BorderedSymMatrix:
    """Border an n x n block with fresh variables a_0..a_n (ids 0..n); the
    block entries are constants or polynomials in later variables."""
    n = len(block)
    nv = max([n + 1] + [x.nvars for r in block for x in r if isinstance(x, MPoly)])
    a = [MPoly.var(i, nv) for i in range(n + 1)]
    rows = [[(x if isinstance(x, MPoly) else MPoly.const(x, nv)) for x in r] + [a[i]]
            for i, r in enumerate(block)]
    rows.append(a)
    return BorderedSymMatrix(rows, nv, symmetric=symmetric)


def prime_degenerate_instance(rng: random.Random, n: int, tries: int = 200000,
                              lo: int = -4, hi: int = 4) -> BorderedSymMatrix | None:
    """Symmetric integer n x n block with |I_n| prime dividing I_{n-1},
    bordered by variables.  Z/(p) is a field, so the domain hypothesis holds."""
    from .pointcount import is_prime

    for _ in range(tries):
        blk = random_int_matrix(rng, n, lo, hi, symmetric=True)
        d = _det_int(blk)
        if not is_prime(abs(d)):
            continue
        if _det_int([r[:n - 1] for r in blk[:n - 1]]) % d == 0:
            return bordered_from_block(blk)
    return None


def duplicate_row_instance(rng: random.Random, n: int, lo: int = -9, hi: int = 9) -> BorderedSymMatrix:
    """Symmetric block whose rows (and columns) 0 and 1 coincide, so
    I_{n-1} = I_n = 0; the congruence mod 0 is an equality."""
    if n < 3:
        raise ValueError("need n >= 3")
    blk = random_int_matrix(rng, n, lo, hi, symmetric=True)
    blk[0][1] = blk[1][0] = blk[1][1] = blk[0][0]
    for j in range(2, n):
        blk[1][j] = blk[j][1] = blk[0][j]
    return bordered_from_block(blk)


def _graph_matrices(max_size: int):
    from .families import catalog
    from .graph import cycle_basis
    from .poly import graph_matrix

    out = {}
    for name, g in catalog().items():
        t = cycle_basis(g)
        if 2 <= len(t) <= max_size:
            out[name] = graph_matrix(g, t).as_mpoly()
    return out


def _named_bordered():
    from .coords import ws_matrix, xx5_matrix, zz5_matrix

    out = {f"WS{n}": BorderedSymMatrix(ws_matrix(n), 2 * n) for n in (3, 4, 5, 6)}
    out["ZZ5"] = BorderedSymMatrix(zz5_matrix(), 10)
    out["XX5"] = BorderedSymMatrix(xx5_matrix(), 10)
    return out


def zz5_g4_matches() -> bool:
    """G_4 of the ZZ5 matrix against its term-by-term decomposition."""
    from .coords import ab, zz5_matrix

    m = BorderedSymMatrix(zz5_matrix(), 10)
    mm = m.minors
    A = [ab(f"A{i}") for i in range(6)]
    i2, i3, i13 = mm.principal(0, 2), mm.principal(0, 3), mm.principal(1, 3)
    g4p = A[4] * A[4] * ab("B3") * i2 + 2 * A[4] * A[5] * ab("B3") * A[1] * A[0] + A[5] * A[5] * i13
    rhs = g4p + A[3] * A[3] * i3 - 2 * A[3] * A[4] * A[2] * i2 - 2 * A[3] * A[5] * A[2] * A[1] * A[0]
    return g_n(m) == rhs


def xx5_g4_matches() -> bool:
    from .coords import ab, xx5_matrix

    m = BorderedSymMatrix(xx5_matrix(), 10)
    mm = m.minors
    A = [ab(f"A{i}") for i in range(6)]
    i2, i3 = mm.principal(0, 2), mm.principal(0, 3)
    rhs = A[3] * A[3] * i3 + A[5] * A[5] * i2 * ab("B3") - 2 * A[3] * A[5] * i2 * A[2]
    return g_n(m) == rhs


def selftest(sizes=range(2, 7), trials: int = 100, seed: int = 0) -> dict:
    """Run every identity on random and named matrices.

    Returns {check name: {"passed": bool, "cases": int, ...}}.  Exact
    arithmetic throughout; symbolic cases get a randomized pre-check first.
    """
    rng = random.Random(seed)
    sizes = list(sizes)
    report: dict = {}

    def record(name, results, **extra):
        report[name] = {"passed": all(results), "cases": len(results), **extra}

    res = []
    for s in sizes:
        for _ in range(trials):
            m = random_int_matrix(rng, s)
            i, k = sorted(rng.sample(range(s), 2))
            j, t = sorted(rng.sample(range(s), 2))
            res.append(dodgson_check(m, i, j, k, t))
    record("condensation_integer", res)

    res = []
    for s in sizes:
        for _ in range(trials):
            m = random_int_matrix(rng, s)
            i, k = rng.sample(range(s), 2)
            j, t = rng.sample(range(s), 2)
            res.append(dodgson_check_signed(m, i, j, k, t))
    record("condensation_any_order", res)

    res = []
    for name, rows in _graph_matrices(max(sizes)).items():
        s = len(rows)
        nv = rows[0][0].nvars
        for _ in range(2):
            i, k = sorted(rng.sample(range(s), 2))
            j, t = sorted(rng.sample(range(s), 2))
            chk = lambda mm, i=i, j=j, k=k, t=t: dodgson_check(mm, i, j, k, t)
            res.append(probably_identity(chk, rows, nv, rng) and dodgson_check(rows, i, j, k, t))
    record("condensation_symbolic", res)

    res = []
    for s in sizes:
        for _ in range(trials):
            res.append(check_symmetric_condensation(random_int_matrix(rng, s, symmetric=True)))
    named = _named_bordered()
    for m in named.values():
        res.append(probably_identity(check_symmetric_condensation, m.rows, m.nvars, rng)
                   and check_symmetric_condensation(m))
    record("symmetric_condensation", res)

    res = [check_bordered_decomposition(m) for m in named.values()]
    for s in sizes:
        for _ in range(max(1, trials // 10)):
            res.append(check_bordered_decomposition(
                bordered_from_block(random_int_matrix(rng, s - 1, symmetric=True))))
    record("bordered_decomposition", res)

    res, outside, outside_holds = [], 0, 0
    cases = list(named.values())
    for s in sizes:
        if s >= 3:
            cases += [bordered_from_block(random_int_matrix(rng, s - 1, symmetric=True))
                      for _ in range(max(1, trials // 10))]
    for m in cases:
        r = check_border_square_congruence(m)
        if r.hypothesis:
            res.append(r.holds)
        else:
            outside += 1
            outside_holds += r.holds
    record("border_square_congruence", res, outside_hypothesis=outside,
           outside_hypothesis_divisible=outside_holds)

    res = []
    for s in sizes:
        if s >= 3:
            for _ in range(max(1, trials // 10)):
                blk = random_int_matrix(rng, s - 1)
                res.append(check_border_product_congruence(bordered_from_block(blk, symmetric=False)).holds)
    record("border_product_congruence", res)

    res = []
    for s in sizes:
        if s < 3:
            continue
        inst = prime_degenerate_instance(rng, s - 1)
        if inst is not None:
            res.append(check_degenerate_border_congruence(inst).holds)
        if s >= 4:
            res.append(check_degenerate_border_congruence(duplicate_row_instance(rng, s - 1)).holds)
    res.append(check_degenerate_border_congruence(bordered_from_block([[10, 5], [5, 3]])).holds)
    record("degenerate_border_congruence", res)

    record("zz5_g4_decomposition", [zz5_g4_matches()])
    record("xx5_g4_decomposition", [xx5_g4_matches()])
    return report
