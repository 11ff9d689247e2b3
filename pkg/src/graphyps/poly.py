"""Sparse multivariate polynomials over the integers, symmetric matrices of
linear forms, and the graph polynomial by determinant and by spanning trees.

Monomials are packed into a single Python int, one byte per variable, so a
monomial product is an integer addition.  Per-variable degrees must stay
below 256; multiplication checks the total-degree bound.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .graph import Graph, LoopTable, cycle_basis, spanning_tree_masks

BITS = 8
_DMASK = (1 << BITS) - 1
MAX_DET_SIZE = 14


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > _DMASK:
            raise ValueError(f"exponent {e} out of range")
        key |= int(e) << (BITS * i)
    return key


def _unpack(key: int, nvars: int) -> tuple[int, ...]:
    return tuple((key >> (BITS * i)) & _DMASK for i in range(nvars))


def _key_degree(key: int) -> int:
    d = 0
    while key:
        d += key & _DMASK
        key >>= BITS
    return d


class MPoly:
    """Polynomial with integer (or Fraction) coefficients.

    ``nvars`` fixes the length of exponent vectors; binary operations use
    the larger of the two universes.
    """

    __slots__ = ("nvars", "_t", "_deg")

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None, nvars: int = 0):
        self.nvars = nvars
        self._deg = None
        t = {}
        for exps, c in (terms or {}).items():
            if len(exps) > nvars:
                raise ValueError("exponent vector longer than nvars")
            if c:
                k = _pack(exps)
                t[k] = t.get(k, 0) + c
                if not t[k]:
                    del t[k]
        self._t = t

    @classmethod
    def _raw(cls, t: dict, nvars: int) -> "MPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p._t = t
        p._deg = None
        return p

    @classmethod
    def var(cls, i: int, nvars: int, coef: int = 1) -> "MPoly":
        if not 0 <= i < nvars:
            raise ValueError("variable index out of range")
        return cls._raw({1 << (BITS * i): coef} if coef else {}, nvars)

    @classmethod
    def const(cls, c, nvars: int = 0) -> "MPoly":
        return cls._raw({0: c} if c else {}, nvars)

    @classmethod
    def from_mask_terms(cls, keys: Iterable[int], nvars: int) -> "MPoly":
        """Sum of monomials given as packed keys, coefficient 1 each."""
        t: dict = {}
        for k in keys:
            t[k] = t.get(k, 0) + 1
        return cls._raw(t, nvars)

    # basic protocol

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == ({0: other} if other else {})
        return NotImplemented

    __hash__ = None

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other, self.nvars)
        raise TypeError(f"cannot combine MPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self._t)
        for k, c in other._t.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return MPoly._raw(t, max(self.nvars, other.nvars))

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({k: -c for k, c in self._t.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly._raw({}, self.nvars)
            return MPoly._raw({k: c * other for k, c in self._t.items()}, self.nvars)
        other = self._coerce(other)
        if self._t and other._t and self.total_degree() + other.total_degree() > _DMASK:
            raise OverflowError("product degree exceeds packed exponent range")
        t: dict = {}
        get = t.get
        for k1, c1 in self._t.items():
            for k2, c2 in other._t.items():
                k = k1 + k2
                t[k] = get(k, 0) + c1 * c2
        return MPoly._raw({k: c for k, c in t.items() if c}, max(self.nvars, other.nvars))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = MPoly.const(1, self.nvars)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    # inspection

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        """(exponents, coefficient) pairs, lexicographically descending."""
        items = [(_unpack(k, self.nvars), c) for k, c in self._t.items()]
        items.sort(reverse=True)
        return items

    def coefficients(self) -> list:
        return [c for _, c in self.terms()]

    def total_degree(self) -> int:
        if self._deg is None:
            self._deg = max((_key_degree(k) for k in self._t), default=-1)
        return self._deg

    def degree_in(self, var: int) -> int:
        shift = BITS * var
        return max(((k >> shift) & _DMASK for k in self._t), default=-1)

    def is_homogeneous(self) -> bool:
        return len({_key_degree(k) for k in self._t}) <= 1

    def is_multilinear(self) -> bool:
        return all(e <= 1 for exps, _ in self.terms() for e in exps)

    def variables(self) -> list[int]:
        used = 0
        for k in self._t:
            used |= k
        return [i for i in range(self.nvars) if (used >> (BITS * i)) & _DMASK]

    def leading_term(self):
        """Lexicographically largest (exponents, coefficient)."""
        k = max(self._t, key=lambda key: _unpack(key, self.nvars))
        return _unpack(k, self.nvars), self._t[k]

    # evaluation and substitution

    def evaluate(self, point: Sequence, modulus: int | None = None):
        """Value at ``point`` (any ring whose elements support + and *)."""
        if len(point) < self.nvars:
            raise ValueError("point has too few coordinates")
        total = 0
        for k, c in self._t.items():
            v = c
            i = 0
            while k:
                e = k & _DMASK
                if e:
                    x = point[i]
                    v = v * (pow(x, e, modulus) if modulus else x ** e)
                    if modulus:
                        v %= modulus
                k >>= BITS
                i += 1
            total = total + v
        if modulus:
            total %= modulus
        return total

    def substitute(self, var: int, value) -> "MPoly":
        """Replace variable ``var`` by an integer or another polynomial."""
        shift = BITS * var
        value = self._coerce(value)
        out: dict = {}
        powers = {0: MPoly.const(1, self.nvars)}
        for k, c in self._t.items():
            e = (k >> shift) & _DMASK
            rest = k - (e << shift)
            if e not in powers:
                powers[e] = value ** e
            for k2, c2 in powers[e]._t.items():
                kk = rest + k2
                out[kk] = out.get(kk, 0) + c * c2
        return MPoly._raw({k: c for k, c in out.items() if c}, max(self.nvars, value.nvars))

    def compose(self, images: Sequence["MPoly"]) -> "MPoly":
        """Substitute every variable i by ``images[i]`` simultaneously."""
        nv = max((q.nvars for q in images), default=0)
        out = MPoly.const(0, nv)
        cache: dict = {}
        for exps, c in self.terms():
            m = MPoly.const(c, nv)
            for i, e in enumerate(exps):
                if e:
                    if (i, e) not in cache:
                        cache[(i, e)] = images[i] ** e
                    m = m * cache[(i, e)]
            out = out + m
        return out

    def split_linear(self, var: int) -> tuple["MPoly", "MPoly"]:
        """(alpha, beta) with self = alpha * x_var + beta; needs degree <= 1 in var."""
        shift = BITS * var
        bit = 1 << shift
        a, b = {}, {}
        for k, c in self._t.items():
            e = (k >> shift) & _DMASK
            if e == 0:
                b[k] = c
            elif e == 1:
                a[k - bit] = c
            else:
                raise ValueError(f"degree {e} in variable {var}")
        return MPoly._raw(a, self.nvars), MPoly._raw(b, self.nvars)

    def packed_terms(self) -> dict[int, int]:
        """The internal key -> coefficient map (read-only by convention)."""
        return self._t

    # formatting

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self._t:
            return "0"
        names = names or [f"T{i + 1}" for i in range(self.nvars)]
        parts = []
        for exps, c in self.terms():
            mono = "*".join(names[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MPoly({self.to_str()!r}, nvars={self.nvars})"

    def to_json(self) -> dict:
        return {"vars": self.nvars,
                "terms": [{"exps": list(e), "coef": c} for e, c in self.terms()]}

    @classmethod
    def from_json(cls, data) -> "MPoly":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        return cls({tuple(t["exps"]): t["coef"] for t in data["terms"]}, int(data["vars"]))


class LinearForm:
    """Integer linear combination of variables, no constant term."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {int(v): int(c) for v, c in (coeffs or {}).items() if c}

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other: "LinearForm") -> "LinearForm":
        out = dict(self.coeffs)
        for v, c in other.coeffs.items():
            out[v] = out.get(v, 0) + c
        return LinearForm(out)

    def to_mpoly(self, nvars: int) -> MPoly:
        return MPoly._raw({1 << (BITS * v): c for v, c in self.coeffs.items()}, nvars)

    def __repr__(self):
        return " + ".join(f"{c}*T{v + 1}" for v, c in sorted(self.coeffs.items())) or "0"


class SymLinMatrix:
    """Symmetric square matrix whose entries are linear forms."""

    def __init__(self, entries: Sequence[Sequence[LinearForm]], nvars: int):
        n = len(entries)
        if any(len(r) != n for r in entries):
            raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i):
                if entries[i][j] != entries[j][i]:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) differ")
        self.entries = [list(r) for r in entries]
        self.nvars = nvars

    @property
    def size(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> LinearForm:
        return self.entries[i][j]

    def as_mpoly(self) -> list[list[MPoly]]:
        return [[e.to_mpoly(self.nvars) for e in row] for row in self.entries]


def graph_matrix(g: Graph, table: LoopTable) -> SymLinMatrix:
    """Sum over edges k of T_k times the rank-one matrix t_k t_k^T built
    from column k of the loop table."""
    h = len(table)
    rows = table.rows
    if h and len(rows[0]) != g.num_edges:
        raise ValueError("loop table width does not match the edge count")
    entries = [[LinearForm({k: rows[i][k] * rows[j][k] for k in range(g.num_edges)})
                for j in range(h)] for i in range(h)]
    return SymLinMatrix(entries, g.num_edges)


def determinant(mat, nvars: int | None = None):
    """Exact determinant of a square matrix of MPoly or integer entries.

    Laplace expansion along the last row with the minors on leading rows
    memoized by column subset (at most 2^n of them).  Zero entries are
    skipped, so sparse matrices only visit reachable subsets.
    """
    n = len(mat)
    if n == 0:
        return 1 if nvars is None else MPoly.const(1, nvars)
    if any(len(r) != n for r in mat):
        raise ValueError("matrix is not square")
    symbolic = nvars is not None or any(isinstance(x, MPoly) for r in mat for x in r)
    if not symbolic:
        return _det_int([[int(x) for x in r] for r in mat])
    if nvars is None:
        nvars = max(x.nvars for r in mat for x in r if isinstance(x, MPoly))
    rows = [[(x if isinstance(x, MPoly) else MPoly.const(x, nvars))._t for x in r] for r in mat]
    nz = [[j for j in range(n) if rows[i][j]] for i in range(n)]
    memo: dict[int, dict] = {0: {0: 1}}

    def minor(k: int, cols: int) -> dict:
        got = memo.get(cols)
        if got is not None:
            return got
        acc: dict = {}
        get = acc.get
        row = rows[k - 1]
        for j in nz[k - 1]:
            if not (cols >> j) & 1:
                continue
            sub = minor(k - 1, cols & ~(1 << j))
            if not sub:
                continue
            pos = bin(cols & ((1 << j) - 1)).count("1")
            sign = -1 if (k - 1 + pos) & 1 else 1
            for k1, c1 in row[j].items():
                c1 *= sign
                for k2, c2 in sub.items():
                    kk = k1 + k2
                    acc[kk] = get(kk, 0) + c1 * c2
        res = {kk: c for kk, c in acc.items() if c}
        memo[cols] = res
        return res

    return MPoly._raw(minor(n, (1 << n) - 1), nvars)


def _det_int(a: list[list[int]]) -> int:
    """Bareiss fraction-free elimination."""
    n = len(a)
    a = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det(m: SymLinMatrix) -> MPoly:
    if m.size > MAX_DET_SIZE:
        raise ValueError(f"symbolic determinant limited to {MAX_DET_SIZE}x{MAX_DET_SIZE}")
    return determinant(m.as_mpoly(), m.nvars)


def _bandwidth_order(m: SymLinMatrix) -> list[int]:
    """Reverse Cuthill-McKee order of the sparsity pattern."""
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import reverse_cuthill_mckee

    n = m.size
    pattern = [[1 if m.entries[i][j].coeffs else 0 for j in range(n)] for i in range(n)]
    return list(reverse_cuthill_mckee(csr_matrix(pattern), symmetric_mode=True))


def psi_det(g: Graph, table: LoopTable | None = None) -> MPoly:
    """Graph polynomial as det of the graph matrix for a cycle basis.

    Rows and columns are permuted together (bandwidth reduction) before the
    expansion; that leaves the determinant unchanged.
    """
    if table is None:
        table = cycle_basis(g)
    elif not table.is_valid_for(g):
        raise ValueError("loop table is not a cycle basis of the graph")
    m = graph_matrix(g, table)
    if m.size == 0:
        return MPoly.const(1, g.num_edges)
    if m.size > MAX_DET_SIZE:
        raise ValueError(f"symbolic determinant limited to {MAX_DET_SIZE}x{MAX_DET_SIZE}")
    order = _bandwidth_order(m)
    mp = m.as_mpoly()
    return determinant([[mp[i][j] for j in order] for i in order], g.num_edges)


_BYTE_SPREAD = [bytes((b >> i) & 1 for i in range(8)) for b in range(256)]


def _mask_to_key(mask: int, nbytes: int) -> int:
    chunks = b"".join(_BYTE_SPREAD[(mask >> (8 * i)) & 0xFF] for i in range(nbytes))
    return int.from_bytes(chunks, "little")


def psi_trees(g: Graph) -> MPoly:
    """Graph polynomial as the sum over spanning forests T of the product of
    the variables of the edges outside T."""
    n = g.num_edges
    full = (1 << n) - 1
    nbytes = (n + 7) // 8
    return MPoly.from_mask_terms((_mask_to_key(full ^ t, nbytes) for t in spanning_tree_masks(g)), n)
