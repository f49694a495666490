"""Sparse matrices over Q(i): ranks, kernels and linear membership.

Two rank paths are provided.  ``exact`` runs fraction-free elimination over
the Gaussian integers after clearing denominators row by row.  ``modular``
reduces the same integer lift modulo a random word-size prime p = 1 (mod 4),
sending i to a square root of -1 in Z/p; the result never exceeds the exact
rank, and the rank reported is the one two independent primes agree on.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy import isprime
from sympy.ntheory.residue_ntheory import sqrt_mod

from .gaussian import GaussianRational

EXACT_COLUMN_THRESHOLD = 2000
PRIME_BITS = 31


class ModularReductionError(ArithmeticError):
    """The chosen prime divides a denominator; retry with another prime."""


class SparseMatrix:
    """Immutable rows x cols matrix with GaussianRational entries.

    Entries are stored as a ``{(row, col): value}`` map without zeros.
    """

    __slots__ = ("rows", "cols", "_entries", "_by_row")

    def __init__(self, rows: int, cols: int, entries: Mapping[Tuple[int, int], object] | None = None):
        self.rows = int(rows)
        self.cols = int(cols)
        clean: Dict[Tuple[int, int], GaussianRational] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside a {self.rows}x{self.cols} matrix")
            v = GaussianRational.coerce(v)
            if v:
                clean[(r, c)] = v
        self._entries = clean
        self._by_row = None

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping[int, object]]) -> SparseMatrix:
        entries = {}
        for c, col in enumerate(columns):
            for r, v in col.items():
                entries[(r, c)] = v
        return cls(rows, len(columns), entries)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[object]]) -> SparseMatrix:
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {(r, c): v for r, row in enumerate(data) for c, v in enumerate(row) if v}
        return cls(rows, cols, entries)

    @classmethod
    def identity(cls, n: int) -> SparseMatrix:
        return cls(n, n, {(k, k): 1 for k in range(n)})

    @property
    def entries(self) -> Dict[Tuple[int, int], GaussianRational]:
        return dict(self._entries)

    @property
    def nnz(self) -> int:
        return len(self._entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: Tuple[int, int]) -> GaussianRational:
        return self._entries.get(key) or GaussianRational(0)

    def row_dicts(self) -> List[Dict[int, GaussianRational]]:
        if self._by_row is None:
            out: List[Dict[int, GaussianRational]] = [dict() for _ in range(self.rows)]
            for (r, c), v in self._entries.items():
                out[r][c] = v
            self._by_row = out
        return self._by_row

    def column_dicts(self) -> List[Dict[int, GaussianRational]]:
        out: List[Dict[int, GaussianRational]] = [dict() for _ in range(self.cols)]
        for (r, c), v in self._entries.items():
            out[c][r] = v
        return out

    def transpose(self) -> SparseMatrix:
        m = SparseMatrix(self.cols, self.rows)
        m._entries = {(c, r): v for (r, c), v in self._entries.items()}
        return m

    def permute_rows(self, perm: Sequence[int]) -> SparseMatrix:
        """Row r of the result is row perm[r] of self."""
        inv = {old: new for new, old in enumerate(perm)}
        m = SparseMatrix(self.rows, self.cols)
        m._entries = {(inv[r], c): v for (r, c), v in self._entries.items()}
        return m

    def scale_row(self, r: int, factor) -> SparseMatrix:
        factor = GaussianRational.coerce(factor)
        entries = {k: (v * factor if k[0] == r else v) for k, v in self._entries.items()}
        return SparseMatrix(self.rows, self.cols, entries)

    def matvec(self, x: Sequence[object]) -> List[GaussianRational]:
        if len(x) != self.cols:
            raise ValueError("dimension mismatch")
        out = [GaussianRational(0) for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            xc = x[c]
            if xc:
                out[r] = out[r] + v * xc
        return out

    def matmul(self, other: SparseMatrix) -> SparseMatrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        other_rows = other.row_dicts()
        acc: Dict[Tuple[int, int], GaussianRational] = {}
        for (r, k), v in self._entries.items():
            for c, w in other_rows[k].items():
                key = (r, c)
                p = v * w
                prev = acc.get(key)
                acc[key] = p if prev is None else prev + p
        return SparseMatrix(self.rows, other.cols, acc)

    def is_zero(self) -> bool:
        return not self._entries

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


# integer lifts ----------------------------------------------------------


def _integer_rows(
    m: SparseMatrix, orient: str = "auto", prime: Optional[int] = None
) -> List[Dict[int, Tuple[int, int]]]:
    """Rows (or columns) of m scaled by their common denominator, as Z[i] pairs.

    With ``prime``, a common denominator divisible by it raises
    :class:`ModularReductionError`.
    """
    if orient == "auto":
        orient = "cols" if m.cols < m.rows else "rows"
    vecs = m.row_dicts() if orient == "rows" else m.column_dicts()
    out = []
    for vec in vecs:
        if not vec:
            continue
        den = 1
        for v in vec.values():
            den = _lcm(den, v.re.denominator)
            den = _lcm(den, v.im.denominator)
        if prime is not None and den % prime == 0:
            raise ModularReductionError(f"prime {prime} divides a denominator")
        row = {}
        for k, v in vec.items():
            re, im = v.re, v.im
            row[k] = (re.numerator * (den // re.denominator), im.numerator * (den // im.denominator))
        out.append(row)
    return out


def _lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


# modular rank -----------------------------------------------------------


@dataclass(frozen=True)
class ModularField:
    p: int
    sqrt_minus_one: int

    def reduce(self, x: GaussianRational) -> int:
        p = self.p
        re_den = x.re.denominator
        im_den = x.im.denominator
        if re_den % p == 0 or im_den % p == 0:
            raise ModularReductionError(f"prime {p} divides a denominator")
        val = x.re.numerator * pow(re_den, -1, p)
        if x.im:
            val += self.sqrt_minus_one * x.im.numerator * pow(im_den, -1, p)
        return val % p


def random_prime_field(rng: random.Random, bits: int = PRIME_BITS) -> ModularField:
    """A random prime p = 1 (mod 4) with the given bit length."""
    while True:
        n = rng.randrange(1 << (bits - 1), 1 << bits)
        n -= n % 4
        n += 1
        if isprime(n):
            r = sqrt_mod(-1, n)
            return ModularField(n, int(r))


def modular_rank(m: SparseMatrix, field: ModularField) -> int:
    p = field.p
    r = field.sqrt_minus_one
    vectors = []
    for row in _integer_rows(m, prime=p):
        vec = {}
        for k, (a, b) in row.items():
            v = (a + r * b) % p
            if v:
                vec[k] = v
        if vec:
            vectors.append(vec)
    return _echelon_rank_mod(vectors, p)


def _echelon_rank_mod(vectors: List[Dict[int, int]], p: int) -> int:
    pivots: Dict[int, Dict[int, int]] = {}
    vectors.sort(key=len)
    for vec in vectors:
        while vec:
            lead = min(vec)
            prow = pivots.get(lead)
            if prow is None:
                inv = pow(vec[lead], -1, p)
                pivots[lead] = {k: v * inv % p for k, v in vec.items()}
                break
            f = vec[lead]
            for k, v in prow.items():
                nv = (vec.get(k, 0) - f * v) % p
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
    return len(pivots)


# exact rank -------------------------------------------------------------


def _gmul(a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gdivmod_round(a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
    """Nearest Gaussian-integer quotient a / b."""
    n = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    return ((2 * re + n) // (2 * n), (2 * im + n) // (2 * n))


def _ggcd(a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
    while b[0] or b[1]:
        q = _gdivmod_round(a, b)
        qb = _gmul(q, b)
        a, b = b, (a[0] - qb[0], a[1] - qb[1])
    return a


def _gexact_div(a: Tuple[int, int], d: Tuple[int, int]) -> Tuple[int, int]:
    n = d[0] * d[0] + d[1] * d[1]
    re = a[0] * d[0] + a[1] * d[1]
    im = a[1] * d[0] - a[0] * d[1]
    return (re // n, im // n)


def _content_reduce(vec: Dict[int, Tuple[int, int]]) -> None:
    """Divide a Z[i] vector by the gcd of its entries (up to a unit)."""
    g = 0
    for a, b in vec.values():
        g = math.gcd(g, a, b)
        if g == 1:
            break
    if g > 1:
        for k, (a, b) in vec.items():
            vec[k] = (a // g, b // g)
    # a remaining common Gaussian factor (norm > 1) has a non-real part
    gg = None
    for v in vec.values():
        gg = v if gg is None else _ggcd(gg, v)
        if gg[0] * gg[0] + gg[1] * gg[1] == 1:
            return
    if gg is not None and gg[0] * gg[0] + gg[1] * gg[1] > 1:
        for k, v in vec.items():
            vec[k] = _gexact_div(v, gg)


def exact_rank(m: SparseMatrix) -> int:
    """Rank over Q(i) by fraction-free elimination in Z[i]."""
    vectors = _integer_rows(m)
    vectors.sort(key=len)
    pivots: Dict[int, Dict[int, Tuple[int, int]]] = {}
    for vec in vectors:
        while vec:
            lead = min(vec)
            prow = pivots.get(lead)
            if prow is None:
                _content_reduce(vec)
                pivots[lead] = vec
                break
            # vec <- plead * vec - vlead * prow, which cancels the leading entry
            plead = prow[lead]
            vlead = vec[lead]
            new = {}
            for k, v in vec.items():
                if k != lead:
                    x = _gmul(plead, v)
                    if x[0] or x[1]:
                        new[k] = x
            for k, v in prow.items():
                if k == lead:
                    continue
                y = _gmul(vlead, v)
                x = new.get(k, (0, 0))
                x = (x[0] - y[0], x[1] - y[1])
                if x[0] or x[1]:
                    new[k] = x
                else:
                    new.pop(k, None)
            _content_reduce(new)
            vec = new
    return len(pivots)


def rank(
    m: SparseMatrix,
    mode: str = "auto",
    seed: int = 0,
    threshold: int = EXACT_COLUMN_THRESHOLD,
    max_primes: int = 8,
) -> int:
    """Rank of m.

    ``mode`` is ``"exact"``, ``"modular"`` or ``"auto"`` (exact when the matrix
    has at most ``threshold`` columns, modular otherwise).  Modular results
    are deterministic given ``seed``.
    """
    if m.nnz == 0:
        return 0
    if mode == "auto":
        mode = "exact" if m.cols <= threshold else "modular"
    if mode == "exact":
        return exact_rank(m)
    if mode != "modular":
        raise ValueError(f"unknown rank mode {mode!r}")
    rng = random.Random(seed)
    seen: Dict[int, int] = {}
    for _ in range(max_primes):
        field = random_prime_field(rng)
        try:
            r = modular_rank(m, field)
        except ModularReductionError:
            continue
        seen[r] = seen.get(r, 0) + 1
        best = max(seen)
        if seen[best] >= 2:
            return best
    # primes kept disagreeing or dividing denominators
    return exact_rank(m)


# exact solving ----------------------------------------------------------


def _rref(rows: List[Dict[int, GaussianRational]], ncols: int):
    """Reduced row echelon form in place; returns pivot columns (row order)."""
    pivot_cols: List[int] = []
    pivot_rows: List[Dict[int, GaussianRational]] = []
    for vec in rows:
        vec = dict(vec)
        for c, prow in zip(pivot_cols, pivot_rows):
            f = vec.get(c)
            if f:
                for k, v in prow.items():
                    nv = vec.get(k, GaussianRational(0)) - f * v
                    if nv:
                        vec[k] = nv
                    else:
                        vec.pop(k, None)
        keys = [k for k in vec if k < ncols]
        if not keys:
            if vec:
                pivot_cols.append(-1)
                pivot_rows.append(vec)
            continue
        lead = min(keys)
        inv = vec[lead].inverse()
        vec = {k: v * inv for k, v in vec.items()}
        for prow in pivot_rows:
            f = prow.get(lead)
            if f:
                for k, v in vec.items():
                    nv = prow.get(k, GaussianRational(0)) - f * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        pivot_cols.append(lead)
        pivot_rows.append(vec)
    return pivot_cols, pivot_rows


def solve_membership(m: SparseMatrix, v: Sequence[object]) -> Optional[List[GaussianRational]]:
    """Some x with m @ x == v, or None when v is not in the column space."""
    if len(v) != m.rows:
        raise ValueError("dimension mismatch")
    n = m.cols
    aug = m.row_dicts()
    rows = []
    for r in range(m.rows):
        row = dict(aug[r])
        vr = GaussianRational.coerce(v[r])
        if vr:
            row[n] = vr
        if row:
            rows.append(row)
    pivot_cols, pivot_rows = _rref(rows, n)
    x = [GaussianRational(0) for _ in range(n)]
    for c, prow in zip(pivot_cols, pivot_rows):
        if c < 0:
            return None
        rhs = prow.get(n)
        if rhs:
            x[c] = rhs
    return x


def kernel_basis(m: SparseMatrix) -> List[List[GaussianRational]]:
    """A basis of {x : m @ x = 0}, one dense vector per free column."""
    n = m.cols
    rows = [dict(r) for r in m.row_dicts() if r]
    pivot_cols, pivot_rows = _rref(rows, n)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        x = [GaussianRational(0) for _ in range(n)]
        x[free] = GaussianRational(1)
        for c, prow in zip(pivot_cols, pivot_rows):
            f = prow.get(free)
            if f:
                x[c] = -f
        basis.append(x)
    return basis


def column_space_basis(m: SparseMatrix) -> List[int]:
    """Indices of a maximal linearly independent set of columns."""
    pivot_cols, _ = _rref([dict(r) for r in m.row_dicts() if r], m.cols)
    return sorted(c for c in pivot_cols if c >= 0)


def vector_from_dict(n: int, d: Mapping[int, object]) -> List[GaussianRational]:
    out = [GaussianRational(0) for _ in range(n)]
    for k, v in d.items():
        out[k] = GaussianRational.coerce(v)
    return out


__all__ = [
    "EXACT_COLUMN_THRESHOLD",
    "ModularField",
    "ModularReductionError",
    "SparseMatrix",
    "column_space_basis",
    "exact_rank",
    "kernel_basis",
    "modular_rank",
    "random_prime_field",
    "rank",
    "solve_membership",
    "vector_from_dict",
]
