"""Cech model of Koszul-Brylinski homology on X = CP1 x CP1.

X is covered by the four products U_ab of the standard charts (a, b in
{0, 1}).  Every section is written in the single Laurent coordinate system
(z1, z2) of U_00; regularity on the other charts becomes a per-variable
condition on exponents (a *monomial window*), so restriction maps are
identities on coefficients.

Truncation.  Give z^e dz_S the torus weight m = e + 1_S.  The Cech
differential preserves m, the holomorphic differential preserves m, and for a
global pi each monomial of q shifts m by a vector in {-1, 0, 1}^2.  Sections of
Omega^i are kept for |m_r| <= W - i, which makes the truncated total complex
a genuine subcomplex (delta_pi lowers i and grows the box by one).  Away from
m = 0 the Cech complex of every Omega^i is acyclic, so the quotient is
acyclic and the truncated complex has the same cohomology for every W >= 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .calculus import PoissonBivector, PolyForm, delta_pi
from .gaussian import GaussianRational
from .laurent import LaurentPoly
from .sparse import SparseMatrix, rank

DEFAULT_WINDOW = 8
N = 2  # complex dimension

Simplex = Tuple[int, ...]
Index = Tuple[int, ...]
Exponent = Tuple[int, int]
BasisKey = Tuple[Simplex, Index, Exponent]


# the cover --------------------------------------------------------------


@dataclass(frozen=True)
class Cover:
    """The four opens U_00 < U_01 < U_10 < U_11 and their 15 simplices."""

    opens: Tuple[Tuple[int, int], ...] = ((0, 0), (0, 1), (1, 0), (1, 1))

    @property
    def simplices(self) -> List[Simplex]:
        out = []
        for size in range(1, len(self.opens) + 1):
            out.extend(itertools.combinations(range(len(self.opens)), size))
        return out

    def simplices_of_degree(self, j: int) -> List[Simplex]:
        return list(itertools.combinations(range(len(self.opens)), j + 1))

    def charts(self, simplex: Simplex, factor: int) -> frozenset:
        """The charts of factor 1 or 2 met by the opens of the simplex."""
        return frozenset(self.opens[v][factor - 1] for v in simplex)

    def name(self, simplex: Simplex) -> str:
        return "U" + "".join(f"{self.opens[v][0]}{self.opens[v][1]}" for v in simplex)


COVER = Cover()
SIMPLICES = COVER.simplices


@dataclass(frozen=True)
class MonomialWindow:
    """Exponents of z^e dz_S regular on an intersection, inside a weight box.

    ``twist`` is the per-variable transition weight: the monomial z_r^e is
    regular on chart 1 of factor r when e <= twist_r (twist -2 for a dz_r
    factor, since dz = -w^-2 dw under z = 1/w; twist n for O(n)).  ``offset``
    shifts exponents to weights and ``radius`` bounds |e_r + offset_r|.
    """

    charts: Tuple[frozenset, frozenset]
    twist: Tuple[int, int]
    offset: Tuple[int, int]
    radius: int

    def interval(self, r: int) -> Tuple[int, int]:
        charts, n, s, R = self.charts[r - 1], self.twist[r - 1], self.offset[r - 1], self.radius
        lo, hi = -R - s, R - s
        if 0 in charts and 1 not in charts:
            lo = max(lo, 0)
        if 1 in charts and 0 not in charts:
            hi = min(hi, n)
        return lo, hi

    def regular(self, e: Exponent) -> bool:
        """Regularity on every open of the simplex (ignores the box)."""
        for r in (1, 2):
            charts, n = self.charts[r - 1], self.twist[r - 1]
            if 0 in charts and 1 not in charts and e[r - 1] < 0:
                return False
            if 1 in charts and 0 not in charts and e[r - 1] > n:
                return False
        return True

    def __contains__(self, e: Exponent) -> bool:
        lo1, hi1 = self.interval(1)
        lo2, hi2 = self.interval(2)
        return lo1 <= e[0] <= hi1 and lo2 <= e[1] <= hi2

    def exponents(self) -> List[Exponent]:
        lo1, hi1 = self.interval(1)
        lo2, hi2 = self.interval(2)
        return [(a, b) for a in range(lo1, hi1 + 1) for b in range(lo2, hi2 + 1)]

    def count(self) -> int:
        lo1, hi1 = self.interval(1)
        lo2, hi2 = self.interval(2)
        return max(0, hi1 - lo1 + 1) * max(0, hi2 - lo2 + 1)


def form_twist(S: Index) -> Tuple[int, int]:
    return tuple(-2 if r in S else 0 for r in (1, 2))


def form_window(simplex: Simplex, S: Index, radius: int) -> MonomialWindow:
    charts = (COVER.charts(simplex, 1), COVER.charts(simplex, 2))
    offset = tuple(1 if r in S else 0 for r in (1, 2))
    return MonomialWindow(charts, form_twist(S), offset, radius)


def form_radius(W: int, i: int) -> int:
    return W - i


def is_regular_section(simplex: Simplex, form: PolyForm) -> bool:
    """Check regularity of a form on the intersection of a simplex by changing charts.

    A factor whose two charts both occur only sees C*, where every Laurent
    monomial is regular.  If only chart 1 of factor r occurs, z_r = 1/w_r and
    dz_r = -w_r^-2 dw_r, and the form must have no negative powers of w_r.
    This is independent of the window bookkeeping.
    """
    for r in (1, 2):
        charts = COVER.charts(simplex, r)
        if len(charts) == 2:
            continue
        (chart,) = charts
        for S, f in form.components.items():
            g = f if chart == 0 else f.invert_chart(r)
            if chart == 1 and r in S:
                g = g.shift(*((-2, 0) if r == 1 else (0, -2)))
            if any(e[r - 1] < 0 for e in g.support()):
                return False
    return True


# cochains ---------------------------------------------------------------


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


class CechCochain:
    """A Cech cochain with values in holomorphic forms.

    ``assignments`` maps ascending simplices to forms; the Cech degree of a
    component is len(simplex) - 1.  Mixed Cech and form degrees are allowed,
    so elements of the total complex are CechCochains too.
    """

    __slots__ = ("_a",)

    def __init__(self, assignments: Mapping[Simplex, PolyForm] | None = None):
        a = {}
        for s, f in (assignments or {}).items():
            s = tuple(s)
            if list(s) != sorted(set(s)) or not s or s[-1] >= len(COVER.opens):
                raise ValueError(f"bad simplex {s!r}")
            if f:
                a[s] = a[s] + f if s in a else f
        self._a = {s: f for s, f in a.items() if f}

    @property
    def assignments(self) -> Dict[Simplex, PolyForm]:
        return dict(self._a)

    def __getitem__(self, s: Simplex) -> PolyForm:
        return self._a.get(tuple(s), PolyForm())

    def bidegrees(self) -> set:
        return {(len(s) - 1, i) for s, f in self._a.items() for i in f.degrees()}

    @property
    def degree(self) -> int:
        js = {j for j, _ in self.bidegrees()}
        if len(js) > 1:
            raise ValueError("mixed Cech degree")
        return js.pop() if js else 0

    @property
    def sheaf_index(self) -> int:
        iis = {i for _, i in self.bidegrees()}
        if len(iis) > 1:
            raise ValueError("mixed form degree")
        return iis.pop() if iis else 0

    def component(self, j: int, i: int) -> CechCochain:
        return CechCochain({s: f.part(i) for s, f in self._a.items() if len(s) - 1 == j})

    def map_forms(self, fn) -> CechCochain:
        return CechCochain({s: fn(s, f) for s, f in self._a.items()})

    def __add__(self, other: CechCochain) -> CechCochain:
        out = dict(self._a)
        for s, f in other._a.items():
            out[s] = out[s] + f if s in out else f
        return CechCochain(out)

    def __neg__(self):
        return CechCochain({s: -f for s, f in self._a.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return CechCochain({s: f * c for s, f in self._a.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, CechCochain):
            return self._a == other._a
        if other == 0:
            return not self._a
        return NotImplemented

    def __bool__(self):
        return bool(self._a)

    def is_zero(self) -> bool:
        return not self._a

    def in_window(self, W: int) -> bool:
        for s, f in self._a.items():
            for S, poly in f.components.items():
                win = form_window(s, S, form_radius(W, len(S)))
                if any(e not in win for e in poly.support()):
                    return False
        return True

    def is_regular(self) -> bool:
        return all(is_regular_section(s, f) for s, f in self._a.items())

    def weight_part(self, m: Tuple[int, int]) -> CechCochain:
        """Components of torus weight m = e + 1_S."""
        out = {}
        for s, f in self._a.items():
            comps = {}
            for S, poly in f.components.items():
                off = (1 if 1 in S else 0, 1 if 2 in S else 0)
                e = (m[0] - off[0], m[1] - off[1])
                c = poly.coefficient(*e)
                if c:
                    comps[S] = LaurentPoly({e: c})
            if comps:
                out[s] = PolyForm(comps)
        return CechCochain(out)

    def __repr__(self):
        body = ", ".join(f"{COVER.name(s)}: {f}" for s, f in sorted(self._a.items()))
        return f"CechCochain({{{body}}})"


def cech_differential(c: CechCochain) -> CechCochain:
    """(dc)(u_0..u_p) = sum_k (-1)^k c(u_0..^u_k..u_p), restrictions being identities."""
    out: Dict[Simplex, PolyForm] = {}
    n = len(COVER.opens)
    for s, f in c.assignments.items():
        for v in range(n):
            if v in s:
                continue
            t = tuple(sorted(s + (v,)))
            k = t.index(v)
            term = f if k % 2 == 0 else -f
            out[t] = out[t] + term if t in out else term
    return CechCochain(out)


def _require_global(pi: PoissonBivector) -> None:
    if not pi.is_global():
        raise ValueError("not a global bivector on CP1xCP1: support of q must lie in {0,1,2}^2")


def delta_pi_cochain(pi: PoissonBivector, c: CechCochain) -> CechCochain:
    """delta_pi applied simplex by simplex (no sign)."""
    _require_global(pi)
    return c.map_forms(lambda s, f: delta_pi(pi, f))


def total_differential(pi: PoissonBivector, c: CechCochain) -> CechCochain:
    """D = delta_Cech + (-1)^j delta_pi on Cech degree j."""
    _require_global(pi)
    dp = CechCochain({s: delta_pi(pi, f) * _sign(len(s) - 1) for s, f in c.assignments.items()})
    return cech_differential(c) + dp


# bases and matrices ------------------------------------------------------


def bidegrees_of_total(t: int) -> List[Tuple[int, int]]:
    """(Cech degree j, form degree i) with j - i = t."""
    return [(t + i, i) for i in range(N + 1) if 0 <= t + i <= len(COVER.opens) - 1]


TOTAL_DEGREES = range(-N, len(COVER.opens))  # t = -2 .. 3


@lru_cache(maxsize=None)
def _form_indices(i: int) -> Tuple[Index, ...]:
    return tuple(itertools.combinations((1, 2), i))


def _weight(S: Index, e: Exponent) -> Tuple[int, int]:
    return (e[0] + (1 if 1 in S else 0), e[1] + (1 if 2 in S else 0))


@dataclass
class CochainBasis:
    """Ordered basis (simplex, S, exponent) of the truncated cochains of total degree t."""

    t: int
    W: int
    keys: List[BasisKey]
    index: Dict[BasisKey, int] = field(repr=False)

    def __len__(self):
        return len(self.keys)

    def vector(self, c: CechCochain) -> Dict[int, GaussianRational]:
        vec = {}
        for s, f in c.assignments.items():
            for S, poly in f.components.items():
                if len(s) - 1 - len(S) != self.t:
                    raise ValueError("cochain has a component of another total degree")
                for e, v in poly.items():
                    key = (s, S, e)
                    if key not in self.index:
                        raise ValueError(f"{key} lies outside the window W={self.W}")
                    vec[self.index[key]] = v
        return vec

    def cochain(self, vec: Mapping[int, object] | Sequence[object]) -> CechCochain:
        items = vec.items() if isinstance(vec, Mapping) else enumerate(vec)
        acc: Dict[Simplex, Dict[Index, Dict[Exponent, GaussianRational]]] = {}
        for k, v in items:
            if not v:
                continue
            s, S, e = self.keys[k]
            acc.setdefault(s, {}).setdefault(S, {})[e] = GaussianRational.coerce(v)
        return CechCochain({s: PolyForm({S: LaurentPoly(t) for S, t in d.items()}) for s, d in acc.items()})


@lru_cache(maxsize=64)
def cochain_basis(t: int, W: int) -> CochainBasis:
    keys: List[BasisKey] = []
    for j, i in bidegrees_of_total(t):
        R = form_radius(W, i)
        if R < 0:
            continue
        for s in COVER.simplices_of_degree(j):
            for S in _form_indices(i):
                for e in form_window(s, S, R).exponents():
                    keys.append((s, S, e))
    # weight-major order keeps the differential banded
    keys.sort(key=lambda k: (_weight(k[1], k[2]), len(k[1]), k[0], k[1]))
    return CochainBasis(t, W, keys, {k: n for n, k in enumerate(keys)})


def window_count(t: int, W: int) -> int:
    """Closed-form count of lattice points in the windows of total degree t."""
    total = 0
    for j, i in bidegrees_of_total(t):
        R = form_radius(W, i)
        if R < 0:
            continue
        for s in COVER.simplices_of_degree(j):
            for S in _form_indices(i):
                per = 1
                for r in (1, 2):
                    charts = COVER.charts(s, r)
                    sr = 1 if r in S else 0
                    if charts == {0} or charts == {1}:
                        per *= max(0, R - sr + 1)
                    else:
                        per *= 2 * R + 1
                total += per
    return total


class WindowViolation(AssertionError):
    """A differential left the monomial windows; the engine is inconsistent."""


def _delta_pi_monomial(pi: PoissonBivector, S: Index, e: Exponent) -> Dict[Tuple[Index, Exponent], GaussianRational]:
    """delta_pi(z^e dz_S) for pi = q d2^d1, expanded in closed form.

    delta(f dz1) = q d2f, delta(f dz2) = -q d1f and
    delta(f dz1^dz2) = d1(qf) dz1 + d2(qf) dz2.  Cross-checked against
    :func:`delta_pi` in the tests.
    """
    out: Dict[Tuple[Index, Exponent], GaussianRational] = {}
    e1, e2 = e
    for (a1, a2), c in pi.q.items():
        if S == (1, 2):
            n1, n2 = a1 + e1, a2 + e2
            if n1:
                out[((1,), (n1 - 1, n2))] = out.get(((1,), (n1 - 1, n2)), 0) + c * n1
            if n2:
                out[((2,), (n1, n2 - 1))] = out.get(((2,), (n1, n2 - 1)), 0) + c * n2
        elif S == (1,):
            if e2:
                key = ((), (a1 + e1, a2 + e2 - 1))
                out[key] = out.get(key, 0) + c * e2
        elif S == (2,):
            if e1:
                key = ((), (a1 + e1 - 1, a2 + e2))
                out[key] = out.get(key, 0) - c * e1
    return {k: v for k, v in out.items() if v}


def total_matrix(pi: PoissonBivector, t: int, W: int, include_pi: bool = True) -> SparseMatrix:
    """Matrix of D from total degree t to t + 1 in the truncated bases."""
    _require_global(pi)
    src = cochain_basis(t, W)
    dst = cochain_basis(t + 1, W)
    entries: Dict[Tuple[int, int], GaussianRational] = {}
    cache: Dict[Tuple[Index, Exponent], dict] = {}
    nopen = len(COVER.opens)
    one = GaussianRational(1)
    minus = GaussianRational(-1)
    for col, (s, S, e) in enumerate(src.keys):
        for v in range(nopen):
            if v in s:
                continue
            tgt = tuple(sorted(s + (v,)))
            k = tgt.index(v)
            row = dst.index.get((tgt, S, e))
            if row is None:
                raise WindowViolation(f"Cech image of {(s, S, e)} left the window")
            entries[(row, col)] = one if k % 2 == 0 else minus
        if include_pi and S and not pi.is_zero():
            key = (S, e)
            img = cache.get(key)
            if img is None:
                img = cache[key] = _delta_pi_monomial(pi, S, e)
            sgn = _sign(len(s) - 1)
            for (S2, e2), c in img.items():
                row = dst.index.get((s, S2, e2))
                if row is None:
                    raise WindowViolation(
                        f"delta_pi image of {(s, S, e)} has {(S2, e2)} outside the window"
                    )
                entries[(row, col)] = c if sgn > 0 else -c
    return SparseMatrix(len(dst), len(src), entries)


# homology --------------------------------------------------------------


@dataclass
class HomologyReport:
    dims: List[int]
    window: int
    stable: bool
    euler: int
    dims_next: Optional[List[int]] = None
    cochain_dims: Dict[int, int] = field(default_factory=dict)
    ranks: Dict[int, int] = field(default_factory=dict)
    top_degree: int = 0

    def as_dict(self) -> dict:
        return {"dims": list(self.dims), "window": self.window, "stable": self.stable, "euler": self.euler}


def total_homology_at(
    pi: PoissonBivector, W: int, mode: str = "auto", seed: int = 0
) -> Tuple[Dict[int, int], Dict[int, int], Dict[int, int]]:
    """Total cohomology dimensions by degree t, plus cochain dims and ranks."""
    _require_global(pi)
    coh, dims, ranks = _total_homology_cached(pi, W, mode, seed)
    return dict(coh), dict(dims), dict(ranks)


@lru_cache(maxsize=64)
def _total_homology_cached(pi: PoissonBivector, W: int, mode: str, seed: int):
    dims = {t: len(cochain_basis(t, W)) for t in TOTAL_DEGREES}
    ranks = {t: 0 for t in range(TOTAL_DEGREES.start - 1, TOTAL_DEGREES.stop)}
    for t in TOTAL_DEGREES:
        if t + 1 in dims and dims[t] and dims[t + 1]:
            ranks[t] = rank(total_matrix(pi, t, W), mode=mode, seed=seed + 1000 * (t + 10))
    coh = {t: dims[t] - ranks[t] - ranks[t - 1] for t in TOTAL_DEGREES}
    return coh, dims, ranks


def homology_dims(
    pi: PoissonBivector, W: int = DEFAULT_WINDOW, mode: str = "auto", seed: int = 0
) -> HomologyReport:
    """dim H_k(X, pi) for k = 0..4, read off at total degree t = 2 - k.

    The computation is repeated at W + 2 and ``stable`` records agreement.
    """
    coh, cdims, ranks = total_homology_at(pi, W, mode, seed)
    coh2, _, _ = total_homology_at(pi, W + 2, mode, seed)
    dims = [coh[N - k] for k in range(2 * N + 1)]
    dims2 = [coh2[N - k] for k in range(2 * N + 1)]
    top = coh[len(COVER.opens) - 1]
    stable = dims == dims2 and top == coh2[len(COVER.opens) - 1] and W >= 0
    euler = sum(d if k % 2 == 0 else -d for k, d in enumerate(dims))
    return HomologyReport(dims, W, stable, euler, dims2, cdims, ranks, top)


def euler_kb(pi: PoissonBivector, W: int = DEFAULT_WINDOW, mode: str = "auto", seed: int = 0) -> int:
    report = homology_dims(pi, W, mode, seed)
    if not report.stable:
        raise UnstableError(report)
    return report.euler


class UnstableError(RuntimeError):
    def __init__(self, report: HomologyReport):
        super().__init__(
            f"homology not stable: W={report.window} gives {report.dims}, "
            f"W={report.window + 2} gives {report.dims_next}"
        )
        self.report = report


# sheaf cohomology at pi = 0 --------------------------------------------


def _cech_block(j: int, blocks: Sequence[Tuple[Index, Tuple[int, int], Tuple[int, int], int]]):
    """Basis keys of Cech degree j for sheaves given as (S, twist, offset, radius)."""
    keys = []
    for s in COVER.simplices_of_degree(j):
        charts = (COVER.charts(s, 1), COVER.charts(s, 2))
        for S, twist, offset, radius in blocks:
            for e in MonomialWindow(charts, twist, offset, radius).exponents():
                keys.append((s, S, e))
    return keys


def _cech_only_matrix(src: List[BasisKey], dst: List[BasisKey]) -> SparseMatrix:
    index = {k: n for n, k in enumerate(dst)}
    entries = {}
    for col, (s, S, e) in enumerate(src):
        for v in range(len(COVER.opens)):
            if v in s:
                continue
            tgt = tuple(sorted(s + (v,)))
            row = index.get((tgt, S, e))
            if row is None:
                raise WindowViolation("Cech image left the window")
            entries[(row, col)] = 1 if tgt.index(v) % 2 == 0 else -1
    return SparseMatrix(len(dst), len(src), entries)


def sheaf_cech_dims(blocks, mode: str = "exact", seed: int = 0) -> List[int]:
    """Cech cohomology dims H^0..H^3 of a direct sum of twisted line bundles."""
    keys = [_cech_block(j, blocks) for j in range(len(COVER.opens))]
    ranks = [0] * (len(keys) + 1)
    for j in range(len(keys) - 1):
        if keys[j] and keys[j + 1]:
            ranks[j + 1] = rank(_cech_only_matrix(keys[j], keys[j + 1]), mode=mode, seed=seed)
    return [len(keys[j]) - ranks[j + 1] - ranks[j] for j in range(len(keys))]


def hodge_numbers(W: int = 3, mode: str = "exact") -> Dict[Tuple[int, int], int]:
    """h^{i,j} = dim H^j(X, Omega^i) from the Cech engine at pi = 0."""
    out = {}
    for i in range(N + 1):
        R = form_radius(W, 0)
        blocks = [(S, form_twist(S), tuple(1 if r in S else 0 for r in (1, 2)), R) for S in _form_indices(i)]
        dims = sheaf_cech_dims(blocks, mode)
        for j in range(N + 1):
            out[(i, j)] = dims[j]
        if any(dims[N + 1:]):
            raise WindowViolation("Cech cohomology above degree 2")
    return out


def _p1_cohomology(n: int) -> Tuple[int, int]:
    return (n + 1 if n >= 0 else 0, -n - 1 if n <= -2 else 0)


def line_bundle_closed_form(a: int, b: int) -> Tuple[int, int, int]:
    """(h^0, h^1, h^2) of O(a, b) by the Kunneth formula."""
    h1, h2 = _p1_cohomology(a), _p1_cohomology(b)
    return (
        h1[0] * h2[0],
        h1[0] * h2[1] + h1[1] * h2[0],
        h1[1] * h2[1],
    )


def line_bundle_cech(a: int, b: int, radius: Optional[int] = None, mode: str = "exact") -> Tuple[int, int, int]:
    """(h^0, h^1, h^2) of O(a, b) computed by the Cech engine."""
    if radius is None:
        radius = max(abs(a), abs(b)) + 2
    dims = sheaf_cech_dims([((), (a, b), (0, 0), radius)], mode)
    if dims[3]:
        raise WindowViolation("nonzero H^3")
    return tuple(dims[:3])


def line_bundle_cohomology(a: int, b: int, mode: str = "exact") -> dict:
    closed = line_bundle_closed_form(a, b)
    cech = line_bundle_cech(a, b, mode=mode)
    return {"a": a, "b": b, "closed_form": list(closed), "cech": list(cech), "agree": closed == cech}


def euler_line_bundle(a: int, b: int) -> int:
    h = line_bundle_closed_form(a, b)
    return h[0] - h[1] + h[2]


def euler_identity_checks() -> dict:
    """Euler characteristic identities on CP1 x CP1 from chi(O(a, b)) = (a+1)(b+1).

    Omega^1 = O(-2, 0) + O(0, -2), Omega^2 = O(-2, -2), and
    wedge^i T (x) Omega^2 is O(-2,-2), O(0,-2) + O(-2,0), O(0,0) for i = 0, 1, 2.
    """
    chi_omega = [
        euler_line_bundle(0, 0),
        euler_line_bundle(-2, 0) + euler_line_bundle(0, -2),
        euler_line_bundle(-2, -2),
    ]
    chi_polyvector_canonical = [
        euler_line_bundle(-2, -2),
        euler_line_bundle(0, -2) + euler_line_bundle(-2, 0),
        euler_line_bundle(0, 0),
    ]
    hodge_sum = sum(c if j % 2 == 0 else -c for j, c in enumerate(chi_omega))
    lp_sum = sum(c if i % 2 == 0 else -c for i, c in enumerate(chi_polyvector_canonical))
    chi_p1 = 2  # topological Euler number of the sphere
    chi_x = chi_p1 * chi_p1
    return {
        "chi_omega": chi_omega,
        "sum_chi_omega": hodge_sum,
        "chi_polyvector_canonical": chi_polyvector_canonical,
        "sum_chi_polyvector_canonical": lp_sum,
        "chi_X": chi_x,
        "expected_kb": (-1) ** N * chi_x,
        "pass": hodge_sum == chi_x and lp_sum == (-1) ** N * chi_x,
    }
