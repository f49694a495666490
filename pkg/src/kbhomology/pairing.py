"""Cochain-level Evens-Lu-Weinstein pairing on the Cech total complex.

The pairing of a in total degree t and b in degree -t is

    <a, b> = sum over components (-1)^{i_a} * trace((a u b)_{2,2})

where ``u`` is the front-face/back-face cup product with Koszul sign
(-1)^{i_a j_b} and ``trace`` reads the coordinate of the top Cech class
H^2(X, Omega^2) = C.  With these signs D satisfies, up to a dz-exact
bracket term, <Da, b> + (-1)^t <a, Db> = 0, and dz-exact terms vanish in
torus weight 0, which is the only weight the trace sees.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .calculus import PoissonBivector, PolyForm, delta_pi, wedge
from .cech import (
    COVER,
    DEFAULT_WINDOW,
    N,
    CechCochain,
    UnstableError,
    _form_indices,
    form_window,
    bidegrees_of_total,
    cech_differential,
    cochain_basis,
    homology_dims,
    total_differential,
)
from .gaussian import GaussianRational
from .laurent import LaurentPoly
from .sparse import SparseMatrix, kernel_basis, rank, solve_membership

Simplex = Tuple[int, ...]


def cup(c1: CechCochain, c2: CechCochain) -> CechCochain:
    """(c1 u c2)(u_0..u_{p+q}) = (-1)^{i1 j2} c1(u_0..u_p) ^ c2(u_p..u_{p+q})."""
    out: Dict[Simplex, PolyForm] = {}
    a2 = c2.assignments
    for s1, f1 in c1.assignments.items():
        last = s1[-1]
        for s2, f2 in a2.items():
            if s2[0] != last:
                continue
            s = s1 + s2[1:]
            j2 = len(s2) - 1
            for i1 in f1.degrees():
                prod = wedge(f1.part(i1), f2)
                if not prod:
                    continue
                if (i1 * j2) % 2:
                    prod = -prod
                out[s] = out[s] + prod if s in out else prod
    return CechCochain(out)


# the top class -----------------------------------------------------------

_TOP_EXP = (-1, -1)
_TOP_S = (1, 2)


def reference_cocycle() -> CechCochain:
    """g0: the weight-zero top form dz1^dz2/(z1 z2) on U00.U01.U10 and U00.U01.U11."""
    omega = PolyForm({_TOP_S: LaurentPoly({_TOP_EXP: 1})})
    return CechCochain({(0, 1, 2): omega, (0, 1, 3): omega})


def _weight_zero_top(c: CechCochain, j: int) -> Dict[Simplex, GaussianRational]:
    out = {}
    for s, f in c.assignments.items():
        if len(s) - 1 != j:
            continue
        v = f[_TOP_S].coefficient(*_TOP_EXP)
        if v:
            out[s] = v
    return out


@lru_cache(maxsize=1)
def _trace_system():
    """Weight-zero Cech data for Omega^2: coboundary matrix and g0 column."""
    deg2 = COVER.simplices_of_degree(2)
    deg1 = [s for s in COVER.simplices_of_degree(1) if _both_charts(s)]
    index = {s: n for n, s in enumerate(deg2)}
    cols = []
    for s in deg1:
        img = _weight_zero_top(cech_differential(CechCochain({s: PolyForm({_TOP_S: LaurentPoly({_TOP_EXP: 1})})})), 2)
        cols.append({index[t]: v for t, v in img.items()})
    g0 = _weight_zero_top(reference_cocycle(), 2)
    cols.append({index[t]: v for t, v in g0.items()})
    # a fixed non-cocycle completes a basis; the extended trace vanishes on it
    cols.append({index[(0, 1, 2)]: GaussianRational(1)})
    return deg2, index, SparseMatrix.from_columns(len(deg2), cols)


def _both_charts(s: Simplex) -> bool:
    return COVER.charts(s, 1) == {0, 1} and COVER.charts(s, 2) == {0, 1}


class TraceError(ValueError):
    pass


def trace(c: CechCochain, check_closed: bool = True) -> GaussianRational:
    """Coordinate of the class of c in H^2(X, Omega^2) relative to g0.

    Only the torus-weight-zero part of the (2, 2) component is read: every
    other weight of the Cech complex of Omega^2 is acyclic.  The coordinate
    lambda is found by solving c - lambda g0 in im(delta_Cech).  With
    ``check_closed=False`` the trace is extended linearly to non-cocycles by
    declaring it zero on one fixed non-closed cochain; it still vanishes on
    coboundaries, which is all the pairing identities need.
    """
    deg2, index, M = _trace_system()
    top = _weight_zero_top(c.component(2, 2), 2)
    if check_closed:
        d = _weight_zero_top(cech_differential(CechCochain({s: PolyForm({_TOP_S: LaurentPoly({_TOP_EXP: v})}) for s, v in top.items()})), 3)
        if d:
            raise TraceError("cochain is not Cech-closed in weight zero")
    v = [GaussianRational(0)] * len(deg2)
    for s, val in top.items():
        v[index[s]] = val
    x = solve_membership(M, v)
    if x is None or (check_closed and x[-1]):
        raise TraceError("cochain is outside span(g0) + im(delta_Cech); the trace is undefined")
    return x[-2]


def pair(a: CechCochain, b: CechCochain, check_closed: bool = True) -> GaussianRational:
    """<a, b> = sum (-1)^{i_a} trace((a_{j,i} u b)_{2,2})."""
    top = CechCochain()
    for (j, i) in sorted(a.bidegrees()):
        part = cup(a.component(j, i), b).component(2, 2)
        top = top + (part if i % 2 == 0 else -part)
    return trace(top, check_closed=check_closed)


# representatives ---------------------------------------------------------


def _weights_in(c: CechCochain):
    out = set()
    for f in c.assignments.values():
        for S, poly in f.components.items():
            for e in poly.support():
                out.add((e[0] + (1 if 1 in S else 0), e[1] + (1 if 2 in S else 0)))
    return out


def _weight_block_keys(j: int, i: int, m: Tuple[int, int]):
    keys = []
    if j < 0 or j >= len(COVER.opens):
        return keys
    for s in COVER.simplices_of_degree(j):
        for S in _form_indices(i):
            e = (m[0] - (1 if 1 in S else 0), m[1] - (1 if 2 in S else 0))
            if form_window(s, S, 0).regular(e):
                keys.append((s, S, e))
    return keys


def _block_matrix(src, dst) -> SparseMatrix:
    index = {k: n for n, k in enumerate(dst)}
    entries = {}
    for col, (s, S, e) in enumerate(src):
        img = cech_differential(CechCochain({s: PolyForm({S: LaurentPoly({e: 1})})}))
        for t, f in img.assignments.items():
            v = f[S].coefficient(*e)
            entries[(index[(t, S, e)], col)] = v
    return SparseMatrix(len(dst), len(src), entries)


def _keys_to_cochain(keys, vec) -> CechCochain:
    out = CechCochain()
    for (s, S, e), v in zip(keys, vec):
        if v:
            out = out + CechCochain({s: PolyForm({S: LaurentPoly({e: v})})})
    return out


def _cochain_on_keys(c: CechCochain, keys) -> List[GaussianRational]:
    return [c[s][S].coefficient(*e) for (s, S, e) in keys]


def cech_primitive(c: CechCochain, j: int, i: int, rng: Optional[random.Random] = None) -> CechCochain:
    """b with delta_Cech b = c for a (j, i) Cech coboundary c, weight by weight.

    With ``rng`` a random Cech cocycle is added to the particular solution.
    """
    out = CechCochain()
    for m in sorted(_weights_in(c)):
        src = _weight_block_keys(j - 1, i, m)
        dst = _weight_block_keys(j, i, m)
        part = c.weight_part(m)
        if not src:
            if part:
                raise TraceError(f"no primitive: weight {m} has no (j-1) cochains")
            continue
        M = _block_matrix(src, dst)
        x = solve_membership(M, _cochain_on_keys(part, dst))
        if x is None:
            raise TraceError(f"({j},{i}) cochain is not a Cech coboundary in weight {m}")
        if rng is not None:
            for kvec in kernel_basis(M):
                lam = GaussianRational(rng.randint(-3, 3), rng.randint(-1, 1))
                x = [xi + lam * ki for xi, ki in zip(x, kvec)]
        out = out + _keys_to_cochain(src, x)
    return out


def e1_classes(t: int) -> List[Tuple[int, int, CechCochain]]:
    """Cech cocycles representing sum_{j - i = t} H^j(X, Omega^i), with (j, i)."""
    out = []
    for j, i in bidegrees_of_total(t):
        if j > N:
            continue
        m = (0, 0)
        src = _weight_block_keys(j - 1, i, m)
        mid = _weight_block_keys(j, i, m)
        dst = _weight_block_keys(j + 1, i, m)
        if not mid:
            continue
        Z = kernel_basis(_block_matrix(mid, dst)) if dst else [
            [GaussianRational(int(a == b)) for a in range(len(mid))] for b in range(len(mid))
        ]
        B = _block_matrix(src, mid) if src else SparseMatrix(len(mid), 0)
        base = rank(B, mode="exact") if src else 0
        chosen: List[List[GaussianRational]] = []
        for z in Z:
            cols = B.column_dicts() + [{k: v for k, v in enumerate(w) if v} for w in chosen + [z]]
            cand = SparseMatrix.from_columns(len(mid), cols)
            if rank(cand, mode="exact") == base + len(chosen) + 1:
                chosen.append(z)
        for z in chosen:
            out.append((j, i, _keys_to_cochain(mid, z)))
    return out


def lift_class(pi: PoissonBivector, j: int, i: int, zeta: CechCochain, rng: Optional[random.Random] = None) -> CechCochain:
    """Complete a (j, i) Cech cocycle to a D-cycle by the zig-zag

    delta_Cech zeta_{k+1} = -(-1)^{j-k} delta_pi zeta_k.
    """
    total = zeta
    cur, jj, ii = zeta, j, i
    while ii > 0:
        rhs = cur.map_forms(lambda s, f: delta_pi_sign(pi, f, jj))
        if rhs.is_zero():
            break
        if jj == 0:
            raise TraceError("zig-zag obstructed: delta_pi of a Cech 0-cochain is nonzero")
        nxt = cech_primitive(-rhs, jj, ii - 1, rng)
        total = total + nxt
        cur, jj, ii = nxt, jj - 1, ii - 1
    return total


def delta_pi_sign(pi: PoissonBivector, f: PolyForm, j: int) -> PolyForm:
    out = delta_pi(pi, f)
    return out if j % 2 == 0 else -out


def homology_representatives(
    pi: PoissonBivector, t: int, rng: Optional[random.Random] = None
) -> List[CechCochain]:
    """D-cycles whose classes form a basis of the total cohomology in degree t."""
    reps = []
    for j, i, zeta in e1_classes(t):
        rep = lift_class(pi, j, i, zeta, rng)
        if not total_differential(pi, rep).is_zero():
            raise TraceError("zig-zag lift is not a cycle")
        reps.append(rep)
    return reps


def random_cochain(
    t: int, W: int, rng: random.Random, density: float = 0.5, max_weight: Optional[int] = 1
) -> CechCochain:
    """Random element of total degree t, drawn from basis monomials of weight |m| <= max_weight.

    Only weights near zero can reach the weight-zero top class after cup
    products and delta_pi, so this keeps pairing tests from being vacuous.
    """
    basis = cochain_basis(t, W)
    vec = {}
    for k, (s, S, e) in enumerate(basis.keys):
        m = (e[0] + (1 in S), e[1] + (2 in S))
        if max_weight is not None and max(abs(m[0]), abs(m[1])) > max_weight:
            continue
        if rng.random() < density:
            vec[k] = GaussianRational(rng.randint(-3, 3), rng.randint(-2, 2))
    return basis.cochain(vec)


@dataclass
class PairingMatrix:
    k: int
    entries: List[List[GaussianRational]]
    rank: int
    dims: Tuple[int, int]
    window: int
    stable: bool

    @property
    def nondegenerate(self) -> bool:
        return self.rank == self.dims[0] == self.dims[1]

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "window": self.window,
            "matrix": [[str(x) for x in row] for row in self.entries],
            "rank": self.rank,
            "dims": list(self.dims),
            "nondegenerate": self.nondegenerate,
        }


def pairing_matrix(
    pi: PoissonBivector,
    k: int,
    W: int = DEFAULT_WINDOW,
    seed: Optional[int] = None,
    perturb: bool = False,
    mode: str = "auto",
) -> PairingMatrix:
    """Matrix of <H_k, H_{4-k}> on representative cycles.

    ``seed`` re-randomizes the zig-zag lifts; ``perturb`` also adds
    D-boundaries of random cochains, which must leave every entry unchanged.
    """
    report = homology_dims(pi, W, mode=mode)
    if not report.stable:
        raise UnstableError(report)
    rng = random.Random(seed) if seed is not None else None
    ta, tb = N - k, N - (2 * N - k)
    A = homology_representatives(pi, ta, rng)
    B = homology_representatives(pi, tb, rng)
    if len(A) != report.dims[k] or len(B) != report.dims[2 * N - k]:
        raise TraceError("representatives do not match the homology dimensions")
    if not all(c.in_window(W) for c in A + B):
        raise TraceError(f"representatives leave the window W={W}")
    if perturb and rng is not None:
        A = [a + total_differential(pi, random_cochain(ta - 1, min(W, 3), rng)) for a in A]
        B = [b + total_differential(pi, random_cochain(tb - 1, min(W, 3), rng)) for b in B]
    entries = [[pair(a, b) for b in B] for a in A]
    if A and B:
        r = rank(SparseMatrix.from_dense(entries), mode="exact")
    else:
        r = 0
    return PairingMatrix(k, entries, r, (len(A), len(B)), W, report.stable)
