"""Holomorphic forms, multivector fields and Poisson operators on a 2-dim chart.

Conventions (fixed once, frozen by golden tests):

* forms use the basis dz_S with S ascending, so the top form is dz1^dz2;
* multivector fields are *displayed* in the basis 1, d1, d2, d2^d1 (a
  bivector ``q`` means q * d2^d1, matching pi_p = q d2^d1); internally all
  computations use the ascending basis d1^d2 = -(d2^d1);
* the pairing of multivectors with forms is the determinant pairing,
  so <d1^d2, dz1^dz2> = 1, and iterated contraction is
  i_{X^Y} = i_Y o i_X;
* pi(a, b) = i_pi(a ^ b), the Poisson bracket is {f, g} = pi(df, dg) and
  X_f = pi#(df) with <pi# a, b> = pi(a, b).

With q = 1 this gives {z2, z1} = 1, i_pi(dz1^dz2) = -1 and pi#(dz1) = -d2.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple

from .laurent import LaurentPoly

Index = Tuple[int, ...]
NVARS = 2
VARS = (1, 2)
TOP: Index = (1, 2)


def _merge_sign(a: Index, b: Index):
    """Sign and sorted index of xi_a ^ xi_b (None when they overlap)."""
    if set(a) & set(b):
        return 0, None
    inversions = sum(1 for x in a for y in b if x > y)
    return (-1 if inversions % 2 else 1), tuple(sorted(a + b))


def _remove(index: Index, j: int):
    """Left contraction of d_j into dz_index: sign and remaining index."""
    if j not in index:
        return 0, None
    p = index.index(j)
    return (-1 if p % 2 else 1), index[:p] + index[p + 1:]


def _right_remove(index: Index, j: int):
    """Right derivative of xi_index with respect to xi_j."""
    if j not in index:
        return 0, None
    p = index.index(j)
    return (-1 if (len(index) - 1 - p) % 2 else 1), index[:p] + index[p + 1:]


def _add_into(out: Dict[Index, LaurentPoly], key: Index, poly: LaurentPoly) -> None:
    if not poly:
        return
    prev = out.get(key)
    out[key] = poly if prev is None else prev + poly


def _clean(comps: Mapping[Index, LaurentPoly]) -> Dict[Index, LaurentPoly]:
    return {k: v for k, v in comps.items() if v}


def _as_poly(x) -> LaurentPoly:
    return x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x)


class _Graded:
    __slots__ = ("_c",)

    def __init__(self, components: Mapping[Iterable[int], object] | None = None):
        comps: Dict[Index, LaurentPoly] = {}
        for k, v in (components or {}).items():
            key = tuple(k)
            if list(key) != sorted(set(key)) or any(j not in VARS for j in key):
                raise ValueError(f"index set {key!r} must be strictly ascending within {VARS}")
            _add_into(comps, key, _as_poly(v))
        self._c = _clean(comps)

    @classmethod
    def _wrap(cls, comps: Dict[Index, LaurentPoly]):
        obj = object.__new__(cls)
        obj._c = _clean(comps)
        return obj

    @property
    def components(self) -> Dict[Index, LaurentPoly]:
        return dict(self._c)

    def __getitem__(self, key) -> LaurentPoly:
        return self._c.get(tuple(key), LaurentPoly())

    def degrees(self) -> set:
        return {len(k) for k in self._c}

    @property
    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError("inhomogeneous element has no single degree")
        return degs.pop() if degs else 0

    def part(self, k: int):
        return type(self)._wrap({s: v for s, v in self._c.items() if len(s) == k})

    def __bool__(self):
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._c)
        for k, v in other._c.items():
            _add_into(out, k, v)
        return type(self)._wrap(out)

    def __neg__(self):
        return type(self)._wrap({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __mul__(self, f):
        f = _as_poly(f)
        return type(self)._wrap({k: v * f for k, v in self._c.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if type(other) is not type(self):
            if other == 0:
                return not self._c
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def map_coefficients(self, fn):
        return type(self)._wrap({k: fn(v) for k, v in self._c.items()})


class PolyForm(_Graded):
    """A chartwise holomorphic form sum_S f_S dz_S with Laurent coefficients."""

    __slots__ = ()

    @classmethod
    def function(cls, f) -> PolyForm:
        return cls({(): f})

    @classmethod
    def dz(cls, j: int, f=1) -> PolyForm:
        return cls({(j,): f})

    @classmethod
    def top(cls, f=1) -> PolyForm:
        return cls({TOP: f})

    def __str__(self):
        if not self._c:
            return "0"
        names = {(): "", (1,): "dz1", (2,): "dz2", (1, 2): "dz1^dz2"}
        return " + ".join(f"({v})" + (f"*{names[k]}" if k else "") for k, v in sorted(self._c.items()))

    __repr__ = __str__


class PolyVector(_Graded):
    """A chartwise multivector field in the display basis 1, d1, d2, d2^d1."""

    __slots__ = ()

    @classmethod
    def function(cls, f) -> PolyVector:
        return cls({(): f})

    @classmethod
    def d(cls, j: int, f=1) -> PolyVector:
        return cls({(j,): f})

    @classmethod
    def bivector(cls, q) -> PolyVector:
        """q * d2^d1."""
        return cls({TOP: q})

    @classmethod
    def from_ascending(cls, comps: Mapping[Index, LaurentPoly]) -> PolyVector:
        return cls._wrap({k: (-v if k == TOP else v) for k, v in comps.items() if v})

    def ascending(self) -> Dict[Index, LaurentPoly]:
        """Components in the basis d_S with S ascending (d1^d2 for the top)."""
        return {k: (-v if k == TOP else v) for k, v in self._c.items()}

    def apply(self, f: LaurentPoly) -> LaurentPoly:
        """A vector field acting on a function."""
        if self.degrees() - {1}:
            raise ValueError("only vector fields act on functions")
        out = LaurentPoly()
        for (j,), v in self._c.items():
            out = out + v * f.partial(j)
        return out

    def __str__(self):
        if not self._c:
            return "0"
        names = {(): "", (1,): "d1", (2,): "d2", (1, 2): "d2^d1"}
        return " + ".join(f"({v})" + (f"*{names[k]}" if k else "") for k, v in sorted(self._c.items()))

    __repr__ = __str__


class PoissonBivector:
    """pi = q(z1, z2) d2^d1 on the affine chart of CP1 x CP1."""

    __slots__ = ("q",)

    def __init__(self, q=0):
        self.q = _as_poly(q)

    @property
    def vector(self) -> PolyVector:
        return PolyVector.bivector(self.q)

    def is_global(self) -> bool:
        return all(0 <= a <= 2 and 0 <= b <= 2 for a, b in self.q.support())

    def scaled(self, c) -> PoissonBivector:
        return PoissonBivector(self.q.scale(c))

    def is_zero(self) -> bool:
        return not self.q

    def __eq__(self, other):
        return isinstance(other, PoissonBivector) and self.q == other.q

    def __hash__(self):
        return hash(self.q)

    def __repr__(self):
        return f"PoissonBivector({str(self.q)!r})"


# exterior algebra -------------------------------------------------------


def wedge(a: PolyForm, b: PolyForm) -> PolyForm:
    out: Dict[Index, LaurentPoly] = {}
    for s, f in a._c.items():
        for t, g in b._c.items():
            sign, key = _merge_sign(s, t)
            if sign:
                _add_into(out, key, f * g if sign > 0 else -(f * g))
    return PolyForm._wrap(out)


def vector_wedge(P: PolyVector, Q: PolyVector) -> PolyVector:
    out: Dict[Index, LaurentPoly] = {}
    pa, qa = P.ascending(), Q.ascending()
    for s, f in pa.items():
        for t, g in qa.items():
            sign, key = _merge_sign(s, t)
            if sign:
                _add_into(out, key, f * g if sign > 0 else -(f * g))
    return PolyVector.from_ascending(out)


def _contract_basis(vec_index: Index, form_index: Index):
    """i_{d_vec_index} dz_form_index as (sign, index); d_{j1} contracts first."""
    sign, idx = 1, form_index
    for j in vec_index:
        s, idx = _remove(idx, j)
        if not s:
            return 0, None
        sign *= s
    return sign, idx


def interior(V: PolyVector, a: PolyForm) -> PolyForm:
    out: Dict[Index, LaurentPoly] = {}
    for s, f in V.ascending().items():
        for t, g in a._c.items():
            if len(s) > len(t):
                continue
            sign, key = _contract_basis(s, t)
            if sign:
                _add_into(out, key, f * g if sign > 0 else -(f * g))
    return PolyForm._wrap(out)


def partial(a: PolyForm) -> PolyForm:
    """Holomorphic exterior derivative."""
    out: Dict[Index, LaurentPoly] = {}
    for s, f in a._c.items():
        for r in VARS:
            sign, key = _merge_sign((r,), s)
            if sign:
                d = f.partial(r)
                _add_into(out, key, d if sign > 0 else -d)
    return PolyForm._wrap(out)


def pairing(V: PolyVector, a: PolyForm) -> LaurentPoly:
    """<V, a> for V and a of equal degree, via the determinant pairing."""
    return interior(V, a)[()]


# Poisson operators ------------------------------------------------------


def delta_pi(pi: PoissonBivector, a: PolyForm) -> PolyForm:
    """Koszul-Brylinski operator i_pi d - d i_pi."""
    P = pi.vector
    return interior(P, partial(a)) - partial(interior(P, a))


def pi_eval(pi: PoissonBivector, a: PolyForm, b: PolyForm) -> LaurentPoly:
    """pi(a, b) = i_pi(a ^ b) for 1-forms a, b."""
    _require_degree(a, 1)
    _require_degree(b, 1)
    return interior(pi.vector, wedge(a, b))[()]


def pi_sharp(pi: PoissonBivector, a: PolyForm) -> PolyVector:
    _require_degree(a, 1)
    comps = {}
    for s in VARS:
        c = pi_eval(pi, a, PolyForm.dz(s))
        if c:
            comps[(s,)] = c
    return PolyVector._wrap(comps)


def poisson_bracket(pi: PoissonBivector, f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return interior(pi.vector, wedge(partial(PolyForm.function(f)), partial(PolyForm.function(g))))[()]


def hamiltonian(pi: PoissonBivector, f: LaurentPoly) -> PolyVector:
    """X_f, the vector field g -> {f, g}."""
    df = partial(PolyForm.function(f))
    if not df:
        return PolyVector()
    return pi_sharp(pi, df)


def lie_derivative(V: PolyVector, a: PolyForm) -> PolyForm:
    if V and V.degrees() != {1}:
        raise ValueError("Lie derivative needs a vector field")
    return interior(V, partial(a)) + partial(interior(V, a))


def _require_degree(a: PolyForm, k: int) -> None:
    if a and a.degrees() != {k}:
        raise ValueError(f"expected a form of degree {k}, got degrees {sorted(a.degrees())}")


def koszul_bracket(pi: PoissonBivector, a: PolyForm, b: PolyForm, method: str = "kansas") -> PolyForm:
    """Bracket of 1-forms induced by pi.

    ``method="kansas"`` expands bilinearly over f dz_r with
    [f dg, h dk] = f X_g(h) dk - h X_k(f) dg + f h d{g, k};
    ``method="closed"`` uses L_{pi# a} b - L_{pi# b} a - d(pi(a, b)).
    """
    _require_degree(a, 1)
    _require_degree(b, 1)
    if method == "closed":
        out = lie_derivative(pi_sharp(pi, a), b) - lie_derivative(pi_sharp(pi, b), a)
        return out - partial(PolyForm.function(pi_eval(pi, a, b)))
    if method != "kansas":
        raise ValueError(f"unknown method {method!r}")
    out = PolyForm()
    z = {r: LaurentPoly.var(r) for r in VARS}
    for (r,), f in a._c.items():
        for (s,), h in b._c.items():
            term = PolyForm.dz(s, hamiltonian(pi, z[r]).apply(h) * f)
            term = term - PolyForm.dz(r, hamiltonian(pi, z[s]).apply(f) * h)
            term = term + partial(PolyForm.function(poisson_bracket(pi, z[r], z[s]))) * (f * h)
            out = out + term
    return out


def schouten(P: PolyVector, Q: PolyVector) -> PolyVector:
    """Graded Schouten-Nijenhuis bracket.

    [P, Q] = sum_i dP/dxi_i ^ d_i Q - (-1)^{(p-1)(q-1)} dQ/dxi_i ^ d_i P with
    right derivatives in the odd variables xi_i = d_i, so [X, f] = X(f) and
    [X, Y] is the Lie bracket.
    """
    out: Dict[Index, LaurentPoly] = {}
    pa, qa = P.ascending(), Q.ascending()
    for s, f in pa.items():
        for t, g in qa.items():
            p, q = len(s), len(t)
            sign_pq = -1 if ((p - 1) * (q - 1)) % 2 else 1
            for i in VARS:
                rs, rest = _right_remove(s, i)
                if rs:
                    dg = g.partial(i)
                    sg, key = _merge_sign(rest, t)
                    if sg and dg:
                        _add_into(out, key, (f * dg).scale(rs * sg))
                rt, rest = _right_remove(t, i)
                if rt:
                    df = f.partial(i)
                    sf, key = _merge_sign(rest, s)
                    if sf and df:
                        _add_into(out, key, (g * df).scale(-sign_pq * rt * sf))
    return PolyVector.from_ascending(out)


def lichnerowicz(pi: PoissonBivector, V: PolyVector) -> PolyVector:
    """d_pi V = [pi, V]."""
    return schouten(pi.vector, V)


def tau(V: PolyVector, omega: PolyForm) -> PolyForm:
    """The contraction V (x) omega -> i_V omega."""
    _require_degree(omega, NVARS)
    return interior(V, omega)


def nabla_canonical(pi: PoissonBivector, a: PolyForm, omega: PolyForm) -> PolyForm:
    """grad_a omega with grad_{f dg} omega = f L_{X_g} omega."""
    _require_degree(a, 1)
    _require_degree(omega, NVARS)
    out = PolyForm()
    for (r,), f in a._c.items():
        out = out + lie_derivative(hamiltonian(pi, LaurentPoly.var(r)), omega) * f
    return out


def _alt_eval(V: PolyVector, args: Tuple[PolyForm, ...]) -> LaurentPoly:
    """V(a_1, ..., a_k) = <V, a_1 ^ ... ^ a_k>."""
    if not args:
        return V[()]
    acc = args[0]
    for x in args[1:]:
        acc = wedge(acc, x)
    return interior(V.part(len(args)), acc)[()]


def d_pi_nabla(pi: PoissonBivector, V: PolyVector, omega: PolyForm | None = None) -> PolyVector:
    """Cartan differential of the cotangent algebroid with values in the canonical module.

    The cochain is V (x) omega (omega defaults to dz1^dz2) with V homogeneous
    of degree k.  The result W is returned so that the image is
    W (x) dz1^dz2.  Covector arguments run over dz1, dz2.
    """
    if omega is None:
        omega = PolyForm.top()
    _require_degree(omega, NVARS)
    k = V.degree if V else 0
    if k >= NVARS:
        return PolyVector()
    h = omega[TOP]
    basis = {r: PolyForm.dz(r) for r in VARS}

    def cochain(args: Tuple[PolyForm, ...]) -> PolyForm:
        return PolyForm.top(_alt_eval(V, args) * h)

    def evaluate(args: Tuple[PolyForm, ...]) -> LaurentPoly:
        total = PolyForm()
        for i, a in enumerate(args):
            rest = args[:i] + args[i + 1:]
            term = nabla_canonical(pi, a, cochain(rest))
            total = total + (term if i % 2 == 0 else -term)
        for i in range(len(args)):
            for j in range(i + 1, len(args)):
                rest = args[:i] + args[i + 1:j] + args[j + 1:]
                br = koszul_bracket(pi, args[i], args[j])
                term = cochain((br,) + rest) if br else PolyForm()
                total = total + (term if (i + j) % 2 == 0 else -term)
        return total[TOP]

    if k == 0:
        comps = {(r,): evaluate((basis[r],)) for r in VARS}
        return PolyVector._wrap(comps)
    # k == 1: the value on (dz1, dz2) is the d1^d2 coefficient
    return PolyVector.from_ascending({TOP: evaluate((basis[1], basis[2]))})


def modular_field(pi: PoissonBivector, omega: PolyForm | None = None) -> PolyVector:
    """The vector field H with L_{X_f} omega = H(f) omega."""
    if omega is None:
        omega = PolyForm.top()
    if set(omega.components) != {TOP} or len(omega[TOP]) != 1:
        raise ValueError("omega must be a top form with a single monomial coefficient")
    h = omega[TOP]
    h_inv = h ** -1
    comps = {}
    for r in VARS:
        c = lie_derivative(hamiltonian(pi, LaurentPoly.var(r)), omega)[TOP] * h_inv
        if c:
            comps[(r,)] = c
    return PolyVector._wrap(comps)


__all__ = [
    "PoissonBivector",
    "PolyForm",
    "PolyVector",
    "d_pi_nabla",
    "delta_pi",
    "hamiltonian",
    "interior",
    "koszul_bracket",
    "lichnerowicz",
    "lie_derivative",
    "modular_field",
    "nabla_canonical",
    "pairing",
    "partial",
    "pi_eval",
    "pi_sharp",
    "poisson_bracket",
    "schouten",
    "tau",
    "vector_wedge",
    "wedge",
]
