"""Sparse bivariate Laurent polynomials over Q(i)."""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Mapping, Tuple

from .gaussian import GaussianRational

Exponent = Tuple[int, int]

_ZERO_EXP: Exponent = (0, 0)


class LaurentPoly:
    """Immutable sparse Laurent polynomial in z1, z2.

    ``terms`` maps exponent pairs to nonzero :class:`GaussianRational`
    coefficients; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        clean: Dict[Exponent, GaussianRational] = {}
        if terms:
            for exp, c in terms.items():
                c = GaussianRational.coerce(c)
                if c:
                    e = (int(exp[0]), int(exp[1]))
                    clean[e] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Exponent, GaussianRational]) -> LaurentPoly:
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> LaurentPoly:
        return cls({_ZERO_EXP: c})

    @classmethod
    def monomial(cls, e1: int, e2: int, c=1) -> LaurentPoly:
        return cls({(e1, e2): c})

    @classmethod
    def var(cls, index: int) -> LaurentPoly:
        return cls.monomial(1, 0) if index == 1 else cls.monomial(0, 1)

    # container protocol -------------------------------------------------

    @property
    def terms(self) -> Dict[Exponent, GaussianRational]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, GaussianRational]]:
        return iter(self._terms.items())

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def coefficient(self, e1: int, e2: int) -> GaussianRational:
        return self._terms.get((e1, e2)) or GaussianRational(0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {_ZERO_EXP}

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for e, c in small.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        return laurent_mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> LaurentPoly:
        c = GaussianRational.coerce(c)
        if not c:
            return LaurentPoly._wrap({})
        return LaurentPoly._wrap({e: v * c for e, v in self._terms.items()})

    def shift(self, d1: int, d2: int) -> LaurentPoly:
        """Multiply by the monomial z1^d1 z2^d2."""
        return LaurentPoly._wrap({(e[0] + d1, e[1] + d2): c for e, c in self._terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            ((e, c),) = self._terms.items()
            m = -n
            return LaurentPoly._wrap({(-e[0] * m, -e[1] * m): c.inverse() ** m})
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def partial(self, var: int) -> LaurentPoly:
        return laurent_partial(self, var)

    def invert_chart(self, var: int) -> LaurentPoly:
        return laurent_invert_chart(self, var)

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        try:
            return self._terms == LaurentPoly.constant(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # formatting ---------------------------------------------------------

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0]))

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            mono = _format_monomial(e)
            negative = c.is_real() and c.re < 0
            if negative:
                c = -c
            if mono and c == 1:
                body = mono
            elif mono:
                body = f"{c}*{mono}"
            else:
                body = str(c)
            if k == 0:
                pieces.append(("-" if negative else "") + body)
            else:
                pieces.append((" - " if negative else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


def _format_monomial(e: Exponent) -> str:
    parts = []
    for name, k in (("z1", e[0]), ("z2", e[1])):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def laurent_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    out: Dict[Exponent, GaussianRational] = {}
    for (a1, a2), ca in a._terms.items():
        for (b1, b2), cb in b._terms.items():
            e = (a1 + b1, a2 + b2)
            v = ca * cb
            prev = out.get(e)
            out[e] = v if prev is None else prev + v
    return LaurentPoly._wrap({e: c for e, c in out.items() if c})


def laurent_partial(a: LaurentPoly, var: int) -> LaurentPoly:
    """Formal derivative d/dz_var; the exponent-0 terms in that variable die."""
    if var not in (1, 2):
        raise ValueError("var must be 1 or 2")
    k = var - 1
    out = {}
    for e, c in a._terms.items():
        n = e[k]
        if n:
            ne = (e[0] - 1, e[1]) if k == 0 else (e[0], e[1] - 1)
            out[ne] = c * n
    return LaurentPoly._wrap(out)


def laurent_invert_chart(a: LaurentPoly, var: int) -> LaurentPoly:
    """Substitute z_var -> 1/z_var (negate that exponent)."""
    if var not in (1, 2):
        raise ValueError("var must be 1 or 2")
    if var == 1:
        return LaurentPoly._wrap({(-e[0], e[1]): c for e, c in a._terms.items()})
    return LaurentPoly._wrap({(e[0], -e[1]): c for e, c in a._terms.items()})


def lsum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out = LaurentPoly()
    for p in polys:
        out = out + p
    return out
