"""Parsing Poisson data: expressions, coefficient lists and presets.

Grammar (whitespace is ignored)::

    expr   := [sign] term (sign term)*
    term   := coeff ['*' mono] | mono
    mono   := factor ('*' factor)*
    factor := ('z1' | 'z2') ['^' [sign] int]
    coeff  := ratio | '(' gauss ')'
    gauss  := [sign] ratio ['i'] [sign ratio 'i']  |  [sign] [ratio] 'i'
    ratio  := int ['/' int]

so ``(1+2i)*z1^2*z2 - 3/4*z2^2`` and ``(3/4i) z1`` both parse.  The
canonical form printed by :class:`LaurentPoly` parses back to the same
polynomial.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .calculus import PoissonBivector
from .gaussian import GaussianRational
from .laurent import LaurentPoly

NOT_GLOBAL = "not a global bivector on CP1xCP1"
PRESETS = ("zero", "constant", "product", "random(seed)")


class PiSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}: {text[:pos]}<here>{text[pos:]}")


class NotGlobalError(ValueError):
    pass


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise PiSyntaxError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, tok: str) -> bool:
        if self.peek() and self.text.startswith(tok, self.pos):
            self.pos += len(tok)
            return True
        return False

    def expect(self, tok: str):
        if not self.accept(tok):
            self.error(f"expected {tok!r}")

    def integer(self) -> int:
        self.skip()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def ratio(self) -> Fraction:
        num = self.integer()
        if self.accept("/"):
            start = self.pos
            den = self.integer()
            if den == 0:
                self.pos = start
                self.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def sign(self) -> int:
        if self.accept("+"):
            return 1
        if self.accept("-"):
            return -1
        return 0

    def gauss(self) -> GaussianRational:
        re_part, im_part = Fraction(0), Fraction(0)
        seen = False
        while True:
            s = self.sign()
            if seen and s == 0:
                break
            s = s or 1
            if self.peek() == "i":
                self.pos += 1
                im_part += s
            elif self.peek().isdigit():
                val = self.ratio()
                if self.accept("i"):
                    im_part += s * val
                else:
                    re_part += s * val
            else:
                self.error("expected a Gaussian rational")
            seen = True
            if self.peek() == ")":
                break
        return GaussianRational(re_part, im_part)

    def coeff(self) -> Optional[GaussianRational]:
        c = self.peek()
        if c == "(":
            self.pos += 1
            val = self.gauss()
            self.expect(")")
            return val
        if c.isdigit():
            return GaussianRational(self.ratio())
        return None

    def signed_coeff(self) -> GaussianRational:
        s = self.sign() or 1
        c = self.coeff()
        if c is None or self.peek():
            self.error("expected a coefficient")
        return c if s > 0 else -c

    def factor(self) -> Optional[Tuple[int, int]]:
        self.skip()
        for var, unit in (("z1", (1, 0)), ("z2", (0, 1))):
            if self.text.startswith(var, self.pos):
                self.pos += len(var)
                n = 1
                if self.accept("^"):
                    s = self.sign() or 1
                    n = s * self.integer()
                return (unit[0] * n, unit[1] * n)
        return None

    def term(self) -> Tuple[Tuple[int, int], GaussianRational]:
        c = self.coeff()
        e = (0, 0)
        need_factor = False
        if c is not None:
            need_factor = self.accept("*")
        else:
            c = GaussianRational(1)
            need_factor = True
        while True:
            f = self.factor()
            if f is None:
                if need_factor:
                    self.error("expected z1 or z2")
                break
            e = (e[0] + f[0], e[1] + f[1])
            need_factor = self.accept("*")
        return e, c

    def expr(self) -> LaurentPoly:
        terms: Dict[Tuple[int, int], GaussianRational] = {}
        s = self.sign() or 1
        while True:
            e, c = self.term()
            terms[e] = terms.get(e, GaussianRational(0)) + (c if s > 0 else -c)
            if not self.peek():
                break
            s = self.sign()
            if not s:
                self.error("expected '+' or '-'")
        return LaurentPoly(terms)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse a Laurent polynomial in z1, z2 (negative exponents allowed)."""
    if not text.strip():
        raise PiSyntaxError("empty expression", text, 0)
    return _Parser(text).expr()


def _check_global(q: LaurentPoly) -> None:
    bad = sorted(e for e in q.support() if not (0 <= e[0] <= 2 and 0 <= e[1] <= 2))
    if bad:
        raise NotGlobalError(f"{NOT_GLOBAL}: monomial exponents {bad} outside {{0,1,2}}^2")


def parse_pi(text: str) -> PoissonBivector:
    """Parse an expression for q into the bivector q d2^d1."""
    q = parse_laurent(text)
    _check_global(q)
    return PoissonBivector(q)


def pi_from_coefficients(coeffs: List[object]) -> PoissonBivector:
    """Nine coefficients c_ab of z1^a z2^b, ordered (0,0), (0,1), ..., (2,2)."""
    if len(coeffs) != 9:
        raise ValueError(f"expected 9 coefficients, got {len(coeffs)}")
    terms = {}
    for n, c in enumerate(coeffs):
        if isinstance(c, str):
            c = _Parser(c.strip()).signed_coeff()
        terms[(n // 3, n % 3)] = c
    return PoissonBivector(LaurentPoly(terms))


def random_pi(seed: int, bound: int = 3) -> PoissonBivector:
    """q with independent small Gaussian-integer coefficients, fixed by seed."""
    rng = random.Random(seed)
    terms = {
        (a, b): GaussianRational(rng.randint(-bound, bound), rng.randint(-bound, bound))
        for a in range(3)
        for b in range(3)
    }
    return PoissonBivector(LaurentPoly(terms))


_RANDOM = re.compile(r"random\((-?\d+)\)$")


def parse_pi_spec(text: str) -> PoissonBivector:
    """An expression, nine comma-separated coefficients, or a preset name."""
    s = text.strip()
    if s == "zero":
        return PoissonBivector(0)
    if s == "constant":
        return PoissonBivector(1)
    if s == "product":
        return PoissonBivector(LaurentPoly({(1, 1): 1}))
    m = _RANDOM.match(s)
    if m:
        return random_pi(int(m.group(1)))
    if "," in s:
        return pi_from_coefficients(s.split(","))
    return parse_pi(s)


def canonical(pi: PoissonBivector) -> str:
    return str(pi.q)
