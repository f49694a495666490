from __future__ import annotations

import pytest
from hypothesis import given

from kbhomology.calculus import PoissonBivector
from kbhomology.gaussian import GaussianRational
from kbhomology.laurent import LaurentPoly
from kbhomology.parse import (
    NotGlobalError,
    PiSyntaxError,
    canonical,
    parse_laurent,
    parse_pi,
    parse_pi_spec,
    pi_from_coefficients,
)

from .conftest import global_polys, laurents


def test_trivial_inputs():
    assert parse_pi("0").is_zero()
    assert parse_pi("1") == PoissonBivector(1)


def test_coefficient_map_and_canonical_form():
    pi = parse_pi("z1^2*z2^2 - 1/2")
    assert pi.q.terms == {(2, 2): 1, (0, 0): GaussianRational(-1, 0) / 2}
    assert canonical(pi) == "z1^2*z2^2 - 1/2"


def test_gaussian_coefficients():
    pi = parse_pi("(1+2i)*z1^2*z2 - 3/4*z2^2")
    assert pi.q.coefficient(2, 1) == GaussianRational(1, 2)
    assert pi.q.coefficient(0, 2) == GaussianRational("-3/4")
    assert parse_pi("(3/4i) z1").q == LaurentPoly({(1, 0): GaussianRational(0, "3/4")})
    assert parse_pi("(-i)").q == LaurentPoly({(0, 0): GaussianRational(0, -1)})


def test_like_terms_combine():
    assert parse_pi("z1*z2 + z2*z1 - 2*z1*z2").is_zero()


@pytest.mark.parametrize("text", ["z1^3", "z2^5 + 1", "z1^-1", "z1^2*z2^3"])
def test_non_global_rejected(text):
    with pytest.raises(NotGlobalError, match="not a global bivector on CP1xCP1"):
        parse_pi(text)


@pytest.mark.parametrize(
    "text, pos",
    [("z1+", 3), ("1 2", 2), ("(1+)", 3), ("z3", 0), ("", 0), ("1/0", 2), ("2**z1", 2)],
)
def test_syntax_errors_carry_a_position(text, pos):
    with pytest.raises(PiSyntaxError) as info:
        parse_pi(text)
    assert info.value.pos == pos
    assert "position" in str(info.value)


def test_presets_and_coefficient_lists():
    assert parse_pi_spec("zero").is_zero()
    assert parse_pi_spec("constant") == PoissonBivector(1)
    assert parse_pi_spec("product") == parse_pi("z1*z2")
    assert parse_pi_spec("random(4)") == parse_pi_spec("random(4)")
    assert parse_pi_spec("random(4)") != parse_pi_spec("random(5)")
    assert parse_pi_spec("1,0,0,0,0,0,0,0,-1/2") == parse_pi("1 - 1/2*z1^2*z2^2")
    with pytest.raises(ValueError):
        pi_from_coefficients(["1"] * 8)


@given(global_polys)
def test_canonical_round_trip(q):
    pi = PoissonBivector(q)
    assert parse_pi(canonical(pi)) == pi


@given(laurents)
def test_laurent_round_trip(p):
    assert parse_laurent(str(p)) == p
