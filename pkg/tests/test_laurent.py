from __future__ import annotations

import pytest
from hypothesis import given

from kbhomology.gaussian import GaussianRational
from kbhomology.laurent import LaurentPoly

from .conftest import laurents

z1 = LaurentPoly.var(1)
z2 = LaurentPoly.var(2)


def test_no_zero_coefficients_stored():
    p = LaurentPoly({(1, 0): 1, (0, 1): 0})
    assert p.support() == {(1, 0)}
    assert (z1 - z1).is_zero()


def test_product_and_partials():
    p = (z1 + z2) ** 2
    assert p == z1 * z1 + 2 * z1 * z2 + z2 * z2
    assert p.partial(1) == 2 * z1 + 2 * z2
    assert (z1 ** -2).partial(1) == -2 * z1 ** -3


def test_only_monomials_invert():
    with pytest.raises(ValueError):
        (z1 + 1) ** -1
    assert (GaussianRational(0, 2) * z1 * z2) ** -1 == LaurentPoly({(-1, -1): GaussianRational(0, -1) / 2})


def test_canonical_string():
    p = LaurentPoly({(2, 2): 1, (0, 0): GaussianRational(-1, 0) / 2})
    assert str(p) == "z1^2*z2^2 - 1/2"
    assert str(LaurentPoly()) == "0"


@given(laurents, laurents, laurents)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(laurents, laurents)
def test_partial_is_a_derivation(a, b):
    for v in (1, 2):
        assert (a * b).partial(v) == a.partial(v) * b + a * b.partial(v)


@given(laurents)
def test_chart_inversion_is_an_involution(a):
    for v in (1, 2):
        assert a.invert_chart(v).invert_chart(v) == a
