from __future__ import annotations

import random

import pytest

from kbhomology.checks import identities_for, random_poly, run_suite, shrink
from kbhomology.laurent import LaurentPoly


def test_runs_are_deterministic():
    a = [r.as_dict() for r in run_suite("chain-map", trials=5, seed=3)]
    b = [r.as_dict() for r in run_suite("chain-map", trials=5, seed=3)]
    assert a == b


def test_unknown_suite():
    with pytest.raises(ValueError):
        identities_for("nope")


def test_suite_membership():
    assert {i.suite for i in identities_for("all")} == {"operators", "chain-map", "cech"}
    assert len(identities_for("chain-map")) == 3


def test_shrink_finds_a_minimal_monomial():
    rng = random.Random(1)
    p = random_poly(rng, 3, terms=6) + LaurentPoly.monomial(2, 0, 5)

    def fails(q):
        return q.coefficient(2, 0) != 0

    (small,) = shrink((p,), fails)
    assert small == LaurentPoly.monomial(2, 0, 5)
