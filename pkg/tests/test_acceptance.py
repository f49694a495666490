"""Acceptance criteria, one test per criterion.

A PASS/FAIL line per criterion is printed in the pytest terminal summary.
"""

from __future__ import annotations

import itertools
import json
import random
import subprocess
import sys
import time

import pytest

from kbhomology.calculus import PoissonBivector
from kbhomology.cech import (
    euler_identity_checks,
    hodge_numbers,
    homology_dims,
    line_bundle_cech,
    line_bundle_closed_form,
    total_differential,
)
from kbhomology.checks import identities_for, run_identity
from kbhomology.laurent import LaurentPoly
from kbhomology.pairing import homology_representatives, pair, pairing_matrix, random_cochain
from kbhomology.parse import parse_pi, random_pi

SUITE = {
    "zero": PoissonBivector(0),
    "q = 1": PoissonBivector(1),
    "q = z1^2 z2^2": PoissonBivector(LaurentPoly.monomial(2, 2)),
    "q = z1 z2": PoissonBivector(LaurentPoly.monomial(1, 1)),
    "rational": parse_pi("1/2 - (2i)*z1*z2^2 + 3/4*z1^2 + z2"),
    "random(1)": random_pi(1),
    "random(2)": random_pi(2),
    "random(3)": random_pi(3),
}
EXPECTED = [0, 0, 4, 0, 0]


@pytest.mark.criterion(1, "H_* = (0,0,4,0,0) for 8 structures, stable for W in {6, 8}, modular ranks, <= 5 min")
def test_criterion_1_dimension_table():
    start = time.perf_counter()
    for name, pi in SUITE.items():
        for W in (6, 8):
            rep = homology_dims(pi, W, mode="modular")
            assert rep.stable, (name, W, rep.dims, rep.dims_next)
            assert rep.dims == EXPECTED, (name, W, rep.dims)
    elapsed = time.perf_counter() - start
    print(f"criterion 1 runtime {elapsed:.1f}s")
    assert elapsed <= 300


def _kunneth_hodge():
    bundles = {0: [(0, 0)], 1: [(-2, 0), (0, -2)], 2: [(-2, -2)]}
    out = {}
    for i, parts in bundles.items():
        for j in range(3):
            out[(i, j)] = sum(line_bundle_closed_form(a, b)[j] for a, b in parts)
    return out


@pytest.mark.criterion(2, "pi = 0 Hodge blocks match (h00, h11, h22) = (1, 2, 1), others 0")
def test_criterion_2_hodge_oracle():
    oracle = _kunneth_hodge()
    assert oracle[(0, 0)] == 1 and oracle[(1, 1)] == 2 and oracle[(2, 2)] == 1
    assert sum(oracle.values()) == 4
    assert hodge_numbers() == oracle


@pytest.mark.criterion(3, "line bundles O(a, b), (a, b) in [-4, 4]^2: Cech = Kunneth, <= 1 min")
def test_criterion_3_line_bundles():
    start = time.perf_counter()
    for a, b in itertools.product(range(-4, 5), repeat=2):
        assert line_bundle_cech(a, b) == line_bundle_closed_form(a, b), (a, b)
    assert time.perf_counter() - start <= 60


@pytest.mark.criterion(4, "operator identities, 200 trials each, exact")
@pytest.mark.parametrize("ident", identities_for("operators"), ids=lambda i: i.name)
def test_criterion_4_operator_fuzz(ident):
    result = run_identity(ident, 200, random.Random(f"acceptance:{ident.name}"))
    assert result.ok, result.as_dict()


@pytest.mark.criterion(5, "tau d_pi^nabla = (-1)^(l+1) delta_pi tau, l = 0, 1, 2, 100 trials each")
@pytest.mark.parametrize("ident", identities_for("chain-map"), ids=lambda i: i.name)
def test_criterion_5_chain_map(ident):
    result = run_identity(ident, 100, random.Random(f"acceptance:{ident.name}"))
    assert result.ok, result.as_dict()


@pytest.mark.criterion(6, "chi_KB = 4 for every suite pi; Euler identity table sums to 4")
def test_criterion_6_euler():
    for name, pi in SUITE.items():
        rep = homology_dims(pi, 8, mode="modular")
        assert rep.stable and rep.euler == 4, name
    checks = euler_identity_checks()
    assert checks["sum_chi_omega"] == 4
    assert checks["sum_chi_polyvector_canonical"] == 4
    assert checks["pass"]


@pytest.mark.criterion(7, "pairing on H_2 has rank 4 for pi = 0 and random pi; entries fixed under D-exact changes")
def test_criterion_7_nondegeneracy():
    names = ["zero", "random(1)", "random(2)", "random(3)", "q = z1^2 z2^2"]
    for name in names:
        pi = SUITE[name]
        pm = pairing_matrix(pi, 2, W=3, mode="exact")
        assert pm.rank == 4 and pm.nondegenerate, name
        rng = random.Random(name)
        A = homology_representatives(pi, 0)
        moved = [a + total_differential(pi, random_cochain(-1, 3, rng)) for a in A]
        assert [[pair(a, b) for b in moved] for a in moved] == pm.entries, name
        for seed in (1, 2):
            assert pairing_matrix(pi, 2, W=3, seed=seed, perturb=True, mode="exact").rank == 4


@pytest.mark.criterion(8, "identical flags and seed give byte-identical JSON")
@pytest.mark.parametrize(
    "argv",
    [
        ["homology", "--pi", "random(2)", "--window", "6", "--seed", "9"],
        ["pairing", "--pi", "z1*z2", "--k", "2", "--window", "3", "--seed", "4"],
        ["check", "--suite", "chain-map", "--trials", "20", "--seed", "42"],
        ["euler", "--pi", "1+z1^2*z2^2", "--window", "3"],
    ],
    ids=lambda a: a[0],
)
def test_criterion_8_determinism(argv):
    cmd = [sys.executable, "-m", "kbhomology", *argv]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    json.loads(first)
