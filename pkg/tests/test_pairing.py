from __future__ import annotations

import random

import pytest

from kbhomology.calculus import PoissonBivector, PolyForm
from kbhomology.cech import CechCochain, cech_differential, total_differential
from kbhomology.checks import random_bivector
from kbhomology.gaussian import GaussianRational
from kbhomology.laurent import LaurentPoly
from kbhomology.pairing import (
    TraceError,
    cup,
    homology_representatives,
    pair,
    pairing_matrix,
    random_cochain,
    reference_cocycle,
    trace,
)
from kbhomology.parse import random_pi


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def test_unit_is_neutral(rng):
    unit = CechCochain({(v,): PolyForm.function(1) for v in range(4)})
    for _ in range(10):
        c = random_cochain(rng.randint(-2, 2), 2, rng, density=0.2, max_weight=None)
        assert cup(unit, c) == c


def test_bidegrees_add():
    a = CechCochain({(0, 1): PolyForm.dz(1)})
    b = CechCochain({(1, 3): PolyForm.dz(2)})
    assert cup(a, b).bidegrees() == {(2, 2)}


def test_cup_is_a_cech_derivation(rng):
    """delta(a u b) = delta a u b + (-1)^t a u delta b, the Cech half of the chain-map rule."""
    for _ in range(100):
        ta = rng.randint(-2, 1)
        a = random_cochain(ta, 2, rng, density=0.2)
        b = random_cochain(rng.randint(-2, 1), 2, rng, density=0.2)
        lhs = cech_differential(cup(a, b))
        rhs = cup(cech_differential(a), b) + cup(a, cech_differential(b)) * _sign(ta)
        assert lhs == rhs


def test_cup_is_a_chain_map_when_pi_vanishes(rng):
    pi = PoissonBivector(0)
    for _ in range(50):
        ta = rng.randint(-2, 1)
        a = random_cochain(ta, 2, rng, density=0.2)
        b = random_cochain(rng.randint(-2, 1), 2, rng, density=0.2)
        lhs = total_differential(pi, cup(a, b))
        rhs = cup(total_differential(pi, a), b) + cup(a, total_differential(pi, b)) * _sign(ta)
        assert lhs == rhs


def test_pairing_descends_for_general_pi(rng):
    """<Da, b> + (-1)^t <a, Db> = 0, over pairs where the terms are often nonzero."""
    nontrivial = 0
    for _ in range(100):
        pi = random_bivector(rng)
        ta = rng.choice([-2, -1, 0, 1])
        a = random_cochain(ta, 2, rng)
        b = random_cochain(-1 - ta, 2, rng)
        left = pair(total_differential(pi, a), b, check_closed=False)
        right = pair(a, total_differential(pi, b), check_closed=False)
        nontrivial += bool(left)
        assert left + right * _sign(ta) == 0
    assert nontrivial >= 20


def test_trace_normalization_and_exactness(rng):
    g0 = reference_cocycle()
    assert trace(g0) == 1
    for _ in range(20):
        b = random_cochain(1, 2, rng, max_weight=None).component(1, 2)
        lam = GaussianRational(rng.randint(-5, 5), rng.randint(-5, 5)) / 3
        assert trace(cech_differential(b)) == 0
        assert trace(g0 * lam + cech_differential(b)) == lam


def test_trace_rejects_non_closed():
    h = CechCochain({(0, 1, 2): PolyForm.top(LaurentPoly.monomial(-1, -1))})
    with pytest.raises(TraceError):
        trace(h)


def test_cycle_products_are_closed():
    pi = random_pi(4)
    reps = homology_representatives(pi, 0)
    for a in reps:
        for b in reps:
            pair(a, b)  # raises unless the weight-zero top part is a cocycle


def test_representatives_are_cycles_in_the_window():
    pi = random_pi(2)
    for t in (-2, -1, 0, 1, 2):
        reps = homology_representatives(pi, t, random.Random(t))
        assert len(reps) == (4 if t == 0 else 0)
        for r in reps:
            assert r.in_window(2) and total_differential(pi, r).is_zero()


def test_pi_zero_serre_duality_blocks():
    pm = pairing_matrix(PoissonBivector(0), 2, W=3, mode="exact")
    assert pm.dims == (4, 4) and pm.rank == 4 and pm.nondegenerate
    # H^{0,0} x H^{2,2} and H^{1,1} x H^{1,1}: antidiagonal block shape
    e = pm.entries
    assert e[0][3] != 0 and e[3][0] != 0
    assert all(e[0][j] == 0 for j in range(3))


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_random_pi_nondegenerate(seed):
    pm = pairing_matrix(random_pi(seed), 2, W=3, mode="exact")
    assert pm.rank == 4


def test_extreme_monomial_nondegenerate():
    pm = pairing_matrix(PoissonBivector(LaurentPoly.monomial(2, 2)), 2, W=3, mode="exact")
    assert pm.rank == 4


@pytest.mark.parametrize("k", [0, 1, 3, 4])
def test_other_degrees_are_empty(k):
    pm = pairing_matrix(random_pi(1), k, W=3, mode="exact")
    assert pm.entries == [] and pm.rank == 0 and pm.nondegenerate


def test_boundaries_do_not_change_entries():
    pi = random_pi(6)
    base = pairing_matrix(pi, 2, W=3, mode="exact")
    for seed in (10, 11):
        rng = random.Random(seed)
        A = homology_representatives(pi, 0)
        moved = [a + total_differential(pi, random_cochain(-1, 3, rng)) for a in A]
        assert [[pair(a, b) for b in moved] for a in A] == base.entries
        assert [[pair(a, b) for b in A] for a in moved] == base.entries


def test_rerandomized_lifts_keep_rank():
    pi = random_pi(8)
    ranks = {pairing_matrix(pi, 2, W=3, seed=s, perturb=True, mode="exact").rank for s in range(4)}
    assert ranks == {4}


def test_bilinearity(rng):
    pi = random_pi(9)
    A = homology_representatives(pi, 0)
    lam = GaussianRational(2, -3)
    for a in A:
        for b in A:
            assert pair(a * lam + A[0], b) == lam * pair(a, b) + pair(A[0], b)
            assert pair(a, b * lam) == lam * pair(a, b)
