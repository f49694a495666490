from __future__ import annotations

import random

import pytest

from kbhomology.gaussian import GaussianRational
from kbhomology.sparse import (
    ModularField,
    ModularReductionError,
    SparseMatrix,
    exact_rank,
    kernel_basis,
    modular_rank,
    random_prime_field,
    rank,
    solve_membership,
)


def _random_matrix(rng: random.Random, rows: int, cols: int, density: float = 0.3, rank_cap: int | None = None):
    """Sparse random matrix; with rank_cap, a product of thin factors of known rank bound."""
    def entry():
        return GaussianRational(rng.randint(-4, 4), rng.randint(-2, 2)) / rng.choice((1, 1, 2, 3))

    if rank_cap is None:
        return SparseMatrix(rows, cols, {(r, c): entry() for r in range(rows) for c in range(cols) if rng.random() < density})
    a = SparseMatrix(rows, rank_cap, {(r, c): entry() for r in range(rows) for c in range(rank_cap) if rng.random() < 0.6})
    b = SparseMatrix(rank_cap, cols, {(r, c): entry() for r in range(rank_cap) for c in range(cols) if rng.random() < 0.6})
    return a.matmul(b)


@pytest.mark.parametrize("mode", ["exact", "modular"])
def test_small_examples(mode):
    assert rank(SparseMatrix.identity(3), mode=mode) == 3
    assert rank(SparseMatrix.from_dense([[1, 2], [2, 4]]), mode=mode) == 1
    assert rank(SparseMatrix(4, 5), mode=mode) == 0


def test_gaussian_dependence_is_seen():
    i = GaussianRational(0, 1)
    m = SparseMatrix.from_dense([[1, i], [i, -1]])
    assert rank(m, mode="exact") == 1
    assert rank(m, mode="modular") == 1


def test_random_20x20_modular_equals_exact(rng):
    for _ in range(10):
        m = _random_matrix(rng, 20, 20, rank_cap=rng.randint(1, 20))
        assert rank(m, mode="modular", seed=rng.randrange(1000)) == exact_rank(m)


def test_rank_invariances_200_matrices(rng):
    for _ in range(200):
        rows, cols = rng.randint(1, 9), rng.randint(1, 9)
        m = _random_matrix(rng, rows, cols, rank_cap=rng.randint(1, 6) if rng.random() < 0.5 else None)
        r = exact_rank(m)
        assert r <= min(rows, cols)
        assert exact_rank(m.transpose()) == r
        perm = list(range(rows))
        rng.shuffle(perm)
        assert exact_rank(m.permute_rows(perm)) == r
        assert exact_rank(m.scale_row(rng.randrange(rows), GaussianRational(2, -1))) == r
        assert rank(m, mode="modular", seed=3) == r


def test_modular_rank_never_exceeds_exact(rng):
    for _ in range(30):
        m = _random_matrix(rng, 8, 8, rank_cap=4)
        field = random_prime_field(rng)
        assert modular_rank(m, field) <= exact_rank(m)


def test_prime_sqrt_minus_one():
    field = random_prime_field(random.Random(5))
    assert field.p % 4 == 1
    assert (field.sqrt_minus_one ** 2 + 1) % field.p == 0


def test_prime_dividing_a_denominator_signals():
    p = 13
    field = ModularField(p, 5)
    m = SparseMatrix.from_dense([[GaussianRational(1, 0) / p]])
    with pytest.raises(ModularReductionError):
        modular_rank(m, field)


def test_solve_membership():
    v = [GaussianRational(1, 2), 3, GaussianRational(0, -1)]
    assert solve_membership(SparseMatrix.identity(3), v) == v
    assert solve_membership(SparseMatrix(3, 2), v) is None


def test_solve_membership_recovers_preimage(rng):
    for _ in range(20):
        m = _random_matrix(rng, 7, 5)
        cols = m.column_dicts()
        v = [GaussianRational(0)] * 7
        for k, c in cols[0].items():
            v[k] = v[k] + 3 * c
        for k, c in cols[1].items():
            v[k] = v[k] - c
        x = solve_membership(m, v)
        assert x is not None and m.matvec(x) == v


def test_kernel_basis(rng):
    for _ in range(20):
        m = _random_matrix(rng, 5, 8, rank_cap=3)
        ker = kernel_basis(m)
        assert len(ker) == 8 - exact_rank(m)
        for x in ker:
            assert all(not y for y in m.matvec(x))
