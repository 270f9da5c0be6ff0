import random
from fractions import Fraction

import pytest

from kantor.algebra import Algebra, verify_subalgebra
from kantor.codim1 import (
    codim1_subalgebras,
    grid_hyperplane_oracle,
    hyperplane_basis,
    normal_vector,
    pivot_system,
)
from kantor.errors import BudgetExceededError
from kantor.linalg import Subspace, unit_vec
from kantor import zoo


def drop(dim, i0):
    return Subspace.from_spanning(dim, [unit_vec(dim, k) for k in range(dim) if k != i0])


def test_pivot_system_zero_algebra():
    z = zoo.zero_algebra(3)
    for p in (1, 2, 3):
        variables, gens = pivot_system(z, p)
        assert gens == ()
        assert variables == tuple(f"a{j}" for j in range(1, p))


def test_pivot_system_bad_pivot(s2):
    with pytest.raises(ValueError):
        pivot_system(s2, 0)
    with pytest.raises(ValueError):
        pivot_system(s2, 5)


def test_wn2_pivot5_origin_satisfies_all_generators(wn2):
    variables, gens = pivot_system(wn2, 5)
    origin = {v: 0 for v in variables}
    for g in gens:
        assert g.evaluate(origin) == 0


def test_s2_pivot4_chain(s2):
    variables, gens = pivot_system(s2, 4)
    assert variables == ("a1", "a2", "a3")
    # alpha = 0 solves the system and nothing else does (see test_poly)
    origin = {v: 0 for v in variables}
    for g in gens:
        assert g.evaluate(origin) == 0


def test_codim1_wn2(wn2):
    report = codim1_subalgebras(wn2)
    assert len(report.subalgebras) == 1
    assert report.subalgebras[0] == drop(8, 4)
    assert not report.budget_errors
    for case in report.cases:
        assert case.solutions is not None
        assert not case.solutions.unresolved


def test_codim1_w2sym(w2sym):
    report = codim1_subalgebras(w2sym)
    assert len(report.subalgebras) == 1
    assert report.subalgebras[0] == drop(6, 3)


def test_codim1_s2(s2):
    report = codim1_subalgebras(s2)
    assert len(report.subalgebras) == 1
    assert report.subalgebras[0] == drop(4, 3)
    # the recorded second subalgebra fails closure
    assert not verify_subalgebra(s2, drop(4, 2))


def test_codim1_verified_and_disjoint(wn2, w2sym, s2):
    for alg in (wn2, w2sym, s2):
        report = codim1_subalgebras(alg)
        seen = set()
        for sub in report.subalgebras:
            assert verify_subalgebra(alg, sub)
            free = tuple(c for c in range(alg.dim) if c not in sub.pivot_columns)
            assert len(free) == 1
            assert free[0] not in seen  # one pivot case per hyperplane
            seen.add(free[0])


def test_codim1_budget_isolated_per_pivot(wn2):
    report = codim1_subalgebras(wn2, max_reductions=0)
    assert report.budget_errors
    assert all(isinstance(e, BudgetExceededError) for e in report.budget_errors)
    # pivot 1 has no unknowns and cannot fail
    assert report.cases[0].error is None


def test_hyperplane_basis_shape():
    rows = hyperplane_basis(4, 2, [Fraction(7)])
    assert rows == [
        [1, 7, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
    ]


def test_normal_vector_roundtrip():
    sub = Subspace.from_spanning(3, hyperplane_basis(3, 2, [Fraction(1, 2)]))
    normal = normal_vector(sub)
    # the normal annihilates the hyperplane and is primitive integer
    from kantor.linalg import dot

    for row in sub.basis:
        assert dot(normal, row) == 0
    from math import gcd

    g = 0
    for c in normal:
        g = gcd(g, int(c))
    assert g == 1


def _random_algebra(rng, n, lo=-2, hi=2):
    return Algebra.from_table(
        [
            [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]
            for _ in range(n)
        ]
    )


@pytest.mark.parametrize("dim,count,seed", [(2, 20, 5), (3, 12, 6)])
def test_grid_oracle_agreement_random_algebras(dim, count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        alg = _random_algebra(rng, dim)
        report = codim1_subalgebras(alg)
        grid = grid_hyperplane_oracle(alg, bound=3)
        reported = set()
        for sub in report.subalgebras:
            normal = normal_vector(sub)
            if max(abs(int(c)) for c in normal) <= 3:
                reported.add(normal)
        grid_normals = {normal_vector(s) for s in grid}
        assert reported == grid_normals
        for sub in report.subalgebras:
            assert verify_subalgebra(alg, sub)
