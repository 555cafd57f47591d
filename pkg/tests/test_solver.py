import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bn2.solver import (
    DimensionMismatchError,
    RationalMatrix,
    SingularMatrixError,
    det,
    det_is_nonzero,
    nullspace,
    rank,
    solve_exact,
)


def test_identity_solve():
    m = RationalMatrix.identity(4)
    b = [Fraction(1, 3), Fraction(-2), Fraction(0), Fraction(7, 5)]
    assert solve_exact(m, b) == b


def test_two_by_two_solve():
    m = RationalMatrix([[1, 1], [1, -1]])
    assert solve_exact(m, [2, 0]) == [Fraction(1), Fraction(1)]


def test_solve_methods_agree():
    m = RationalMatrix([[2, 1, -1], [-3, -1, 2], [-2, 1, 2]])
    b = [8, -11, -3]
    assert solve_exact(m, b, method="bareiss") == solve_exact(m, b, method="gauss")


def test_singular_reports_rank():
    m = RationalMatrix([[1, 2], [2, 4]])
    with pytest.raises(SingularMatrixError) as err:
        solve_exact(m, [1, 2])
    assert err.value.rank == 1


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        solve_exact(RationalMatrix([[1, 2]]), [1])
    with pytest.raises(DimensionMismatchError):
        solve_exact(RationalMatrix.identity(2), [1, 2, 3])
    with pytest.raises(DimensionMismatchError):
        RationalMatrix([[1, 2], [3]])


def test_rank_and_det():
    m = RationalMatrix([[1, 2], [2, 4]])
    assert rank(m) == 1
    assert det(m) == 0
    assert not det_is_nonzero(m)
    assert det(RationalMatrix([[Fraction(1, 2), 0], [0, 3]])) == Fraction(3, 2)


def test_nullspace_zero_matrix():
    vectors = nullspace(RationalMatrix.zeros(2, 2))
    assert len(vectors) == 2
    assert vectors[0][vectors[0].index(1)] == 1


def test_nullspace_normalization_and_membership():
    m = RationalMatrix([[1, 2, 3], [4, 5, 6]])
    basis = nullspace(m)
    assert len(basis) == 1
    v = basis[0]
    first = next(x for x in v if x != 0)
    assert first == 1
    assert m.matvec(v) == [0, 0]


def _random_matrix(rng, n, density=1.0):
    return RationalMatrix(
        [
            [
                Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                if rng.random() < density
                else Fraction(0)
                for _ in range(n)
            ]
            for _ in range(n)
        ]
    )


def test_bareiss_and_gauss_agree_on_random_matrices():
    rng = random.Random(20240817)
    for _ in range(60):
        n = rng.randint(1, 8)
        m = _random_matrix(rng, n, density=rng.choice([0.4, 0.8, 1.0]))
        r_b = rank(m, method="bareiss")
        r_g = rank(m, method="gauss")
        assert r_b == r_g
        assert r_b + len(nullspace(m)) == m.ncols
        if r_b == n:
            b = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
            assert solve_exact(m, b, method="bareiss") == solve_exact(m, b, method="gauss")


def test_solution_satisfies_every_equation():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(2, 6)
        m = _random_matrix(rng, n)
        if rank(m) < n:
            continue
        b = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
        x = solve_exact(m, b)
        assert m.matvec(x) == b


def test_matmul_and_identity():
    m = RationalMatrix([[1, 2], [3, 4]])
    assert m.matmul(RationalMatrix.identity(2)) == m
    sq = m.matmul(m)
    assert sq.entry(0, 0) == 7 and sq.entry(1, 1) == 22


@given(st.integers(1, 5), st.data())
@settings(max_examples=60, deadline=None)
def test_rank_nullity_property(n, data):
    entries = data.draw(
        st.lists(
            st.lists(st.fractions(min_value=-5, max_value=5), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
    m = RationalMatrix(entries)
    assert rank(m) + len(nullspace(m)) == n
    for v in nullspace(m):
        assert m.matvec(v) == [0] * n
