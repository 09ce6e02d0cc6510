import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from loccoh.schur import cauchy_sym, cauchy_wedge, schur_dim, sym_wedge2
from loccoh.weights import dual_weight


def count_ssyt(shape, N):
    """Semistandard tableaux of ``shape`` with entries in 1..N, by brute force."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    count = 0
    for filling in itertools.product(range(1, N + 1), repeat=len(cells)):
        t = dict(zip(cells, filling))
        rows_ok = all(t[i, j] <= t[i, j + 1] for (i, j) in cells if (i, j + 1) in t)
        cols_ok = all(t[i, j] < t[i + 1, j] for (i, j) in cells if (i + 1, j) in t)
        count += rows_ok and cols_ok
    return count


def pad(p, N):
    return tuple(p) + (0,) * (N - len(p))


@pytest.mark.parametrize("w, N, expected", [((1, 1), 2, 1), ((1, 0, 0, 0, 0), 5, 5), ((2, 1, 0), 3, 8)])
def test_schur_dim_examples(w, N, expected):
    assert schur_dim(w, N) == expected


def test_schur_dim_21_by_tableaux():
    assert count_ssyt((2, 1), 3) == 8


@pytest.mark.parametrize("shape", [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2), (2, 1, 1), (3, 2)])
@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_schur_dim_matches_tableaux(shape, N):
    want = count_ssyt(shape, N) if len(shape) <= N else 0
    if len(shape) <= N:
        assert schur_dim(pad(shape, N)) == want


def test_schur_dim_rejects_non_dominant():
    with pytest.raises(ValueError):
        schur_dim((0, 1))


def test_schur_dim_large_exact():
    # exceeds 64 bits; exact integer arithmetic throughout
    w = (400, 300, 200, 100, 0, -100, -200, -300)
    d = schur_dim(w)
    assert isinstance(d, int) and d > 2**64


weights = st.integers(1, 6).flatmap(
    lambda N: st.lists(st.integers(-6, 6), min_size=N, max_size=N).map(lambda xs: tuple(sorted(xs, reverse=True)))
)


@settings(max_examples=100)
@given(weights, st.integers(-5, 5))
def test_translation_and_duality(w, a):
    N = len(w)
    assert schur_dim(tuple(x + a for x in w), N) == schur_dim(w, N)
    assert schur_dim(dual_weight(w), N) == schur_dim(w, N)
    assert schur_dim(w, N) >= 1


def test_cauchy_examples():
    assert cauchy_sym(2, 3, 2) == [((2,), (2,)), ((1, 1), (1, 1))]
    assert cauchy_sym(0, 3, 2) == [((), ())]
    assert cauchy_sym(3, 3, 2) == [((3,), (3,)), ((2, 1), (2, 1))]
    assert cauchy_wedge(2, 3, 2) == [((2,), (1, 1)), ((1, 1), (2,))]
    assert cauchy_wedge(6, 3, 2) == [((2, 2, 2), (3, 3))]
    assert cauchy_wedge(1, 3, 2) == [((1,), (1,))]


def test_sym_wedge2_examples():
    assert sym_wedge2(1, 5) == [(1, 1)]
    assert sym_wedge2(2, 5) == [(2, 2), (1, 1, 1, 1)]
    assert sym_wedge2(2, 3) == [(2, 2)]
    dims = [schur_dim(pad(lam, 5)) for lam in sym_wedge2(2, 5)]
    assert dims == [50, 5] and sum(dims) == comb(11, 2)


@pytest.mark.parametrize("m, n", [(3, 2), (4, 3), (5, 3)])
def test_cauchy_dimension_identities(m, n):
    for r in range(0, 9):
        sym = sum(schur_dim(pad(a, m)) * schur_dim(pad(b, n)) for a, b in cauchy_sym(r, m, n))
        assert sym == comb(m * n + r - 1, r)
        wedge = sum(schur_dim(pad(a, m)) * schur_dim(pad(b, n)) for a, b in cauchy_wedge(r, m, n))
        assert wedge == comb(m * n, r)


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
def test_sym_wedge2_dimension_identity(N):
    for r in range(0, 7):
        got = sum(schur_dim(pad(lam, N)) for lam in sym_wedge2(r, N))
        assert got == comb(comb(N, 2) + r - 1, r)
