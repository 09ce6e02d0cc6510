from collections import Counter
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

import brute
from loccoh.equivariant import (
    EXT_QUOTIENT,
    INFINITE,
    IrreducibleSummand as S,
    character_dim,
    ext_minors,
    ext_minors_bott,
    ext_pfaffians,
    ext_pfaffians_bott,
    ext_quotient_shift,
    graded_dim,
    graded_dims,
    ideal_power_character_minors,
    ideal_power_character_pfaffians,
    loccoh_minors,
    loccoh_pfaffians,
)
from loccoh.weights import WeightBox


def pairs(dec):
    return [(s.f_weight, s.g_weight) for s in dec.summands]


def fs(dec):
    return [s.f_weight for s in dec.summands]


def brute_ext_minors(m, n, d, j, r):
    """Closed form rebuilt from the brute-force weight scan."""
    k = m - n
    if j % k or j > n * k:
        return []
    s = j // k
    floor = -d - k
    return [(brute.lam_s_minors(lam, s, m, n), lam) for lam in brute.W_minors(r, s, m, n, floor, r - (n - 1) * floor)]


# closed form


def test_ext_minors_examples():
    assert pairs(ext_minors(3, 2, 1, 1, -3)) == [((-1, -1, -1), (-1, -2))]
    assert pairs(ext_minors(3, 2, 1, 0, 2)) == [((2, 0, 0), (2, 0)), ((1, 1, 0), (1, 1))]
    for r in range(-12, 6):
        assert ext_minors(3, 2, 1, 2, r).summands == ()


def test_ext_minors_hand_enumeration_d1():
    # floor -2 and dominance of (λ1, -1, λ2+1) force λ = (-1, -2)
    assert brute_ext_minors(3, 2, 1, 1, -3) == [((-1, -1, -1), (-1, -2))]


def test_ext_minors_below_theorem_range_is_flagged():
    assert not ext_minors(3, 2, 1, 1, -3).in_theorem_range
    assert ext_minors(3, 2, 2, 1, -3).in_theorem_range


@pytest.mark.parametrize("m, n", [(3, 2), (4, 2), (4, 3), (3, 1)])
def test_ext_minors_matches_brute_force(m, n):
    for d in range(1, n + 3):
        for j in range(0, n * (m - n) + 2):
            for r in range(-m * n - 4, 4):
                assert pairs(ext_minors(m, n, d, j, r)) == brute_ext_minors(m, n, d, j, r)


def test_ext_pfaffians_examples():
    assert fs(ext_pfaffians(2, 1, 2, -5)) == [(-2, -2, -2, -2, -2)]
    assert fs(ext_pfaffians(2, 1, 0, 2)) == [(2, 2, 0, 0, 0), (1, 1, 1, 1, 0)]
    for r in range(-12, 6):
        assert ext_pfaffians(2, 1, 3, r).summands == ()
    assert ext_pfaffians(2, 1, 2, -5).summands[0].g_weight is None


def test_ext_rejects_bad_input():
    with pytest.raises(ValueError):
        ext_minors(2, 2, 1, 0, 0)
    with pytest.raises(ValueError):
        ext_minors(3, 2, 0, 0, 0)
    with pytest.raises(ValueError):
        ext_pfaffians(0, 1, 0, 0)
    with pytest.raises(ValueError):
        ext_minors_bott(3, 2, 1, 1, -3)


# Bott route


def test_ext_minors_bott_examples():
    assert Counter(ext_minors_bott(3, 2, 2, 1, -3).summands) == Counter(ext_minors(3, 2, 2, 1, -3).summands)
    assert pairs(ext_minors_bott(3, 2, 2, 0, 1)) == [((1, 0, 0), (1, 0))]
    assert ext_minors_bott(3, 2, 2, 0, -100).summands == ()


def test_ext_pfaffians_bott_examples():
    assert Counter(ext_pfaffians_bott(2, 1, 2, -5).summands) == Counter(ext_pfaffians(2, 1, 2, -5).summands)
    # degree-3 piece of S = Sym(Λ²F) for 5x5 skew matrices
    got = ext_pfaffians_bott(2, 2, 0, 3)
    assert character_dim(got.summands) == comb(10 + 2, 3)
    assert sorted(fs(got)) == sorted([(3, 3, 0, 0, 0), (2, 2, 1, 1, 0)])
    assert ext_pfaffians_bott(2, 1, 0, -100).summands == ()
    # d = 0 is accepted by the Bott route
    assert ext_pfaffians_bott(2, 0, 0, 0).summands == (S((0, 0, 0, 0, 0)),)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([(3, 2), (4, 2), (4, 3), (5, 2)]),
    st.integers(0, 2),
    st.integers(0, 6),
    st.integers(-20, 5),
)
def test_route_equality_property(mn, dd, j, r):
    m, n = mn
    d = n + dd
    assert Counter(ext_minors(m, n, d, j, r).summands) == Counter(ext_minors_bott(m, n, d, j, r).summands)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(1, 4), st.integers(0, 7), st.integers(-25, 5))
def test_pfaffian_route_equality_property(n, d, j, r):
    assert Counter(ext_pfaffians(n, d, j, r).summands) == Counter(ext_pfaffians_bott(n, d, j, r).summands)


# quotient shift


def test_ext_quotient_shift():
    base = ext_minors(3, 2, 2, 1, -3)
    q = ext_quotient_shift(base)
    assert q.j == 2 and q.module == EXT_QUOTIENT and q.summands == base.summands
    zero = ext_quotient_shift(ext_minors(3, 2, 2, 0, 2))
    assert zero.j == 1 and zero.summands == ()
    empty = ext_quotient_shift(ext_minors(3, 2, 2, 2, 5))
    assert empty.summands == ()
    with pytest.raises(ValueError):
        ext_quotient_shift(q)


# local cohomology


def test_loccoh_minors_intro_example():
    dec = loccoh_minors(3, 2, 2, -3, WeightBox(-4))
    # the family (a,-1,b) ⊗ (a,-1+b), a >= -1 >= b, a+b-1 = -3, cut at b-1 >= -4
    want = [((a, -1, b), (a, -1 + b)) for b in range(-1, -4, -1) for a in [-2 - b]]
    assert sorted(pairs(dec)) == sorted(want)
    assert pairs(dec) == [((1, -1, -3), (1, -4)), ((0, -1, -2), (0, -3)), ((-1, -1, -1), (-1, -2))]
    assert not dec.exact and dec.floor_used == -4


def test_loccoh_minors_top_is_exact():
    for floor in (-20, -6, 0):
        dec = loccoh_minors(3, 2, 3, -6, WeightBox(floor))
        assert pairs(dec) == [((-2, -2, -2), (-3, -3))]
        assert dec.exact
    assert pairs(loccoh_minors(3, 2, 3, -6)) == [((-2, -2, -2), (-3, -3))]


def test_loccoh_vanishing_degrees():
    for r in range(-12, 4):
        assert loccoh_minors(4, 2, 2, r).summands == ()
        assert loccoh_minors(4, 2, 4, r).summands == ()
        assert loccoh_minors(3, 2, 1, r).summands == ()
        assert loccoh_pfaffians(2, 4, r).summands == ()
        assert loccoh_pfaffians(2, 1, r).summands == ()


def test_loccoh_requires_box_when_infinite():
    with pytest.raises(ValueError):
        loccoh_minors(3, 2, 2, -3)
    with pytest.raises(ValueError):
        loccoh_pfaffians(2, 3, -5)


def test_loccoh_pfaffians_examples():
    dec = loccoh_pfaffians(2, 3, -5, WeightBox(-4))
    assert fs(dec) == [(-1, -1, -2, -3, -3), (-2, -2, -2, -2, -2)]
    assert not dec.exact
    top = loccoh_pfaffians(2, 5, -10)
    assert fs(top) == [(-4, -4, -4, -4, -4)] and top.exact
    assert graded_dim(top) == 1


@pytest.mark.parametrize("m, n", [(3, 2), (4, 2), (4, 3)])
def test_loccoh_minors_matches_brute_force(m, n):
    floor = -6
    k = m - n
    for s in range(1, n + 1):
        for r in range(-m * n - 4, 3):
            dec = loccoh_minors(m, n, s * k + 1, r, WeightBox(floor))
            lo = dec.floor_used
            want = [(brute.lam_s_minors(lam, s, m, n), lam) for lam in brute.W_minors(r, s, m, n, lo, r - (n - 1) * lo)]
            assert pairs(dec) == want


def test_loccoh_union_of_ext_levels():
    # H^2 cut at floor -2-d equals Ext^1(I^d) for 3x2 minors
    for d in range(2, 6):
        for r in range(-12, 2):
            loc = loccoh_minors(3, 2, 2, r, WeightBox(-d - 1))
            assert Counter(loc.summands) == Counter(ext_minors_bott(3, 2, d, 1, r).summands)


# ideal-power characters


def test_ideal_power_character_examples():
    assert ideal_power_character_minors(3, 2, 1, 2) == [S((1, 1, 0), (1, 1))]
    got = ideal_power_character_minors(3, 2, 1, 3)
    assert got == [S((2, 1, 0), (2, 1))] and character_dim(got) == 16
    assert ideal_power_character_minors(3, 2, 2, 3) == []
    assert ideal_power_character_pfaffians(2, 1, 2) == [S((1, 1, 1, 1, 0))]
    assert ideal_power_character_pfaffians(2, 1, 3) == [S((2, 2, 1, 1, 0))]
    assert ideal_power_character_pfaffians(2, 2, 3) == []


@pytest.mark.parametrize("m, n", [(3, 2), (4, 3), (5, 2)])
def test_ideal_power_zero_is_whole_ring(m, n):
    for t in range(0, 6):
        assert character_dim(ideal_power_character_minors(m, n, 0, t)) == comb(m * n + t - 1, t)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pfaffian_ideal_power_zero_is_whole_ring(n):
    N = comb(2 * n + 1, 2)
    for t in range(0, 6):
        assert character_dim(ideal_power_character_pfaffians(n, 0, t)) == comb(N + t - 1, t)


def test_ideal_power_nested():
    for d in range(0, 4):
        for t in range(0, 10):
            assert set(ideal_power_character_minors(4, 2, d + 1, t)) <= set(ideal_power_character_minors(4, 2, d, t))
            assert set(ideal_power_character_pfaffians(2, d + 1, t)) <= set(ideal_power_character_pfaffians(2, d, t))


# dimensions


def test_graded_dim_examples():
    assert graded_dim(loccoh_minors(3, 2, 3, -6)) == 1
    assert graded_dim(loccoh_minors(3, 2, 3, -7)) == 6 == brute.weyl_dim((-2, -2, -3)) * brute.weyl_dim((-3, -4))
    assert graded_dim(loccoh_minors(3, 2, 1, -7)) == 0


def test_graded_dim_infinite_marker():
    dec = loccoh_minors(3, 2, 2, -3, WeightBox(-4))
    assert graded_dim(dec) == sum(brute.weyl_dim(f) * brute.weyl_dim(g) for f, g in pairs(dec))
    assert graded_dim(dec, untruncated=True) == INFINITE
    decs = [loccoh_minors(3, 2, 3, r) for r in (-6, -7)] + [dec]
    assert graded_dims(decs) == {-6: 1, -7: 6, -3: INFINITE}
