"""Cross-verification checks shared by ``loccoh verify`` and the acceptance tests.

Each check returns a :class:`CheckResult` with the number of cells examined
and a description of every failing cell.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .bott import bott
from .covariants import is_cm, witness_search
from .equivariant import (
    character_dim,
    ext_minors,
    ext_minors_bott,
    ext_pfaffians,
    ext_pfaffians_bott,
    ext_quotient_shift,
    graded_dim,
    ideal_power_character_minors,
    ideal_power_character_pfaffians,
    loccoh_minors,
    loccoh_pfaffians,
)
from .oracle import DEFAULT_PRIMES, stable_ideal_power_dim
from .schur import cauchy_sym, cauchy_wedge, schur_dim, sym_wedge2
from .weights import WeightBox, in_W_minors


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, message: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(message)


@dataclass(frozen=True)
class Grid:
    minors: tuple[tuple[int, int], ...]
    pfaffians: tuple[int, ...]
    pfaffian_ds: tuple[int, ...]
    oracle_minors: tuple[tuple[int, int, int, int], ...]  # (m, n, max d, max t)
    oracle_pfaffians: tuple[tuple[int, int, int], ...]  # (n, max d, max t)
    covariant_ns: tuple[int, ...]
    covariant_mu_max: int
    plethysm_r: int
    plethysm_N: int


GRIDS = {
    "small": Grid(
        minors=((3, 2), (4, 2), (4, 3)),
        pfaffians=(1, 2),
        pfaffian_ds=(1, 2, 3),
        oracle_minors=((3, 2, 3, 8),),
        oracle_pfaffians=((2, 2, 6),),
        covariant_ns=(2, 3),
        covariant_mu_max=6,
        plethysm_r=6,
        plethysm_N=6,
    ),
    "full": Grid(
        minors=((2, 1), (3, 1), (3, 2), (4, 2), (4, 3), (5, 2), (5, 3), (6, 4)),
        pfaffians=(1, 2, 3),
        pfaffian_ds=(1, 2, 3, 4),
        oracle_minors=((3, 2, 3, 9), (4, 2, 2, 6), (3, 1, 4, 8)),
        oracle_pfaffians=((2, 2, 7), (1, 3, 6)),
        covariant_ns=(2, 3, 4),
        covariant_mu_max=7,
        plethysm_r=8,
        plethysm_N=7,
    ),
}


def _multiset(dec) -> Counter:
    return Counter(dec.summands)


def _minor_cells(grid: Grid):
    for m, n in grid.minors:
        for d in range(n, n + 3):
            for j in range(0, n * (m - n) + 1):
                for r in range(-m * n - 5, 6):
                    yield m, n, d, j, r


def _pfaffian_cells(grid: Grid):
    for n in grid.pfaffians:
        for d in grid.pfaffian_ds:
            for j in range(0, 2 * n + 1):
                for r in range(-n * (2 * n + 1) - 5, 6):
                    yield n, d, j, r


def check_bott_example(grid: Grid | None = None) -> CheckResult:
    res = CheckResult("bott-worked-example")
    h = bott((3, 1), (4, 4, 2), 5)
    res.expect(
        h is not None and h.degree == 2 and h.weight == (3, 3, 3, 3, 2),
        f"bott((3,1),(4,4,2)) = {h}",
    )
    return res


def check_intro_examples(grid: Grid | None = None) -> CheckResult:
    """H^2 for 3×2 minors and H^3 for 5×5 Pfaffians against the explicit (a, b) families."""
    res = CheckResult("intro-examples")
    floor = -8
    for r in range(-10, -2):
        # minors: S_(a,-1,b)F ⊗ S_(a,-1+b)G, a >= -1 >= b, a+b-1 = r, b-1 >= floor
        expected = {
            ((a, -1, b), (a, -1 + b))
            for b in range(floor + 1, -1 + 1)
            for a in [r + 1 - b]
            if a >= -1
        }
        got = [(s.f_weight, s.g_weight) for s in loccoh_minors(3, 2, 2, r, WeightBox(floor)).summands]
        res.expect(sorted(got) == sorted(expected) and len(got) == len(set(got)),
                   f"minors r={r}: {got} != {sorted(expected)}")
        # Pfaffians: S_(a,a,-2,b,b)F, a >= -2 >= b, a+b-1 = r, b-1 >= floor
        expected_p = {
            (a, a, -2, b, b)
            for b in range(floor + 1, -2 + 1)
            for a in [r + 1 - b]
            if a >= -2
        }
        got_p = [s.f_weight for s in loccoh_pfaffians(2, 3, r, WeightBox(floor)).summands]
        res.expect(sorted(got_p) == sorted(expected_p) and len(got_p) == len(set(got_p)),
                   f"pfaffians r={r}: {got_p} != {sorted(expected_p)}")
    return res


def check_route_equality(grid: Grid) -> CheckResult:
    res = CheckResult("route-equality")
    for m, n, d, j, r in _minor_cells(grid):
        a, b = ext_minors(m, n, d, j, r), ext_minors_bott(m, n, d, j, r)
        res.expect(_multiset(a) == _multiset(b), f"minors {(m, n, d, j, r)}")
    for n, d, j, r in _pfaffian_cells(grid):
        a, b = ext_pfaffians(n, d, j, r), ext_pfaffians_bott(n, d, j, r)
        res.expect(_multiset(a) == _multiset(b), f"pfaffians {(n, d, j, r)}")
    return res


def check_bott_vanishing(grid: Grid) -> CheckResult:
    """Vanishing in the Bott route, which never tests j before running Bott."""
    res = CheckResult("bott-vanishing")
    for m, n, d, j, r in _minor_cells(grid):
        if j % (m - n):
            res.expect(not ext_minors_bott(m, n, d, j, r).summands, f"minors {(m, n, d, j, r)}")
    for n, d, j, r in _pfaffian_cells(grid):
        if j % 2:
            res.expect(not ext_pfaffians_bott(n, d, j, r).summands, f"pfaffians {(n, d, j, r)}")
    return res


def check_multiplicity_free(grid: Grid) -> CheckResult:
    res = CheckResult("multiplicity-free-and-degrees")
    for m, n, d, j, r in _minor_cells(grid):
        for dec in (ext_minors(m, n, d, j, r), ext_minors_bott(m, n, d, j, r)):
            ok = all(s.multiplicity == 1 for s in dec.summands)
            ok &= len(set(dec.summands)) == len(dec.summands)
            ok &= all(sum(s.f_weight) == r == sum(s.g_weight) for s in dec.summands)
            res.expect(ok, f"minors {(m, n, d, j, r)}")
    for n, d, j, r in _pfaffian_cells(grid):
        for dec in (ext_pfaffians(n, d, j, r), ext_pfaffians_bott(n, d, j, r)):
            ok = all(s.multiplicity == 1 for s in dec.summands)
            ok &= len(set(dec.summands)) == len(dec.summands)
            ok &= all(sum(s.f_weight) == 2 * r for s in dec.summands)
            res.expect(ok, f"pfaffians {(n, d, j, r)}")
    return res


def check_hom_identity(grid: Grid) -> CheckResult:
    res = CheckResult("hom-identity")
    for m, n in grid.minors:
        for d in range(n, n + 3):
            for r in range(0, 7):
                want = comb(m * n + r - 1, r)
                for dec in (ext_minors(m, n, d, 0, r), ext_minors_bott(m, n, d, 0, r)):
                    got = graded_dim(dec)
                    res.expect(got == want, f"minors {(m, n, d, r)}: {got} != {want}")
    for n in grid.pfaffians:
        N = comb(2 * n + 1, 2)
        for d in grid.pfaffian_ds:
            for r in range(0, 7):
                want = comb(N + r - 1, r)
                for dec in (ext_pfaffians(n, d, 0, r), ext_pfaffians_bott(n, d, 0, r)):
                    got = graded_dim(dec)
                    res.expect(got == want, f"pfaffians {(n, d, r)}: {got} != {want}")
    return res


def check_top_loccoh(grid: Grid) -> CheckResult:
    """Top local cohomology is det(W*) ⊗ S*, W the space of variables."""
    res = CheckResult("top-local-cohomology")
    for m, n in grid.minors:
        N = m * n
        j = n * (m - n) + 1
        for r in range(-N - 6, -N + 3):
            want = comb(-r - 1, N - 1) if r <= -N else 0
            dec = loccoh_minors(m, n, j, r)
            res.expect(dec.exact and graded_dim(dec, untruncated=True) == want,
                       f"minors {(m, n, r)}: {graded_dim(dec)} != {want}")
    for n in grid.pfaffians:
        N = n * (2 * n + 1)
        for r in range(-N - 6, -N + 3):
            want = comb(-r - 1, N - 1) if r <= -N else 0
            dec = loccoh_pfaffians(n, 2 * n + 1, r)
            res.expect(dec.exact and graded_dim(dec, untruncated=True) == want,
                       f"pfaffians {(n, r)}: {graded_dim(dec)} != {want}")
    if (3, 2) in grid.minors:
        res.expect(graded_dim(loccoh_minors(3, 2, 3, -6)) == 1, "spot value r=-6")
        res.expect(graded_dim(loccoh_minors(3, 2, 3, -7)) == 6, "spot value r=-7")
    return res


def check_oracle_agreement(grid: Grid, primes: tuple[int, int] = DEFAULT_PRIMES) -> CheckResult:
    """Finite-field ranks against the ideal-power characters, plus I^(d+1) ⊂ I^d."""
    res = CheckResult("oracle-agreement")
    for m, n, dmax, tmax in grid.oracle_minors:
        dims = {}
        for d in range(1, dmax + 1):
            for t in range(n * d, tmax + 1):
                dims[d, t] = got = stable_ideal_power_dim("minors", (m, n), d, t, primes)
                want = character_dim(ideal_power_character_minors(m, n, d, t))
                res.expect(got == want, f"minors {(m, n, d, t)}: oracle {got} != character {want}")
        for (d, t), dim in dims.items():
            if (d + 1, t) in dims:
                res.expect(dims[d + 1, t] <= dim, f"containment minors {(m, n, d, t)}")
    for n, dmax, tmax in grid.oracle_pfaffians:
        dims = {}
        for d in range(1, dmax + 1):
            for t in range(n * d, tmax + 1):
                dims[d, t] = got = stable_ideal_power_dim("pfaffians", (n,), d, t, primes)
                want = character_dim(ideal_power_character_pfaffians(n, d, t))
                res.expect(got == want, f"pfaffians {(n, d, t)}: oracle {got} != character {want}")
        for (d, t), dim in dims.items():
            if (d + 1, t) in dims:
                res.expect(dims[d + 1, t] <= dim, f"containment pfaffians {(n, d, t)}")
    return res


def check_nesting(grid: Grid) -> CheckResult:
    """Ext at d sits inside Ext at d+1, and loccoh cut at level d equals Ext^(j-1)(I^d) relabeled."""
    res = CheckResult("nesting-in-d")
    for m, n in grid.minors:
        k = m - n
        for d in range(n, n + 2):
            for j in range(0, n * k + 1):
                for r in range(-m * n - 5, 6):
                    for route in (ext_minors, ext_minors_bott):
                        lo, hi = _multiset(route(m, n, d, j, r)), _multiset(route(m, n, d + 1, j, r))
                        res.expect(not (lo - hi), f"minors {route.__name__} {(m, n, d, j, r)}")
        for d in range(n, n + 3):
            for s in range(1, n + 1):
                j = s * k + 1
                for r in range(-m * n - 5, 6):
                    ext = ext_quotient_shift(ext_minors_bott(m, n, d, j - 1, r))
                    loc = loccoh_minors(m, n, j, r, WeightBox(-d - k))
                    if s < n:
                        ok = _multiset(loc) == _multiset(ext) and ext.j == loc.j
                    else:
                        ok = not (_multiset(ext) - _multiset(loc))
                    res.expect(ok, f"loccoh minors {(m, n, d, j, r)}")
    for n in grid.pfaffians:
        ds = grid.pfaffian_ds
        for d in ds[:-1]:
            for j in range(0, 2 * n + 1):
                for r in range(-n * (2 * n + 1) - 5, 6):
                    for route in (ext_pfaffians, ext_pfaffians_bott):
                        lo, hi = _multiset(route(n, d, j, r)), _multiset(route(n, d + 1, j, r))
                        res.expect(not (lo - hi), f"pfaffians {route.__name__} {(n, d, j, r)}")
        for d in ds:
            for s in range(1, n + 1):
                j = 2 * s + 1
                for r in range(-n * (2 * n + 1) - 5, 6):
                    ext = ext_quotient_shift(ext_pfaffians_bott(n, d, j - 1, r))
                    loc = loccoh_pfaffians(n, j, r, WeightBox(-d - 2))
                    if s < n:
                        ok = _multiset(loc) == _multiset(ext) and ext.j == loc.j
                    else:
                        ok = not (_multiset(ext) - _multiset(loc))
                    res.expect(ok, f"loccoh pfaffians {(n, d, j, r)}")
    return res


def _partitions_with_last_zero(n: int, top: int):
    def rec(prefix, k, hi):
        if k == 0:
            yield tuple(prefix) + (0,)
            return
        for v in range(hi, -1, -1):
            yield from rec(prefix + [v], k - 1, v)

    yield from rec([], n - 1, top)


def check_covariants(grid: Grid) -> CheckResult:
    res = CheckResult("covariants")
    for n in grid.covariant_ns:
        for m in range(n + 1, n + 4):
            for mu in _partitions_with_last_zero(n, grid.covariant_mu_max):
                verdict = is_cm(mu, m, n)
                found = witness_search(mu, m, n, WeightBox(-(mu[0] + m + n)))
                res.expect(verdict.is_cm == (found is None), f"{(mu, m, n)}: {verdict} vs {found}")
                if not verdict.is_cm:
                    lam, s = verdict.witness, verdict.s
                    gap_ok = lam[n - s - 1] - lam[n - s] == mu[s - 1] - mu[s] >= m - n
                    res.expect(in_W_minors(lam, s, m, n) and gap_ok, f"witness {(mu, m, n, lam)}")
    if 2 in grid.covariant_ns:
        v = is_cm((3, 0), 5, 2)
        res.expect(not v.is_cm and v.s == 1 and v.witness == (-1, -4), f"(3,0), m=5: {v}")
        res.expect(is_cm((2, 0), 5, 2).is_cm, "(2,0), m=5 should be CM")
    return res


def check_plethysm(grid: Grid) -> CheckResult:
    res = CheckResult("plethysm-dimensions")
    for m, n in ((3, 2), (4, 3), (5, 3)):
        for r in range(0, grid.plethysm_r + 1):
            sym = sum(schur_dim(_pad(a, m)) * schur_dim(_pad(b, n)) for a, b in cauchy_sym(r, m, n))
            res.expect(sym == comb(m * n + r - 1, r), f"cauchy sym {(m, n, r)}")
            wedge = sum(schur_dim(_pad(a, m)) * schur_dim(_pad(b, n)) for a, b in cauchy_wedge(r, m, n))
            res.expect(wedge == comb(m * n, r), f"cauchy wedge {(m, n, r)}")
    for N in range(1, grid.plethysm_N + 1):
        for r in range(0, grid.plethysm_r + 1):
            got = sum(schur_dim(_pad(lam, N)) for lam in sym_wedge2(r, N))
            want = comb(comb(N, 2) + r - 1, r) if comb(N, 2) else int(r == 0)
            res.expect(got == want, f"sym wedge2 {(N, r)}: {got} != {want}")
    return res


def _pad(p, length):
    return tuple(p) + (0,) * (length - len(p))


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "bott-worked-example": check_bott_example,
    "intro-examples": check_intro_examples,
    "route-equality": check_route_equality,
    "bott-vanishing": check_bott_vanishing,
    "multiplicity-free-and-degrees": check_multiplicity_free,
    "hom-identity": check_hom_identity,
    "top-local-cohomology": check_top_loccoh,
    "oracle-agreement": check_oracle_agreement,
    "nesting-in-d": check_nesting,
    "covariants": check_covariants,
    "plethysm-dimensions": check_plethysm,
}


def run_check(name: str, grid_name: str = "small", primes: tuple[int, int] = DEFAULT_PRIMES) -> CheckResult:
    grid = GRIDS[grid_name]
    if name == "oracle-agreement":
        return check_oracle_agreement(grid, primes)
    return CHECKS[name](grid)
