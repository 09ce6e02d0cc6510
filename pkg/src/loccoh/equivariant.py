"""GL-equivariant decompositions of Ext^j_S(I^d, S) and H^j_I(S).

Two cases are covered:

* ``minors``: S = Sym(F ⊗ G), dim F = m > n = dim G, I the ideal of maximal
  minors. Summands are S_{λ(s)}F ⊗ S_λG with |λ| = r.
* ``pfaffians``: S = Sym(Λ²F), dim F = 2n+1, I the ideal of 2n×2n Pfaffians.
  Summands are S_{λ(s)}F with |λ| = 2r.

Ext is computed twice: from the closed-form weight sets, and independently
by running Bott's algorithm on the Grassmannian and undoing the determinant
twist. The two routes must agree wherever both are defined.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable

from .bott import bott
from .schur import schur_dim, sym_wedge2
from .weights import (
    Weight,
    WeightBox,
    dual_weight,
    enumerate_partitions,
    enumerate_W_minors,
    enumerate_W_pfaffians,
    lambda_s_minors,
    lambda_s_pfaffians,
    natural_floor_minors,
    natural_floor_pfaffians,
    pad,
    shift,
)

MINORS = "minors"
PFAFFIANS = "pfaffians"

EXT = "ext"
EXT_QUOTIENT = "ext_quotient"
LOCCOH = "loccoh"

INFINITE = "infinite"


@dataclass(frozen=True)
class IrreducibleSummand:
    f_weight: Weight
    g_weight: Weight | None = None
    multiplicity: int = 1

    def dim(self) -> int:
        d = schur_dim(self.f_weight)
        if self.g_weight is not None:
            d *= schur_dim(self.g_weight)
        return d * self.multiplicity


@dataclass(frozen=True)
class GradedDecomposition:
    """Degree ``degree`` piece of an Ext or local cohomology module.

    ``m`` is None in the Pfaffian case. ``exact`` is False when the summand
    list is a floor truncation of an infinite set. ``in_theorem_range`` is
    False for closed-form minors Ext with d < n, where the closed form is
    evaluated outside the range it is proven for.
    """

    case: str
    m: int | None
    n: int
    module: str
    j: int
    d: int | None
    degree: int
    summands: tuple[IrreducibleSummand, ...]
    exact: bool = True
    floor_used: int | None = None
    in_theorem_range: bool = True


def _check_minors(m: int, n: int) -> None:
    if not (isinstance(m, int) and isinstance(n, int)) or n < 1 or m <= n:
        raise ValueError(f"need integers m > n >= 1, got m={m}, n={n}")


def _check_pfaffians(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"need an integer n >= 1, got n={n}")


def _minors_ext_index(m: int, n: int, j: int) -> int | None:
    k = m - n
    if j < 0 or j % k or j > n * k:
        return None
    return j // k


def _pfaffians_ext_index(n: int, j: int) -> int | None:
    if j < 0 or j % 2 or j > 2 * n:
        return None
    return j // 2


def ext_minors(m: int, n: int, d: int, j: int, r: int) -> GradedDecomposition:
    """Closed form of Ext^j_S(I^d, S)_r for maximal minors.

    Nonzero only for j = s(m-n), 0 <= s <= n; the summands run over
    λ ∈ W(r; s) with λ_n >= -d-(m-n).
    """
    _check_minors(m, n)
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    floor = -d - (m - n)
    s = _minors_ext_index(m, n, j)
    summands: tuple[IrreducibleSummand, ...] = ()
    if s is not None:
        summands = tuple(
            IrreducibleSummand(lambda_s_minors(lam, s, m, n), lam)
            for lam in enumerate_W_minors(r, s, m, n, WeightBox(floor))
        )
    return GradedDecomposition(
        MINORS, m, n, EXT, j, d, r, summands,
        floor_used=floor, in_theorem_range=d >= n,
    )


def ext_minors_bott(m: int, n: int, d: int, j: int, r: int) -> GradedDecomposition:
    """Ext^j_S(I^d, S)_r for maximal minors via Bott's algorithm on G(n, F).

    Sym^t(Q*⊗G*) ⊗ (det R*)^(d-n) is split by the Cauchy formula into
    S_μQ* ⊗ S_μG*; each piece contributes when its cohomology sits in degree
    n(m-n) - j. No vanishing pattern is imposed by hand.
    """
    _check_minors(m, n)
    if d < n:
        raise ValueError(f"the Bott route needs d >= n, got d={d}, n={n}")
    k = m - n
    t = r + n * (d + k)
    beta = (n - d,) * k
    target = n * k - j
    summands = []
    for mu in enumerate_partitions(t, n):
        mu = pad(mu, n)
        h = bott(dual_weight(mu), beta, m)
        if h is None or h.degree != target:
            continue
        # dualize, then untwist by D_d = det(F)^d ⊗ det(G)^(d+m-n)
        summands.append(
            IrreducibleSummand(shift(dual_weight(h.weight), -d), shift(mu, -(d + k)))
        )
    return GradedDecomposition(MINORS, m, n, EXT, j, d, r, tuple(summands))


def ext_pfaffians(n: int, d: int, j: int, r: int) -> GradedDecomposition:
    """Closed form of Ext^j_S(I^d, S)_r for sub-maximal Pfaffians."""
    _check_pfaffians(n)
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    floor = -d - 2
    s = _pfaffians_ext_index(n, j)
    summands: tuple[IrreducibleSummand, ...] = ()
    if s is not None:
        summands = tuple(
            IrreducibleSummand(lambda_s_pfaffians(lam, s, n))
            for lam in enumerate_W_pfaffians(r, s, n, WeightBox(floor))
        )
    return GradedDecomposition(PFAFFIANS, None, n, EXT, j, d, r, summands, floor_used=floor)


def ext_pfaffians_bott(n: int, d: int, j: int, r: int) -> GradedDecomposition:
    """Ext^j_S(I^d, S)_r for sub-maximal Pfaffians via Bott on G(2n, F)."""
    _check_pfaffians(n)
    if d < 0:
        raise ValueError(f"the Bott route needs d >= 0, got {d}")
    t = r + n * (d + 2)
    beta = (2 * n - 1 - d,)
    target = 2 * n - j
    summands = []
    for mu in sym_wedge2(t, 2 * n) if t >= 0 else []:
        h = bott(dual_weight(pad(mu, 2 * n)), beta, 2 * n + 1)
        if h is None or h.degree != target:
            continue
        # untwist by D_d = det(F)^(d+1)
        summands.append(IrreducibleSummand(shift(dual_weight(h.weight), -(d + 1))))
    return GradedDecomposition(PFAFFIANS, None, n, EXT, j, d, r, tuple(summands))


def ext_quotient_shift(base: GradedDecomposition) -> GradedDecomposition:
    """Relabel Ext^j(I^d, S) as Ext^(j+1)(S/I^d, S).

    For j = 0 the result is the (zero) Ext^1(S/I^d, S): Hom(I^d, S) = S is
    hit entirely by Hom(S, S).
    """
    if base.module != EXT:
        raise ValueError(f"expected an Ext of I^d, got module {base.module!r}")
    if base.j == 0:
        return replace(base, module=EXT_QUOTIENT, j=1, summands=())
    return replace(base, module=EXT_QUOTIENT, j=base.j + 1)


def loccoh_minors(
    m: int, n: int, j: int, r: int, box: WeightBox | None = None
) -> GradedDecomposition:
    """H^j_I(S)_r for maximal minors.

    Nonzero only for j = s(m-n)+1 with 1 <= s <= n. For s < n the piece is
    infinite-dimensional: ``box`` is required, and the result is the
    truncation at ``box.floor`` with ``exact=False``. For s = n the set is
    finite and the box is ignored.
    """
    _check_minors(m, n)
    k = m - n
    if j < 1 or (j - 1) % k or not 1 <= (j - 1) // k <= n:
        return GradedDecomposition(MINORS, m, n, LOCCOH, j, None, r, ())
    s = (j - 1) // k
    natural = natural_floor_minors(r, s, m, n)
    if natural is not None:
        use, exact = WeightBox(natural), True
    elif box is None:
        raise ValueError(f"H^{j} is infinite in degree {r}; a WeightBox is required")
    else:
        use, exact = box, False
    summands = tuple(
        IrreducibleSummand(lambda_s_minors(lam, s, m, n), lam)
        for lam in enumerate_W_minors(r, s, m, n, use)
    )
    return GradedDecomposition(MINORS, m, n, LOCCOH, j, None, r, summands, exact, use.floor)


def loccoh_pfaffians(
    n: int, j: int, r: int, box: WeightBox | None = None
) -> GradedDecomposition:
    """H^j_I(S)_r for sub-maximal Pfaffians; nonzero only for j = 2s+1, 1 <= s <= n."""
    _check_pfaffians(n)
    if j < 3 or j % 2 == 0 or (j - 1) // 2 > n:
        return GradedDecomposition(PFAFFIANS, None, n, LOCCOH, j, None, r, ())
    s = (j - 1) // 2
    natural = natural_floor_pfaffians(r, s, n)
    if natural is not None:
        use, exact = WeightBox(natural), True
    elif box is None:
        raise ValueError(f"H^{j} is infinite in degree {r}; a WeightBox is required")
    else:
        use, exact = box, False
    summands = tuple(
        IrreducibleSummand(lambda_s_pfaffians(lam, s, n))
        for lam in enumerate_W_pfaffians(r, s, n, use)
    )
    return GradedDecomposition(PFAFFIANS, None, n, LOCCOH, j, None, r, summands, exact, use.floor)


def ideal_power_character_minors(m: int, n: int, d: int, t: int) -> list[IrreducibleSummand]:
    """Degree-t character of I^d: S_{(μ+d^n, 0)}F ⊗ S_{μ+d^n}G over μ ⊢ t-nd."""
    _check_minors(m, n)
    if d < 0 or t < 0:
        raise ValueError(f"need d, t >= 0, got d={d}, t={t}")
    out = []
    for mu in enumerate_partitions(t - n * d, n):
        w = shift(pad(mu, n), d)
        out.append(IrreducibleSummand(pad(w, m), w))
    return out


def ideal_power_character_pfaffians(n: int, d: int, t: int) -> list[IrreducibleSummand]:
    """Degree-t character of I^d: S_{(μ+d^2n, 0)}F over μ in Sym^(t-nd)(Λ²)."""
    _check_pfaffians(n)
    if d < 0 or t < 0:
        raise ValueError(f"need d, t >= 0, got d={d}, t={t}")
    e = t - n * d
    if e < 0:
        return []
    return [
        IrreducibleSummand(shift(pad(mu, 2 * n), d) + (0,)) for mu in sym_wedge2(e, 2 * n)
    ]


def character_dim(summands: Iterable[IrreducibleSummand]) -> int:
    return sum(s.dim() for s in summands)


def graded_dim(dec: GradedDecomposition, untruncated: bool = False) -> int | str:
    """Total dimension of the summands.

    With ``untruncated=True`` an inexact decomposition reports ``INFINITE``
    instead of the dimension of its truncation.
    """
    if untruncated and not dec.exact:
        return INFINITE
    return character_dim(dec.summands)


def graded_dims(decs: Iterable[GradedDecomposition], untruncated: bool = True) -> dict[int, int | str]:
    return {dec.degree: graded_dim(dec, untruncated) for dec in decs}
