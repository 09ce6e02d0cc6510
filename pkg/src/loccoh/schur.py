"""Dimensions of irreducible GL_N representations and the Cauchy / Sym(Λ²)
decompositions."""
from __future__ import annotations

from typing import Sequence

from .weights import Partition, _check_dominant, conjugate, enumerate_partitions


def schur_dim(w: Sequence[int], N: int | None = None) -> int:
    """Dimension of S_w C^N by the Weyl product over pairs i < j.

    Numerator and denominator are accumulated as exact integers; the quotient
    is checked to be exact.
    """
    if N is None:
        N = len(w)
    w = _check_dominant(w, N)
    num = 1
    den = 1
    for i in range(N):
        for j in range(i + 1, N):
            num *= w[i] - w[j] + j - i
            den *= j - i
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"Weyl product for {w} is not an integer")
    return q


def cauchy_sym(r: int, m: int, n: int) -> list[tuple[Partition, Partition]]:
    """Summands S_λF ⊗ S_λG of Sym^r(F ⊗ G) with dim F = m, dim G = n."""
    return [(lam, lam) for lam in enumerate_partitions(r, min(m, n))]


def cauchy_wedge(r: int, m: int, n: int) -> list[tuple[Partition, Partition]]:
    """Summands S_λF ⊗ S_λ'G of Λ^r(F ⊗ G)."""
    return [
        (lam, conjugate(lam))
        for lam in enumerate_partitions(r, m)
        if not lam or lam[0] <= n
    ]


def sym_wedge2(r: int, N: int) -> list[Partition]:
    """Partitions λ ⊢ 2r with all columns of even length and at most N rows,
    i.e. the summands of Sym^r(Λ² C^N)."""
    return [
        lam
        for lam in enumerate_partitions(2 * r, N)
        if all(c % 2 == 0 for c in conjugate(lam))
    ]
