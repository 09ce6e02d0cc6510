"""Bott's algorithm on the Grassmannian of k-dimensional quotients of C^N.

For dominant α (length k, on the quotient bundle Q) and β (length N-k, on the
sub-bundle R), the cohomology of S_αQ ⊗ S_βR is concentrated in at most one
degree l, where it is an irreducible S_γ̃ C^N.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .weights import Weight, _check_dominant


@dataclass(frozen=True)
class BottCohomology:
    """Nonvanishing outcome: H^degree = S_weight C^N, all other H^t vanish."""

    degree: int
    weight: Weight


def staircase(N: int) -> Weight:
    return tuple(range(N - 1, -1, -1))


def _sorting_inversions(seq: Sequence[int]) -> int:
    # inversions of the permutation that sorts seq decreasingly (entries distinct)
    order = sorted(range(len(seq)), key=lambda i: -seq[i])
    return sum(
        1
        for a in range(len(order))
        for b in range(a + 1, len(order))
        if order[a] > order[b]
    )


def bott(alpha: Sequence[int], beta: Sequence[int], N: int | None = None) -> BottCohomology | None:
    """Cohomology of S_αQ ⊗ S_βR; ``None`` when it vanishes in every degree.

    >>> bott((3, 1), (4, 4, 2))
    BottCohomology(degree=2, weight=(3, 3, 3, 3, 2))
    """
    alpha = _check_dominant(alpha)
    beta = _check_dominant(beta)
    if N is None:
        N = len(alpha) + len(beta)
    elif len(alpha) + len(beta) != N:
        raise ValueError(f"len(alpha) + len(beta) = {len(alpha) + len(beta)} != N = {N}")

    gamma = alpha + beta
    delta = staircase(N)
    shifted = tuple(g + d for g, d in zip(gamma, delta))
    if len(set(shifted)) < N:
        return None

    degree = sum(
        1 for x in range(N) for y in range(x + 1, N) if gamma[x] - x < gamma[y] - y
    )
    if degree != _sorting_inversions(shifted):
        raise AssertionError(f"inversion count mismatch for gamma={gamma}")
    weight = tuple(a - d for a, d in zip(sorted(shifted, reverse=True), delta))
    return BottCohomology(degree, weight)
