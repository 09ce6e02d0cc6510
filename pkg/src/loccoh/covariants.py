"""Cohen-Macaulay criterion for modules of covariants (S ⊗ S_μG)^SL(G),
S = Sym(G^{⊕m}).

The module fails to be Cohen-Macaulay exactly when some λ in W(r; s),
1 <= s <= n-1, is complementary to μ: μ_1 + λ_n = μ_2 + λ_{n-1} = ... = μ_n + λ_1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .weights import Weight, WeightBox, enumerate_W_minors, in_W_minors, is_dominant


@dataclass(frozen=True)
class CMVerdict:
    is_cm: bool
    s: int | None = None
    witness: Weight | None = None


def _check_query(mu: Sequence[int], m: int, n: int) -> tuple[int, ...]:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if m <= n:
        raise ValueError(
            f"m={m} <= n={n}: excluded, every module of covariants is Cohen-Macaulay there"
        )
    mu = tuple(int(x) for x in mu)
    mu = mu + (0,) * (n - len(mu))
    if len(mu) != n or not is_dominant(mu) or mu[-1] != 0:
        raise ValueError(f"mu must be a partition with {n} entries and mu_n = 0, got {mu}")
    return mu


def is_complementary(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """μ_i + λ_{n+1-i} is constant in i."""
    n = len(mu)
    return len({mu[i] + lam[n - 1 - i] for i in range(n)}) <= 1


def constructive_witness(mu: Sequence[int], s: int) -> Weight:
    """λ with λ_{n-s} = -s and λ_i = λ_{n-s} + μ_{s+1} - μ_{n-i+1} (1-based)."""
    n = len(mu)
    base = -s
    return tuple(base + mu[s] - mu[n - i] for i in range(1, n + 1))


def is_cm(mu: Sequence[int], m: int, n: int) -> CMVerdict:
    """Cohen-Macaulay iff every gap μ_s - μ_{s+1} (1 <= s <= n-1) is below m - n.

    On failure the witness is built from the first violating s and checked
    for membership in W(|λ|; s) and complementarity before being returned.
    """
    mu = _check_query(mu, m, n)
    for s in range(1, n):
        if mu[s - 1] - mu[s] >= m - n:
            lam = constructive_witness(mu, s)
            if not (in_W_minors(lam, s, m, n) and is_complementary(lam, mu)):
                raise AssertionError(f"constructed witness {lam} is invalid for mu={mu}, s={s}")
            if lam not in enumerate_W_minors(sum(lam), s, m, n, WeightBox(lam[-1])):
                raise AssertionError(f"witness {lam} missing from the enumerated weight set")
            return CMVerdict(False, s, lam)
    return CMVerdict(True)


def witness_search(
    mu: Sequence[int], m: int, n: int, box: WeightBox
) -> tuple[int, Weight] | None:
    """Exhaustive search for a complementary λ ∈ W(r; s), 1 <= s <= n-1, with λ_n >= box.floor.

    Complementarity gives λ_1 = λ_n + μ_1 and membership gives
    λ_n <= -s-(m-n), so λ_1 <= μ_1 - s - (m-n) bounds every total r.
    """
    mu = _check_query(mu, m, n)
    for s in range(1, n):
        ceiling = mu[0] - s - (m - n)
        if box.ceiling is not None:
            ceiling = min(ceiling, box.ceiling)
        if ceiling < box.floor:
            continue
        sub = WeightBox(box.floor, ceiling)
        for r in range(n * ceiling, n * box.floor - 1, -1):
            for lam in enumerate_W_minors(r, s, m, n, sub):
                if is_complementary(lam, mu):
                    return s, lam
    return None
