"""Integer weights of GL_N, partitions, and the weight sets indexing the
Ext and local cohomology decompositions.

Weights are plain tuples of ints, most significant entry first. A weight
keeps its declared length; partitions are stored without trailing zeros.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

Weight = tuple[int, ...]
Partition = tuple[int, ...]


@dataclass(frozen=True)
class WeightBox:
    """Truncation box for infinite weight sets.

    ``floor`` bounds the last entry from below, ``ceiling`` (optional) bounds
    the first entry from above.
    """

    floor: int
    ceiling: int | None = None

    def __post_init__(self) -> None:
        if self.ceiling is not None and self.floor > self.ceiling:
            raise ValueError(f"floor {self.floor} exceeds ceiling {self.ceiling}")


def is_dominant(w: Sequence[int]) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def _check_dominant(w: Sequence[int], length: int | None = None) -> Weight:
    w = tuple(int(x) for x in w)
    if length is not None and len(w) != length:
        raise ValueError(f"weight {w} has length {len(w)}, expected {length}")
    if not is_dominant(w):
        raise ValueError(f"weight {w} is not dominant")
    return w


def normalize_partition(p: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in p)
    if not is_dominant(p) or (p and p[-1] < 0):
        raise ValueError(f"{p} is not a partition")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def pad(p: Sequence[int], length: int) -> Weight:
    """Pad a partition with zeros to ``length`` entries."""
    if len(p) > length:
        raise ValueError(f"{tuple(p)} has more than {length} parts")
    return tuple(p) + (0,) * (length - len(p))


def conjugate(p: Sequence[int]) -> Partition:
    p = normalize_partition(p)
    if not p:
        return ()
    return tuple(sum(1 for part in p if part >= i) for i in range(1, p[0] + 1))


def dual_weight(w: Sequence[int]) -> Weight:
    """Weight of the dual representation: (-w_N, ..., -w_1)."""
    return tuple(-x for x in reversed(tuple(w)))


def shift(w: Sequence[int], a: int) -> Weight:
    """Add ``a`` to every entry (tensoring with det^a)."""
    return tuple(x + a for x in w)


def lambda_s_minors(lam: Sequence[int], s: int, m: int, n: int) -> Weight:
    """Interleave ``lam`` with a block of m-n entries equal to -s.

    The last s entries of ``lam`` are raised by m-n. The result has length m
    and need not be dominant.
    """
    lam = tuple(lam)
    if len(lam) != n:
        raise ValueError(f"expected a weight of length {n}, got {lam}")
    if not 0 <= s <= n:
        raise ValueError(f"s={s} outside [0, {n}]")
    if m <= n:
        raise ValueError(f"need m > n, got m={m}, n={n}")
    k = m - n
    return lam[: n - s] + (-s,) * k + tuple(x + k for x in lam[n - s :])


def lambda_s_pfaffians(lam: Sequence[int], s: int, n: int) -> Weight:
    lam = tuple(lam)
    if len(lam) != 2 * n:
        raise ValueError(f"expected a weight of length {2 * n}, got {lam}")
    if not 0 <= s <= n:
        raise ValueError(f"s={s} outside [0, {n}]")
    cut = 2 * n - 2 * s
    return lam[:cut] + (-2 * s,) + tuple(x + 1 for x in lam[cut:])


def is_paired(lam: Sequence[int]) -> bool:
    if len(lam) % 2:
        raise ValueError(f"pairing needs even length, got {tuple(lam)}")
    return all(lam[i] == lam[i + 1] for i in range(0, len(lam), 2))


def _dominant_sequences(
    total: int, length: int, floor: int, ceiling: int | None
) -> Iterator[Weight]:
    """Dominant integer sequences with given sum and entries in [floor, ceiling],
    in lexicographically decreasing order."""
    if length == 0:
        if total == 0:
            yield ()
        return

    def rec(prefix: list[int], rem: int, k: int, top: int | None) -> Iterator[Weight]:
        if k == 1:
            if rem >= floor and (top is None or rem <= top):
                yield tuple(prefix) + (rem,)
            return
        # rem - v is spread over k-1 entries in [floor, v]
        hi = rem - (k - 1) * floor
        if top is not None:
            hi = min(hi, top)
        lo = -(-rem // k)  # ceil(rem / k): the first entry is the largest
        for v in range(hi, max(lo, floor) - 1, -1):
            prefix.append(v)
            yield from rec(prefix, rem - v, k - 1, v)
            prefix.pop()

    yield from rec([], total, length, ceiling)


def enumerate_partitions(r: int, max_parts: int) -> list[Partition]:
    """Partitions of ``r`` with at most ``max_parts`` parts, lexicographically decreasing."""
    if r < 0 or max_parts < 0:
        return []
    if r == 0:
        return [()]
    if max_parts == 0:
        return []
    return [
        normalize_partition(w) for w in _dominant_sequences(r, max_parts, 0, None)
    ]


def _minors_shortcut(lam: Weight, s: int, m: int, n: int) -> bool:
    # dominance of lambda(s) read off from the two entries adjacent to the block
    if s == 0:
        return lam[n - 1] >= 0
    if s == n:
        return lam[0] <= -m
    return lam[n - s - 1] >= -s and lam[n - s] <= -s - (m - n)


def _pfaffians_shortcut(lam: Weight, s: int, n: int) -> bool:
    if s == 0:
        return lam[2 * n - 1] >= 0
    if s == n:
        return lam[0] <= -2 * n - 1
    cut = 2 * n - 2 * s
    return lam[cut - 1] >= -2 * s and lam[cut] + 1 <= -2 * s


def in_W_minors(lam: Sequence[int], s: int, m: int, n: int) -> bool:
    """Membership of a dominant ``lam`` in W(|lam|; s), minors case."""
    lam = tuple(lam)
    if not is_dominant(lam):
        return False
    full = is_dominant(lambda_s_minors(lam, s, m, n))
    if full != _minors_shortcut(lam, s, m, n):
        raise AssertionError(f"dominance tests disagree on lambda={lam}, s={s}")
    return full


def in_W_pfaffians(lam: Sequence[int], s: int, n: int) -> bool:
    lam = tuple(lam)
    if not (is_dominant(lam) and is_paired(lam)):
        return False
    full = is_dominant(lambda_s_pfaffians(lam, s, n))
    if full != _pfaffians_shortcut(lam, s, n):
        raise AssertionError(f"dominance tests disagree on lambda={lam}, s={s}")
    return full


def natural_floor_minors(r: int, s: int, m: int, n: int) -> int | None:
    """Lower bound on the last entry implied by W(r; s) itself, or None when
    W(r; s) is infinite (1 <= s <= n-1)."""
    if s == 0:
        return 0
    if s == n:
        # lam_1 <= -m forces every other entry <= -m, so lam_n >= r + (n-1)m
        return r + (n - 1) * m
    return None


def natural_floor_pfaffians(r: int, s: int, n: int) -> int | None:
    """Same as :func:`natural_floor_minors` for the paired weights of length 2n
    and total 2r."""
    if s == 0:
        return 0
    if s == n:
        # pairs (a_i, a_i) with a_1 <= -2n-1 and sum a_i = r
        return r + (n - 1) * (2 * n + 1)
    return None


def enumerate_W_minors(r: int, s: int, m: int, n: int, box: WeightBox) -> list[Weight]:
    """All lam in W(r; s) (minors case) with lam_n >= box.floor.

    Lexicographically decreasing. Empty when the box excludes everything.
    """
    if m <= n or n < 1:
        raise ValueError(f"need m > n >= 1, got m={m}, n={n}")
    if not 0 <= s <= n:
        raise ValueError(f"s={s} outside [0, {n}]")
    return [
        lam
        for lam in _dominant_sequences(r, n, box.floor, box.ceiling)
        if in_W_minors(lam, s, m, n)
    ]


def enumerate_W_pfaffians(r: int, s: int, n: int, box: WeightBox) -> list[Weight]:
    """All paired lam of length 2n in W(r; s) with |lam| = 2r and lam_2n >= box.floor."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 0 <= s <= n:
        raise ValueError(f"s={s} outside [0, {n}]")
    out = []
    # a paired weight is a doubled dominant weight of length n and total r
    for half in _dominant_sequences(r, n, box.floor, box.ceiling):
        lam = tuple(x for a in half for x in (a, a))
        if in_W_pfaffians(lam, s, n):
            out.append(lam)
    return out


def is_exact_truncation(natural_floor: int | None, floor: int) -> bool:
    """Whether a floor cut loses nothing from a weight set with the given natural floor."""
    return natural_floor is not None and floor <= natural_floor
