"""Brute-force graded dimensions of I^d over a prime field.

The generators (maximal minors, resp. sub-maximal Pfaffians) are expanded
explicitly, multiplied out, and the dimension of (I^d)_t is the rank of the
coefficient matrix of {products of d generators} × {monomials of degree
t - nd}. Every generator is homogeneous for the torus of GL(F) × GL(G), so
the matrix is block diagonal by torus weight and each block is reduced
separately.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator

import numpy as np

Exponent = tuple[int, ...]

DEFAULT_PRIMES = (32003, 65521)
MAX_PRIME = 2**31  # keeps p^2 inside int64 during elimination


class OracleLimitError(RuntimeError):
    """The requested cell exceeds the configured size limits."""


class BadPrimeError(RuntimeError):
    """Two primes gave different ranks; one of them is bad for this cell."""


def check_prime(p: int) -> int:
    from sympy import isprime

    if not isprime(p) or p >= MAX_PRIME:
        raise ValueError(f"{p} is not a prime below 2^31")
    return p


class SparsePolynomial:
    """Polynomial over F_p stored as {exponent vector: nonzero coefficient}."""

    __slots__ = ("terms", "prime", "nvars")

    def __init__(self, terms: dict[Exponent, int], prime: int, nvars: int):
        self.prime = prime
        self.nvars = nvars
        self.terms = {e: c % prime for e, c in terms.items() if c % prime}
        if any(len(e) != nvars for e in self.terms):
            raise ValueError("exponent vectors of unequal length")

    @classmethod
    def variable(cls, i: int, nvars: int, prime: int) -> SparsePolynomial:
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, prime, nvars)

    @classmethod
    def constant(cls, c: int, nvars: int, prime: int) -> SparsePolynomial:
        return cls({(0,) * nvars: c}, prime, nvars)

    def __add__(self, other: SparsePolynomial) -> SparsePolynomial:
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return SparsePolynomial(terms, self.prime, self.nvars)

    def __neg__(self) -> SparsePolynomial:
        return SparsePolynomial({e: -c for e, c in self.terms.items()}, self.prime, self.nvars)

    def __sub__(self, other: SparsePolynomial) -> SparsePolynomial:
        return self + (-other)

    def __mul__(self, other: SparsePolynomial | int) -> SparsePolynomial:
        if isinstance(other, int):
            return SparsePolynomial({e: c * other for e, c in self.terms.items()}, self.prime, self.nvars)
        terms: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                terms[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return SparsePolynomial(terms, self.prime, self.nvars)

    __rmul__ = __mul__

    def times_monomial(self, mono: Exponent) -> dict[Exponent, int]:
        return {tuple(a + b for a, b in zip(e, mono)): c for e, c in self.terms.items()}

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(e) == degree for e in self.terms)

    def leading(self) -> tuple[Exponent, int]:
        """Lexicographically first term."""
        e = max(self.terms)
        return e, self.terms[e]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SparsePolynomial)
            and self.prime == other.prime
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"SparsePolynomial({len(self.terms)} terms mod {self.prime})"


@dataclass(frozen=True)
class GeneratorSet:
    """Generators of a determinantal or Pfaffian ideal.

    ``var_weights[i]`` is the torus weight of variable i; ``degree`` is the
    common degree n of all generators.
    """

    case: str
    m: int | None
    n: int
    prime: int
    gens: tuple[SparsePolynomial, ...]
    var_weights: tuple[tuple[int, ...], ...]
    var_names: tuple[str, ...]

    @property
    def degree(self) -> int:
        return self.n

    @property
    def nvars(self) -> int:
        return len(self.var_names)


def _determinant(matrix: list[list[SparsePolynomial]]) -> SparsePolynomial:
    # Laplace expansion along the first row
    if len(matrix) == 1:
        return matrix[0][0]
    total = None
    for col, entry in enumerate(matrix[0]):
        minor = [row[:col] + row[col + 1 :] for row in matrix[1:]]
        term = entry * _determinant(minor)
        if col % 2:
            term = -term
        total = term if total is None else total + term
    return total


def _pfaffian(indices: tuple[int, ...], entry) -> SparsePolynomial:
    # expansion along the first row: Pf(A) = sum_j (-1)^j a_{0j} Pf(A without 0, j)
    if len(indices) == 2:
        return entry(indices[0], indices[1])
    first, rest = indices[0], indices[1:]
    total = None
    for pos, other in enumerate(rest):
        sub = rest[:pos] + rest[pos + 1 :]
        term = entry(first, other) * _pfaffian(sub, entry)
        if pos % 2:
            term = -term
        total = term if total is None else total + term
    return total


def _normalize_sign(poly: SparsePolynomial) -> SparsePolynomial:
    _, c = poly.leading()
    return poly * pow(c, -1, poly.prime)


def maximal_minors(m: int, n: int, p: int = DEFAULT_PRIMES[0]) -> GeneratorSet:
    """The C(m, n) maximal minors of the generic m×n matrix (x_ij)."""
    if not (m > n >= 1):
        raise ValueError(f"need m > n >= 1, got m={m}, n={n}")
    check_prime(p)
    nv = m * n
    x = [[SparsePolynomial.variable(i * n + j, nv, p) for j in range(n)] for i in range(m)]
    gens = tuple(_determinant([x[i] for i in rows]) for rows in combinations(range(m), n))
    weights = tuple(
        tuple(int(a == i) for a in range(m)) + tuple(int(b == j) for b in range(n))
        for i in range(m)
        for j in range(n)
    )
    names = tuple(f"x{i + 1}{j + 1}" for i in range(m) for j in range(n))
    return GeneratorSet("minors", m, n, p, gens, weights, names)


def submaximal_pfaffians(n: int, p: int = DEFAULT_PRIMES[0]) -> GeneratorSet:
    """The 2n+1 Pfaffians of the generic (2n+1)×(2n+1) skew matrix with row and
    column i deleted, each scaled so its lexicographically first monomial has
    coefficient 1."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    check_prime(p)
    size = 2 * n + 1
    pairs = list(combinations(range(size), 2))
    index = {pair: k for k, pair in enumerate(pairs)}
    nv = len(pairs)
    variables = [SparsePolynomial.variable(k, nv, p) for k in range(nv)]

    def entry(i: int, j: int) -> SparsePolynomial:
        return variables[index[(i, j)]] if i < j else -variables[index[(j, i)]]

    gens = tuple(
        _normalize_sign(_pfaffian(tuple(k for k in range(size) if k != i), entry))
        for i in range(size)
    )
    weights = tuple(tuple(int(a in pair) for a in range(size)) for pair in pairs)
    names = tuple(f"y{i + 1}{j + 1}" for i, j in pairs)
    return GeneratorSet("pfaffians", None, n, p, gens, weights, names)


def monomials(nvars: int, degree: int) -> Iterator[Exponent]:
    """Exponent vectors of total degree ``degree`` in ``nvars`` variables."""
    if degree < 0:
        return
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            yield (first,) + rest


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over F_p by Gaussian elimination."""
    a = np.array(a, dtype=np.int64) % p
    nrows, ncols = a.shape
    if nrows > ncols:
        a = np.ascontiguousarray(a.T)
        nrows, ncols = ncols, nrows
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        nz = np.flatnonzero(a[rank:, c])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        a[rank] = (a[rank] * pow(int(a[rank, c]), -1, p)) % p
        below = rank + 1 + np.flatnonzero(a[rank + 1 :, c])
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[rank]) % p) % p
        rank += 1
    return rank


def _torus_weight(e: Exponent, var_weights) -> tuple[int, ...]:
    w = [0] * len(var_weights[0])
    for i, k in enumerate(e):
        if k:
            for a, x in enumerate(var_weights[i]):
                w[a] += k * x
    return tuple(w)


def ideal_power_graded_dim(
    g: GeneratorSet,
    d: int,
    t: int,
    max_rows: int = 200_000,
    max_block_columns: int = 20_000,
) -> int:
    """dim_{F_p} (I^d)_t, where I is generated by ``g``."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    e = t - g.degree * d
    if e < 0:
        return 0
    for gen in g.gens:
        if len({_torus_weight(x, g.var_weights) for x in gen.terms}) != 1:
            raise ValueError("generators must be torus-homogeneous for the block split")
    products = [
        _product(g.gens[i] for i in combo)
        for combo in combinations_with_replacement(range(len(g.gens)), d)
    ]
    monos = list(monomials(g.nvars, e))
    if len(products) * len(monos) > max_rows:
        raise OracleLimitError(
            f"{len(products) * len(monos)} rows exceed the limit {max_rows} (d={d}, t={t})"
        )
    blocks: dict[tuple[int, ...], list[dict[Exponent, int]]] = defaultdict(list)
    for poly in products:
        for mono in monos:
            row = poly.times_monomial(mono)
            blocks[_torus_weight(next(iter(row)), g.var_weights)].append(row)

    total = 0
    for rows in blocks.values():
        cols = sorted({e for row in rows for e in row}, reverse=True)
        if len(cols) > max_block_columns:
            raise OracleLimitError(f"block with {len(cols)} columns exceeds {max_block_columns}")
        col_index = {e: k for k, e in enumerate(cols)}
        mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for r, row in enumerate(rows):
            for e, c in row.items():
                mat[r, col_index[e]] = c
        total += rank_mod_p(mat, g.prime)
    return total


def _product(polys) -> SparsePolynomial:
    polys = list(polys)
    out = polys[0]
    for q in polys[1:]:
        out = out * q
    return out


def stable_ideal_power_dim(case: str, shape: tuple[int, ...], d: int, t: int,
                           primes: tuple[int, int] = DEFAULT_PRIMES) -> int:
    """Rank computed over two distinct primes; disagreement raises BadPrimeError.

    ``shape`` is (m, n) for minors and (n,) for Pfaffians.
    """
    p, q = primes
    if p == q:
        raise ValueError("the two primes must differ")
    dims = []
    for prime in (p, q):
        gens = maximal_minors(*shape, p=prime) if case == "minors" else submaximal_pfaffians(*shape, p=prime)
        dims.append(ideal_power_graded_dim(gens, d, t))
    if dims[0] != dims[1]:
        raise BadPrimeError(
            f"{case}{shape} d={d} t={t}: rank {dims[0]} mod {p} but {dims[1]} mod {q}"
        )
    return dims[0]
