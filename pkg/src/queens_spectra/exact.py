"""Exact integer linear algebra on Q(n): adjacency application, eigenvector
checks, ranks over GF(p) and over the rationals, and multiplicity
certificates.

A multiplicity certificate sandwiches dim ker(A - lam I) between the number
of verified independent eigenvectors we can write down (lower bound) and the
nullity of A - lam I modulo random 62-bit primes (upper bound). Reduction
mod p can only lose rank, so the modular nullity never undercounts. Equality
of the bounds pins the multiplicity; the upper bound is probabilistic in the
sense that a prime dividing every maximal nonzero minor would inflate it.
"""
from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np
from sympy import isprime, nextprime

from .board import QueensGraph
from .families import BoardVector

log = logging.getLogger(__name__)

DEFAULT_SEED = 20240
PRIME_LO = 1 << 61
PRIME_HI = 1 << 62
BAREISS_MAX_DIM = 150


class SizeGuardError(ValueError):
    """Raised when a computation is refused for being beyond desk scale."""


# -- adjacency application ---------------------------------------------------

def _line_sums(v: BoardVector):
    n = v.n
    rows = [0] * n
    cols = [0] * n
    diag = [0] * (2 * n - 1)  # index i - j + n - 1
    anti = [0] * (2 * n - 1)  # index i + j
    for k, x in enumerate(v.entries):
        if x:
            i, j = divmod(k, n)
            rows[i] += x
            cols[j] += x
            diag[i - j + n - 1] += x
            anti[i + j] += x
    return rows, cols, diag, anti


def apply_adjacency(g: QueensGraph, v: BoardVector) -> BoardVector:
    """A v for the adjacency matrix A of ``g``.

    Each square sees its row, column, diagonal and antidiagonal; summing the
    four lines counts the square itself four times.
    """
    if v.n != g.n:
        raise ValueError(f"vector is for n={v.n}, graph has n={g.n}")
    n = g.n
    rows, cols, diag, anti = _line_sums(v)
    out = []
    for k, x in enumerate(v.entries):
        i, j = divmod(k, n)
        out.append(rows[i] + cols[j] + diag[i - j + n - 1] + anti[i + j] - 4 * x)
    return BoardVector(n, tuple(out))


def apply_adjacency_direct(g: QueensGraph, v: BoardVector) -> BoardVector:
    """Neighbor-sum reference for :func:`apply_adjacency`."""
    if v.n != g.n:
        raise ValueError(f"vector is for n={v.n}, graph has n={g.n}")
    e = v.entries
    return BoardVector(g.n, tuple(sum(e[u] for u in nbrs) for nbrs in g.neighbors))


def is_eigenvector(g: QueensGraph, v: BoardVector, lam: int) -> bool:
    if v.is_zero():
        raise ValueError("zero vector is not an eigenvector candidate (degenerate family member?)")
    av = apply_adjacency(g, v)
    return all(a == lam * x for a, x in zip(av.entries, v.entries))


# -- matrices ----------------------------------------------------------------

@dataclass(frozen=True)
class ExactMatrix:
    """Square integer matrix, rows as tuples of Python ints."""

    rows: tuple

    def __post_init__(self):
        m = len(self.rows)
        if any(len(r) != m for r in self.rows):
            raise ValueError("ExactMatrix must be square")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, rows) -> "ExactMatrix":
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    def is_symmetric(self) -> bool:
        m = self.dim
        return all(self.rows[a][b] == self.rows[b][a] for a in range(m) for b in range(a + 1, m))


def shifted_adjacency_rows(g: QueensGraph, lam: int):
    """Yield the dense rows of A - lam I one at a time."""
    m = g.num_vertices
    for u, nbrs in enumerate(g.neighbors):
        row = [0] * m
        for w in nbrs:
            row[w] = 1
        row[u] = -lam
        yield row


def shifted_adjacency(g: QueensGraph, lam: int) -> ExactMatrix:
    return ExactMatrix(tuple(tuple(r) for r in shifted_adjacency_rows(g, lam)))


def _check_prime(p: int):
    if p < 2 or not isprime(p):
        raise ValueError(f"modulus {p} is not prime")


def _rank_mod_p_dense(rows, p: int) -> int:
    A = np.array(rows, dtype=object)
    if A.size == 0:
        return 0
    A %= p
    m, ncols = A.shape
    r = 0
    for c in range(ncols):
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = (A[r, c:] * inv) % p
        below = r + 1 + np.flatnonzero(A[r + 1:, c])
        if below.size:
            A[below, c:] = (A[below, c:] - np.outer(A[below, c], A[r, c:])) % p
        r += 1
        if r == m:
            break
    return r


def rank_mod_p(m: ExactMatrix, p: int) -> int:
    """Rank over GF(p); pivot is the first nonzero entry of each column."""
    _check_prime(p)
    return _rank_mod_p_dense(m.rows, p)


def _bareiss_rank(rows) -> int:
    A = [list(r) for r in rows]
    if not A:
        return 0
    m, ncols = len(A), len(A[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pr = A[r]
        d = pr[c]
        tail = pr[c + 1:]
        for i in range(r + 1, m):
            row = A[i]
            f = row[c]
            if f:
                row[c + 1:] = [(d * x - f * y) // prev for x, y in zip(row[c + 1:], tail)]
            else:
                row[c + 1:] = [d * x // prev for x in row[c + 1:]]
            row[c] = 0
        prev = d
        r += 1
        if r == m:
            break
    return r


def rank_exact_bareiss(m: ExactMatrix) -> int:
    """Rank over the rationals by fraction-free elimination.

    Every division in the update is exact, so intermediate entries stay
    integral (they are minors of the input).
    """
    if m.dim > BAREISS_MAX_DIM:
        raise SizeGuardError(
            f"dimension {m.dim} exceeds the Bareiss limit {BAREISS_MAX_DIM}; use rank_mod_p instead"
        )
    return _bareiss_rank(m.rows)


# -- primes ------------------------------------------------------------------

@lru_cache(maxsize=64)
def _prime_stream(seed: int, count: int) -> tuple:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = nextprime(rng.randrange(PRIME_LO, PRIME_HI))
        if p < PRIME_HI and p not in out:
            out.append(p)
    return tuple(out)


def draw_primes(count: int, seed: int = DEFAULT_SEED) -> tuple:
    """First ``count`` primes of the deterministic stream for ``seed``, all in [2^61, 2^62)."""
    return _prime_stream(seed, count)


# -- independence ------------------------------------------------------------

def _sparse_rank_mod_p(vectors, p: int) -> int:
    pivots = {}
    for v in vectors:
        row = {k: x % p for k, x in enumerate(v.entries) if x % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {k: x * inv % p for k, x in row.items()}
                break
            f = row[c]
            for k, x in piv.items():
                y = (row.get(k, 0) - f * x) % p
                if y:
                    row[k] = y
                else:
                    row.pop(k, None)
    return len(pivots)


def is_linearly_independent(vectors, seed: int = DEFAULT_SEED) -> bool:
    """Full column rank test.

    Full rank modulo any prime proves independence over Q. A deficit mod two
    primes is confirmed exactly by Bareiss when the matrix is small enough.
    """
    if not vectors:
        raise ValueError("need at least one vector")
    n = vectors[0].n
    if any(v.n != n for v in vectors):
        raise ValueError("vectors are for different board sizes")
    k = len(vectors)
    if k > n * n:
        return False
    for p in draw_primes(2, seed):
        if _sparse_rank_mod_p(vectors, p) == k:
            return True
    if k <= BAREISS_MAX_DIM:
        return _bareiss_rank([v.entries for v in vectors]) == k
    return False


# -- certificates ------------------------------------------------------------

class CertStatus(str, Enum):
    CERTIFIED = "CERTIFIED"
    BOUNDED = "BOUNDED"
    ZERO = "ZERO"


@dataclass(frozen=True)
class MultiplicityCertificate:
    n: int
    lam: int
    lower: int
    upper: int
    primes: tuple = field(default=())

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")

    @property
    def status(self) -> CertStatus:
        if self.upper == 0:
            return CertStatus.ZERO
        if self.lower == self.upper:
            return CertStatus.CERTIFIED
        return CertStatus.BOUNDED

    @property
    def certified(self) -> bool:
        return self.status is CertStatus.CERTIFIED

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lambda": self.lam,
            "lower": self.lower,
            "upper": self.upper,
            "primes": list(self.primes),
            "status": self.status.value,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "MultiplicityCertificate":
        cert = cls(d["n"], d["lambda"], d["lower"], d["upper"], tuple(d["primes"]))
        if cert.status.value != d["status"]:
            raise ValueError(f"status {d['status']} inconsistent with bounds")
        return cert


def modular_nullity(g: QueensGraph, lam: int, p: int) -> int:
    _check_prime(p)
    return g.num_vertices - _rank_mod_p_dense(list(shifted_adjacency_rows(g, lam)), p)


def nullity_certified(g: QueensGraph, lam: int, known=(), seed: int = DEFAULT_SEED,
                      cross_check: bool = True) -> MultiplicityCertificate:
    """Bound the multiplicity of ``lam`` as an eigenvalue of Q(n).

    ``known`` must be eigenvectors for ``lam``; they are checked here, and a
    failing vector raises ``ValueError`` since it points at a construction bug.
    """
    known = list(known)
    for idx, v in enumerate(known):
        if not is_eigenvector(g, v, lam):
            raise ValueError(f"known vector #{idx} is not an eigenvector for {lam}")
    if known and not is_linearly_independent(known, seed):
        raise ValueError("known vectors are linearly dependent")

    primes = list(draw_primes(2, seed))
    nulls = [modular_nullity(g, lam, p) for p in primes]
    if nulls[0] != nulls[1]:
        p3 = draw_primes(3, seed)[2]
        log.warning("nullity disagreement for n=%d lam=%d across primes; drawing %d", g.n, lam, p3)
        primes.append(p3)
        nulls.append(modular_nullity(g, lam, p3))
    upper = min(nulls)

    if cross_check and g.num_vertices <= BAREISS_MAX_DIM:
        exact = g.num_vertices - _bareiss_rank(list(shifted_adjacency_rows(g, lam)))
        if exact > upper:
            raise RuntimeError(f"modular nullity {upper} below rational nullity {exact}; rank code is broken")
        if exact < upper:
            log.warning("n=%d lam=%d: unlucky primes %s, exact nullity %d < %d", g.n, lam, primes, exact, upper)
            upper = exact
    if len(known) > upper:
        raise RuntimeError(f"{len(known)} independent eigenvectors but nullity bound {upper}")
    return MultiplicityCertificate(g.n, lam, len(known), upper, tuple(primes))
