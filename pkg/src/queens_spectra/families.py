"""Closed-form integer eigenvector families of the n-Queens graph.

Every constructor returns an exact :class:`BoardVector`. Families:

* ``X_BLOCK``: 4x4 sign pattern translated to offset (a, b); eigenvalue -4.
* ``P``, ``Q``, ``E``: odd boards only; ``E = P + Q`` is an eigenvector for
  its parameter ``lam`` unless it vanishes identically.
* ``C``, ``R``, ``F``: column-pair / row-pair indicators; ``F = C + R`` is an
  eigenvector for n - 4.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .board import check_coord


class FamilyKind(str, Enum):
    X_BLOCK = "X_BLOCK"
    P = "P"
    Q = "Q"
    E = "E"
    C = "C"
    R = "R"
    F = "F"


@dataclass(frozen=True)
class FamilyDescriptor:
    kind: FamilyKind
    n: int
    params: tuple
    eigenvalue: int | None

    def label(self) -> str:
        args = ",".join(str(x) for x in (self.n, *self.params))
        return f"{self.kind.value}[{args}]"


@dataclass(frozen=True)
class BoardVector:
    """Integer vector indexed by the squares of an n x n board.

    ``entries`` is row-major; ``v[i, j]`` uses 1-based board coordinates.
    """

    n: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.n * self.n:
            raise ValueError(f"expected {self.n * self.n} entries, got {len(self.entries)}")

    @classmethod
    def zeros(cls, n: int) -> "BoardVector":
        return cls(n, (0,) * (n * n))

    @classmethod
    def from_function(cls, n: int, fn) -> "BoardVector":
        return cls(n, tuple(int(fn(i, j)) for i in range(1, n + 1) for j in range(1, n + 1)))

    @classmethod
    def from_grid(cls, grid) -> "BoardVector":
        n = len(grid)
        if any(len(row) != n for row in grid):
            raise ValueError("grid is not square")
        return cls(n, tuple(int(x) for row in grid for x in row))

    def __getitem__(self, c) -> int:
        i, j = check_coord(c, self.n)
        return self.entries[(i - 1) * self.n + (j - 1)]

    def _check_same(self, other):
        if self.n != other.n:
            raise ValueError(f"board size mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "BoardVector") -> "BoardVector":
        self._check_same(other)
        return BoardVector(self.n, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "BoardVector") -> "BoardVector":
        self._check_same(other)
        return BoardVector(self.n, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "BoardVector":
        return BoardVector(self.n, tuple(-a for a in self.entries))

    def scale(self, c: int) -> "BoardVector":
        return BoardVector(self.n, tuple(c * a for a in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def rows(self) -> list:
        n = self.n
        return [list(self.entries[r * n:(r + 1) * n]) for r in range(n)]

    def nonzero(self) -> list:
        """``[(i, j, value), ...]`` for nonzero entries, row-major."""
        n = self.n
        return [(k // n + 1, k % n + 1, x) for k, x in enumerate(self.entries) if x]

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "entries": [list(t) for t in self.nonzero()]})

    @classmethod
    def from_json(cls, text: str) -> "BoardVector":
        obj = json.loads(text)
        n = obj["n"]
        vals = [0] * (n * n)
        for i, j, x in obj["entries"]:
            check_coord((i, j), n)
            vals[(i - 1) * n + (j - 1)] = int(x)
        return cls(n, tuple(vals))

    def render(self) -> str:
        """Text chessboard; zero squares are left blank."""
        cells = [[str(x) if x else "" for x in row] for row in self.rows()]
        w = max([len(s) for row in cells for s in row] + [1])
        sep = "+" + "+".join("-" * (w + 2) for _ in range(self.n)) + "+"
        out = [sep]
        for row in cells:
            out.append("|" + "|".join(f" {s:>{w}} " for s in row) + "|")
            out.append(sep)
        return "\n".join(out)


X4 = (
    (0, 1, -1, 0),
    (-1, 0, 0, 1),
    (1, 0, 0, -1),
    (0, -1, 1, 0),
)


def x_block_vector(n: int, a: int, b: int) -> BoardVector:
    if n < 4:
        raise ValueError(f"X-block vectors need n >= 4, got {n}")
    if not (1 <= a <= n - 3 and 1 <= b <= n - 3):
        raise ValueError(f"offset {(a, b)} outside [1, {n - 3}]^2")

    def entry(i, j):
        if a <= i <= a + 3 and b <= j <= b + 3:
            return X4[i - a][j - b]
        return 0

    return BoardVector.from_function(n, entry)


def basis_minus4(n: int) -> list:
    """The (n-3)^2 translated X-blocks, offsets in lexicographic order."""
    if n < 4:
        raise ValueError(f"the -4 eigenbasis needs n >= 4, got {n}")
    return [x_block_vector(n, a, b) for a in range(1, n - 2) for b in range(1, n - 2)]


def ominus(i: int, j: int) -> int:
    return abs(i - j)


def oplus(i: int, j: int, n: int) -> int:
    return abs(i + j - (n + 1))


def _check_odd_lam(n: int, lam: int):
    if n < 3 or n % 2 == 0:
        raise ValueError(f"P/Q/E vectors need odd n >= 3, got {n}")
    if not 1 <= lam + 4 <= n:
        raise ValueError(f"need 1 <= lam + 4 <= n, got lam={lam}, n={n}")


def k_param(n: int, lam: int) -> int:
    _check_odd_lam(n, lam)
    return (lam + 4) - (n - 1) // 2


def p_vector(n: int, lam: int) -> BoardVector:
    k = k_param(n, lam)
    s = lam + 4
    band = n - s

    def entry(i, j):
        d, a = ominus(i, j), oplus(i, j, n)
        if d == band:
            return k
        if d < band and a < s and (d - band) % 2 == 0:
            return 1
        return 0

    return BoardVector.from_function(n, entry)


def q_vector(n: int, lam: int) -> BoardVector:
    """Row reflection of P with the sign flipped."""
    p = p_vector(n, lam)
    return BoardVector.from_function(n, lambda i, j: -p[n + 1 - i, j])


def q_vector_direct(n: int, lam: int) -> BoardVector:
    k = k_param(n, lam)
    s = lam + 4
    band = n - s

    def entry(i, j):
        d, a = ominus(i, j), oplus(i, j, n)
        if a == band:
            return -k
        if a < band and d < s and (a - band) % 2 == 0:
            return -1
        return 0

    return BoardVector.from_function(n, entry)


def e_vector(n: int, lam: int) -> BoardVector:
    return p_vector(n, lam) + q_vector(n, lam)


def degenerate_lambdas(n: int) -> tuple:
    """Parameters at which E vanishes identically (odd n)."""
    return ((n - 9) // 2, (n - 7) // 2)


def _check_ell(n: int, ell: int):
    if n < 3:
        raise ValueError(f"C/R/F vectors need n >= 3, got {n}")
    if not 1 <= ell <= n:
        raise ValueError(f"need 1 <= ell <= n, got ell={ell}, n={n}")


def c_vector(n: int, ell: int) -> BoardVector:
    _check_ell(n, ell)
    cols = {ell, n + 1 - ell}
    return BoardVector.from_function(n, lambda i, j: 1 if j in cols else 0)


def r_vector(n: int, ell: int) -> BoardVector:
    _check_ell(n, ell)
    rows = {ell, n + 1 - ell}
    return BoardVector.from_function(n, lambda i, j: -1 if i in rows else 0)


def f_vector(n: int, ell: int) -> BoardVector:
    return c_vector(n, ell) + r_vector(n, ell)


def n_minus_4_descriptors(n: int) -> list:
    if n < 3:
        raise ValueError(f"the n-4 family needs n >= 3, got {n}")
    lam = n - 4
    if n % 2 == 0:
        return [FamilyDescriptor(FamilyKind.F, n, (ell,), lam) for ell in range(1, (n - 2) // 2 + 1)]
    head = [FamilyDescriptor(FamilyKind.E, n, (lam,), lam)]
    return head + [FamilyDescriptor(FamilyKind.F, n, (ell,), lam) for ell in range(1, (n - 1) // 2 + 1)]


def n_minus_4_family(n: int) -> list:
    """Independent eigenvectors for n - 4: (n-2)/2 of them for even n,
    (n+1)/2 for odd n (E first, then F by increasing ell)."""
    return [build_vector(d) for d in n_minus_4_descriptors(n)]


def build_vector(d: FamilyDescriptor) -> BoardVector:
    ctor = {
        FamilyKind.X_BLOCK: x_block_vector,
        FamilyKind.P: p_vector,
        FamilyKind.Q: q_vector,
        FamilyKind.E: e_vector,
        FamilyKind.C: c_vector,
        FamilyKind.R: r_vector,
        FamilyKind.F: f_vector,
    }[d.kind]
    return ctor(d.n, *d.params)


def middle_band(n: int) -> list:
    """Integer eigenvalues carried by nonzero E vectors, excluding n - 4."""
    if n % 2 == 0:
        return []
    skip = set(degenerate_lambdas(n))
    return [lam for lam in range(-3, n - 4) if lam not in skip]


def predicted_integer_spectrum(n: int) -> set:
    if n < 4:
        raise ValueError(f"predicted integer spectrum is stated for n >= 4, got {n}")
    if n % 2 == 0:
        return {-4, n - 4}
    return {-4, n - 4, *middle_band(n)}


def diagonal_sum_breakdown(n: int, lam: int, p: int, q: int) -> tuple:
    """(alpha, beta, gamma, delta, epsilon) at square (p, q), by direct summation.

    alpha = (lam + 4) * E[p, q]; beta/delta sum P/Q over the antidiagonal
    through (p, q); gamma/epsilon sum P/Q over its diagonal.
    """
    check_coord((p, q), n)
    P = p_vector(n, lam)
    Q = q_vector(n, lam)
    sq = range(1, n + 1)
    anti = [(i, p + q - i) for i in sq if 1 <= p + q - i <= n]
    diag = [(i, i - (p - q)) for i in sq if 1 <= i - (p - q) <= n]
    alpha = (lam + 4) * (P[p, q] + Q[p, q])
    beta = sum(P[c] for c in anti)
    gamma = sum(P[c] for c in diag)
    delta = sum(Q[c] for c in anti)
    eps = sum(Q[c] for c in diag)
    return alpha, beta, gamma, delta, eps
