"""The n-Queens graph Q(n): squares of an n x n board, adjacent when a queen
on one attacks the other.

Squares are addressed 1-based as ``(i, j)`` = (row, column), rows counted top
to bottom. Flat vertex indices are row-major and 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


class BoardCoord(NamedTuple):
    i: int
    j: int


def check_coord(c, n: int) -> BoardCoord:
    i, j = c
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"square {(i, j)} is off the {n}x{n} board")
    return BoardCoord(i, j)


def vertex_index(c, n: int) -> int:
    i, j = check_coord(c, n)
    return (i - 1) * n + (j - 1)


def coord_of(index: int, n: int) -> BoardCoord:
    if not 0 <= index < n * n:
        raise ValueError(f"vertex index {index} out of range for n={n}")
    i, j = divmod(index, n)
    return BoardCoord(i + 1, j + 1)


def coords_adjacent(u, v) -> bool:
    """True iff distinct squares u, v share a row, column, diagonal or antidiagonal."""
    (a, b), (c, d) = u, v
    if a == c and b == d:
        return False
    return a == c or b == d or a - b == c - d or a + b == c + d


@dataclass(frozen=True)
class QueensGraph:
    """Immutable adjacency structure of Q(n).

    ``neighbors[v]`` is the sorted tuple of flat indices adjacent to vertex v.
    """

    n: int
    neighbors: tuple

    @property
    def num_vertices(self) -> int:
        return self.n * self.n

    def adj(self, c) -> tuple:
        return self.neighbors[vertex_index(c, self.n)]

    def has_edge(self, u, v) -> bool:
        a = vertex_index(u, self.n)
        b = vertex_index(v, self.n)
        return b in self.neighbors[a]

    def edges(self):
        """Each undirected edge once, as (u, v) flat indices with u < v."""
        for u, nbrs in enumerate(self.neighbors):
            for v in nbrs:
                if v > u:
                    yield u, v


def _lines(n: int):
    """Every row, column, diagonal and antidiagonal as a list of flat indices."""
    for i in range(n):
        yield [i * n + j for j in range(n)]
    for j in range(n):
        yield [i * n + j for i in range(n)]
    for d in range(-(n - 1), n):
        yield [i * n + (i - d) for i in range(n) if 0 <= i - d < n]
    for s in range(2 * n - 1):
        yield [i * n + (s - i) for i in range(n) if 0 <= s - i < n]


def build_graph(n: int) -> QueensGraph:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"board size must be a positive integer, got {n!r}")
    nbrs = [set() for _ in range(n * n)]
    for line in _lines(n):
        for v in line:
            nbrs[v].update(line)
    for v, s in enumerate(nbrs):
        s.discard(v)
    return QueensGraph(n, tuple(tuple(sorted(s)) for s in nbrs))


def degree(g: QueensGraph, c) -> int:
    return len(g.adj(c))


def degree_formula(n: int, c) -> int:
    i, j = check_coord(c, n)
    return 2 * (n - 1) + (n - abs(i - j) - 1) + (n - abs(i + j - (n + 1)) - 1)


def edge_count(g: QueensGraph) -> int:
    return sum(len(s) for s in g.neighbors) // 2


MM_HEADER = "%%MatrixMarket matrix coordinate pattern symmetric"


def export_matrix_market(g: QueensGraph) -> str:
    """Coordinate/pattern/symmetric Matrix Market text, lower triangle, 1-based."""
    m = g.num_vertices
    lines = [MM_HEADER, f"% n-Queens graph Q({g.n}), vertices row-major", f"{m} {m} {edge_count(g)}"]
    for u, v in g.edges():
        lines.append(f"{v + 1} {u + 1}")
    return "\n".join(lines) + "\n"


def read_matrix_market(text: str) -> QueensGraph:
    """Parse text produced by :func:`export_matrix_market` (or any symmetric
    pattern file on a square number of vertices) back into a graph."""
    body = [ln.strip() for ln in text.splitlines()]
    if not body or not body[0].lower().startswith("%%matrixmarket"):
        raise ValueError("missing MatrixMarket banner")
    banner = body[0].lower().split()
    if banner[2:5] != ["coordinate", "pattern", "symmetric"]:
        raise ValueError(f"unsupported MatrixMarket layout: {body[0]}")
    rows = [ln for ln in body[1:] if ln and not ln.startswith("%")]
    m, m2, nnz = (int(x) for x in rows[0].split())
    n = round(m ** 0.5)
    if m != m2 or n * n != m:
        raise ValueError(f"matrix is {m}x{m2}, not n^2 x n^2")
    entries = rows[1:]
    if len(entries) != nnz:
        raise ValueError(f"expected {nnz} entries, found {len(entries)}")
    nbrs = [set() for _ in range(m)]
    for ln in entries:
        a, b = (int(x) - 1 for x in ln.split()[:2])
        if a == b:
            raise ValueError("self-loop in adjacency file")
        nbrs[a].add(b)
        nbrs[b].add(a)
    return QueensGraph(n, tuple(tuple(sorted(s)) for s in nbrs))
