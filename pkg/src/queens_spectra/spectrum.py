"""Approximate full spectra of Q(n) by cyclic Jacobi rotations."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .board import QueensGraph

DEFAULT_TOL = 1e-10
DEFAULT_WINDOW = 1e-5
MAX_FLOAT_N = 32
MAX_SWEEPS = 60


@dataclass(frozen=True)
class Spectrum:
    n: int
    eigenvalues: tuple
    tol: float

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "tol": self.tol, "eigenvalues": list(self.eigenvalues)})

    @classmethod
    def from_json(cls, text: str) -> "Spectrum":
        d = json.loads(text)
        return cls(d["n"], tuple(d["eigenvalues"]), d["tol"])


def adjacency_array(g: QueensGraph) -> np.ndarray:
    m = g.num_vertices
    a = np.zeros((m, m))
    for u, nbrs in enumerate(g.neighbors):
        a[u, list(nbrs)] = 1.0
    return a


def _off(a: np.ndarray) -> float:
    upper = np.triu(a, 1)
    return math.sqrt(2.0 * float(np.sum(upper * upper)))


def jacobi_eigenvalues(a: np.ndarray, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, unsorted.

    Sweeps visit the strict upper triangle row by row; rotations use the
    Rutishauser formulas. Stops once the off-diagonal Frobenius norm < tol.
    """
    a = np.array(a, dtype=float, copy=True)
    m = a.shape[0]
    # entries below this cannot push the off-diagonal norm past tol
    negligible = tol / (2 * m) if m else 0.0
    for _ in range(max_sweeps):
        if _off(a) < tol:
            return np.diag(a).copy()
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = a[p, q]
                if abs(apq) < negligible:
                    continue
                app, aqq = a[p, p], a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q]
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p].copy()
                a[p] = c * rp - s * a[q]
                a[q] = s * rp + c * a[q]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
    if _off(a) < tol:
        return np.diag(a).copy()
    raise RuntimeError(f"Jacobi did not reach tol={tol} in {max_sweeps} sweeps (off={_off(a):.3e})")


def dense_spectrum(g: QueensGraph, tol: float = DEFAULT_TOL) -> Spectrum:
    if g.n > MAX_FLOAT_N:
        raise ValueError(f"dense spectra are limited to n <= {MAX_FLOAT_N}, got {g.n}")
    vals = jacobi_eigenvalues(adjacency_array(g), tol)
    # stable sort keeps computed order among ties
    order = np.argsort(vals, kind="stable")
    return Spectrum(g.n, tuple(float(x) for x in vals[order]), tol)


def _check_window(window: float):
    if not 0 < window < 0.5:
        raise ValueError(f"window must lie in (0, 0.5), got {window}")


def integer_candidates(s: Spectrum, window: float = DEFAULT_WINDOW) -> set:
    _check_window(window)
    out = set()
    for x in s.eigenvalues:
        z = round(x)
        if abs(x - z) <= window:
            out.add(int(z))
    return out


def cluster_count(s: Spectrum, z: int, window: float = DEFAULT_WINDOW) -> int:
    _check_window(window)
    return sum(1 for x in s.eigenvalues if abs(x - z) <= window)
