"""Family verification, exact integer-spectrum scans and conjecture reports."""
from __future__ import annotations

import csv
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .board import build_graph
from .exact import (
    DEFAULT_SEED,
    MultiplicityCertificate,
    SizeGuardError,
    is_eigenvector,
    is_linearly_independent,
    nullity_certified,
)
from .families import (
    FamilyDescriptor,
    FamilyKind,
    basis_minus4,
    build_vector,
    degenerate_lambdas,
    e_vector,
    middle_band,
    n_minus_4_descriptors,
    predicted_integer_spectrum,
)
from .spectrum import dense_spectrum

MAX_EXACT_N = 32


def _pool_map(fn, items, jobs):
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# -- family verification -----------------------------------------------------

@dataclass
class MemberResult:
    label: str
    eigenvalue: int
    nonzero: bool
    eigen_ok: bool | None  # None when skipped as the zero vector
    expected_zero: bool = False

    @property
    def ok(self) -> bool:
        if not self.nonzero:
            return self.expected_zero
        return bool(self.eigen_ok) and not self.expected_zero


@dataclass
class FamilyResult:
    name: str
    size: int
    expected_size: int
    independent: bool

    @property
    def ok(self) -> bool:
        return self.independent and self.size == self.expected_size


@dataclass
class FamilyReport:
    n: int
    members: list = field(default_factory=list)
    families: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(m.ok for m in self.members) and all(f.ok for f in self.families)

    def failures(self) -> list:
        return [m.label for m in self.members if not m.ok] + [f.name for f in self.families if not f.ok]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "ok": self.ok,
            "members": [
                {"label": m.label, "eigenvalue": m.eigenvalue, "nonzero": m.nonzero,
                 "eigen_ok": m.eigen_ok, "expected_zero": m.expected_zero}
                for m in self.members
            ],
            "families": [
                {"name": f.name, "size": f.size, "expected_size": f.expected_size,
                 "independent": f.independent}
                for f in self.families
            ],
            "failures": self.failures(),
        }


def _check_member(g, d: FamilyDescriptor, vec, expected_zero=False) -> MemberResult:
    nonzero = not vec.is_zero()
    eigen_ok = is_eigenvector(g, vec, d.eigenvalue) if nonzero else None
    return MemberResult(d.label(), d.eigenvalue, nonzero, eigen_ok, expected_zero)


def verify_families(n: int, seed: int = DEFAULT_SEED) -> FamilyReport:
    """Check every closed-form eigenvector that applies to Q(n)."""
    if n < 3:
        raise ValueError(f"families are defined for n >= 3, got {n}")
    g = build_graph(n)
    report = FamilyReport(n)

    if n >= 4:
        vecs = basis_minus4(n)
        for (a, b), v in zip(((a, b) for a in range(1, n - 2) for b in range(1, n - 2)), vecs):
            d = FamilyDescriptor(FamilyKind.X_BLOCK, n, (a, b), -4)
            report.members.append(_check_member(g, d, v))
        report.families.append(FamilyResult("basis_minus4", len(vecs), (n - 3) ** 2,
                                            is_linearly_independent(vecs, seed)))

    if n % 2 == 1:
        zeros = set(degenerate_lambdas(n))
        # n - 4 itself is checked with its family below
        for lam in range(-3, n - 4):
            d = FamilyDescriptor(FamilyKind.E, n, (lam,), lam)
            report.members.append(_check_member(g, d, e_vector(n, lam), expected_zero=lam in zeros))

    descs = n_minus_4_descriptors(n)
    vecs = [build_vector(d) for d in descs]
    for d, v in zip(descs, vecs):
        report.members.append(_check_member(g, d, v))
    expected = (n + 1) // 2 if n % 2 else (n - 2) // 2
    report.families.append(FamilyResult("n_minus_4", len(vecs), expected,
                                        bool(vecs) and is_linearly_independent(vecs, seed)))
    return report


# -- exact integer spectrum --------------------------------------------------

def known_eigenvectors(n: int, lam: int) -> list:
    """Closed-form independent eigenvectors of Q(n) for ``lam`` (possibly none)."""
    if n >= 4 and lam == -4:
        return basis_minus4(n)
    if n >= 3 and lam == n - 4:
        return [build_vector(d) for d in n_minus_4_descriptors(n)]
    if n % 2 == 1 and n >= 5 and lam in middle_band(n):
        return [e_vector(n, lam)]
    return []


def scan_range(n: int) -> tuple:
    """Integer interval bracketing the float spectrum, padded by one on each side."""
    s = dense_spectrum(build_graph(n))
    return math.floor(s.eigenvalues[0]) - 1, math.ceil(s.eigenvalues[-1]) + 1


def _certify(args) -> MultiplicityCertificate:
    n, lam, seed, cross_check = args
    return nullity_certified(build_graph(n), lam, known_eigenvectors(n, lam), seed=seed,
                             cross_check=cross_check)


def _check_exact_n(n: int):
    if n < 1:
        raise ValueError(f"board size must be positive, got {n}")
    if n > MAX_EXACT_N:
        raise SizeGuardError(f"exact scans are limited to n <= {MAX_EXACT_N}, got {n}")


def _exact_scan(n, seed, jobs, cross_check):
    _check_exact_n(n)
    lo, hi = scan_range(n)
    certs = _pool_map(_certify, [(n, lam, seed, cross_check) for lam in range(lo, hi + 1)], jobs)
    return (lo, hi), [(c.lam, c) for c in certs if c.upper > 0]


def integer_spectrum_exact(n: int, seed: int = DEFAULT_SEED, jobs: int = 1,
                           cross_check: bool = True) -> list:
    """``[(lam, certificate), ...]`` for every integer eigenvalue of Q(n), ascending."""
    return _exact_scan(n, seed, jobs, cross_check)[1]


# -- conjecture --------------------------------------------------------------

def claimed_multiplicity(n: int, lam: int) -> int:
    if lam == -4:
        return (n - 3) ** 2
    if lam == n - 4:
        return (n + 1) // 2 if n % 2 else (n - 2) // 2
    return 1


@dataclass
class ConjectureReport:
    n: int
    predicted: list
    found: list  # [(lam, MultiplicityCertificate)]
    containment_ok: bool
    multiplicity_ok: bool | None
    no_extra_integers_ok: bool | None
    scan_range: tuple
    special_case: bool = False

    @property
    def distinct_integers(self) -> list:
        return [lam for lam, _ in self.found]

    @property
    def all_ok(self) -> bool:
        return all(f is not False for f in (self.containment_ok, self.multiplicity_ok,
                                            self.no_extra_integers_ok))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "predicted": self.predicted,
            "found": [c.to_dict() for _, c in self.found],
            "containment_ok": self.containment_ok,
            "multiplicity_ok": self.multiplicity_ok,
            "no_extra_integers_ok": self.no_extra_integers_ok,
            "scan_range": list(self.scan_range),
            "special_case": self.special_case,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def check_conjecture(n: int, seed: int = DEFAULT_SEED, jobs: int = 1,
                     cross_check: bool = True) -> ConjectureReport:
    """Compare the exact integer spectrum of Q(n) with the predicted one.

    The three flags are findings; only containment is a theorem. For n = 3
    the only claim is that -1 is an eigenvalue, so the other flags are None.
    """
    if n < 3:
        raise ValueError(f"conjecture checks start at n = 3, got {n}")
    rng, found = _exact_scan(n, seed, jobs, cross_check)
    certs = dict(found)
    if n == 3:
        predicted = [-1]
    else:
        predicted = sorted(predicted_integer_spectrum(n))
    containment = all(lam in certs and certs[lam].lower >= 1 for lam in predicted)
    if n == 3:
        return ConjectureReport(n, predicted, found, containment, None, None, rng, special_case=True)
    mult_ok = all(
        lam in certs and certs[lam].certified and certs[lam].upper == claimed_multiplicity(n, lam)
        for lam in predicted
    )
    no_extra = set(certs) <= set(predicted)
    return ConjectureReport(n, predicted, found, containment, mult_ok, no_extra, rng)


def _timed_report(args):
    n, seed, cross_check = args
    t0 = time.perf_counter()
    report = check_conjecture(n, seed, jobs=1, cross_check=cross_check)
    return report, time.perf_counter() - t0


def run_range(n_min: int, n_max: int, out=None, jobs: int = 1, seed: int = DEFAULT_SEED,
              cross_check: bool = True) -> dict:
    """One report per n in [n_min, n_max], merged in order of n.

    With ``out`` set, reports go to ``out`` as JSON lines and a summary table to
    ``out`` with a ``.csv`` suffix; both files are opened before any work.
    """
    if not 3 <= n_min <= n_max:
        raise ValueError(f"need 3 <= n_min <= n_max, got {n_min}..{n_max}")
    if n_max > MAX_EXACT_N:
        raise SizeGuardError(f"exact scans are limited to n <= {MAX_EXACT_N}, got {n_max}")

    handles = None
    if out is not None:
        out = Path(out)
        csv_path = out.with_suffix(".csv")
        handles = (open(out, "w"), open(csv_path, "w", newline=""))
    try:
        results = _pool_map(_timed_report, [(n, seed, cross_check) for n in range(n_min, n_max + 1)], jobs)
        results.sort(key=lambda rt: rt[0].n)
        if handles:
            jsonl, csvf = handles
            for report, _ in results:
                jsonl.write(report.to_json() + "\n")
            w = csv.writer(csvf)
            w.writerow(["n", "predicted_count", "all_flags", "wall_time_s"])
            for report, dt in results:
                w.writerow([report.n, len(report.predicted), report.all_ok, f"{dt:.3f}"])
    finally:
        if handles:
            for h in handles:
                h.close()

    reports = [r for r, _ in results]
    return {
        "n_min": n_min,
        "n_max": n_max,
        "reports": reports,
        "all_ok": all(r.all_ok for r in reports),
        "containment_failures": [r.n for r in reports if not r.containment_ok],
    }
