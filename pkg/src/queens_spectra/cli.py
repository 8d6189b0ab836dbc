"""Command-line entry point: ``queens-spectra <verb> ...``.

Exit codes: 0 clean run, 1 invariant violation, 2 input or size-guard error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from .board import build_graph, edge_count, export_matrix_market
from .exact import DEFAULT_SEED
from .harness import integer_spectrum_exact, run_range, verify_families
from .spectrum import DEFAULT_TOL, dense_spectrum


def _cmd_graph(args):
    g = build_graph(args.n)
    if args.export == "mm":
        sys.stdout.write(export_matrix_market(g))
    else:
        print(json.dumps({"n": g.n, "vertices": g.num_vertices, "edges": edge_count(g)}))
    return 0


def _cmd_families(args):
    report = verify_families(args.n, seed=args.seed)
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if report.ok else 1


def _cmd_int_spectrum(args):
    found = integer_spectrum_exact(args.n, seed=args.seed, jobs=args.jobs)
    print(json.dumps([c.to_dict() for _, c in found], indent=2))
    return 0


def _cmd_conjecture(args):
    summary = run_range(args.n_from, args.n_to, args.out, jobs=args.jobs, seed=args.seed)
    if args.out is None:
        for r in summary["reports"]:
            print(r.to_json())
    else:
        for r in summary["reports"]:
            flags = "ok" if r.all_ok else "FLAGGED"
            print(f"n={r.n:3d} integers={r.distinct_integers} {flags}", file=sys.stderr)
    if summary["containment_failures"]:
        print(f"containment failed for n in {summary['containment_failures']}", file=sys.stderr)
        return 1
    return 0


def _cmd_spectrum(args):
    print(dense_spectrum(build_graph(args.n), tol=args.tol).to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="queens-spectra", description="Exact spectral analysis of the n-Queens graph.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("graph", help="build Q(n); print its size or export it")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--export", choices=["mm"])
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("families", help="verify every closed-form eigenvector family for Q(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_families)

    p = sub.add_parser("int-spectrum", help="certified integer eigenvalues of Q(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_int_spectrum)

    p = sub.add_parser("conjecture", help="check the integer-eigenvalue conjecture over a range of n")
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--out", help="JSON-lines report path; a .csv summary is written beside it")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("spectrum", help="approximate spectrum of Q(n) by Jacobi rotations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=_cmd_spectrum)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
