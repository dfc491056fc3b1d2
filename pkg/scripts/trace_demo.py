#!/usr/bin/env python3
"""Print the per-sweep bound trace of the balancing solver.

By default runs the bundled 3x3x3 reference tensor whose trace is frozen
in the test suite; pass a tensor file to trace any other instance.
"""

import argparse

import numpy as np

from specrad import DenseTensor, SolverConfig, read_tensor, solve, write_trace_csv


def reference_tensor() -> DenseTensor:
    data = np.zeros((3, 3, 3))
    data[0, 1, 1] = 3.72
    data[1, 0, 0] = 9.02
    data[2, 0, 0] = 9.55
    return DenseTensor(data)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("path", nargs="?", help="tensor file (default: bundled 3x3x3 instance)")
    parser.add_argument("--alpha", type=float, default=1.0)
    parser.add_argument("--tol", type=float, default=1e-7)
    parser.add_argument("--max-iter", type=int, default=100)
    parser.add_argument("--csv", metavar="PATH", help="also write the trace as CSV")
    args = parser.parse_args()

    tensor = read_tensor(args.path) if args.path else reference_tensor()
    report = solve(tensor, SolverConfig(alpha=args.alpha, tol=args.tol, max_iter=args.max_iter))

    print(f"{'k':>4} {'r':>14} {'R':>14} {'gap':>14} {'mid':>14}")
    for row in report.trace:
        print(f"{row.k:>4} {row.lower:>14.6g} {row.upper:>14.6g} {row.gap:>14.6g} {row.midpoint:>14.6g}")
    print()
    print(f"rho = {report.rho:.6g} (shifted {report.rho_shifted:.6g}), "
          f"converged = {report.converged}, residual = {report.residual:.3g}")
    print(f"eigenvector = {np.array2string(report.eigenvector, precision=6)}")

    if args.csv:
        write_trace_csv(report.trace, args.csv)
        print(f"trace written to {args.csv}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
