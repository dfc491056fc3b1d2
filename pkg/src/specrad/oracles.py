"""Independent estimators used to cross-validate the balancing solver."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tensor import DenseTensor, contract, row_sums

ORACLE_TOL = 1e-9
ORACLE_MAX_ITER = 10_000


@dataclass(frozen=True, eq=False)
class OracleEstimate:
    """Bracket ``[lower, upper]`` around the spectral radius plus the iterate
    it was evaluated at (strictly positive, unit maximum entry)."""

    lower: float
    upper: float
    vector: np.ndarray
    iterations: int
    converged: bool


def collatz_wielandt_bounds(a: DenseTensor, x) -> tuple[float, float]:
    """Pointwise bracket ``(min, max)`` of ``contract(a, x) / x**(m-1)``.

    Requires ``x`` strictly positive; with ``x`` all ones this is exactly
    the row-sum bracket.
    """
    vec = np.asarray(x, dtype=float)
    if vec.shape != (a.dim,):
        raise ValueError(f"x must have length {a.dim}, got shape {vec.shape}")
    if not np.isfinite(vec).all() or (vec <= 0).any():
        raise ValueError("x must be strictly positive and finite")
    ratios = contract(a, vec) / vec ** (a.order - 1)
    return float(ratios.min()), float(ratios.max())


def power_iteration(
    a: DenseTensor, tol: float = ORACLE_TOL, max_iter: int = ORACLE_MAX_ITER
) -> OracleEstimate:
    """Multilinear power iteration with a certified bracket at every step.

    From the all-ones start, repeats ``x -> normalize(contract(a, x)**(1/(m-1)))``
    (unit maximum entry) and evaluates the pointwise bracket at each new
    iterate; stops once the bracket closes to ``tol``.  For irreducible
    input the bracket contains the spectral radius throughout.  If an
    iterate develops a zero component (possible for reducible input) the
    last valid bracket is returned with ``converged=False``.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    sums = row_sums(a)
    if (sums == 0).any():
        row = int(np.argmin(sums)) + 1
        raise ValueError(f"row {row} has zero row sum; power iteration needs positive rows")
    root = 1.0 / (a.order - 1)
    x = np.ones(a.dim)
    lower, upper = float(sums.min()), float(sums.max())
    iterations = 0
    while upper - lower > tol and iterations < max_iter:
        nxt = contract(a, x) ** root
        nxt /= nxt.max()
        iterations += 1
        if (nxt == 0).any():
            return OracleEstimate(lower, upper, x, iterations, converged=False)
        lo, up = collatz_wielandt_bounds(a, nxt)
        x, lower, upper = nxt, lo, up
    return OracleEstimate(lower, upper, x, iterations, converged=upper - lower <= tol)
