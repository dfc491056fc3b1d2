"""Row-sum balancing solver for the spectral radius of nonnegative tensors.

The method: shift the input by ``alpha`` on the superdiagonal so every row
sum is positive, then repeatedly apply the diagonal similarity with scaling
``d[i] = R[i]**(1/(m-1))``, where ``R[i]`` are the current row sums.  Each
sweep preserves the spectrum, pushes the minimum row sum up and the maximum
down, and those two numbers bracket the spectral radius at every step.  When
they meet, the common value is the spectral radius of the shifted tensor and
the accumulated scalings recover a positive eigenvector.

Iteration counters: state ``k`` counts balancing sweeps performed, while
trace rows are numbered from 1 (row 1 holds the initial, unbalanced row-sum
extremes), so row ``k + 1`` describes the state after ``k`` sweeps.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import IO, Union

import numpy as np

from .tensor import DenseTensor, add_identity_shift, contract, diagonal_similarity, row_sums

DEFAULT_ALPHA = 1.0
DEFAULT_TOL = 1e-7
DEFAULT_MAX_ITER = 100


@dataclass(frozen=True)
class SolverConfig:
    """Knobs for :func:`solve`.

    alpha:    superdiagonal shift applied before iterating (subtracted back
              out of the reported spectral radius).
    tol:      absolute gap threshold between the upper and lower bound.
    max_iter: cap on balancing sweeps; hitting it is reported, not raised.
    trace:    keep per-sweep bound rows in the report.
    """

    alpha: float = DEFAULT_ALPHA
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    trace: bool = True

    def __post_init__(self):
        if not self.alpha >= 0:
            raise ValueError(f"alpha must be nonnegative, got {self.alpha}")
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")


@dataclass(frozen=True, eq=False)
class IterationState:
    """Snapshot after ``k`` balancing sweeps.

    ``tensor`` is the current similar tensor, ``sums`` its row sums, and
    ``upper``/``lower`` their extremes (the certified bracket).  The
    ``accumulator`` carries the entrywise product of all scaling ratios
    ``(sums[i] / upper)**(1/(m-1))`` seen so far; at convergence it is the
    positive eigenvector of the shifted input.  Entries stay in (0, 1].
    """

    tensor: DenseTensor
    sums: np.ndarray
    upper: float
    lower: float
    accumulator: np.ndarray
    k: int

    @property
    def gap(self) -> float:
        return self.upper - self.lower


@dataclass(frozen=True)
class TraceRow:
    """One line of the convergence trace; ``k`` is 1-based (see module doc)."""

    k: int
    lower: float
    upper: float
    gap: float
    midpoint: float


@dataclass(frozen=True, eq=False)
class SolveReport:
    """Outcome of :func:`solve`.

    ``rho_shifted`` is the bracket midpoint for the shifted tensor and
    ``rho = rho_shifted - alpha`` the estimate for the input itself.
    ``residual`` is the infinity-norm eigen-equation defect of
    ``(rho_shifted, eigenvector)`` on the shifted tensor.
    ``iterations`` counts balancing sweeps (zero when the initial row sums
    are already constant).
    """

    rho_shifted: float
    rho: float
    eigenvector: np.ndarray
    converged: bool
    iterations: int
    lower: float
    upper: float
    final_gap: float
    residual: float
    trace: list[TraceRow] = field(default_factory=list)


def _trace_row(state: IterationState) -> TraceRow:
    return TraceRow(
        k=state.k + 1,
        lower=state.lower,
        upper=state.upper,
        gap=state.upper - state.lower,
        midpoint=0.5 * (state.upper + state.lower),
    )


def _state_from(tensor: DenseTensor, accumulator: np.ndarray, k: int) -> IterationState:
    sums = row_sums(tensor)
    upper = float(sums.max())
    lower = float(sums.min())
    ratios = (sums / upper) ** (1.0 / (tensor.order - 1))
    return IterationState(
        tensor=tensor,
        sums=sums,
        upper=upper,
        lower=lower,
        accumulator=accumulator * ratios,
        k=k,
    )


def init_state(b: DenseTensor, config: SolverConfig) -> IterationState:
    """Shift ``b`` by ``config.alpha`` and take the initial row-sum bracket.

    Raises if some row of the shifted tensor sums to zero (possible only
    with ``alpha = 0`` and a zero row in ``b``); the iteration needs every
    row sum strictly positive.
    """
    shifted = add_identity_shift(b, config.alpha)
    sums = row_sums(shifted)
    if (sums == 0).any():
        row = int(np.argmin(sums)) + 1
        raise ValueError(
            f"row {row} of the shifted tensor has zero row sum; "
            "use a positive alpha or remove zero rows"
        )
    return _state_from(shifted, np.ones(b.dim), 0)


def step(state: IterationState) -> IterationState:
    """One balancing sweep: rescale so the current row sums equalize.

    Applies the diagonal similarity with ``d[i] = sums[i]**(1/(m-1))``,
    recomputes the bracket and folds the new row-sum ratios into the
    eigenvector accumulator.  The new bracket is nested inside the old one.
    A constant-row-sum state is a fixed point (up to rounding).
    """
    m = state.tensor.order
    scaling = state.sums ** (1.0 / (m - 1))
    rescaled = diagonal_similarity(state.tensor, scaling)
    return _state_from(rescaled, state.accumulator, state.k + 1)


def residual(a: DenseTensor, value: float, vector) -> float:
    """Infinity norm of ``contract(a, v) - value * v**(m-1)``."""
    vec = np.asarray(vector, dtype=float)
    defect = contract(a, vec) - value * vec ** (a.order - 1)
    return float(np.max(np.abs(defect)))


def contraction_factor(state: IterationState) -> float:
    """Certified bound on the gap shrink factor of the next sweep.

    Returns ``f`` in [0, 1] with ``next_gap <= f * gap``.  The bound pits
    the rows that will carry the extreme row sums after the sweep against
    each other: with ``s``/``t`` those rows (lowest index on ties), ``J``
    the index tuples where row ``s`` carries at least the normalized weight
    of row ``t``, the factor is one minus the complementary mass
    ``(sum of a[s, tau] off J + sum of a[t, tau] on J) / upper``.
    Undefined (raises) when the row sums are already constant.
    """
    if not state.upper > state.lower:
        raise ValueError("row sums are constant; contraction factor is undefined")
    tensor, sums = state.tensor, state.sums
    m = tensor.order
    scaling = sums ** (1.0 / (m - 1))
    next_sums = contract(tensor, scaling) / sums
    s = int(np.argmax(next_sums))
    t = int(np.argmin(next_sums))
    row_s = tensor.data[s].reshape(-1)
    row_t = tensor.data[t].reshape(-1)
    on_j = row_s / sums[s] >= row_t / sums[t]
    mass = row_s[~on_j].sum() + row_t[on_j].sum()
    return float(1.0 - mass / state.upper)


def solve(b: DenseTensor, config: SolverConfig | None = None) -> SolveReport:
    """Run the balancing iteration on ``b`` until the bracket closes.

    Stops when the gap drops to ``config.tol`` or after ``config.max_iter``
    sweeps; running out of sweeps is reported with ``converged=False``
    rather than raised, since reducible inputs may legitimately stall.
    The residual is evaluated on the shifted input tensor, against which
    the accumulator is an (approximate) eigenvector.
    """
    cfg = config if config is not None else SolverConfig()
    state = init_state(b, cfg)
    shifted = state.tensor
    trace = [_trace_row(state)] if cfg.trace else []
    while state.gap > cfg.tol and state.k < cfg.max_iter:
        state = step(state)
        if cfg.trace:
            trace.append(_trace_row(state))
    gap = state.gap
    rho_shifted = 0.5 * (state.upper + state.lower)
    return SolveReport(
        rho_shifted=rho_shifted,
        rho=rho_shifted - cfg.alpha,
        eigenvector=state.accumulator,
        converged=gap <= cfg.tol,
        iterations=state.k,
        lower=state.lower,
        upper=state.upper,
        final_gap=gap,
        residual=residual(shifted, rho_shifted, state.accumulator),
        trace=trace,
    )


def write_trace_csv(trace: list[TraceRow], dest: Union[str, os.PathLike, IO[str]]) -> None:
    """Write trace rows as CSV with header ``k,r,R,gap,mid`` (6 significant digits)."""
    lines = ["k,r,R,gap,mid"]
    for row in trace:
        lines.append(
            f"{row.k},{row.lower:.6g},{row.upper:.6g},{row.gap:.6g},{row.midpoint:.6g}"
        )
    text = "\n".join(lines) + "\n"
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        with open(dest, "w", encoding="utf-8") as handle:
            handle.write(text)
