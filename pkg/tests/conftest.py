"""Shared fixtures and independent test-side oracles.

The helpers here recompute results with plain scalar loops so the tests
never validate the library against its own code paths.
"""

import itertools

import numpy as np
import pytest

from specrad import DenseTensor

# Golden 3x3x3 regression tensor: known spectral radius, eigenvector and
# per-sweep bound trace (frozen below).
GOLDEN_RHO = 5.79262
GOLDEN_RHO_SHIFTED = 6.79262
GOLDEN_EIGENVECTOR = (0.46224, 0.57681, 0.593515)

# Frozen reference trace rows (k, lower, upper, gap, midpoint), 6 significant
# digits, k counted from 1 for the initial row sums.
GOLDEN_TRACE = {
    1: (4.72, 10.55, 5.83, 7.635),
    2: (5.24894, 8.89712, 3.64818, 7.07303),
    3: (5.65898, 8.2097, 2.55071, 6.93434),
    4: (5.96904, 7.7527, 1.78366, 6.86087),
    5: (6.19911, 7.45402, 1.25491, 6.82656),
    6: (6.36745, 7.25147, 0.88402, 6.80946),
}


def golden_b() -> DenseTensor:
    data = np.zeros((3, 3, 3))
    data[0, 1, 1] = 3.72
    data[1, 0, 0] = 9.02
    data[2, 0, 0] = 9.55
    return DenseTensor(data)


def golden_file_text() -> str:
    return "3 3\n1 2 2 3.72\n2 1 1 9.02\n3 1 1 9.55\n"


@pytest.fixture
def golden():
    return golden_b()


def sparse_tensor(order: int, dim: int, seed: int, density: float = 0.3) -> DenseTensor:
    """Seeded nonnegative tensor with roughly ``density`` nonzero entries."""
    rng = np.random.default_rng(seed)
    shape = (dim,) * order
    values = rng.uniform(0.0, 10.0, size=shape)
    mask = rng.random(size=shape) < density
    return DenseTensor(values * mask)


def positive_matrix(dim: int, seed: int) -> DenseTensor:
    rng = np.random.default_rng(seed)
    return DenseTensor(rng.uniform(0.1, 10.0, size=(dim, dim)))


def contract_loops(t: DenseTensor, x) -> np.ndarray:
    """Scalar-loop contraction, independent of the library's vectorized path."""
    n, m = t.dim, t.order
    x = np.asarray(x, dtype=float)
    out = np.zeros(n)
    for i in range(n):
        total = 0.0
        for tup in itertools.product(range(n), repeat=m - 1):
            term = t.data[(i,) + tup]
            for j in tup:
                term = term * x[j]
            total += term
        out[i] = total
    return out


def reducing_subset_ok(t: DenseTensor, witness_1based) -> bool:
    """Entry-by-entry zero-pattern check of a claimed reducing subset."""
    n, m = t.dim, t.order
    inside = {i - 1 for i in witness_1based}
    if not inside or len(inside) >= n:
        return False
    outside = [i for i in range(n) if i not in inside]
    for i in inside:
        for tup in itertools.product(outside, repeat=m - 1):
            if t.data[(i,) + tup] != 0:
                return False
    return True


def contraction_factor_loops(t: DenseTensor, sums) -> float:
    """Enumeration oracle for the certified gap-shrink factor.

    Recomputes the post-sweep row sums by scalar loops, picks the rows that
    will carry the new extremes (lowest index on ties), and enumerates the
    index-tuple split explicitly.
    """
    n, m = t.dim, t.order
    sums = np.asarray(sums, dtype=float)
    next_sums = []
    for i in range(n):
        total = 0.0
        for tup in itertools.product(range(n), repeat=m - 1):
            term = float(t.data[(i,) + tup])
            for j in tup:
                term *= sums[j] ** (1.0 / (m - 1))
            total += term
        next_sums.append(total / sums[i])
    s = min(range(n), key=lambda i: (-next_sums[i], i))
    tt = min(range(n), key=lambda i: (next_sums[i], i))
    mass = 0.0
    for tup in itertools.product(range(n), repeat=m - 1):
        a_s = float(t.data[(s,) + tup])
        a_t = float(t.data[(tt,) + tup])
        if a_s / sums[s] >= a_t / sums[tt]:
            mass += a_t
        else:
            mass += a_s
    return 1.0 - mass / float(sums.max())
