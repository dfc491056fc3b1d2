"""Dense nonnegative tensors and the multilinear operations the solvers build on.

A tensor of order ``m`` and dimension ``n`` is a cubical multiarray with
``n**m`` entries ``a[i1, ..., im]``.  Everything here treats tensors as
immutable values: operations return fresh tensors and never mutate inputs,
so instances are safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Guard for constructors that allocate from user-supplied sizes (roughly
# 400 MB of float64 entries).
MAX_DENSE_ENTRIES = 50_000_000


class DenseTensor:
    """Order-m, dimension-n nonnegative tensor stored as a dense ndarray.

    The backing array has shape ``(n,) * m`` in C order, so the flat view
    ``entries`` enumerates entries lexicographically by multi-index.
    Construction rejects negative, NaN and infinite entries outright; the
    spectral theory used downstream assumes nonnegativity.
    """

    def __init__(self, data):
        arr = np.array(data, dtype=float)
        if arr.ndim < 2:
            raise ValueError(f"tensor order must be >= 2, got array of rank {arr.ndim}")
        n = arr.shape[0]
        if n < 1 or any(s != n for s in arr.shape):
            raise ValueError(f"tensor must be cubical, got shape {arr.shape}")
        if not np.isfinite(arr).all():
            raise ValueError("tensor entries must be finite")
        if (arr < 0).any():
            raise ValueError("tensor entries must be nonnegative")
        arr.flags.writeable = False
        self._data = arr

    @property
    def order(self) -> int:
        return self._data.ndim

    @property
    def dim(self) -> int:
        return self._data.shape[0]

    @property
    def data(self) -> np.ndarray:
        """Read-only ndarray of shape ``(dim,) * order``."""
        return self._data

    @property
    def entries(self) -> np.ndarray:
        """Flat read-only view, lexicographic in the multi-index."""
        return self._data.reshape(-1)

    def __add__(self, other):
        if not isinstance(other, DenseTensor):
            return NotImplemented
        if other.data.shape != self._data.shape:
            raise ValueError("cannot add tensors of different shapes")
        return DenseTensor(self._data + other.data)

    def __eq__(self, other):
        if not isinstance(other, DenseTensor):
            return NotImplemented
        return self._data.shape == other.data.shape and bool(
            np.array_equal(self._data, other.data)
        )

    def __repr__(self):
        return f"DenseTensor(order={self.order}, dim={self.dim})"


@dataclass(frozen=True, eq=False)
class EigenPair:
    """An eigenvalue and its eigenvector; the vector must not be all zero."""

    value: float
    vector: np.ndarray

    def __post_init__(self):
        vec = np.asarray(self.vector, dtype=float)
        if vec.ndim != 1 or not np.any(vec):
            raise ValueError("eigenvector must be a nonzero 1-d vector")
        object.__setattr__(self, "vector", vec)


def _check_vector(a: DenseTensor, x, name: str = "x") -> np.ndarray:
    vec = np.asarray(x, dtype=float)
    if vec.shape != (a.dim,):
        raise ValueError(f"{name} must have length {a.dim}, got shape {vec.shape}")
    if not np.isfinite(vec).all():
        raise ValueError(f"{name} must have finite entries")
    return vec


def contract(a: DenseTensor, x) -> np.ndarray:
    """Contract the tensor with ``x`` along every axis but the first.

    Returns the length-n vector with components
    ``sum over (i2..im) of a[i, i2, ..., im] * x[i2] * ... * x[im]``,
    the multilinear analogue of a matrix-vector product (and exactly that
    product when the order is 2).
    """
    vec = _check_vector(a, x)
    out = a.data
    for _ in range(a.order - 1):
        out = out @ vec
    return out


def row_sums(a: DenseTensor) -> np.ndarray:
    """Per-row entry sums; equals ``contract(a, ones)`` by construction.

    The minimum and maximum row sum bracket the spectral radius of any
    nonnegative tensor, which is what makes these the natural certificate
    tracked by the balancing solver.
    """
    return contract(a, np.ones(a.dim))


def diagonal_similarity(a: DenseTensor, d) -> DenseTensor:
    """Rescale by a positive diagonal, preserving the spectrum.

    Entry ``(i1, ..., im)`` becomes
    ``a[i1, ..., im] * d[i2] * ... * d[im] / d[i1]**(m-1)``.
    Eigenvalues are invariant; an eigenvector ``x`` of ``a`` corresponds to
    the eigenvector ``x / d`` of the result.
    """
    vec = np.asarray(d, dtype=float)
    if vec.shape != (a.dim,):
        raise ValueError(f"scaling vector must have length {a.dim}, got shape {vec.shape}")
    if not np.isfinite(vec).all() or (vec <= 0).any():
        raise ValueError("scaling vector entries must be finite and strictly positive")
    m, n = a.order, a.dim
    out = np.array(a.data, copy=True)
    for axis in range(1, m):
        shape = [1] * m
        shape[axis] = n
        out *= vec.reshape(shape)
    shape = [1] * m
    shape[0] = n
    out /= (vec ** (m - 1)).reshape(shape)
    return DenseTensor(out)


def add_identity_shift(b: DenseTensor, alpha: float) -> DenseTensor:
    """Add ``alpha`` at every superdiagonal position ``(i, i, ..., i)``.

    The superdiagonal unit tensor acts as ``x -> x**(m-1)`` componentwise,
    so this shifts every eigenvalue of ``b`` by exactly ``alpha``.
    """
    if not alpha >= 0:
        raise ValueError(f"shift must be nonnegative, got {alpha}")
    out = np.array(b.data, copy=True)
    idx = np.arange(b.dim)
    out[(idx,) * b.order] += alpha
    return DenseTensor(out)


def identity_tensor(order: int, dim: int, weight: float = 1.0) -> DenseTensor:
    """Tensor with ``weight`` on the superdiagonal and zeros elsewhere."""
    return add_identity_shift(DenseTensor(np.zeros((dim,) * order)), weight)


def random_tensor(
    order: int,
    dim: int,
    seed: int,
    high: float = 10.0,
    max_entries: int = MAX_DENSE_ENTRIES,
) -> DenseTensor:
    """Seeded tensor with entries drawn i.i.d. uniform on ``[0, high]``.

    The same ``(order, dim, seed)`` always yields a bit-identical tensor.
    Raises if ``dim**order`` would exceed ``max_entries``.
    """
    if order < 2:
        raise ValueError(f"order must be >= 2, got {order}")
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    count = dim**order
    if count > max_entries:
        raise ValueError(
            f"random tensor with dim={dim}, order={order} needs {count} entries, "
            f"exceeding the cap of {max_entries}"
        )
    rng = np.random.default_rng(seed)
    return DenseTensor(rng.uniform(0.0, high, size=(dim,) * order))
