"""Irreducibility analysis for nonnegative tensors.

A tensor is reducible when some nonempty proper index subset ``I`` has
``a[i1, i2, ..., im] = 0`` for every ``i1`` in ``I`` and every ``i2..im``
entirely outside ``I``; irreducible otherwise.  Two independent deciders
live here: support propagation (fast, any dimension) and exhaustive subset
search (exact by construction, small dimensions), plus the strict-domination
probe used by the property tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .tensor import DenseTensor, add_identity_shift, contract

# 2**n - 2 subsets get scanned; past this, use irreducible_iterative.
BRUTE_FORCE_DIM_CAP = 20


@dataclass(frozen=True)
class IrreducibilityVerdict:
    """Verdict plus, when reducible, a 1-based witness subset.

    The witness is a nonempty proper index subset whose rows vanish on all
    index tuples outside the subset; it can be checked directly against the
    tensor entries.
    """

    irreducible: bool
    witness: Optional[tuple[int, ...]] = None


def _is_reducing(b: DenseTensor, inside: tuple[int, ...]) -> bool:
    """Check the zero pattern for a candidate subset (0-based indices)."""
    outside = [i for i in range(b.dim) if i not in set(inside)]
    if not inside or not outside:
        return False
    pick = np.ix_(*([outside] * (b.order - 1)))
    return all(not np.any(b.data[i][pick]) for i in inside)


def _reachable(positive: np.ndarray, start: int, n: int, m: int) -> set[int]:
    """Grow the support from ``{start}``: a row joins once one of its
    positive index tuples lies entirely inside the current set."""
    support = {start}
    while len(support) < n:
        pick = np.ix_(*([sorted(support)] * (m - 1)))
        added = {
            i for i in range(n) if i not in support and bool(positive[i][pick].any())
        }
        if not added:
            break
        support |= added
    return support


def irreducible_iterative(b: DenseTensor) -> IrreducibilityVerdict:
    """Decide irreducibility by support propagation.

    The nonnegative iteration ``x -> (b + identity) x**(m-1)`` moves the
    support of ``x`` exactly as ``_reachable`` does, and the support of any
    nonzero start contains a singleton, so the tensor is irreducible iff
    every singleton start reaches full support.  A stalled start certifies
    reducibility: the complement of its reachable set is a witness (the
    smallest such complement is returned, and re-verified before return).
    """
    n, m = b.dim, b.order
    positive = b.data > 0
    witnesses = []
    for start in range(n):
        reached = _reachable(positive, start, n, m)
        if len(reached) < n:
            witnesses.append(tuple(sorted(set(range(n)) - reached)))
    if not witnesses:
        return IrreducibilityVerdict(irreducible=True)
    witness = min(witnesses)
    if not _is_reducing(b, witness):
        raise AssertionError(f"internal error: unsound witness {witness}")
    return IrreducibilityVerdict(
        irreducible=False, witness=tuple(i + 1 for i in witness)
    )


def _proper_subsets_lex(n: int):
    """Nonempty proper subsets of ``range(n)`` as tuples, lexicographically."""

    def extend(prefix: tuple[int, ...], start: int):
        for j in range(start, n):
            subset = prefix + (j,)
            if len(subset) < n:
                yield subset
                yield from extend(subset, j + 1)

    yield from extend((), 0)


def reducible_bruteforce(b: DenseTensor) -> IrreducibilityVerdict:
    """Decide irreducibility by scanning all nonempty proper index subsets.

    Exact by definition; capped at dimension ``BRUTE_FORCE_DIM_CAP``.  When
    reducible, returns the lexicographically smallest reducing subset.
    """
    n, m = b.dim, b.order
    if n > BRUTE_FORCE_DIM_CAP:
        raise ValueError(
            f"subset scan is capped at dim {BRUTE_FORCE_DIM_CAP} (got {n}); "
            "use irreducible_iterative instead"
        )
    if n == 1:
        return IrreducibilityVerdict(irreducible=True)

    # Bitmask per index tuple (which indices appear in it), then per row the
    # masks of its positive tuples: a subset reduces iff every positive tuple
    # of each inside row touches the subset.
    flat = np.arange(n ** (m - 1), dtype=np.int64)
    tuple_masks = np.zeros_like(flat)
    remainder = flat
    for _ in range(m - 1):
        remainder, digit = np.divmod(remainder, n)
        tuple_masks |= np.int64(1) << digit
    positive = b.data.reshape(n, -1) > 0
    row_masks = [np.unique(tuple_masks[positive[i]]) for i in range(n)]

    for subset in _proper_subsets_lex(n):
        subset_mask = 0
        for i in subset:
            subset_mask |= 1 << i
        if all((row_masks[i] & subset_mask).all() for i in subset):
            return IrreducibilityVerdict(
                irreducible=False, witness=tuple(i + 1 for i in subset)
            )
    return IrreducibilityVerdict(irreducible=True)


def domination_iterates(b: DenseTensor, x, y) -> bool:
    """Strict-domination probe for the shifted iteration.

    Starting from ``x >= y`` (componentwise, not equal, both nonnegative),
    runs ``n - 1`` steps of ``v -> (b + identity) v**(m-1)`` on both and
    reports whether the x-iterate strictly dominates the y-iterate in every
    component.  True whenever ``b`` is irreducible; may be False otherwise.

    Both iterates are divided by a common factor each step, which leaves
    every comparison unchanged but avoids overflow for larger ``n``.
    """
    xv = np.asarray(x, dtype=float)
    yv = np.asarray(y, dtype=float)
    if xv.shape != (b.dim,) or yv.shape != (b.dim,):
        raise ValueError(f"x and y must have length {b.dim}")
    if (xv < 0).any() or (yv < 0).any():
        raise ValueError("x and y must be nonnegative")
    if (xv < yv).any():
        raise ValueError("x must dominate y componentwise")
    if np.array_equal(xv, yv):
        raise ValueError("x and y must differ somewhere")
    shifted = add_identity_shift(b, 1.0)
    for _ in range(b.dim - 1):
        xv = contract(shifted, xv)
        yv = contract(shifted, yv)
        scale = xv.max()
        xv /= scale
        yv /= scale
    return bool((xv > yv).all())
