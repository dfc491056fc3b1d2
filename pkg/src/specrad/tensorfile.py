"""Plain-text tensor files.

Format::

    m n
    i1 i2 ... im value
    ...

The header gives order and dimension; every following non-blank line sets
one entry at a 1-based multi-index.  Omitted positions are zero and a
repeated index tuple is a hard parse error (never last-one-wins).
"""

from __future__ import annotations

import os
from typing import IO, Union

import numpy as np

from .tensor import MAX_DENSE_ENTRIES, DenseTensor

PathOrFile = Union[str, os.PathLike, IO[str]]


class ParseError(ValueError):
    """Malformed tensor file; ``lineno`` is the offending 1-based line."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _parse_header(lines) -> tuple[int, int]:
    if not lines:
        raise ParseError(1, "empty file, expected header 'm n'")
    parts = lines[0].split()
    if len(parts) != 2:
        raise ParseError(1, f"expected header 'm n' with two integers, got {lines[0]!r}")
    try:
        order, dim = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(1, f"header fields must be integers, got {lines[0]!r}") from None
    if order < 2:
        raise ParseError(1, f"order must be >= 2, got {order}")
    if dim < 1:
        raise ParseError(1, f"dimension must be >= 1, got {dim}")
    return order, dim


def read_tensor(source: PathOrFile, max_entries: int = MAX_DENSE_ENTRIES) -> DenseTensor:
    """Parse a tensor from a path or text file object.

    Raises :class:`ParseError` (with the line number) on malformed input.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, encoding="utf-8") as handle:
            text = handle.read()

    lines = text.splitlines()
    order, dim = _parse_header(lines)
    if dim**order > max_entries:
        raise ParseError(1, f"{dim}**{order} entries exceed the cap of {max_entries}")

    data = np.zeros((dim,) * order)
    seen: set[tuple[int, ...]] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != order + 1:
            raise ParseError(
                lineno, f"expected {order} indices and a value, got {len(parts)} fields"
            )
        try:
            index = tuple(int(p) for p in parts[:order])
        except ValueError:
            raise ParseError(lineno, f"indices must be integers: {line!r}") from None
        for i in index:
            if not 1 <= i <= dim:
                raise ParseError(lineno, f"index {i} out of range 1..{dim}")
        try:
            value = float(parts[order])
        except ValueError:
            raise ParseError(lineno, f"bad value field {parts[order]!r}") from None
        if not np.isfinite(value):
            raise ParseError(lineno, f"value must be finite, got {parts[order]}")
        if value < 0:
            raise ParseError(lineno, f"value must be nonnegative, got {value}")
        if index in seen:
            raise ParseError(lineno, f"duplicate index tuple {index}")
        seen.add(index)
        data[tuple(i - 1 for i in index)] = value
    return DenseTensor(data)


def write_tensor(tensor: DenseTensor, dest: PathOrFile) -> None:
    """Write the format above, listing nonzero entries in lexicographic order.

    Values are rendered with ``repr`` so a read back is bit-identical.
    """
    lines = [f"{tensor.order} {tensor.dim}"]
    nonzero = np.nonzero(tensor.data)
    for index in zip(*nonzero):
        value = float(tensor.data[index])
        coords = " ".join(str(i + 1) for i in index)
        lines.append(f"{coords} {value!r}")
    text = "\n".join(lines) + "\n"
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        with open(dest, "w", encoding="utf-8") as handle:
            handle.write(text)
