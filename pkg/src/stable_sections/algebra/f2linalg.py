"""Exact linear algebra over the two-element field.

Matrices are stored row-major with every row packed into little-endian 64-bit
words, so elimination reduces to vectorised XORs of whole rows. Vectors are
plain ``uint8`` arrays of zeros and ones.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from stable_sections.errors import DimensionMismatchError

WORD_BITS = 64
_WORD = np.dtype("<u8")
_ONE = np.uint64(1)

F2Vector = NDArray[np.uint8]


def _word_count(cols: int) -> int:
    return (cols + WORD_BITS - 1) // WORD_BITS


def _pack(dense: NDArray[np.uint8]) -> NDArray[np.uint64]:
    """Pack a dense 0/1 matrix into rows of 64-bit words."""
    rows, cols = dense.shape
    words = _word_count(cols)
    if rows == 0 or words == 0:
        return np.zeros((rows, words), dtype=_WORD)
    padded = np.zeros((rows, words * WORD_BITS), dtype=np.uint8)
    padded[:, :cols] = dense & 1
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view(_WORD).reshape(rows, words)


def _unpack(bits: NDArray[np.uint64], cols: int) -> NDArray[np.uint8]:
    rows, words = bits.shape
    if rows == 0 or cols == 0:
        return np.zeros((rows, cols), dtype=np.uint8)
    as_bytes = np.ascontiguousarray(bits, dtype=_WORD).view(np.uint8).reshape(rows, words * 8)
    return np.unpackbits(as_bytes, axis=1, bitorder="little")[:, :cols]


def as_vector(values: ArrayLike) -> F2Vector:
    """Coerce anything array-like into a 1-D F2 vector."""
    return (np.asarray(values, dtype=np.int64).reshape(-1) & 1).astype(np.uint8)


class F2Matrix:
    """Immutable matrix over F2 with bit-packed rows."""

    __slots__ = ("rows", "cols", "_bits")

    def __init__(self, rows: int, cols: int, bits: NDArray[np.uint64] | None = None) -> None:
        if rows < 0 or cols < 0:
            raise DimensionMismatchError(f"Negative matrix shape ({rows}, {cols})")
        if bits is None:
            bits = np.zeros((rows, _word_count(cols)), dtype=_WORD)
        elif bits.shape != (rows, _word_count(cols)):
            raise DimensionMismatchError(
                f"Packed storage of shape {bits.shape} does not fit a {rows}x{cols} matrix"
            )
        stored = np.array(bits, dtype=_WORD, copy=True)
        stored.setflags(write=False)
        self.rows = rows
        self.cols = cols
        self._bits = stored

    # -- construction -------------------------------------------------------

    @classmethod
    def from_dense(cls, data: ArrayLike) -> F2Matrix:
        """Build from a 2-D array of integers (reduced mod 2)."""
        dense = np.asarray(data, dtype=np.int64)
        if dense.ndim != 2:
            raise DimensionMismatchError(f"Expected a 2-D array, got {dense.ndim} dimensions")
        return cls(dense.shape[0], dense.shape[1], _pack((dense & 1).astype(np.uint8)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> F2Matrix:
        """Build from a list of 0/1 rows; ``cols`` is required when there are no rows."""
        if not rows:
            return cls.zeros(0, cols or 0)
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise DimensionMismatchError("Rows have differing lengths")
        width = widths.pop()
        if cols is not None and cols != width:
            raise DimensionMismatchError(f"Rows have {width} entries, expected {cols}")
        return cls.from_dense(np.array(rows, dtype=np.int64).reshape(len(rows), width))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> F2Matrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> F2Matrix:
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def bits(self) -> NDArray[np.uint64]:
        """Read-only packed storage, one row of words per matrix row."""
        return self._bits

    def to_dense(self) -> NDArray[np.uint8]:
        return _unpack(self._bits, self.cols)

    def to_rows(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.to_dense()]

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"Entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix")
        word, shift = divmod(j, WORD_BITS)
        return int((self._bits[i, word] >> np.uint64(shift)) & _ONE)

    def is_zero(self) -> bool:
        return not bool(self._bits.any())

    def transpose(self) -> F2Matrix:
        return F2Matrix.from_dense(self.to_dense().T)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: F2Matrix) -> F2Matrix:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Cannot add {self.shape} and {other.shape}")
        return F2Matrix(self.rows, self.cols, self._bits ^ other._bits)

    def __matmul__(self, other: F2Matrix | ArrayLike) -> F2Matrix | F2Vector:  # type: ignore[override]
        if isinstance(other, F2Matrix):
            if self.cols != other.rows:
                raise DimensionMismatchError(f"Cannot multiply {self.shape} by {other.shape}")
            product = self.to_dense().astype(np.int64) @ other.to_dense().astype(np.int64)
            return F2Matrix.from_dense(product & 1)
        vector = as_vector(other)
        if vector.size != self.cols:
            raise DimensionMismatchError(
                f"Vector of length {vector.size} does not fit a matrix with {self.cols} columns"
            )
        return ((self.to_dense().astype(np.int64) @ vector.astype(np.int64)) & 1).astype(np.uint8)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._bits, other._bits))

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._bits.tobytes()))

    def __repr__(self) -> str:
        return f"F2Matrix({self.rows}x{self.cols}, {self.to_rows()})"


def rref(m: F2Matrix) -> tuple[F2Matrix, list[int]]:
    """Reduced row-echelon form and the strictly increasing pivot columns.

    The pivot for each column is the topmost remaining row with a one there.
    """
    work = np.array(m.bits, copy=True)
    pivots: list[int] = []
    row = 0
    for col in range(m.cols):
        if row == m.rows:
            break
        word, shift = divmod(col, WORD_BITS)
        column = (work[:, word] >> np.uint64(shift)) & _ONE
        hits = np.flatnonzero(column[row:])
        if hits.size == 0:
            continue
        pivot = row + int(hits[0])
        if pivot != row:
            work[[row, pivot]] = work[[pivot, row]]
            column[[row, pivot]] = column[[pivot, row]]
        mask = column.astype(bool)
        mask[row] = False
        if mask.any():
            work[mask] ^= work[row]
        pivots.append(col)
        row += 1
    return F2Matrix(m.rows, m.cols, work), pivots


def rank(m: F2Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: F2Matrix) -> list[F2Vector]:
    """Basis of {v : m v = 0}, one vector per non-pivot column, in column order."""
    reduced, pivots = rref(m)
    dense = reduced.to_dense()
    pivot_set = set(pivots)
    basis: list[F2Vector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = np.zeros(m.cols, dtype=np.uint8)
        v[free] = 1
        if pivots:
            v[pivots] = dense[: len(pivots), free]
        basis.append(v)
    return basis


def solve(m: F2Matrix, b: ArrayLike) -> F2Vector | None:
    """A solution of m x = b, or ``None`` when the system is inconsistent."""
    rhs = as_vector(b)
    if rhs.size != m.rows:
        raise DimensionMismatchError(
            f"Right-hand side has length {rhs.size}, matrix has {m.rows} rows"
        )
    augmented = F2Matrix.from_dense(np.hstack([m.to_dense(), rhs.reshape(-1, 1)]))
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == m.cols:
        return None
    x = np.zeros(m.cols, dtype=np.uint8)
    if pivots:
        x[pivots] = reduced.to_dense()[: len(pivots), m.cols]
    return x


class EchelonBasis:
    """A subspace of F2^n grown one vector at a time.

    Each stored row has its leading one at a distinct pivot column, which makes
    membership tests a single sweep in pivot order.
    """

    def __init__(self, dimension: int, vectors: Iterable[ArrayLike] = ()) -> None:
        self.dimension = dimension
        self._rows: dict[int, F2Vector] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, v: ArrayLike) -> F2Vector:
        w = as_vector(v).copy()
        if w.size != self.dimension:
            raise DimensionMismatchError(
                f"Vector of length {w.size} in a space of dimension {self.dimension}"
            )
        for pivot in sorted(self._rows):
            if w[pivot]:
                w ^= self._rows[pivot]
        return w

    def contains(self, v: ArrayLike) -> bool:
        return not self.reduce(v).any()

    def add(self, v: ArrayLike) -> bool:
        """Add ``v``; returns False when it already lies in the span."""
        w = self.reduce(v)
        nonzero = np.flatnonzero(w)
        if nonzero.size == 0:
            return False
        self._rows[int(nonzero[0])] = w
        return True
