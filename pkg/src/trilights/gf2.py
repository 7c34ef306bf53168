"""Bit-packed linear algebra over GF(2).

Vectors and matrix rows are int bitsets: bit i is coordinate i.  The
elimination kernel has two interchangeable lanes selected at import:

* ``compiled`` — Cython core (:mod:`trilights._gf2core`) on packed
  uint64 words, GIL-free;
* ``pure`` — plain Python ints (:mod:`trilights._gf2pure`).

Both produce bit-for-bit identical results (first nonzero row in column
order is the pivot).  Set ``TRILIGHTS_BACKEND=pure`` or ``=compiled`` to
force a lane; the default prefers the compiled core when importable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Optional

from . import _gf2pure
from .errors import ShapeError

try:
    from . import _gf2core
except ImportError:
    _gf2core = None


def _select_backend() -> str:
    forced = os.environ.get("TRILIGHTS_BACKEND", "").strip().lower()
    if forced == "pure":
        return "pure"
    if forced == "compiled":
        if _gf2core is None:
            raise ImportError(
                "TRILIGHTS_BACKEND=compiled but trilights._gf2core is not built"
            )
        return "compiled"
    return "compiled" if _gf2core is not None else "pure"


BACKEND = _select_backend()


def active_backend() -> str:
    """Name of the elimination lane in use ('compiled' or 'pure')."""
    return BACKEND


def _reduce_compiled(
    rows: list[int], n_cols: int, pivot_limit: int, full: bool
) -> tuple[list[int], list[int]]:
    import numpy as np

    n_words = max(1, (n_cols + 63) >> 6)
    m = np.empty((len(rows), n_words), dtype="<u8")
    nbytes = n_words * 8
    for i, r in enumerate(rows):
        m[i] = np.frombuffer(r.to_bytes(nbytes, "little"), dtype="<u8")
    pivots = _gf2core.rref_inplace(m, n_cols, pivot_limit, full)
    out = [int.from_bytes(m[i].tobytes(), "little") for i in range(len(rows))]
    return out, list(pivots)


def _reduce(
    rows: list[int], n_cols: int, pivot_limit: int, full: bool, backend: Optional[str] = None
) -> tuple[list[int], list[int]]:
    lane = backend or BACKEND
    if lane == "compiled":
        if _gf2core is None:
            raise ValueError("compiled backend requested but the extension is unavailable")
        return _reduce_compiled(rows, n_cols, pivot_limit, full)
    if lane != "pure":
        raise ValueError(f"unknown backend {lane!r}; expected 'pure' or 'compiled'")
    return _gf2pure.rref_words(rows, n_cols, pivot_limit, full)


@dataclass(frozen=True)
class BitVector:
    """Vector over GF(2); bit i of ``bits`` is coordinate i."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ShapeError(f"negative length {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ShapeError("bits outside declared length")

    @classmethod
    def from_ints(cls, values: Iterable[int]) -> "BitVector":
        bits = 0
        n = 0
        for v in values:
            if v & 1:
                bits |= 1 << n
            n += 1
        return cls(n, bits)

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        """Parse '0'/'1' text; character i is coordinate i."""
        if set(s) - {"0", "1"}:
            raise ValueError(f"bit string may contain only 0/1: {s!r}")
        return cls.from_ints(int(ch) for ch in s)

    def get(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise ShapeError(f"coordinate {i} outside length {self.length}")
        return (self.bits >> i) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        """Indices of nonzero coordinates, ascending."""
        return tuple(i for i in range(self.length) if (self.bits >> i) & 1)

    def to_string(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.length))

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ShapeError(f"length mismatch: {self.length} vs {other.length}")
        return BitVector(self.length, self.bits ^ other.bits)

    def is_zero(self) -> bool:
        return self.bits == 0


@dataclass(frozen=True)
class BitMatrix:
    """Row-major matrix over GF(2); ``row_bits[i]`` is row i as a bitset."""

    rows: int
    cols: int
    row_bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.row_bits) != self.rows:
            raise ShapeError("row count does not match row data")
        limit = 1 << self.cols
        for r in self.row_bits:
            if r < 0 or r >= limit:
                raise ShapeError("row bits outside declared width")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BitMatrix":
        packed = [BitVector.from_ints(r) for r in rows]
        if not packed:
            raise ShapeError("empty matrix")
        width = packed[0].length
        if any(v.length != width for v in packed):
            raise ShapeError("ragged rows")
        return cls(len(packed), width, tuple(v.bits for v in packed))

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.row_bits[i])

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise ShapeError(f"entry ({i},{j}) outside {self.rows}x{self.cols}")
        return (self.row_bits[i] >> j) & 1

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.cols):
            bits = 0
            for i in range(self.rows):
                if (self.row_bits[i] >> j) & 1:
                    bits |= 1 << i
            cols.append(bits)
        return BitMatrix(self.cols, self.rows, tuple(cols))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self.row_bits == self.transpose().row_bits


@dataclass(frozen=True)
class EliminationResult:
    """Outcome of row reduction, with the transform needed to solve.

    ``transform`` is the product E of the row operations applied, so
    ``E @ original = rref``; solving A x = c for fresh right-hand sides
    only needs E c (see :func:`solve_using`).
    """

    rank: int
    pivot_cols: tuple[int, ...]
    rref: BitMatrix
    transform: BitMatrix

    def __post_init__(self) -> None:
        if self.rank != len(self.pivot_cols):
            raise ShapeError("rank must equal pivot count")


def mat_vec(a: BitMatrix, x: BitVector) -> BitVector:
    """A @ x over GF(2): coordinate j is the parity of row_j & x."""
    if a.cols != x.length:
        raise ShapeError(f"matrix has {a.cols} cols, vector length {x.length}")
    bits = 0
    for i, row in enumerate(a.row_bits):
        if (row & x.bits).bit_count() & 1:
            bits |= 1 << i
    return BitVector(a.rows, bits)


def row_reduce(a: BitMatrix, backend: Optional[str] = None) -> EliminationResult:
    """Reduced row-echelon form of ``a``, plus rank/pivots/transform.

    Deterministic: pivots are taken in column order, first matching row
    wins.  The transform is accumulated by augmenting with an identity
    block, so one reduction supports any number of later solves.
    """
    if a.rows == 0 or a.cols == 0:
        raise ShapeError("empty matrix")
    aug = [bits | (1 << (a.cols + i)) for i, bits in enumerate(a.row_bits)]
    reduced, pivots = _reduce(aug, a.cols + a.rows, a.cols, True, backend)
    mask = (1 << a.cols) - 1
    rref = BitMatrix(a.rows, a.cols, tuple(r & mask for r in reduced))
    transform = BitMatrix(a.rows, a.rows, tuple(r >> a.cols for r in reduced))
    return EliminationResult(len(pivots), tuple(pivots), rref, transform)


def solve_using(elim: EliminationResult, c: BitVector) -> Optional[BitVector]:
    """Particular solution of A x = c given ``row_reduce(A)``; None if none.

    Free variables are set to zero, so the answer is deterministic.
    """
    rref = elim.rref
    if rref.rows != c.length:
        raise ShapeError(f"matrix has {rref.rows} rows, vector length {c.length}")
    ec = mat_vec(elim.transform, c)
    # Zero rows of the RREF demand zero right-hand side.
    if ec.bits >> elim.rank:
        return None
    bits = 0
    for i, col in enumerate(elim.pivot_cols):
        if (ec.bits >> i) & 1:
            bits |= 1 << col
    return BitVector(rref.cols, bits)


def solve(a: BitMatrix, c: BitVector, backend: Optional[str] = None) -> Optional[BitVector]:
    """Particular solution of A x = c, or None when c is not reachable."""
    if a.rows != c.length:
        raise ShapeError(f"matrix has {a.rows} rows, vector length {c.length}")
    return solve_using(row_reduce(a, backend), c)


def null_space(a: BitMatrix, backend: Optional[str] = None) -> list[BitVector]:
    """Basis of {x : A x = 0}, one vector per free column, ascending."""
    return null_space_using(row_reduce(a, backend))


def null_space_using(elim: EliminationResult) -> list[BitVector]:
    rref = elim.rref
    pivot_set = set(elim.pivot_cols)
    basis = []
    for f in range(rref.cols):
        if f in pivot_set:
            continue
        bits = 1 << f
        for i, col in enumerate(elim.pivot_cols):
            if (rref.row_bits[i] >> f) & 1:
                bits |= 1 << col
        basis.append(BitVector(rref.cols, bits))
    return basis


def det_parity(a: BitMatrix, backend: Optional[str] = None) -> int:
    """Determinant mod 2: 1 iff a square matrix has full rank."""
    if a.rows != a.cols:
        raise ShapeError(f"determinant needs a square matrix, got {a.rows}x{a.cols}")
    _, pivots = _reduce(list(a.row_bits), a.cols, a.cols, False, backend)
    return 1 if len(pivots) == a.rows else 0


def rank(a: BitMatrix, backend: Optional[str] = None) -> int:
    """GF(2) rank via echelon reduction (no transform bookkeeping)."""
    _, pivots = _reduce(list(a.row_bits), a.cols, a.cols, False, backend)
    return len(pivots)
