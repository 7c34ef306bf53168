"""Game semantics: configurations, pressing, solving, kernels.

A configuration is the lit/unlit state of all beta = n(n+1)/2 buttons; a
press set is the set of buttons pressed.  Pressing button i toggles i and
its neighbors, so pressing the set X sends configuration c to A x + c
over GF(2), where A is the button-press matrix and x the indicator of X.

String forms used across the CLI and service:

* configuration/press set: exactly beta characters over {0,1}, character
  i-1 is button i, so "010001" lights buttons 2 and 6;
* press set by ids: comma-separated 1-based button ids, "3,4".

Per-size matrices and their eliminations are cached process-wide; cache
population is race-free (one computation per size), and everything
cached is immutable, so concurrent readers need no locks.
"""

from __future__ import annotations

import os
import random
import threading
from dataclasses import dataclass
from typing import Optional

from . import board, gf2
from .board import Symmetry, button_count, check_size, geometry
from .errors import (
    FormatError,
    OracleRangeError,
    ShapeError,
    VerificationError,
)
from .gf2 import BitMatrix, BitVector, EliminationResult

DEFAULT_ENUM_CAP = 16
RNG_NAME = "mt19937"
ORACLE_MAX_SIZE = 4


def default_enum_cap() -> int:
    """Enumeration cap, overridable via the TRILIGHTS_ENUM_CAP env var."""
    raw = os.environ.get("TRILIGHTS_ENUM_CAP", "").strip()
    if not raw:
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise FormatError(f"TRILIGHTS_ENUM_CAP must be an integer, got {raw!r}") from None
    if cap < 0:
        raise FormatError(f"TRILIGHTS_ENUM_CAP must be >= 0, got {cap}")
    return cap


def _parse_bits(n: int, s: str, what: str) -> BitVector:
    beta = button_count(n)
    if len(s) != beta or set(s) - {"0", "1"}:
        raise FormatError(
            f"{what} for size {n} must be exactly {beta} characters of 0/1, got {s!r}"
        )
    return BitVector.from_string(s)


@dataclass(frozen=True)
class Configuration:
    """Lit state of a size-n board; bit j of ``state`` = button j+1 is lit."""

    n: int
    state: BitVector

    def __post_init__(self) -> None:
        if self.state.length != button_count(self.n):
            raise ShapeError(
                f"size-{self.n} configuration needs {button_count(self.n)} bits, "
                f"got {self.state.length}"
            )

    @classmethod
    def from_string(cls, n: int, s: str) -> "Configuration":
        return cls(n, _parse_bits(n, s, "configuration"))

    @classmethod
    def all_off(cls, n: int) -> "Configuration":
        return cls(n, BitVector(button_count(n)))

    def to_string(self) -> str:
        return self.state.to_string()

    def lit_ids(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self.state.support())

    def is_all_off(self) -> bool:
        return self.state.is_zero()


@dataclass(frozen=True)
class PressSet:
    """Set of pressed buttons on a size-n board; bit i = button i+1 pressed."""

    n: int
    mask: BitVector

    def __post_init__(self) -> None:
        if self.mask.length != button_count(self.n):
            raise ShapeError(
                f"size-{self.n} press set needs {button_count(self.n)} bits, "
                f"got {self.mask.length}"
            )

    @classmethod
    def from_string(cls, n: int, s: str) -> "PressSet":
        return cls(n, _parse_bits(n, s, "press set"))

    @classmethod
    def from_ids(cls, n: int, ids: str | list[int] | tuple[int, ...] | set[int]) -> "PressSet":
        """Build from 1-based button ids, either an iterable or text like "3,4"."""
        beta = button_count(n)
        if isinstance(ids, str):
            parts = [p.strip() for p in ids.split(",") if p.strip()]
            try:
                values = [int(p) for p in parts]
            except ValueError:
                raise FormatError(f"button list must be comma-separated ids, got {ids!r}") from None
        else:
            values = list(ids)
        bits = 0
        for v in values:
            if not 1 <= v <= beta:
                raise FormatError(f"button id {v} outside 1..{beta} for size {n}")
            if (bits >> (v - 1)) & 1:
                raise FormatError(f"duplicate button id {v}")
            bits |= 1 << (v - 1)
        return cls(n, BitVector(beta, bits))

    @classmethod
    def empty(cls, n: int) -> "PressSet":
        return cls(n, BitVector(button_count(n)))

    def to_string(self) -> str:
        return self.mask.to_string()

    def ids(self) -> tuple[int, ...]:
        """Pressed buttons as 1-based ids, ascending."""
        return tuple(i + 1 for i in self.mask.support())

    def ids_text(self) -> str:
        return ",".join(str(i) for i in self.ids())

    def weight(self) -> int:
        return self.mask.weight()

    def __xor__(self, other: "PressSet") -> "PressSet":
        if self.n != other.n:
            raise ShapeError(f"size mismatch: {self.n} vs {other.n}")
        return PressSet(self.n, self.mask ^ other.mask)


@dataclass(frozen=True)
class SolveReport:
    """Everything known about one solve: count, particular, canonical.

    ``solution_count`` is exact (2**dimension when solvable, else 0).
    ``enumerated`` is present only when the kernel dimension fits the
    enumeration cap; ``canonical`` is then the minimum-weight solution
    (ties broken by lexicographically smallest bitstring), otherwise it
    falls back to the particular solution.
    """

    n: int
    solvable: bool
    kernel_dimension: int
    solution_count: int
    particular: Optional[PressSet]
    canonical: Optional[PressSet]
    enumerated: Optional[tuple[PressSet, ...]]

    def to_json_dict(self) -> dict:
        """The wire form shared by the HTTP service and ``solve --json``."""
        return {
            "solvable": self.solvable,
            "kernelDimension": self.kernel_dimension,
            "solutionCount": self.solution_count,
            "canonical": list(self.canonical.ids()) if self.canonical else None,
            "particular": list(self.particular.ids()) if self.particular else None,
        }


@dataclass(frozen=True)
class _Context:
    n: int
    matrix: BitMatrix
    elimination: EliminationResult
    basis: tuple[BitVector, ...]


_contexts: dict[int, _Context] = {}
_dimensions: dict[int, int] = {}
_locks: dict[int, threading.Lock] = {}
_locks_guard = threading.Lock()


def _lock_for(n: int) -> threading.Lock:
    with _locks_guard:
        return _locks.setdefault(n, threading.Lock())


def _context(n: int) -> _Context:
    ctx = _contexts.get(n)
    if ctx is not None:
        return ctx
    with _lock_for(n):
        ctx = _contexts.get(n)
        if ctx is None:
            matrix = board.game_matrix(n)
            elim = gf2.row_reduce(matrix)
            basis = tuple(gf2.null_space_using(elim))
            ctx = _Context(n, matrix, elim, basis)
            _contexts[n] = ctx
            _dimensions[n] = len(basis)
    return ctx


def press(c: Configuration, x: PressSet) -> Configuration:
    """Configuration after pressing every button of x: A x + c over GF(2)."""
    if c.n != x.n:
        raise ShapeError(f"size mismatch: configuration n={c.n}, press set n={x.n}")
    ctx = _context(c.n)
    return Configuration(c.n, gf2.mat_vec(ctx.matrix, x.mask) ^ c.state)


def is_solvable(c: Configuration) -> bool:
    """True iff some press set turns every light off."""
    ctx = _context(c.n)
    return gf2.solve_using(ctx.elimination, c.state) is not None


def kernel_dimension(n: int) -> int:
    """Dimension of the kernel of the size-n game (number of free columns)."""
    check_size(n)
    ell = _dimensions.get(n)
    if ell is not None:
        return ell
    with _lock_for(n):
        ell = _dimensions.get(n)
        if ell is None:
            a = board.game_matrix(n)
            ell = a.cols - gf2.rank(a)
            _dimensions[n] = ell
    return ell


def kernel_basis(n: int) -> list[PressSet]:
    """Deterministic basis of the null sequences of the size-n game."""
    ctx = _context(n)
    return [PressSet(n, v) for v in ctx.basis]


def dimension_table(from_n: int, to_n: int) -> list[tuple[int, int]]:
    """(n, kernel dimension) for each n in [from_n, to_n], ascending.

    Sizes are independent, so with the compiled elimination core the
    work is spread over a thread pool; the pure lane runs serially
    (threads cannot overlap pure-Python elimination).
    """
    check_size(from_n)
    check_size(to_n)
    if from_n > to_n:
        raise ShapeError(f"empty range: from {from_n} to {to_n}")
    sizes = range(from_n, to_n + 1)
    if gf2.active_backend() == "compiled" and len(sizes) > 1:
        from concurrent.futures import ThreadPoolExecutor

        workers = min(len(sizes), os.cpu_count() or 1)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            dims = list(pool.map(kernel_dimension, sizes))
        return list(zip(sizes, dims))
    return [(n, kernel_dimension(n)) for n in sizes]


def enumerate_kernel(n: int, cap: int = DEFAULT_ENUM_CAP) -> Optional[list[PressSet]]:
    """All 2**dimension kernel elements, or None when over the cap.

    Elements are emitted in subset order of the basis (selector t's bit
    i picks basis vector i), so the empty set always comes first.  Every
    element is re-checked against the matrix before being returned.
    """
    if cap < 0:
        raise FormatError(f"enumeration cap must be >= 0, got {cap}")
    ctx = _context(n)
    ell = len(ctx.basis)
    if ell > cap:
        return None
    out = []
    for t in range(1 << ell):
        bits = 0
        for i in range(ell):
            if (t >> i) & 1:
                bits ^= ctx.basis[i].bits
        v = BitVector(ctx.matrix.cols, bits)
        if not gf2.mat_vec(ctx.matrix, v).is_zero():
            raise VerificationError(
                f"kernel enumeration produced a non-kernel element at n={n}, t={t}"
            )
        out.append(PressSet(n, v))
    return out


def solve_config(c: Configuration, enumerate_cap: int = DEFAULT_ENUM_CAP) -> SolveReport:
    """Full solve: particular solution, counts, and the canonical pick.

    When solvable the solution set is particular + kernel; if its size
    2**dimension fits the cap, all solutions are materialized, verified,
    and the canonical one chosen by (weight, bitstring) order.
    """
    if enumerate_cap < 0:
        raise FormatError(f"enumeration cap must be >= 0, got {enumerate_cap}")
    ctx = _context(c.n)
    ell = len(ctx.basis)
    particular_bits = gf2.solve_using(ctx.elimination, c.state)
    if particular_bits is None:
        return SolveReport(c.n, False, ell, 0, None, None, None)
    particular = PressSet(c.n, particular_bits)
    count = 1 << ell
    if ell > enumerate_cap:
        return SolveReport(c.n, True, ell, count, particular, particular, None)
    solutions = []
    for t in range(count):
        bits = particular_bits.bits
        for i in range(ell):
            if (t >> i) & 1:
                bits ^= ctx.basis[i].bits
        v = BitVector(ctx.matrix.cols, bits)
        if gf2.mat_vec(ctx.matrix, v).bits != c.state.bits:
            raise VerificationError(
                f"enumerated press set fails to solve the instance at n={c.n}, t={t}"
            )
        solutions.append(PressSet(c.n, v))
    if len({s.mask.bits for s in solutions}) != count:
        raise VerificationError(f"enumerated solutions are not distinct at n={c.n}")
    canonical = min(solutions, key=lambda s: (s.weight(), s.to_string()))
    return SolveReport(c.n, True, ell, count, particular, canonical, tuple(solutions))


def random_solvable(n: int, seed: int) -> Configuration:
    """Solvable-by-construction configuration: press a random set on all-off.

    The generator is Python's seeded Mersenne Twister (see RNG_NAME), so
    equal (n, seed) pairs always give the same configuration.
    """
    beta = button_count(n)
    rng = random.Random(seed)
    x = PressSet(n, BitVector(beta, rng.getrandbits(beta)))
    return press(Configuration.all_off(n), x)


def brute_force_solutions(c: Configuration) -> list[PressSet]:
    """Oracle: every solving press set, by exhaustive subset search.

    Deliberately avoids the linear algebra: each candidate subset is
    simulated button by button straight off the neighbor lists.  Bounded
    to n <= 4 (at most 1024 subsets).
    """
    if c.n > ORACLE_MAX_SIZE:
        raise OracleRangeError(
            f"exhaustive search is bounded to n <= {ORACLE_MAX_SIZE}, got {c.n}"
        )
    geo = geometry(c.n)
    beta = geo.beta
    out = []
    for subset in range(1 << beta):
        state = c.state.bits
        for i in range(beta):
            if (subset >> i) & 1:
                state ^= 1 << i
                for nb in geo.neighbors[i]:
                    state ^= 1 << nb
        if state == 0:
            out.append(PressSet(c.n, BitVector(beta, subset)))
    return out


def apply_symmetry(sym: Symmetry, v: Configuration | PressSet):
    """Transform a configuration or press set by a board symmetry."""
    perm = board.button_permutation(sym, v.n)
    if isinstance(v, Configuration):
        return Configuration(v.n, BitVector(v.state.length, board.permute_bits(v.state.bits, perm)))
    return PressSet(v.n, BitVector(v.mask.length, board.permute_bits(v.mask.bits, perm)))
