"""Coverings of the board by single buttons and adjacent pairs.

A covering partitions the buttons {1..beta} into singletons and pairs of
neighboring buttons.  The number of such coverings is odd exactly when
the button-press matrix is invertible over GF(2), so the parity check
here is a combinatorial cross-check of det_parity.

Counting is exhaustive and therefore bounded to small boards; the fast
path for parity at any size is the determinant.

Text form: semicolon-separated parts with braces, "{1,2};{3};{4}".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import board, gf2
from .board import button_count, check_size, geometry
from .errors import FormatError, OracleRangeError

COUNT_MAX_SIZE = 6


@dataclass(frozen=True)
class Covering:
    """Candidate covering: parts as 1-based id tuples, unchecked.

    Use validate_covering to test the partition/adjacency invariants;
    construction itself accepts any part list so that bad input can be
    diagnosed instead of rejected blind.
    """

    n: int
    parts: tuple[tuple[int, ...], ...]

    @classmethod
    def from_parts(cls, n: int, parts) -> "Covering":
        check_size(n)
        return cls(n, tuple(tuple(sorted(p)) for p in parts))

    def to_text(self) -> str:
        return ";".join("{" + ",".join(str(i) for i in p) + "}" for p in self.parts)


def parse_covering(n: int, text: str) -> Covering:
    """Parse "{1,2};{3};{4}" into a Covering (syntax only, no validation)."""
    check_size(n)
    parts = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not (chunk.startswith("{") and chunk.endswith("}")):
            raise FormatError(f"covering part must be brace-wrapped, got {chunk!r}")
        inner = chunk[1:-1].strip()
        if not inner:
            raise FormatError("empty covering part")
        try:
            ids = tuple(sorted(int(p.strip()) for p in inner.split(",")))
        except ValueError:
            raise FormatError(f"covering part ids must be integers, got {chunk!r}") from None
        parts.append(ids)
    return Covering(n, tuple(parts))


@dataclass(frozen=True)
class CoveringCheck:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_covering(cov: Covering) -> CoveringCheck:
    """Check partition and adjacency; failures carry a reason code.

    Reason codes: part-size, out-of-range, overlap, incomplete,
    not-adjacent.
    """
    beta = button_count(cov.n)
    geo = geometry(cov.n)
    seen = 0
    for part in cov.parts:
        if len(part) not in (1, 2) or len(set(part)) != len(part):
            ids_text = ",".join(str(i) for i in part)
            return CoveringCheck(False, f"part-size: {{{ids_text}}}")
        for i in part:
            if not 1 <= i <= beta:
                return CoveringCheck(False, f"out-of-range: {i}")
            if (seen >> (i - 1)) & 1:
                return CoveringCheck(False, f"overlap: {i}")
            seen |= 1 << (i - 1)
        if len(part) == 2:
            a, b = part
            if (b - 1) not in geo.neighbors[a - 1]:
                return CoveringCheck(False, f"not-adjacent: {a},{b}")
    if seen != (1 << beta) - 1:
        missing = next(i + 1 for i in range(beta) if not (seen >> i) & 1)
        return CoveringCheck(False, f"incomplete: {missing}")
    return CoveringCheck(True)


def _check_count_bound(n: int) -> None:
    if n > COUNT_MAX_SIZE:
        raise OracleRangeError(
            f"exhaustive covering search is bounded to n <= {COUNT_MAX_SIZE}, got {n}"
        )


def count_coverings(n: int) -> int:
    """Exact covering count by depth-first search over button order.

    At the lowest uncovered button the search branches on covering it
    alone or pairing it with each uncovered higher-indexed neighbor;
    this canonical order counts every covering exactly once.  Memoized
    on the covered set.  Bounded to n <= COUNT_MAX_SIZE.
    """
    check_size(n)
    _check_count_bound(n)
    geo = geometry(n)
    full = (1 << geo.beta) - 1
    memo: dict[int, int] = {}

    def walk(covered: int) -> int:
        if covered == full:
            return 1
        known = memo.get(covered)
        if known is not None:
            return known
        free = (~covered) & full
        i = (free & -free).bit_length() - 1
        total = walk(covered | (1 << i))
        for nb in geo.neighbors[i]:
            if nb > i and not (covered >> nb) & 1:
                total += walk(covered | (1 << i) | (1 << nb))
        memo[covered] = total
        return total

    return walk(0)


def enumerate_coverings(n: int) -> Iterator[Covering]:
    """Yield every covering once, in the same canonical order as the count."""
    check_size(n)
    _check_count_bound(n)
    geo = geometry(n)
    full = (1 << geo.beta) - 1
    parts: list[tuple[int, ...]] = []

    def walk(covered: int) -> Iterator[Covering]:
        if covered == full:
            yield Covering(n, tuple(parts))
            return
        low = ((~covered) & full) & -((~covered) & full)
        i = low.bit_length() - 1
        parts.append((i + 1,))
        yield from walk(covered | low)
        parts.pop()
        for nb in geo.neighbors[i]:
            if nb > i and not (covered >> nb) & 1:
                parts.append((i + 1, nb + 1))
                yield from walk(covered | low | (1 << nb))
                parts.pop()

    yield from walk(0)


def coverings_parity(n: int) -> int:
    """Parity of the covering count: det of the press matrix mod 2.

    Valid at any supported size; agreement with count_coverings mod 2 on
    small boards is part of the test suite.
    """
    return gf2.det_parity(board.game_matrix(n))
