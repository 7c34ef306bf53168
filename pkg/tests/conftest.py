"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's linear algebra: they work by
exhaustive enumeration, xor-closure, or permutation expansion, so they can
catch systematic errors in the elimination code.
"""

from __future__ import annotations

import itertools
import random

import pytest

from trilights import gf2


def xor_closure(rows: list[int]) -> set[int]:
    """All xor-combinations of the given rows (the GF(2) row space)."""
    space = {0}
    for r in rows:
        space |= {v ^ r for v in space}
    return space


def oracle_rank(rows: list[int]) -> int:
    """Rank from the row-space size, no elimination involved."""
    return len(xor_closure(rows)).bit_length() - 1


def oracle_matvec(rows: list[int], cols: int, x: int) -> int:
    """Matrix-vector product by explicit entry-wise sums."""
    out = 0
    for i, row in enumerate(rows):
        s = 0
        for j in range(cols):
            s ^= ((row >> j) & 1) & ((x >> j) & 1)
        out |= s << i
    return out


def oracle_solutions(rows: list[int], cols: int, c: int) -> set[int]:
    """Every x with A.x = c, by trying all 2**cols vectors."""
    return {x for x in range(1 << cols) if oracle_matvec(rows, cols, x) == c}


def oracle_det_parity(rows: list[int], n: int) -> int:
    """Determinant over GF(2) by permutation expansion (small n only)."""
    total = 0
    for perm in itertools.permutations(range(n)):
        term = 1
        for i, j in enumerate(perm):
            term &= (rows[i] >> j) & 1
        total ^= term
    return total


def random_rows(rng: random.Random, n_rows: int, n_cols: int) -> list[int]:
    return [rng.getrandbits(n_cols) for _ in range(n_rows)]


def matrix_from_rows(rows: list[int], n_cols: int) -> gf2.BitMatrix:
    return gf2.BitMatrix.from_rows(
        [[(r >> j) & 1 for j in range(n_cols)] for r in rows]
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260819)
