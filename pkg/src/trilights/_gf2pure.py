"""Pure-Python elimination kernel: rows are int bitsets (bit i = column i).

Fallback lane for :mod:`trilights.gf2`; mirrors the compiled core in
:mod:`trilights._gf2core` result-for-result.
"""

from __future__ import annotations


def rref_words(
    rows: list[int], n_cols: int, pivot_limit: int, full: bool
) -> tuple[list[int], list[int]]:
    """Row-reduce over GF(2), in column order with first-row pivoting.

    Args:
        rows: row bitsets; bit j of ``rows[i]`` is entry (i, j).
        n_cols: row width; bits at or above ``n_cols`` must be zero.
        pivot_limit: only columns ``0..pivot_limit-1`` are eligible as
            pivots (row operations still span the full width, so the
            matrix may carry augmented columns beyond the limit).
        full: eliminate above pivots as well (reduced row-echelon form);
            otherwise only below (enough for rank/pivots).

    Returns:
        (reduced rows, pivot column indices).
    """
    work = list(rows)
    n_rows = len(work)
    pivots: list[int] = []
    pr = 0
    for col in range(pivot_limit):
        mask = 1 << col
        pivot = -1
        for r in range(pr, n_rows):
            if work[r] & mask:
                pivot = r
                break
        if pivot < 0:
            continue
        if pivot != pr:
            work[pr], work[pivot] = work[pivot], work[pr]
        prow = work[pr]
        lo = 0 if full else pr + 1
        for r in range(lo, n_rows):
            if r != pr and work[r] & mask:
                work[r] ^= prow
        pivots.append(col)
        pr += 1
        if pr == n_rows:
            break
    return work, pivots
