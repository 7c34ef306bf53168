# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernel: rows packed 64 columns per word.

Hot path for :mod:`trilights.gf2`.  Operates in place on a C-contiguous
uint64 matrix (word w of row r holds columns 64*w .. 64*w+63, column c
at bit c & 63) and releases the GIL for the whole sweep so callers can
run eliminations for different board sizes on real threads.
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64


def rref_inplace(u64[:, ::1] m, Py_ssize_t n_cols, Py_ssize_t pivot_limit, bint full):
    """Row-reduce ``m`` over GF(2), in place; returns pivot column list.

    Pivots are searched in column order over ``0..pivot_limit-1``, taking
    the first row at or below the current pivot row (same convention as
    the pure lane).  ``full`` selects reduced row-echelon form; otherwise
    only rows below each pivot are cleared.
    """
    cdef Py_ssize_t n_rows = m.shape[0]
    cdef Py_ssize_t n_words = m.shape[1]
    cdef Py_ssize_t pr = 0, r, w, piv, col, widx, lo, n_piv = 0
    cdef u64 bit, tmp
    cdef Py_ssize_t *piv_cols = <Py_ssize_t *> malloc(
        (pivot_limit if pivot_limit > 0 else 1) * sizeof(Py_ssize_t))
    if piv_cols == NULL:
        raise MemoryError()
    try:
        with nogil:
            for col in range(pivot_limit):
                widx = col >> 6
                bit = (<u64> 1) << (col & 63)
                piv = -1
                for r in range(pr, n_rows):
                    if m[r, widx] & bit:
                        piv = r
                        break
                if piv < 0:
                    continue
                if piv != pr:
                    for w in range(n_words):
                        tmp = m[pr, w]
                        m[pr, w] = m[piv, w]
                        m[piv, w] = tmp
                lo = 0 if full else pr + 1
                for r in range(lo, n_rows):
                    if r != pr and (m[r, widx] & bit):
                        # words before widx are zero in the pivot row
                        for w in range(widx, n_words):
                            m[r, w] ^= m[pr, w]
                piv_cols[n_piv] = col
                n_piv += 1
                pr += 1
                if pr == n_rows:
                    break
        return [piv_cols[r] for r in range(n_piv)]
    finally:
        free(piv_cols)
