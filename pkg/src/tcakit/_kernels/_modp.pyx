# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p elimination kernels.

Same API as ``_modp_py``; vectors go in and come out as lists of ints in
``[0, p)``. The prime must be below 2**31 so products fit in int64.
"""

import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64

cnp.import_array()


cdef inline i64 _inv(i64 a, i64 p) noexcept nogil:
    # Fermat inverse
    cdef i64 result = 1, base = a % p, e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


cdef void _reduce_into(i64[:, ::1] rows, i64[::1] pivots, Py_ssize_t nrows,
                       i64[::1] v, i64 p) noexcept nogil:
    cdef Py_ssize_t i, j, c, ncols = v.shape[0]
    cdef i64 f
    for i in range(nrows):
        c = pivots[i]
        f = v[c]
        if f != 0:
            for j in range(c, ncols):
                if rows[i, j] != 0:
                    v[j] = (v[j] - f * rows[i, j]) % p
                    if v[j] < 0:
                        v[j] += p


cdef class ModPEchelon:
    """Incrementally built row-echelon basis of a subspace of F_p^ncols."""

    cdef public Py_ssize_t ncols
    cdef public long long p
    cdef Py_ssize_t _rank
    cdef cnp.ndarray _rows
    cdef cnp.ndarray _pivots

    def __init__(self, Py_ssize_t ncols, long long p):
        if p < 2 or p >= 2**31:
            raise ValueError("p must be a prime below 2**31")
        self.ncols = ncols
        self.p = p
        self._rank = 0
        self._rows = np.zeros((4, ncols), dtype=np.int64)
        self._pivots = np.zeros(4, dtype=np.int64)

    @property
    def rank(self):
        return self._rank

    @property
    def pivots(self):
        return [int(x) for x in self._pivots[: self._rank]]

    cdef cnp.ndarray _as_vec(self, vec):
        cdef cnp.ndarray arr = np.asarray(vec, dtype=np.int64) % self.p
        if arr.shape[0] != self.ncols:
            raise ValueError(f"vector of length {arr.shape[0]}, expected {self.ncols}")
        return np.ascontiguousarray(arr)

    def reduce(self, vec):
        cdef cnp.ndarray arr = self._as_vec(vec)
        _reduce_into(self._rows, self._pivots, self._rank, arr, self.p)
        return arr.tolist()

    def contains(self, vec):
        cdef cnp.ndarray arr = self._as_vec(vec)
        _reduce_into(self._rows, self._pivots, self._rank, arr, self.p)
        return not arr.any()

    def add(self, vec):
        """Insert ``vec``; return True iff it was independent of the current span."""
        cdef cnp.ndarray arr = self._as_vec(vec)
        cdef i64[::1] v = arr
        _reduce_into(self._rows, self._pivots, self._rank, v, self.p)
        cdef Py_ssize_t c = 0, j
        while c < self.ncols and v[c] == 0:
            c += 1
        if c == self.ncols:
            return False
        cdef i64 inv = _inv(v[c], self.p)
        for j in range(c, self.ncols):
            v[j] = (v[j] * inv) % self.p
        if self._rank == self._rows.shape[0]:
            grow = max(4, 2 * self._rank)
            self._rows = np.concatenate([self._rows, np.zeros((grow, self.ncols), dtype=np.int64)])
            self._pivots = np.concatenate([self._pivots, np.zeros(grow, dtype=np.int64)])
        self._rows[self._rank, :] = arr
        self._pivots[self._rank] = c
        self._rank += 1
        return True

    def basis(self):
        return self._rows[: self._rank].tolist()


def rref_mod_p(rows, Py_ssize_t ncols, long long p):
    """Reduced row echelon form over F_p. Returns (nonzero rows, pivot columns)."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return [], []
    cdef cnp.ndarray arr = np.ascontiguousarray(np.asarray(rows, dtype=np.int64).reshape(nrows, ncols) % p)
    cdef i64[:, ::1] a = arr
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef i64 inv, f, tmp
    pivots = []
    with nogil:
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, ncols):
                    tmp = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = tmp
            inv = _inv(a[r, c], p)
            for j in range(c, ncols):
                a[r, j] = (a[r, j] * inv) % p
            for i in range(nrows):
                if i != r:
                    f = a[i, c]
                    if f != 0:
                        for j in range(c, ncols):
                            if a[r, j] != 0:
                                a[i, j] = (a[i, j] - f * a[r, j]) % p
                                if a[i, j] < 0:
                                    a[i, j] += p
            with gil:
                pivots.append(c)
            r += 1
    return arr[:r].tolist(), pivots
