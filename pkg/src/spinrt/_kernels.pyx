# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled contraction kernel: apply a sparse gate to one block of axes."""
import numpy as np
cimport numpy as cnp

cnp.import_array()

# Rows at least this long are scanned once for their nonzero entries.
# Weight conservation leaves most entries of a state exactly zero, so
# the gate then only touches the entries that can contribute.
cdef Py_ssize_t SPARSE_MIN_ROW = 32


def apply_gate(const double complex[::1] state, Py_ssize_t L, Py_ssize_t M,
               Py_ssize_t R, const Py_ssize_t[::1] rows,
               const Py_ssize_t[::1] cols, const double complex[::1] vals,
               Py_ssize_t Mo, out=None):
    """out[l, o, x] = sum over nonzeros (o, i, v) of v * state[l, i, x].

    ``out``, when given, is a complex array of length L*Mo*R that is
    overwritten; it must not overlap ``state``.
    """
    if state.shape[0] != L * M * R:
        raise ValueError("state size does not match L*M*R")
    if out is None:
        out_arr = np.zeros(L * Mo * R, dtype=np.complex128)
    else:
        out_arr = out
        if out_arr.shape[0] != L * Mo * R:
            raise ValueError("output size does not match L*Mo*R")
        out_arr[:] = 0
    cdef double[::1] out_view = out_arr.view(np.float64)
    cdef const double[::1] in_view = np.asarray(state).view(np.float64)
    cdef double *dst = &out_view[0]
    cdef const double *src = &in_view[0]
    cdef Py_ssize_t nnz = rows.shape[0]
    if R >= SPARSE_MIN_ROW:
        _apply_sparse_rows(src, dst, L, M, R, rows, cols, vals, Mo)
        return out_arr
    cdef Py_ssize_t l, n, x, bo, bi, x0, x1
    cdef double vr, vi, a, b
    # complex arithmetic spelled out on interleaved doubles; tiles along
    # the trailing axis keep the touched rows in cache
    cdef Py_ssize_t T = 256
    with nogil:
        for l in range(L):
            x0 = 0
            while x0 < R:
                x1 = x0 + T if x0 + T < R else R
                for n in range(nnz):
                    vr = vals[n].real
                    vi = vals[n].imag
                    bo = 2 * (l * Mo + rows[n]) * R
                    bi = 2 * (l * M + cols[n]) * R
                    for x in range(x0, x1):
                        a = src[bi + 2 * x]
                        b = src[bi + 2 * x + 1]
                        dst[bo + 2 * x] += vr * a - vi * b
                        dst[bo + 2 * x + 1] += vr * b + vi * a
                x0 = x1
    return out_arr


cdef void _apply_sparse_rows(const double *src, double *dst, Py_ssize_t L,
                             Py_ssize_t M, Py_ssize_t R, const Py_ssize_t[::1] rows,
                             const Py_ssize_t[::1] cols, const double complex[::1] vals,
                             Py_ssize_t Mo):
    cdef Py_ssize_t nnz = rows.shape[0]
    cdef Py_ssize_t l, n, i, k, x, bo, bi, start, stop
    cdef double vr, vi, a, b
    # nonzero positions of the M rows belonging to one value of l
    idx_arr = np.empty(M * R, dtype=np.intp)
    ptr_arr = np.empty(M + 1, dtype=np.intp)
    cdef Py_ssize_t[::1] idx = idx_arr
    cdef Py_ssize_t[::1] ptr = ptr_arr
    with nogil:
        for l in range(L):
            k = 0
            for i in range(M):
                ptr[i] = k
                bi = 2 * (l * M + i) * R
                for x in range(R):
                    if src[bi + 2 * x] != 0.0 or src[bi + 2 * x + 1] != 0.0:
                        idx[k] = x
                        k += 1
            ptr[M] = k
            for n in range(nnz):
                i = cols[n]
                start = ptr[i]
                stop = ptr[i + 1]
                if start == stop:
                    continue
                vr = vals[n].real
                vi = vals[n].imag
                bo = 2 * (l * Mo + rows[n]) * R
                bi = 2 * (l * M + i) * R
                for k in range(start, stop):
                    x = 2 * idx[k]
                    a = src[bi + x]
                    b = src[bi + x + 1]
                    dst[bo + x] += vr * a - vi * b
                    dst[bo + x + 1] += vr * b + vi * a
