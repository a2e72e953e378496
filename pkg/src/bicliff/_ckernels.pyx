# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bicomplex matrix kernels (int64 and float64).

Same contract as ``_pykernels``: inputs are C-contiguous ``(4, d, d)`` arrays.
"""
import numpy as np

ctypedef fused num_t:
    long long
    double

# product of basis units (1, i, j, ij): result index and sign
cdef int _IDX[4][4]
cdef int _SGN[4][4]
_IDX[:] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
_SGN[:] = [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]]


cdef void _matmul_into(const num_t[:, :, ::1] a, const num_t[:, :, ::1] b,
                       num_t[:, :, ::1] out, num_t sign) noexcept nogil:
    cdef Py_ssize_t d = a.shape[1]
    cdef Py_ssize_t p, q, r, i, j, k
    cdef num_t av, s
    for p in range(4):
        for q in range(4):
            r = _IDX[p][q]
            s = <num_t>_SGN[p][q] * sign
            for i in range(d):
                for k in range(d):
                    av = a[p, i, k]
                    if av == 0:
                        continue
                    av = av * s
                    for j in range(d):
                        out[r, i, j] += av * b[q, k, j]


def _check(a, b):
    if a.shape != b.shape or a.ndim != 3 or a.shape[0] != 4 or a.shape[1] != a.shape[2]:
        raise ValueError(f"incompatible kernel shapes {a.shape} and {b.shape}")


def bic_matmul(const num_t[:, :, ::1] a, const num_t[:, :, ::1] b):
    _check(np.asarray(a), np.asarray(b))
    if num_t is double:
        out = np.zeros((4, a.shape[1], a.shape[2]), dtype=np.float64)
    else:
        out = np.zeros((4, a.shape[1], a.shape[2]), dtype=np.int64)
    cdef num_t[:, :, ::1] o = out
    with nogil:
        _matmul_into(a, b, o, 1)
    return out


def bic_commutator(const num_t[:, :, ::1] a, const num_t[:, :, ::1] b):
    _check(np.asarray(a), np.asarray(b))
    if num_t is double:
        out = np.zeros((4, a.shape[1], a.shape[2]), dtype=np.float64)
    else:
        out = np.zeros((4, a.shape[1], a.shape[2]), dtype=np.int64)
    cdef num_t[:, :, ::1] o = out
    with nogil:
        _matmul_into(a, b, o, 1)
        _matmul_into(b, a, o, -1)
    return out
