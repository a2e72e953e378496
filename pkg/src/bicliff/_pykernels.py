"""Reference kernels in numpy; used when the compiled module is unavailable.

Arrays hold a bicomplex matrix as shape ``(4, d, d)``: components of
``1, i, j, ij``.  Works for int64, float64 and object (Python int) dtypes.
"""
import numpy as np


def bic_matmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return np.stack([
        a0 @ b0 - a1 @ b1 - a2 @ b2 + a3 @ b3,
        a0 @ b1 + a1 @ b0 - a2 @ b3 - a3 @ b2,
        a0 @ b2 + a2 @ b0 - a1 @ b3 - a3 @ b1,
        a0 @ b3 + a3 @ b0 + a1 @ b2 + a2 @ b1,
    ])


def bic_commutator(a, b):
    return bic_matmul(a, b) - bic_matmul(b, a)
