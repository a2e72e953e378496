"""Backend selection for the bicomplex matrix kernels.

The compiled module is used when it imports; set ``BICLIFF_PURE_PYTHON=1``
to force the numpy fallback.  Object-dtype arrays always take the fallback.
"""
import os

import numpy as np

from bicliff import _pykernels

try:
    if os.environ.get("BICLIFF_PURE_PYTHON"):
        raise ImportError("pure-python backend requested")
    from bicliff import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

_FAST = (np.dtype(np.int64), np.dtype(np.float64))
# above this size BLAS-backed float matmul beats the compiled triple loop
_FLOAT_MAX_DIM = 16


def _use_compiled(a, b) -> bool:
    if _ckernels is None or a.dtype not in _FAST or a.dtype != b.dtype:
        return False
    if a.dtype == np.float64 and a.shape[1] > _FLOAT_MAX_DIM:
        return False
    return a.flags.c_contiguous and b.flags.c_contiguous


def bic_matmul(a, b):
    if _use_compiled(a, b):
        return _ckernels.bic_matmul(a, b)
    return _pykernels.bic_matmul(a, b)


def bic_commutator(a, b):
    if _use_compiled(a, b):
        return _ckernels.bic_commutator(a, b)
    return _pykernels.bic_commutator(a, b)
