"""Exact bicomplex matrix models of the tower of Moebius geometries."""
from bicliff.bicomplex import I, IJ, J, ONE, Bicomplex, null_units
from bicliff.errors import (
    BicliffError,
    DimensionMismatch,
    GridTooSmall,
    MapsToInfinity,
    NoMatch,
    NonFinite,
    NotClosed,
    NotParavector,
    NotScalar,
    NullVector,
    PoleOnGrid,
)
from bicliff.kernels import BACKEND
from bicliff.matrix import BicMatrix, BicMatrixF, commutator, expm, kron
from bicliff.tower import AlgebraLevel, Paravector, compactify, embed, level, pv_inverse, pv_norm
from bicliff.tensors import UnitWord, decompose, metric, render_table, spin_ops, spin_tensor
from bicliff.lie import (
    VerificationReport,
    closed_forms,
    conformal_generators,
    reduced_spin,
    verify_conformal,
    verify_lorentz,
)
from bicliff.moebius import RotationParams, VahlenMatrix, moebius_apply, rotate, rotor
from bicliff.demos import harmonic_report, mass_ratio_deviation

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop memoized levels, tensors and word indexes (for cold timings)."""
    from bicliff import moebius, tensors, tower

    for fn in (
        tower.level,
        tensors._metric,
        tensors._spin_tensor,
        tensors._spin_ops,
        tensors.vocabulary,
        tensors._relations,
        tensors.word_index,
        moebius._float_basis,
        moebius._float_spin,
        moebius._projector,
    ):
        fn.cache_clear()
