"""Rotors and fractional-linear (Vahlen) transformations of paravectors.

Everything here runs in float64; the exact modules supply the matrices.
Admissibility of a Vahlen matrix is enforced operationally: an image that
leaves the paravector span raises :class:`NotParavector`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from bicliff.errors import MapsToInfinity, NotParavector
from bicliff.matrix import BicMatrixF, expm
from bicliff.tensors import metric, spin_ops
from bicliff.tower import AlgebraLevel, Paravector, level as tower_level

DEFAULT_TOL = 1e-9
SINGULAR_RATIO = 1e-12


def _as_level(lvl) -> AlgebraLevel:
    return tower_level(lvl) if isinstance(lvl, int) else lvl


@lru_cache(maxsize=None)
def _float_basis(index: int):
    return tuple(e.to_float() for e in tower_level(index).basis())


@lru_cache(maxsize=None)
def _float_spin(index: int):
    s = spin_ops(index)
    return tuple(tuple(s[a, b].to_float() for b in range(s.n)) for a in range(s.n))


@lru_cache(maxsize=None)
def _projector(index: int):
    basis = np.stack([e.data.ravel() for e in _float_basis(index)], axis=1)
    return basis, np.linalg.pinv(basis)


def embed_float(x: Paravector) -> BicMatrixF:
    basis = _float_basis(x.level.index)
    data = sum(float(c) * e.data for c, e in zip(x.coeffs, basis))
    return BicMatrixF(data)


def project_paravector(m: BicMatrixF, lvl, tol: float = DEFAULT_TOL) -> Paravector:
    """Coordinates of ``m`` in the span of ``(1, e_k)``.

    The residual outside the span must stay within ``tol`` (relative to the
    largest entry when that exceeds one).
    """
    lvl = _as_level(lvl)
    basis, pinv = _projector(lvl.index)
    flat = m.data.ravel()
    coeffs = pinv @ flat
    residual = float(np.abs(basis @ coeffs - flat).max())
    scale = max(1.0, float(np.abs(flat).max()))
    if residual > tol * scale:
        raise NotParavector(f"image leaves the paravector span (residual {residual:.3e})")
    return Paravector(lvl, tuple(float(c) for c in coeffs))


def float_norm(x: Paravector) -> float:
    """``g_{mu nu} x^mu x^nu`` in floating point."""
    g = metric(x.level)
    c = [float(v) for v in x.coeffs]
    return sum(float(g[a, a]) * c[a] * c[a] for a in range(len(c)))


# -------------------------------------------------------------------- rotors


@dataclass(frozen=True, eq=False)
class RotationParams:
    """Antisymmetric angle/rapidity table ``omega^{mu nu}`` for one level."""

    level: AlgebraLevel
    omega: np.ndarray

    def __post_init__(self):
        omega = np.asarray(self.omega, dtype=np.float64)
        n = self.level.n
        if omega.shape != (n, n):
            raise ValueError(f"omega must be {n}x{n}")
        if not np.array_equal(omega, -omega.T):
            raise ValueError("omega must be antisymmetric")
        object.__setattr__(self, "omega", omega)

    @classmethod
    def plane(cls, lvl, mu: int, nu: int, theta: float) -> "RotationParams":
        lvl = _as_level(lvl)
        omega = np.zeros((lvl.n, lvl.n))
        omega[mu, nu] = theta
        omega[nu, mu] = -theta
        return cls(lvl, omega)

    @classmethod
    def random(cls, lvl, rng: np.random.Generator, scale: float = 1.0) -> "RotationParams":
        lvl = _as_level(lvl)
        upper = np.triu(rng.uniform(-scale, scale, size=(lvl.n, lvl.n)), 1)
        return cls(lvl, upper - upper.T)

    def negated(self) -> "RotationParams":
        return RotationParams(self.level, -self.omega)


def rotor_generator(params: RotationParams) -> BicMatrixF:
    """``(1/2) s_{mu nu} omega^{mu nu}`` over all pairs, i.e. the sum over ``mu < nu``."""
    s = _float_spin(params.level.index)
    n = params.level.n
    out = BicMatrixF.zeros(params.level.dim)
    for a in range(n):
        for b in range(a + 1, n):
            if params.omega[a, b]:
                out = out + s[a][b].scale(params.omega[a, b])
    return out


def rotor(params: RotationParams) -> BicMatrixF:
    return expm(rotor_generator(params))


def rotate(r: BicMatrixF, x: Paravector, tol: float = DEFAULT_TOL) -> Paravector:
    """``r x r^dagger`` projected back to paravector coordinates."""
    m = r @ embed_float(x) @ r.dagger()
    return project_paravector(m, x.level, tol)


def rotate_hat(r: BicMatrixF, x: Paravector, tol: float = DEFAULT_TOL) -> Paravector:
    """The equivalent action ``r x hat(r)^{-1}``."""
    m = r @ embed_float(x) @ r.hat().inverse()
    return project_paravector(m, x.level, tol)


# ------------------------------------------------------------ Vahlen matrices


@dataclass(frozen=True, eq=False)
class VahlenMatrix:
    """2x2 block ``[[a, b], [c, d]]`` of algebra elements acting by ``(ax+b)(cx+d)^-1``."""

    a: BicMatrixF
    b: BicMatrixF
    c: BicMatrixF
    d: BicMatrixF

    def __matmul__(self, other: "VahlenMatrix") -> "VahlenMatrix":
        return VahlenMatrix(
            self.a @ other.a + self.b @ other.c,
            self.a @ other.b + self.b @ other.d,
            self.c @ other.a + self.d @ other.c,
            self.c @ other.b + self.d @ other.d,
        )


def vahlen_identity(lvl) -> VahlenMatrix:
    dim = _as_level(lvl).dim
    one, zero = BicMatrixF.identity(dim), BicMatrixF.zeros(dim)
    return VahlenMatrix(one, zero, zero, one)


def vahlen_translation(b: Paravector) -> VahlenMatrix:
    dim = b.level.dim
    one, zero = BicMatrixF.identity(dim), BicMatrixF.zeros(dim)
    return VahlenMatrix(one, embed_float(b), zero, one)


def vahlen_dilation(lvl, lam: float) -> VahlenMatrix:
    if not lam > 0:
        raise ValueError("dilation factor must be positive")
    dim = _as_level(lvl).dim
    one, zero = BicMatrixF.identity(dim), BicMatrixF.zeros(dim)
    return VahlenMatrix(one.scale(lam), zero, zero, one)


def vahlen_inversion(lvl) -> VahlenMatrix:
    dim = _as_level(lvl).dim
    one, zero = BicMatrixF.identity(dim), BicMatrixF.zeros(dim)
    return VahlenMatrix(zero, one, one, zero)


def vahlen_special(c: Paravector) -> VahlenMatrix:
    dim = c.level.dim
    one, zero = BicMatrixF.identity(dim), BicMatrixF.zeros(dim)
    return VahlenMatrix(one, zero, embed_float(c), one)


def moebius_apply(v: VahlenMatrix, x: Paravector, tol: float = DEFAULT_TOL) -> Paravector:
    xm = embed_float(x)
    num = v.a @ xm + v.b
    den = v.c @ xm + v.d
    if den.singular_ratio() < SINGULAR_RATIO:
        raise MapsToInfinity("denominator c x + d is not invertible")
    return project_paravector(num @ den.inverse(), x.level, tol)


def paravector_close(x: Paravector, y: Paravector, tol: float) -> bool:
    return max(abs(float(a) - float(b)) for a, b in zip(x.coeffs, y.coeffs)) <= tol


def float_paravector(lvl, coeffs: Sequence[float]) -> Paravector:
    return Paravector(_as_level(lvl), tuple(float(c) for c in coeffs))
