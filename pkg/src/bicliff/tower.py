"""The tower of Moebius geometries built by repeated conformal compactification.

Level 0 is the complex plane with the single generator ``e_1 = i``.  Each
step maps the ``n - 1`` generators ``e_k`` of one level to ``ıȷ ⊗ e_k`` and
appends ``e_n = i (ȷ ⊗ 1)`` and ``e_{n+1} = (ı ⊗ 1) j``, giving the Clifford
algebra with ``L`` generators squaring to ``+1`` and ``L + 1`` to ``-1`` at
level ``L``.  The new 2x2 block index is the outer Kronecker factor.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from bicliff.bicomplex import I, J
from bicliff.errors import NotScalar, NullVector
from bicliff.matrix import BicMatrix, kron

# 2x2 real block units; IMATH squares to -1, JMATH to +1, both anticommute
IMATH = BicMatrix.real([[0, 1], [-1, 0]])
JMATH = BicMatrix.real([[0, 1], [1, 0]])
IMATH_JMATH = IMATH @ JMATH

DESCRIPTIONS = {
    0: "complex plane",
    1: "isomorphic to the Pauli algebra (Minkowski space)",
    2: "equivalent to the Dirac algebra (ambient space of AdS_5)",
}


@dataclass(frozen=True, eq=False)
class AlgebraLevel:
    """One rung of the tower: generators are ``2**L``-square matrices."""

    index: int
    generators: Tuple[BicMatrix, ...]

    @property
    def n(self) -> int:
        """Paravector dimension ``2L + 2``."""
        return len(self.generators) + 1

    @property
    def dim(self) -> int:
        return self.generators[0].dim

    @property
    def signature(self) -> Tuple[int, int]:
        """(plus, minus) counts of the paravector metric."""
        return (self.index + 2, self.index)

    @property
    def clifford_label(self) -> str:
        return f"R_{{{self.index},{self.index + 1}}}"

    def basis(self) -> Tuple[BicMatrix, ...]:
        """Paravector basis ``(1, e_1, ..., e_{n-1})``."""
        return (BicMatrix.identity(self.dim),) + self.generators

    def generator_squares(self) -> Tuple[int, ...]:
        out = []
        for e in self.generators:
            sq = (e @ e).as_scalar()
            if not sq.is_real() or abs(sq.re) != 1:
                raise NotScalar(f"generator square {sq} is not +-1")
            out.append(int(sq.re))
        return tuple(out)

    def __repr__(self) -> str:
        return f"AlgebraLevel(index={self.index}, n={self.n}, dim={self.dim})"


def base_level() -> AlgebraLevel:
    return AlgebraLevel(0, (BicMatrix.scalar(I, 1),))


def compactify(level: AlgebraLevel) -> AlgebraLevel:
    eye = BicMatrix.identity(level.dim)
    lifted = tuple(kron(IMATH_JMATH, e) for e in level.generators)
    e_n = kron(JMATH, eye).scale(I)
    e_n1 = kron(IMATH, eye).scale(J)
    return AlgebraLevel(level.index + 1, lifted + (e_n, e_n1))


@lru_cache(maxsize=None)
def level(index: int) -> AlgebraLevel:
    """The tower level ``index`` (cached)."""
    if index < 0:
        raise ValueError("level index must be non-negative")
    if index == 0:
        return base_level()
    return compactify(level(index - 1))


def lift(m: BicMatrix) -> BicMatrix:
    """``1 ⊗ m``: a matrix of one level seen inside the next."""
    return kron(BicMatrix.identity(2), m)


def block(m: BicMatrix, inner_dim: int) -> BicMatrix:
    """``m ⊗ 1``: a 2x2 block unit acting on the outer index."""
    return kron(m, BicMatrix.identity(inner_dim))


@dataclass(frozen=True, eq=False)
class Paravector:
    """Real coordinates ``x^0 .. x^{n-1}`` over a level's basis ``(1, e_k)``."""

    level: AlgebraLevel
    coeffs: Tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.level.n:
            raise ValueError(
                f"level {self.level.index} needs {self.level.n} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def of(cls, lvl, coeffs: Sequence) -> "Paravector":
        if isinstance(lvl, int):
            lvl = level(lvl)
        return cls(lvl, tuple(Fraction(c) for c in coeffs))

    def conjugate(self) -> "Paravector":
        return Paravector(self.level, (self.coeffs[0],) + tuple(-c for c in self.coeffs[1:]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Paravector):
            return NotImplemented
        return self.level.index == other.level.index and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.level.index, self.coeffs))


def embed(x: Paravector) -> BicMatrix:
    """``x^0 I + sum_k x^k e_k`` as an exact matrix."""
    out = None
    for c, e in zip(x.coeffs, x.level.basis()):
        c = Fraction(c)
        if c == 0:
            continue
        term = e.scale(c)
        out = term if out is None else out + term
    return out if out is not None else BicMatrix.zeros(x.level.dim)


def pv_norm(x: Paravector) -> Fraction:
    """``x xbar`` as a real number (the metric form ``g_{mu nu} x^mu x^nu``)."""
    m = embed(x)
    lam = (m @ m.bar()).as_scalar()
    if not lam.is_real():
        raise NotScalar(f"paravector norm {lam} is not real")
    return lam.re


def pv_inverse(x: Paravector) -> Paravector:
    norm = pv_norm(x)
    if norm == 0:
        raise NullVector("null paravector has no inverse (point at infinity)")
    xbar = x.conjugate()
    return Paravector(x.level, tuple(Fraction(c) / norm for c in xbar.coeffs))
