"""Exact bicomplex numbers ``w + x i + y j + z ij``.

Both imaginary units square to ``-1`` and commute, so ``ij`` is a hyperbolic
unit with ``(ij)**2 = +1``.  Coefficients are :class:`fractions.Fraction`.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterator, Tuple, Union

Scalar = Union[int, Fraction]

# unit products: _TABLE[a][b] = (sign, index) for basis order (1, i, j, ij)
_TABLE = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2)),
    ((1, 2), (1, 3), (-1, 0), (-1, 1)),
    ((1, 3), (-1, 2), (-1, 1), (1, 0)),
)

_NAMES = ("", "i", "j", "ij")


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


class Bicomplex:
    """Immutable element of the bicomplex algebra over the rationals."""

    __slots__ = ("re", "im_i", "im_j", "im_ij")

    def __init__(self, re=0, im_i=0, im_j=0, im_ij=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im_i", _frac(im_i))
        object.__setattr__(self, "im_j", _frac(im_j))
        object.__setattr__(self, "im_ij", _frac(im_ij))

    def __setattr__(self, name, value):
        raise AttributeError("Bicomplex is immutable")

    @classmethod
    def coerce(cls, value) -> "Bicomplex":
        if isinstance(value, Bicomplex):
            return value
        return cls(value)

    @property
    def coeffs(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.re, self.im_i, self.im_j, self.im_ij)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __add__(self, other):
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return Bicomplex(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "Bicomplex":
        return Bicomplex(*(-a for a in self.coeffs))

    def __sub__(self, other):
        try:
            other = Bicomplex.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Bicomplex.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Bicomplex):
            try:
                k = _frac(other)
            except TypeError:
                return NotImplemented
            return Bicomplex(*(a * k for a in self.coeffs))
        out = [Fraction(0)] * 4
        for p, a in enumerate(self.coeffs):
            if not a:
                continue
            for q, b in enumerate(other.coeffs):
                if not b:
                    continue
                sign, r = _TABLE[p][q]
                out[r] += sign * a * b
        return Bicomplex(*out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Bicomplex):
            return self * other.inverse()
        k = _frac(other)
        return Bicomplex(*(a / k for a in self.coeffs))

    def __pow__(self, k: int) -> "Bicomplex":
        if k < 0:
            return self.inverse() ** (-k)
        out = Bicomplex(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def bar(self) -> "Bicomplex":
        """Conjugation: ``i -> -i``, ``j -> j``."""
        return Bicomplex(self.re, -self.im_i, self.im_j, -self.im_ij)

    def dagger(self) -> "Bicomplex":
        """Entrywise part of reversion: ``i -> i``, ``j -> -j``."""
        return Bicomplex(self.re, self.im_i, -self.im_j, -self.im_ij)

    def hat(self) -> "Bicomplex":
        """Entrywise part of the main involution: ``i -> -i``, ``j -> -j``."""
        return Bicomplex(self.re, -self.im_i, -self.im_j, self.im_ij)

    def norm4(self) -> Fraction:
        """Product of the element with its three conjugates; zero iff a zero divisor."""
        n = self * self.bar() * self.dagger() * self.hat()
        return n.re

    def is_zero_divisor(self) -> bool:
        return self.norm4() == 0

    def inverse(self) -> "Bicomplex":
        n = self.norm4()
        if n == 0:
            raise ZeroDivisionError(f"{self} is not invertible")
        return self.bar() * self.dagger() * self.hat() / n

    def is_real(self) -> bool:
        return not (self.im_i or self.im_j or self.im_ij)

    def __complex__(self) -> complex:
        if self.im_j or self.im_ij:
            raise TypeError(f"{self} has j components")
        return complex(float(self.re), float(self.im_i))

    def __float__(self) -> float:
        if not self.is_real():
            raise TypeError(f"{self} is not real")
        return float(self.re)

    def __repr__(self) -> str:
        return f"Bicomplex({self})"

    def __str__(self) -> str:
        terms = []
        for coef, name in zip(self.coeffs, _NAMES):
            if not coef:
                continue
            mag = abs(coef)
            if name and mag == 1:
                body = name
            elif name:
                body = f"{mag} {name}"
            else:
                body = str(mag)
            terms.append((coef < 0, body))
        if not terms:
            return "0"
        neg, body = terms[0]
        out = ("-" if neg else "") + body
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out


ONE = Bicomplex(1)
I = Bicomplex(0, 1)
J = Bicomplex(0, 0, 1)
IJ = Bicomplex(0, 0, 0, 1)


def null_units() -> Tuple[Bicomplex, Bicomplex]:
    """Return the null-plane pair ``(o, obar) = ((i + j)/2, (j - i)/2)``.

    They satisfy ``o*o = i*o``, ``obar*obar = -i*obar`` and ``o*obar = 0``.
    """
    half = Fraction(1, 2)
    return (I + J) * half, (J - I) * half
