"""Square matrices over the bicomplex numbers.

:class:`BicMatrix` is exact: an integer array of shape ``(4, d, d)`` (the
``1, i, j, ij`` components) over one positive common denominator, kept in
lowest terms so equality is a plain array comparison.  Integers stay in
int64 while products provably fit and move to Python ints otherwise.

:class:`BicMatrixF` is the float64 mirror used where exponentials and
inverses are needed.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from bicliff import kernels
from bicliff.bicomplex import Bicomplex, _frac
from bicliff.errors import DimensionMismatch, NonFinite, NotScalar

_I64_LIMIT = 2**62

# bar, dagger, hat as component sign flips on (1, i, j, ij)
_BAR = np.array([1, -1, 1, -1])
_DAGGER = np.array([1, 1, -1, -1])
_HAT = np.array([1, -1, -1, 1])


def _maxabs(a) -> int:
    if a.size == 0:
        return 0
    return int(np.abs(a).max())


def _as_int_array(a):
    """Downcast to int64 when every entry fits, else keep Python ints."""
    if a.dtype != object or _maxabs(a) < _I64_LIMIT:
        return np.array(a, dtype=np.int64)
    return np.asarray(a, dtype=object)


def _to_object(a):
    return a.astype(object) if a.dtype != object else a


def _array_gcd(a) -> int:
    if a.dtype == object:
        return reduce(math.gcd, (int(v) for v in a.ravel()), 0)
    return int(np.gcd.reduce(a.ravel())) if a.size else 0


def _component_scale(c: Sequence[int], a):
    """Multiply every entry of ``a`` by the integer bicomplex ``c``."""
    c0, c1, c2, c3 = c
    a0, a1, a2, a3 = a
    return np.stack([
        c0 * a0 - c1 * a1 - c2 * a2 + c3 * a3,
        c0 * a1 + c1 * a0 - c2 * a3 - c3 * a2,
        c0 * a2 + c2 * a0 - c1 * a3 - c3 * a1,
        c0 * a3 + c3 * a0 + c1 * a2 + c2 * a1,
    ])


class BicMatrix:
    """Exact ``dim x dim`` matrix with bicomplex entries."""

    __slots__ = ("num", "den")

    def __init__(self, num, den: int = 1):
        num = np.asarray(num)
        if num.ndim != 3 or num.shape[0] != 4 or num.shape[1] != num.shape[2]:
            raise ValueError(f"expected shape (4, d, d), got {num.shape}")
        if num.dtype != object and not np.issubdtype(num.dtype, np.integer):
            raise TypeError("numerators must be integers")
        den = int(den)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(_array_gcd(num), den)
        if g > 1:
            num = num // g
            den //= g
        num = _as_int_array(num)
        num.flags.writeable = False
        self.num = num
        self.den = den

    # construction

    @classmethod
    def zeros(cls, dim: int) -> "BicMatrix":
        return cls(np.zeros((4, dim, dim), dtype=np.int64))

    @classmethod
    def identity(cls, dim: int) -> "BicMatrix":
        return cls.scalar(1, dim)

    @classmethod
    def scalar(cls, value, dim: int) -> "BicMatrix":
        value = Bicomplex.coerce(value)
        den = reduce(math.lcm, (c.denominator for c in value.coeffs), 1)
        num = np.zeros((4, dim, dim), dtype=object)
        for r, c in enumerate(value.coeffs):
            for k in range(dim):
                num[r, k, k] = int(c * den)
        return cls(num, den)

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence]) -> "BicMatrix":
        """Build from a nested list of entries (ints, Fractions or Bicomplex)."""
        dim = len(rows)
        if any(len(r) != dim for r in rows):
            raise DimensionMismatch("matrix must be square")
        entries = [[Bicomplex.coerce(v) for v in row] for row in rows]
        den = reduce(
            math.lcm,
            (c.denominator for row in entries for v in row for c in v.coeffs),
            1,
        )
        num = np.zeros((4, dim, dim), dtype=object)
        for a, row in enumerate(entries):
            for b, v in enumerate(row):
                for r, c in enumerate(v.coeffs):
                    num[r, a, b] = int(c * den)
        return cls(num, den)

    @classmethod
    def real(cls, rows: Sequence[Sequence]) -> "BicMatrix":
        return cls.from_entries(rows)

    # access

    @property
    def dim(self) -> int:
        return self.num.shape[1]

    def __getitem__(self, idx) -> Bicomplex:
        a, b = idx
        return Bicomplex(*(Fraction(int(self.num[r, a, b]), self.den) for r in range(4)))

    def entries(self):
        return [[self[a, b] for b in range(self.dim)] for a in range(self.dim)]

    def component(self, r: int):
        """Component ``r`` of (1, i, j, ij) as a Fraction-valued nested list."""
        return [[Fraction(int(v), self.den) for v in row] for row in self.num[r]]

    def key(self) -> tuple:
        """Hashable canonical form."""
        return (self.den, self.num.shape[1], tuple(int(v) for v in self.num.ravel()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BicMatrix):
            return NotImplemented
        return (
            self.den == other.den
            and self.num.shape == other.num.shape
            and bool(np.array_equal(self.num, other.num))
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def is_zero(self) -> bool:
        return not self.num.any()

    # ring operations

    def _check_dim(self, other: "BicMatrix"):
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim} differ")

    def _aligned(self, other: "BicMatrix"):
        """Numerators of both operands over their common denominator."""
        den = math.lcm(self.den, other.den)
        fa, fb = den // self.den, den // other.den
        a, b = self.num, other.num
        if max(_maxabs(a) * fa, _maxabs(b) * fb) * 2 >= _I64_LIMIT:
            a, b = _to_object(a), _to_object(b)
        return a * fa, b * fb, den

    def __add__(self, other):
        if not isinstance(other, BicMatrix):
            return NotImplemented
        self._check_dim(other)
        a, b, den = self._aligned(other)
        return BicMatrix(a + b, den)

    def __sub__(self, other):
        if not isinstance(other, BicMatrix):
            return NotImplemented
        self._check_dim(other)
        a, b, den = self._aligned(other)
        return BicMatrix(a - b, den)

    def __neg__(self) -> "BicMatrix":
        return BicMatrix(-self.num, self.den)

    def scale(self, c) -> "BicMatrix":
        """Multiply by a scalar (int, Fraction or Bicomplex)."""
        c = Bicomplex.coerce(c)
        cden = reduce(math.lcm, (v.denominator for v in c.coeffs), 1)
        cnum = [int(v * cden) for v in c.coeffs]
        a = self.num
        if _maxabs(a) * sum(abs(v) for v in cnum) >= _I64_LIMIT:
            a = _to_object(a)
        return BicMatrix(_component_scale(cnum, a), self.den * cden)

    def __mul__(self, other):
        if isinstance(other, BicMatrix):
            return NotImplemented
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        k = _frac(other)
        return self.scale(1 / k)

    def _product_operands(self, other: "BicMatrix"):
        a, b = self.num, other.num
        if _maxabs(a) * _maxabs(b) * 4 * self.dim >= _I64_LIMIT:
            a, b = _to_object(a), _to_object(b)
        return a, b

    def __matmul__(self, other: "BicMatrix") -> "BicMatrix":
        if not isinstance(other, BicMatrix):
            return NotImplemented
        self._check_dim(other)
        a, b = self._product_operands(other)
        return BicMatrix(kernels.bic_matmul(a, b), self.den * other.den)

    # involutions

    def _flip(self, signs, transpose: bool) -> "BicMatrix":
        num = self.num * signs[:, None, None]
        if transpose:
            num = num.transpose(0, 2, 1)
        return BicMatrix(np.ascontiguousarray(num), self.den)

    def bar(self) -> "BicMatrix":
        """Clifford conjugation: transpose with entrywise ``i -> -i``."""
        return self._flip(_BAR, True)

    def dagger(self) -> "BicMatrix":
        """Reversion: transpose with entrywise ``j -> -j``."""
        return self._flip(_DAGGER, True)

    def hat(self) -> "BicMatrix":
        """Main involution: entrywise ``i -> -i`` and ``j -> -j``."""
        return self._flip(_HAT, False)

    # scalars

    def as_scalar(self) -> Bicomplex:
        """Return ``lam`` when the matrix equals ``lam * I`` exactly."""
        d = self.dim
        diag = self.num[:, np.arange(d), np.arange(d)]
        off = self.num.copy()
        off[:, np.arange(d), np.arange(d)] = 0
        if off.any():
            raise NotScalar("matrix has nonzero off-diagonal entries")
        if not (diag == diag[:, :1]).all():
            raise NotScalar("diagonal entries differ")
        return Bicomplex(*(Fraction(int(v), self.den) for v in diag[:, 0]))

    def is_scalar(self) -> bool:
        try:
            self.as_scalar()
        except NotScalar:
            return False
        return True

    def to_float(self) -> "BicMatrixF":
        return BicMatrixF(self.num.astype(np.float64) / self.den)

    def to_integer_vector(self) -> list:
        """Flattened numerators and the denominator, for exact span checks."""
        return [int(v) for v in self.num.ravel()]

    def __repr__(self) -> str:
        return f"BicMatrix(dim={self.dim}, den={self.den})"

    def __str__(self) -> str:
        cells = [[str(v) for v in row] for row in self.entries()]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + ", ".join(c.rjust(width) for c in row) + "]" for row in cells)


def kron(a: BicMatrix, b: BicMatrix) -> BicMatrix:
    """Kronecker product; ``a`` indexes the outer blocks."""
    da, db = a.dim, b.dim
    out = None
    for p in range(4):
        for q in range(4):
            pa = a.num[p].astype(object) if a.num.dtype == object else a.num[p]
            block = np.kron(pa, b.num[q])
            part = np.zeros((4, da * db, da * db), dtype=block.dtype)
            part[0] = block
            term = BicMatrix(part, a.den * b.den).scale(_unit(p) * _unit(q))
            out = term if out is None else out + term
    return out


def _unit(r: int) -> Bicomplex:
    c = [0, 0, 0, 0]
    c[r] = 1
    return Bicomplex(*c)


def commutator(a: BicMatrix, b: BicMatrix) -> BicMatrix:
    a._check_dim(b)
    x, y = a._product_operands(b)
    return BicMatrix(kernels.bic_commutator(x, y), a.den * b.den)


def matrix_sum(terms: Iterable[BicMatrix]) -> BicMatrix:
    out = None
    for t in terms:
        out = t if out is None else out + t
    if out is None:
        raise ValueError("empty sum")
    return out


# ---------------------------------------------------------------- float mirror


class BicMatrixF:
    """Float64 bicomplex matrix, components stacked as ``(4, d, d)``."""

    __slots__ = ("data",)

    def __init__(self, data):
        data = np.ascontiguousarray(data, dtype=np.float64)
        if data.ndim != 3 or data.shape[0] != 4 or data.shape[1] != data.shape[2]:
            raise ValueError(f"expected shape (4, d, d), got {data.shape}")
        self.data = data

    @classmethod
    def identity(cls, dim: int) -> "BicMatrixF":
        data = np.zeros((4, dim, dim))
        data[0] = np.eye(dim)
        return cls(data)

    @classmethod
    def zeros(cls, dim: int) -> "BicMatrixF":
        return cls(np.zeros((4, dim, dim)))

    @property
    def dim(self) -> int:
        return self.data.shape[1]

    def __add__(self, other: "BicMatrixF") -> "BicMatrixF":
        _check_dims(self, other)
        return BicMatrixF(self.data + other.data)

    def __sub__(self, other: "BicMatrixF") -> "BicMatrixF":
        _check_dims(self, other)
        return BicMatrixF(self.data - other.data)

    def __neg__(self) -> "BicMatrixF":
        return BicMatrixF(-self.data)

    def __matmul__(self, other: "BicMatrixF") -> "BicMatrixF":
        _check_dims(self, other)
        return BicMatrixF(kernels.bic_matmul(self.data, other.data))

    def scale(self, c) -> "BicMatrixF":
        if isinstance(c, Bicomplex):
            c = [float(v) for v in c.coeffs]
        elif np.ndim(c) == 0:
            return BicMatrixF(self.data * float(c))
        return BicMatrixF(_component_scale(c, self.data))

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def bar(self) -> "BicMatrixF":
        return BicMatrixF((self.data * _BAR[:, None, None]).transpose(0, 2, 1))

    def dagger(self) -> "BicMatrixF":
        return BicMatrixF((self.data * _DAGGER[:, None, None]).transpose(0, 2, 1))

    def hat(self) -> "BicMatrixF":
        return BicMatrixF(self.data * _HAT[:, None, None])

    def norm(self) -> float:
        """Max row sum of the entrywise 4-component l1 norms (submultiplicative)."""
        return float(np.abs(self.data).sum(axis=0).sum(axis=1).max())

    def max_abs(self) -> float:
        return float(np.abs(self.data).max()) if self.data.size else 0.0

    def allclose(self, other: "BicMatrixF", atol: float = 1e-12) -> bool:
        return bool(np.abs(self.data - other.data).max() <= atol)

    # the idempotent split x = x+ e+ + x- e-, e± = (1 ± ij)/2, turns each
    # bicomplex matrix into two independent complex matrices
    def to_idempotent(self):
        w, x, y, z = self.data
        alpha = w + 1j * x
        beta = z - 1j * y
        return alpha + beta, alpha - beta

    @classmethod
    def from_idempotent(cls, plus, minus) -> "BicMatrixF":
        alpha = (plus + minus) / 2
        beta = (plus - minus) / 2
        return cls(np.stack([alpha.real, alpha.imag, -beta.imag, beta.real]))

    def singular_ratio(self) -> float:
        """Smallest over largest singular value across both complex components."""
        svals = [np.linalg.svd(m, compute_uv=False) for m in self.to_idempotent()]
        top = max(s[0] for s in svals)
        if top == 0:
            return 0.0
        return float(min(s[-1] for s in svals) / top)

    def inverse(self) -> "BicMatrixF":
        plus, minus = self.to_idempotent()
        return BicMatrixF.from_idempotent(np.linalg.inv(plus), np.linalg.inv(minus))

    def __repr__(self) -> str:
        return f"BicMatrixF(dim={self.dim})"


def _check_dims(a, b):
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions {a.dim} and {b.dim} differ")


def expm(a: BicMatrixF, max_terms: int = 40) -> BicMatrixF:
    """Matrix exponential by scaling and squaring with a truncated Taylor series.

    Entries commute, so the scalar algorithm applies with bicomplex arithmetic.
    """
    if not np.isfinite(a.data).all():
        raise NonFinite("matrix has non-finite entries")
    nrm = a.norm()
    squarings = max(0, math.ceil(math.log2(nrm / 0.5))) if nrm > 0.5 else 0
    x = a.scale(2.0 ** -squarings)
    result = BicMatrixF.identity(a.dim)
    term = BicMatrixF.identity(a.dim)
    for k in range(1, max_terms + 1):
        term = (term @ x).scale(1.0 / k)
        result = result + term
        if term.max_abs() <= 1e-18 * max(1.0, result.max_abs()):
            break
    # overflow surfaces as NonFinite below rather than as a numpy warning
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(squarings):
            result = result @ result
    if not np.isfinite(result.data).all():
        raise NonFinite("matrix exponential overflowed")
    return result
