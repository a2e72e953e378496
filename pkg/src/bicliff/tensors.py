"""Metric and spin tensors, and their symbolic rendering as unit words.

A unit word is a signed product of distinct primitive units.  Every pair of
primitives either commutes or anticommutes and each squares to ``+-1``, so
any product of primitives reduces to ``+-`` one word with factors in
canonical order.  Three vocabularies are offered:

``generators``
    the scalar units ``i, j`` and the level's own generators ``e_k``;
``lifted``
    ``i, j``, the outer block units ``ı, ȷ`` and the previous level's
    generators ``e_k`` lifted as ``1 ⊗ e_k``;
``unrolled``
    ``i, j`` and the block units of every compactification step.

Levels 0 and 1 render with ``generators`` by default, higher levels with
``lifted``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from bicliff.bicomplex import I, J, Bicomplex
from bicliff.errors import NoMatch, NotScalar
from bicliff.matrix import BicMatrix, kron
from bicliff.tower import IMATH, JMATH, AlgebraLevel, block, level as tower_level, lift

MODES = ("generators", "lifted", "unrolled")
HALF = Fraction(1, 2)


# ------------------------------------------------------------------ products


def real_product(a: BicMatrix, b: BicMatrix) -> Bicomplex:
    """``(a bar(b) + b bar(a)) / 2`` as a scalar."""
    return ((a @ b.bar() + b @ a.bar()) * HALF).as_scalar()


def wedge(a: BicMatrix, b: BicMatrix) -> BicMatrix:
    """``(a bar(b) - b bar(a)) / 2``."""
    return (a @ b.bar() - b @ a.bar()) * HALF


@dataclass(frozen=True, eq=False)
class MetricTable:
    level: AlgebraLevel
    table: Tuple[Tuple[Fraction, ...], ...]

    def __getitem__(self, idx) -> Fraction:
        mu, nu = idx
        return self.table[mu][nu]

    @property
    def n(self) -> int:
        return len(self.table)

    def diagonal(self) -> Tuple[Fraction, ...]:
        return tuple(self.table[k][k] for k in range(len(self.table)))

    def as_lists(self) -> List[List[int]]:
        return [[int(v) for v in row] for row in self.table]


@dataclass(frozen=True, eq=False)
class SpinTable:
    level: AlgebraLevel
    table: Tuple[Tuple[BicMatrix, ...], ...]

    def __getitem__(self, idx) -> BicMatrix:
        mu, nu = idx
        return self.table[mu][nu]

    @property
    def n(self) -> int:
        return len(self.table)

    def scale(self, c) -> "SpinTable":
        return SpinTable(self.level, tuple(tuple(m * c for m in row) for row in self.table))


@lru_cache(maxsize=None)
def _metric(index: int) -> MetricTable:
    lvl = tower_level(index)
    basis = lvl.basis()
    rows = []
    for mu, a in enumerate(basis):
        row = []
        for nu, b in enumerate(basis):
            try:
                g = real_product(a, b)
            except NotScalar as exc:
                raise NotScalar(f"real product of e_{mu}, e_{nu} is not scalar") from exc
            if not g.is_real():
                raise NotScalar(f"real product of e_{mu}, e_{nu} is {g}, not real")
            row.append(g.re)
        rows.append(tuple(row))
    return MetricTable(lvl, tuple(rows))


def metric(lvl) -> MetricTable:
    """Metric ``g_{mu nu}`` over the paravector basis ``(1, e_k)``."""
    return _metric(_index(lvl))


@lru_cache(maxsize=None)
def _spin_tensor(index: int) -> SpinTable:
    lvl = tower_level(index)
    basis = lvl.basis()
    n = len(basis)
    zero = BicMatrix.zeros(lvl.dim)
    rows = [[zero] * n for _ in range(n)]
    for mu in range(n):
        for nu in range(mu + 1, n):
            w = wedge(basis[mu], basis[nu])
            rows[mu][nu] = w
            rows[nu][mu] = -w
    return SpinTable(lvl, tuple(tuple(r) for r in rows))


def spin_tensor(lvl) -> SpinTable:
    """``sigma_{mu nu}`` over all pairs of paravector basis elements."""
    return _spin_tensor(_index(lvl))


@lru_cache(maxsize=None)
def _spin_ops(index: int) -> SpinTable:
    return _spin_tensor(index).scale(HALF)


def spin_ops(lvl) -> SpinTable:
    """Spin angular momentum ``s_{mu nu} = sigma_{mu nu} / 2``."""
    return _spin_ops(_index(lvl))


def _index(lvl) -> int:
    return lvl if isinstance(lvl, int) else lvl.index


# --------------------------------------------------------------- unit words


@dataclass(frozen=True)
class Primitive:
    name: str
    matrix: BicMatrix


@dataclass(frozen=True)
class UnitWord:
    """``sign * f_1 f_2 ...`` with factors in canonical vocabulary order."""

    sign: int
    factors: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "factors", tuple(self.factors))

    def __neg__(self) -> "UnitWord":
        return UnitWord(-self.sign, self.factors)

    def __str__(self) -> str:
        body = " ".join(self.factors) if self.factors else "1"
        return ("-" if self.sign < 0 else "") + body

    def to_json(self) -> dict:
        return {"sign": self.sign, "factors": list(self.factors)}


def default_mode(index: int) -> str:
    return "generators" if index <= 1 else "lifted"


@lru_cache(maxsize=None)
def vocabulary(index: int, mode: str) -> Tuple[Primitive, ...]:
    """Primitive units for a level, in canonical order.

    A candidate equal to ``+-`` an earlier-priority primitive is dropped, so
    generator names win over scalar units (``e_1 = i`` at level 0).
    """
    if mode not in MODES:
        raise ValueError(f"unknown vocabulary mode {mode!r}")
    lvl = tower_level(index)
    dim = lvl.dim
    scalars = [Primitive("i", BicMatrix.scalar(I, dim)), Primitive("j", BicMatrix.scalar(J, dim))]
    if mode == "generators":
        units = [Primitive(f"e_{k + 1}", e) for k, e in enumerate(lvl.generators)]
        blocks = []
    elif mode == "lifted":
        if index == 0:
            raise ValueError("the lifted vocabulary needs level >= 1")
        prev = tower_level(index - 1)
        blocks = [
            Primitive("ı", block(IMATH, prev.dim)),
            Primitive("ȷ", block(JMATH, prev.dim)),
        ]
        units = [Primitive(f"e_{k + 1}", lift(e)) for k, e in enumerate(prev.generators)]
    else:
        blocks = []
        for step in range(index, 0, -1):
            outer = BicMatrix.identity(2 ** (index - step))
            inner = 2 ** (step - 1)
            for name, unit in (("ı", IMATH), ("ȷ", JMATH)):
                blocks.append(Primitive(f"{name}_{step}", kron(outer, block(unit, inner))))
        units = []
    ordered = scalars + blocks + units
    priority = units + blocks + scalars
    kept: List[Primitive] = []
    seen = set()
    for p in priority:
        if p.matrix.key() in seen or (-p.matrix).key() in seen:
            continue
        kept.append(p)
        seen.add(p.matrix.key())
    keep_names = {p.name for p in kept}
    return tuple(p for p in ordered if p.name in keep_names)


def _product(mats: Sequence[BicMatrix], dim: int) -> BicMatrix:
    out = BicMatrix.identity(dim)
    for m in mats:
        out = out @ m
    return out


def evaluate(word: UnitWord, index: int, mode: Optional[str] = None) -> BicMatrix:
    mode = mode or default_mode(index)
    by_name = {p.name: p.matrix for p in vocabulary(index, mode)}
    dim = tower_level(index).dim
    try:
        mats = [by_name[f] for f in word.factors]
    except KeyError as exc:
        raise NoMatch(f"factor {exc.args[0]!r} not in the {mode} vocabulary") from exc
    out = _product(mats, dim)
    return out if word.sign > 0 else -out


def canonicalize(sign: int, factors: Sequence[str], index: int, mode: Optional[str] = None) -> UnitWord:
    """Reduce an arbitrary product of primitives to a canonical :class:`UnitWord`.

    Reorders by adjacent swaps, flipping the sign for anticommuting pairs,
    and cancels repeated factors against their squares.
    """
    mode = mode or default_mode(index)
    vocab = vocabulary(index, mode)
    rank = {p.name: k for k, p in enumerate(vocab)}
    for f in factors:
        if f not in rank:
            raise NoMatch(f"factor {f!r} not in the {mode} vocabulary")
    rel = _relations(index, mode)
    out = list(factors)
    changed = True
    while changed:
        changed = False
        k = 0
        while k < len(out) - 1:
            a, b = out[k], out[k + 1]
            if a == b:
                sign *= rel.squares[a]
                del out[k:k + 2]
                changed = True
                continue
            if rank[a] > rank[b]:
                sign *= rel.swap[(a, b)]
                out[k], out[k + 1] = b, a
                changed = True
            k += 1
    return UnitWord(sign, tuple(out))


@dataclass(frozen=True)
class _Relations:
    squares: Dict[str, int]
    swap: Dict[Tuple[str, str], int]


@lru_cache(maxsize=None)
def _relations(index: int, mode: str) -> _Relations:
    vocab = vocabulary(index, mode)
    squares = {}
    for p in vocab:
        sq = (p.matrix @ p.matrix).as_scalar()
        if not sq.is_real() or abs(sq.re) != 1:
            raise NotScalar(f"primitive {p.name} squares to {sq}")
        squares[p.name] = int(sq.re)
    swap = {}
    for p in vocab:
        for q in vocab:
            pq, qp = p.matrix @ q.matrix, q.matrix @ p.matrix
            if pq == qp:
                swap[(p.name, q.name)] = 1
            elif pq == -qp:
                swap[(p.name, q.name)] = -1
            else:
                raise ValueError(f"{p.name} and {q.name} neither commute nor anticommute")
    return _Relations(squares, swap)


@dataclass
class WordIndex:
    words: Dict[tuple, UnitWord]
    collisions: List[List[UnitWord]]


@lru_cache(maxsize=None)
def word_index(index: int, mode: str, cap: int) -> WordIndex:
    """All signed words of length <= ``cap`` keyed by their matrix.

    Enumeration runs by length, then lexicographically in canonical order, so
    the first word stored for a matrix is the shortest, lexicographically
    smallest one.  Later words landing on an occupied matrix are collisions.
    """
    vocab = vocabulary(index, mode)
    dim = tower_level(index).dim
    words: Dict[tuple, UnitWord] = {}
    groups: Dict[tuple, List[UnitWord]] = {}
    for length in range(min(cap, len(vocab)) + 1):
        for combo in combinations(range(len(vocab)), length):
            m = _product([vocab[k].matrix for k in combo], dim)
            names = tuple(vocab[k].name for k in combo)
            for sign, mat in ((1, m), (-1, -m)):
                key = mat.key()
                w = UnitWord(sign, names)
                if key in words:
                    groups.setdefault(key, [words[key]]).append(w)
                else:
                    words[key] = w
    return WordIndex(words, list(groups.values()))


def decompose(m: BicMatrix, lvl, mode: Optional[str] = None, cap: int = 4) -> UnitWord:
    """Express ``m`` as a signed product of distinct primitives."""
    index = _index(lvl)
    mode = mode or default_mode(index)
    idx = word_index(index, mode, cap)
    try:
        return idx.words[m.key()]
    except KeyError:
        raise NoMatch(f"matrix is not a unit word of length <= {cap} ({mode} vocabulary)") from None


def describe(m: BicMatrix, lvl, mode: Optional[str] = None, cap: int = 4) -> str:
    """Best-effort readable form ``word`` or ``word/k`` of a matrix."""
    if m.is_zero():
        return "0"
    for k in (1, 2, 4, 8):
        try:
            w = decompose(m * k, lvl, mode, cap)
        except NoMatch:
            continue
        return str(w) if k == 1 else f"({w})/{k}"
    return f"<matrix dim={m.dim} den={m.den}>"


# ---------------------------------------------------------------- rendering


def sigma_words(lvl, mode: Optional[str] = None, cap: int = 4) -> List[List[Optional[UnitWord]]]:
    """Spin tensor as unit words; ``None`` marks zero entries."""
    index = _index(lvl)
    sig = spin_tensor(index)
    out = []
    for mu in range(sig.n):
        row = []
        for nu in range(sig.n):
            m = sig[mu, nu]
            row.append(None if m.is_zero() else decompose(m, index, mode, cap))
        out.append(row)
    return out


def table_document(lvl, mode: Optional[str] = None, cap: int = 4) -> dict:
    index = _index(lvl)
    words = sigma_words(index, mode, cap)
    return {
        "level": index,
        "n": tower_level(index).n,
        "metric": metric(index).as_lists(),
        "sigma": [
            [{"sign": 0, "factors": []} if w is None else w.to_json() for w in row]
            for row in words
        ],
    }


def render_table(lvl, fmt: str = "text", mode: Optional[str] = None, cap: int = 4) -> str:
    """Render the symbolic spin tensor (``text``) or the full JSON document."""
    index = _index(lvl)
    if fmt == "json":
        return json.dumps(table_document(index, mode, cap), ensure_ascii=False)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    words = sigma_words(index, mode, cap)
    cells = [["0" if w is None else str(w) for w in row] for row in words]
    width = max(len(c) for row in cells for c in row)
    n = len(cells)
    lines = [f"sigma_{{mu nu}} at level {index} ({mode or default_mode(index)} vocabulary)"]
    lines.append("      " + " ".join(str(nu).rjust(width) for nu in range(n)))
    for mu, row in enumerate(cells):
        lines.append(f"{mu:>4}  " + " ".join(c.rjust(width) for c in row))
    return "\n".join(lines)
