"""Exact verification of the Lorentz and conformal Lie-algebra relations.

The spin operators of a level obey

    [s_mn, s_rs] = g_ms s_nr - g_mr s_ns - g_ns s_mr + g_nr s_ms

and the ambient operators of ``compactify(base)`` reorganize into momentum
``p``, special conformal ``q`` and dilation ``d`` generators.
"""
from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import List, Sequence, Tuple

import numpy as np

from bicliff import kernels
from bicliff.bicomplex import I, J
from bicliff.errors import NotClosed
from bicliff.matrix import BicMatrix, commutator, matrix_sum
from bicliff.tensors import describe, metric, spin_ops, spin_tensor
from bicliff.tower import IMATH, JMATH, AlgebraLevel, block, level as tower_level, lift


@dataclass
class VerificationReport:
    suite: str
    checks: int = 0
    failures: List[dict] = field(default_factory=list)
    ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, index: tuple, expected: BicMatrix, actual: BicMatrix, lvl: int, relation: str = ""):
        self.checks += 1
        if expected != actual:
            self.failures.append({
                "index": list(index),
                "relation": relation,
                "expected": describe(expected, lvl),
                "actual": describe(actual, lvl),
                "difference": describe(actual - expected, lvl),
            })

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(
            self.suite, self.checks + other.checks, self.failures + other.failures, self.ms + other.ms
        )

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "suite": self.suite,
            "checks": self.checks,
            "failures": self.failures,
            "ms": round(self.ms, 3) if timing else None,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), ensure_ascii=False)


class _Timer:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.ms = (time.perf_counter() - self.t0) * 1e3
        return False


def _as_level(lvl) -> AlgebraLevel:
    return tower_level(lvl) if isinstance(lvl, int) else lvl


def lorentz_rhs(g, s, mu, nu, rho, sig) -> BicMatrix:
    """Right-hand side of the spin commutator for indices (mu, nu, rho, sig)."""
    terms = [
        (g[mu, sig], s[nu, rho]),
        (-g[mu, rho], s[nu, sig]),
        (-g[nu, sig], s[mu, rho]),
        (g[nu, rho], s[mu, sig]),
    ]
    return matrix_sum(m * c for c, m in terms)


def _integer_operands(s, n):
    """Common-denominator int64 numerators of ``s``, or ``None`` if unavailable."""
    mats = [s[a, b] for a in range(n) for b in range(n)]
    den = 1
    for m in mats:
        den = math.lcm(den, m.den)
    nums = []
    for m in mats:
        if m.num.dtype != np.int64:
            return None
        nums.append(np.ascontiguousarray(m.num * (den // m.den)))
    return den, nums


def _lorentz_sweep(report, g, s, n, lvl_index):
    pairs = [(a, b) for a in range(n) for b in range(n)]
    fast = _integer_operands(s, n)
    if fast is not None and all(g[a, b].denominator == 1 for a, b in pairs):
        den, nums = fast
        at = {pr: nums[k] for k, pr in enumerate(pairs)}
        gi = {pr: int(g[pr]) for pr in pairs}
        for (mu, nu), (rho, sig) in product(pairs, pairs):
            # [S_a, S_b] / den^2 == (sum g S) / den  <=>  [S_a, S_b] == den * sum g S
            lhs = kernels.bic_commutator(at[mu, nu], at[rho, sig])
            rhs = den * (
                gi[mu, sig] * at[nu, rho] - gi[mu, rho] * at[nu, sig]
                - gi[nu, sig] * at[mu, rho] + gi[nu, rho] * at[mu, sig]
            )
            if np.array_equal(lhs, rhs):
                report.checks += 1
            else:
                report.record(
                    (mu, nu, rho, sig), lorentz_rhs(g, s, mu, nu, rho, sig),
                    commutator(s[mu, nu], s[rho, sig]), lvl_index, "[s,s]",
                )
        return
    for (mu, nu), (rho, sig) in product(pairs, pairs):
        lhs = commutator(s[mu, nu], s[rho, sig])
        report.record((mu, nu, rho, sig), lorentz_rhs(g, s, mu, nu, rho, sig), lhs, lvl_index, "[s,s]")


def verify_lorentz(lvl) -> VerificationReport:
    """Check the spin commutator for every index quadruple of a level."""
    lvl = _as_level(lvl)
    report = VerificationReport(f"lorentz(level={lvl.index})")
    with _Timer(report):
        _lorentz_sweep(report, metric(lvl), spin_ops(lvl), lvl.n, lvl.index)
    return report


# ------------------------------------------------------------------ conformal


@dataclass(frozen=True, eq=False)
class ConformalGenerators:
    base: AlgebraLevel
    ambient: AlgebraLevel
    p: Tuple[BicMatrix, ...]
    q: Tuple[BicMatrix, ...]
    d: BicMatrix
    s: Tuple[Tuple[BicMatrix, ...], ...]

    @property
    def n(self) -> int:
        return self.base.n

    def s_at(self, mu: int, nu: int) -> BicMatrix:
        return self.s[mu][nu]


def conformal_generators(base) -> ConformalGenerators:
    """Momentum, special conformal and dilation generators over ``base``.

    ``p_mu = -s_{mu n} - s_{mu n+1}``, ``q_mu = s_{mu n} - s_{mu n+1}``,
    ``d = s_{n n+1}`` with ``s`` taken in the next level up.
    """
    base = _as_level(base)
    ambient = tower_level(base.index + 1)
    s = spin_ops(ambient)
    n = base.n
    p = tuple(-s[mu, n] - s[mu, n + 1] for mu in range(n))
    q = tuple(s[mu, n] - s[mu, n + 1] for mu in range(n))
    restricted = tuple(tuple(s[mu, nu] for nu in range(n)) for mu in range(n))
    return ConformalGenerators(base, ambient, p, q, s[n, n + 1], restricted)


def closed_forms(base) -> dict:
    """Doubled generators assembled directly from the units.

    ``2p_0 = ıj + iȷ``, ``2q_0 = ıj - iȷ``, ``2p_k = e_k(ȷj + ıi)``,
    ``2q_k = e_k(ȷj - ıi)``, ``2d = ıȷij`` with ``e_k`` the base generators.
    """
    base = _as_level(base)
    dim = base.dim
    im = block(IMATH, dim)
    jm = block(JMATH, dim)
    im_j = im * J
    i_jm = jm * I
    jm_j = jm * J
    im_i = im * I
    out = {
        "2p_0": im_j + i_jm,
        "2q_0": im_j - i_jm,
        "2d": (im @ jm) * (I * J),
    }
    for k, e in enumerate(base.generators, start=1):
        ek = lift(e)
        out[f"2p_{k}"] = ek @ (jm_j + im_i)
        out[f"2q_{k}"] = ek @ (jm_j - im_i)
    return out


def _generator(gens: ConformalGenerators, name: str) -> BicMatrix:
    kind, _, idx = name[1:].partition("_")
    if kind == "d":
        return gens.d
    return (gens.p if kind == "p" else gens.q)[int(idx)]


def verify_closed_forms(base) -> VerificationReport:
    base = _as_level(base)
    gens = conformal_generators(base)
    report = VerificationReport(f"closed_forms(base={base.index})")
    with _Timer(report):
        forms = closed_forms(base)
        for name, expected in forms.items():
            report.record((name,), expected, _generator(gens, name) * 2, gens.ambient.index, name)
    return report


def verify_conformal(base) -> VerificationReport:
    """Check every bracket among ``s, p, q, d``; all unlisted ones must vanish."""
    base = _as_level(base)
    gens = conformal_generators(base)
    g = metric(base)
    n = gens.n
    amb = gens.ambient.index
    zero = BicMatrix.zeros(gens.ambient.dim)
    s, p, q, d = gens.s_at, gens.p, gens.q, gens.d
    report = VerificationReport(f"conformal(base={base.index})")
    with _Timer(report):
        for mu, nu, sig in product(range(n), repeat=3):
            report.record(
                ("s", mu, nu, "p", sig),
                p[mu] * g[nu, sig] - p[nu] * g[mu, sig],
                commutator(s(mu, nu), p[sig]), amb, "[s,p]",
            )
            report.record(
                ("s", mu, nu, "q", sig),
                q[mu] * g[nu, sig] - q[nu] * g[mu, sig],
                commutator(s(mu, nu), q[sig]), amb, "[s,q]",
            )
        for mu in range(n):
            report.record(("d", "p", mu), -p[mu], commutator(d, p[mu]), amb, "[d,p]")
            report.record(("d", "q", mu), q[mu], commutator(d, q[mu]), amb, "[d,q]")
            for nu in range(n):
                report.record(
                    ("q", mu, "p", nu),
                    (d * g[mu, nu] + s(mu, nu)) * 2,
                    commutator(q[mu], p[nu]), amb, "[q,p]",
                )
                report.record(("p", mu, "p", nu), zero, commutator(p[mu], p[nu]), amb, "[p,p]")
                report.record(("q", mu, "q", nu), zero, commutator(q[mu], q[nu]), amb, "[q,q]")
                report.record(("d", "s", mu, nu), zero, commutator(d, s(mu, nu)), amb, "[d,s]")
        report.record(("d", "d"), zero, commutator(d, d), amb, "[d,d]")
    return report


def reduced_spin(base) -> VerificationReport:
    """The ambient spin operators restricted to base indices, against the base metric."""
    base = _as_level(base)
    gens = conformal_generators(base)
    report = VerificationReport(f"reduced(base={base.index})")

    class _S:
        def __getitem__(self, idx):
            return gens.s_at(*idx)

    with _Timer(report):
        _lorentz_sweep(report, metric(base), _S(), base.n, gens.ambient.index)
    return report


# ------------------------------------------------------- homogeneous space


def _row_reduce(rows: List[List[Fraction]]) -> List[Tuple[int, List[Fraction]]]:
    """Reduced echelon basis as (pivot column, row) pairs."""
    basis: List[Tuple[int, List[Fraction]]] = []
    for row in rows:
        reduced = _reduce_against(row, basis)
        pivot = next((k for k, v in enumerate(reduced) if v), None)
        if pivot is None:
            continue
        inv = 1 / reduced[pivot]
        reduced = [v * inv for v in reduced]
        basis = [
            (pc, [a - b * r[pivot] for a, b in zip(r, reduced)]) if r[pivot] else (pc, r)
            for pc, r in basis
        ]
        basis.append((pivot, reduced))
    return basis


def _reduce_against(row: Sequence[Fraction], basis) -> List[Fraction]:
    out = list(row)
    for pivot, r in basis:
        c = out[pivot]
        if c:
            out = [a - c * b for a, b in zip(out, r)]
    return out


def _vector(m: BicMatrix) -> List[Fraction]:
    return [Fraction(int(v), m.den) for v in m.num.ravel()]


def rational_rank(mats: Sequence[BicMatrix]) -> int:
    return len(_row_reduce([_vector(m) for m in mats]))


def in_span(m: BicMatrix, mats: Sequence[BicMatrix]) -> bool:
    basis = _row_reduce([_vector(x) for x in mats])
    return not any(_reduce_against(_vector(m), basis))


Labeled = List[Tuple[str, BicMatrix]]


def homogeneous_split(base) -> Tuple[Labeled, Labeled]:
    """Return the generator lists of g = {s, p, q, d} and h = {s, q, d}.

    Raises :class:`NotClosed` unless every bracket of two h elements lies in
    the exact span of h.
    """
    base = _as_level(base)
    gens = conformal_generators(base)
    n = gens.n
    s_part = [(f"s_{mu}{nu}", gens.s_at(mu, nu)) for mu in range(n) for nu in range(mu + 1, n)]
    p_part = [(f"p_{mu}", gens.p[mu]) for mu in range(n)]
    q_part = [(f"q_{mu}", gens.q[mu]) for mu in range(n)]
    d_part = [("d", gens.d)]
    g_basis = s_part + p_part + q_part + d_part
    h_basis = s_part + q_part + d_part

    basis = _row_reduce([_vector(m) for _, m in h_basis])
    if len(basis) != len(h_basis):
        raise NotClosed("h generators are linearly dependent")
    for a in range(len(h_basis)):
        for b in range(a + 1, len(h_basis)):
            br = commutator(h_basis[a][1], h_basis[b][1])
            if any(_reduce_against(_vector(br), basis)):
                raise NotClosed(f"[{h_basis[a][0]}, {h_basis[b][0]}] leaves span(h)")
    return g_basis, h_basis


# ------------------------------------------------------- structural suites


def verify_metric(lvl) -> VerificationReport:
    """``(e_mu ebar_nu + e_nu ebar_mu) / 2`` must be ``g_{mu nu}`` times the identity."""
    lvl = _as_level(lvl)
    g = metric(lvl)
    basis = lvl.basis()
    eye = BicMatrix.identity(lvl.dim)
    report = VerificationReport(f"metric(level={lvl.index})")
    with _Timer(report):
        for mu, nu in product(range(lvl.n), repeat=2):
            a, b = basis[mu], basis[nu]
            sym = (a @ b.bar() + b @ a.bar()) * Fraction(1, 2)
            report.record((mu, nu), eye * g[mu, nu], sym, lvl.index, "sym")
    return report


def verify_spin(lvl) -> VerificationReport:
    """Antisymmetry of ``sigma`` and ``sigma_{mu nu} = (e_mu ebar_nu - e_nu ebar_mu) / 2``."""
    lvl = _as_level(lvl)
    sig = spin_tensor(lvl)
    basis = lvl.basis()
    report = VerificationReport(f"spin(level={lvl.index})")
    with _Timer(report):
        for mu, nu in product(range(lvl.n), repeat=2):
            a, b = basis[mu], basis[nu]
            direct = (a @ b.bar() - b @ a.bar()) * Fraction(1, 2)
            report.record((mu, nu), direct, sig[mu, nu], lvl.index, "sigma")
            report.record((mu, nu), -sig[nu, mu], sig[mu, nu], lvl.index, "antisym")
    return report


def _random_matrix(rng: np.random.Generator, dim: int) -> BicMatrix:
    return BicMatrix(rng.integers(-3, 4, size=(4, dim, dim)))


def verify_involutions(lvl, seed: int = 0, samples: int = 8) -> VerificationReport:
    """Generator images of bar/dagger/hat plus seeded (anti-)automorphism checks."""
    lvl = _as_level(lvl)
    report = VerificationReport(f"involutions(level={lvl.index})")
    rng = np.random.default_rng(seed)
    with _Timer(report):
        for k, e in enumerate(lvl.generators, start=1):
            report.record((k,), -e, e.bar(), lvl.index, "bar e")
            report.record((k,), e, e.dagger(), lvl.index, "dagger e")
            report.record((k,), -e, e.hat(), lvl.index, "hat e")
        for t in range(samples):
            a, b = _random_matrix(rng, lvl.dim), _random_matrix(rng, lvl.dim)
            ab = a @ b
            report.record((t,), b.bar() @ a.bar(), ab.bar(), lvl.index, "bar(ab)")
            report.record((t,), b.dagger() @ a.dagger(), ab.dagger(), lvl.index, "dagger(ab)")
            report.record((t,), a.hat() @ b.hat(), ab.hat(), lvl.index, "hat(ab)")
            for name, f in (("bar", BicMatrix.bar), ("dagger", BicMatrix.dagger), ("hat", BicMatrix.hat)):
                report.record((t,), a, f(f(a)), lvl.index, f"{name}^2")
    return report
