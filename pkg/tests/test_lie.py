import json
from itertools import product

import pytest

from bicliff.bicomplex import I, IJ
from bicliff.lie import (
    VerificationReport,
    closed_forms,
    conformal_generators,
    homogeneous_split,
    in_span,
    lorentz_rhs,
    rational_rank,
    reduced_spin,
    verify_closed_forms,
    verify_conformal,
    verify_involutions,
    verify_lorentz,
    verify_metric,
    verify_spin,
)
from bicliff.matrix import BicMatrix, commutator, matrix_sum
from bicliff.tensors import metric, spin_ops
from bicliff.tower import IMATH, JMATH, block, level, lift


def test_rotation_bracket_example():
    s = spin_ops(1)
    assert commutator(s[1, 2], s[2, 3]) == s[1, 3]
    assert commutator(s[0, 1], s[0, 1]).is_zero()


def test_symmetric_sign_pattern_fails():
    # g_ms s_nr - g_mr s_ns + g_ns s_mr - g_nr s_ms is symmetric under m <-> n,
    # while the commutator is antisymmetric, so it cannot be the bracket
    g, s = metric(1), spin_ops(1)

    def symmetric_rhs(m, n, r, q):
        return matrix_sum([
            s[n, r] * g[m, q], -s[n, q] * g[m, r], s[m, r] * g[n, q], -s[m, q] * g[n, r],
        ])

    assert symmetric_rhs(1, 2, 2, 3) == symmetric_rhs(2, 1, 2, 3)
    failures = [
        idx for idx in product(range(4), repeat=4)
        if commutator(s[idx[0], idx[1]], s[idx[2], idx[3]]) != symmetric_rhs(*idx)
    ]
    assert failures
    assert all(commutator(s[a, b], s[c, d]) == lorentz_rhs(g, s, a, b, c, d)
               for a, b, c, d in product(range(4), repeat=4))


@pytest.mark.parametrize("index", range(0, 4))
def test_lorentz_levels(index):
    report = verify_lorentz(index)
    assert report.passed
    assert report.checks == level(index).n ** 4


@pytest.mark.parametrize("base", range(0, 3))
def test_conformal_relations(base):
    report = verify_conformal(base)
    assert report.passed, report.failures[:3]


@pytest.mark.parametrize("base", range(0, 3))
def test_reduced_spin(base):
    assert reduced_spin(base).passed


@pytest.mark.parametrize("base", range(0, 3))
def test_closed_forms(base):
    assert verify_closed_forms(base).passed


@pytest.mark.parametrize("index", range(0, 4))
def test_structural_suites(index):
    for report in (verify_metric(index), verify_spin(index), verify_involutions(index, seed=3)):
        assert report.passed, report.suite


def test_dilation_closed_form():
    gens = conformal_generators(1)
    unit = (block(IMATH, 2) @ block(JMATH, 2)).scale(IJ)
    assert gens.d * 2 == unit
    assert closed_forms(1)["2d"] == unit


def test_momentum_minus_special_is_unit_product():
    gens = conformal_generators(1)
    for k, e in enumerate(level(1).generators, start=1):
        assert gens.p[k] - gens.q[k] == (lift(e) @ block(IMATH, 2)) * I


def test_selected_conformal_brackets():
    gens = conformal_generators(1)
    assert commutator(gens.p[0], gens.p[1]).is_zero()
    assert commutator(gens.q[0], gens.p[0]) == gens.d * 2
    assert commutator(gens.d, gens.p[2]) == -gens.p[2]
    assert commutator(gens.q[3], gens.p[3]) == gens.d * -2


def test_failure_is_reported_with_index():
    report = VerificationReport("demo")
    one = BicMatrix.identity(2)
    report.record((0, 1), one, one * 2, 1, "probe")
    assert not report.passed
    failure = report.failures[0]
    assert failure["index"] == [0, 1] and failure["relation"] == "probe"
    assert failure["difference"] == "1"


def test_report_json_and_merge():
    a = verify_lorentz(0)
    b = verify_lorentz(1)
    merged = a.merge(b)
    assert merged.checks == a.checks + b.checks
    doc = json.loads(merged.to_json(timing=False))
    assert doc == {"suite": "lorentz(level=0)", "checks": 16 + 256, "failures": [], "ms": None}
    assert isinstance(json.loads(a.to_json())["ms"], float)


def test_homogeneous_split():
    g_basis, h_basis = homogeneous_split(1)
    assert len(g_basis) == 15 and len(h_basis) == 11
    assert rational_rank([m for _, m in g_basis]) == 15
    names = {name for name, _ in g_basis} - {name for name, _ in h_basis}
    assert names == {"p_0", "p_1", "p_2", "p_3"}


def test_span_membership():
    gens = conformal_generators(1)
    h = [gens.d] + list(gens.q)
    assert in_span(commutator(gens.d, gens.q[1]), h)
    assert not in_span(gens.p[0], h)
