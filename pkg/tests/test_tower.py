from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicliff.bicomplex import I, J
from bicliff.errors import NullVector
from bicliff.matrix import BicMatrix
from bicliff.tower import (
    DESCRIPTIONS,
    Paravector,
    block,
    embed,
    IMATH,
    JMATH,
    level,
    lift,
    pv_inverse,
    pv_norm,
)

LEVELS = range(0, 4)


def test_level_zero_is_complex_plane():
    lvl = level(0)
    assert lvl.n == 2 and lvl.dim == 1
    assert lvl.generators[0].as_scalar() == I
    assert lvl.signature == (2, 0)


def test_pauli_like_generators():
    e1, e2, e3 = level(1).generators
    assert e1 == BicMatrix.from_entries([[I, 0], [0, -I]])
    assert e2 == BicMatrix.from_entries([[0, I], [I, 0]])
    assert e3 == BicMatrix.from_entries([[0, J], [-J, 0]])


@pytest.mark.parametrize("index", range(0, 5))
def test_sizes_and_labels(index):
    lvl = level(index)
    assert lvl.n == 2 * index + 2
    assert lvl.dim == 2**index
    assert lvl.clifford_label == f"R_{{{index},{index + 1}}}"
    squares = lvl.generator_squares()
    assert squares.count(1) == index and squares.count(-1) == index + 1


def test_descriptions():
    assert "Pauli" in DESCRIPTIONS[1]
    assert "Dirac" in DESCRIPTIONS[2]


@pytest.mark.parametrize("index", LEVELS)
def test_generators_anticommute(index):
    gens = level(index).generators
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            assert gens[a] @ gens[b] == -(gens[b] @ gens[a])


@pytest.mark.parametrize("index", range(0, 5))
def test_involutions_on_generators(index):
    for e in level(index).generators:
        assert e.bar() == -e
        assert e.dagger() == e
        assert e.hat() == -e


def test_lift_and_block_commute():
    for m in level(1).generators:
        for u in (IMATH, JMATH):
            assert lift(m) @ block(u, 2) == block(u, 2) @ lift(m)


def test_embed_and_norm_examples():
    x = Paravector.of(1, [1, 2, 3, 4])
    assert pv_norm(x) == 1 + 4 + 9 - 16
    assert pv_norm(Paravector.of(0, [3, 4])) == 25


def test_null_vector_has_no_inverse():
    with pytest.raises(NullVector):
        pv_inverse(Paravector.of(1, [1, 0, 0, 1]))


def test_inverse_example():
    x = Paravector.of(1, [0, 2, 0, 0])
    inv = pv_inverse(x)
    assert inv.coeffs == (0, Fraction(-1, 2), 0, 0)
    assert embed(x) @ embed(inv) == BicMatrix.identity(2)


def test_wrong_coefficient_count():
    with pytest.raises(ValueError):
        Paravector.of(1, [1, 2])


coeff = st.integers(min_value=-5, max_value=5)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2).flatmap(
    lambda L: st.tuples(st.just(L), st.lists(coeff, min_size=2 * L + 2, max_size=2 * L + 2))))
def test_embedding_is_injective_and_norm_is_metric(args):
    L, cs = args
    x = Paravector.of(L, cs)
    m = embed(x)
    assert m.is_zero() == (not any(cs))
    signs = [1, 1] + [1, -1] * L
    assert pv_norm(x) == sum(s * c * c for s, c in zip(signs, cs))
    if pv_norm(x) != 0:
        assert pv_inverse(pv_inverse(x)) == x
        assert embed(x) @ embed(pv_inverse(x)) == BicMatrix.identity(m.dim)
