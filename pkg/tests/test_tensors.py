import json
from fractions import Fraction
from itertools import product

import pytest

from bicliff.bicomplex import I, J
from bicliff.errors import NoMatch
from bicliff.matrix import BicMatrix
from bicliff.tensors import (
    UnitWord,
    canonicalize,
    decompose,
    default_mode,
    describe,
    evaluate,
    metric,
    render_table,
    sigma_words,
    spin_ops,
    spin_tensor,
    table_document,
    vocabulary,
    word_index,
)
from bicliff.tower import IMATH, JMATH, block, level, lift

# Reference spin tables; factors are listed in hand-derived order, not canonical order.
PLANE_TABLE = [
    ["0", "-e_1"],
    ["e_1", "0"],
]

MINKOWSKI_TABLE = [
    ["0", "-e_1", "-e_2", "-e_3"],
    ["e_1", "0", "-j e_3", "-j e_2"],
    ["e_2", "j e_3", "0", "j e_1"],
    ["e_3", "j e_2", "-j e_1", "0"],
]

MINKOWSKI_LIFTED_TABLE = [
    ["0", "-ı ȷ e_1", "-i ȷ", "-ı j"],
    ["ı ȷ e_1", "0", "-ı i e_1", "-ȷ j e_1"],
    ["i ȷ", "ı i e_1", "0", "ı ȷ i j"],
    ["ı j", "ȷ j e_1", "-ı ȷ i j", "0"],
]

AMBIENT_TABLE = [
    ["0", "-ı ȷ e_1", "-ı ȷ e_2", "-ı ȷ e_3", "-i ȷ", "-ı j"],
    ["ı ȷ e_1", "0", "-j e_3", "-j e_2", "-ı i e_1", "-ȷ j e_1"],
    ["ı ȷ e_2", "j e_3", "0", "j e_1", "-ı i e_2", "-ȷ j e_2"],
    ["ı ȷ e_3", "j e_2", "-j e_1", "0", "-ı i e_3", "-ȷ j e_3"],
    ["i ȷ", "ı i e_1", "ı i e_2", "ı i e_3", "0", "ı ȷ i j"],
    ["ı j", "ȷ j e_1", "ȷ j e_2", "ȷ j e_3", "-ı ȷ i j", "0"],
]


def parse(cell):
    if cell == "0":
        return None
    sign = -1 if cell.startswith("-") else 1
    return sign, cell.lstrip("-").split()


def test_metrics():
    assert metric(0).diagonal() == (1, 1)
    assert metric(1).diagonal() == (1, 1, 1, -1)
    assert metric(2).diagonal() == (1, 1, 1, -1, 1, -1)
    assert metric(2).as_lists()[3][3] == -1
    for L in range(4):
        g = metric(L)
        assert all(g[a, b] == 0 for a, b in product(range(g.n), repeat=2) if a != b)


def test_sigma_examples():
    e1, e2, e3 = level(1).generators
    sig = spin_tensor(1)
    assert sig[0, 1] == -e1
    assert sig[1, 2] == (e3 * J) * -1
    assert spin_ops(1)[0, 1] == sig[0, 1] * Fraction(1, 2)


@pytest.mark.parametrize("index,table", [
    (0, PLANE_TABLE), (1, MINKOWSKI_TABLE), (2, AMBIENT_TABLE),
])
def test_rendered_tables_match_reference(index, table):
    words = sigma_words(index)
    for mu, nu in product(range(len(table)), repeat=2):
        cell = parse(table[mu][nu])
        if cell is None:
            assert words[mu][nu] is None
        else:
            assert words[mu][nu] == canonicalize(*cell, index), (mu, nu)


def test_minkowski_table_in_lifted_units():
    # independent evaluator: block units and scalars built directly
    units = {
        "ı": block(IMATH, 1),
        "ȷ": block(JMATH, 1),
        "i": BicMatrix.scalar(I, 2),
        "j": BicMatrix.scalar(J, 2),
        "e_1": lift(level(0).generators[0]),
    }
    sig = spin_tensor(1)
    for mu, nu in product(range(4), repeat=2):
        cell = parse(MINKOWSKI_LIFTED_TABLE[mu][nu])
        if cell is None:
            assert sig[mu, nu].is_zero()
            continue
        sign, factors = cell
        m = BicMatrix.identity(2)
        for f in factors:
            m = m @ units[f]
        assert sig[mu, nu] == m * sign, (mu, nu)


def test_rotation_block_is_j_free():
    sig = spin_tensor(1)
    for mu, nu in product(range(3), repeat=2):
        assert not sig[mu, nu].num[2:].any()
    assert sig[0, 3].num[2:].any()


def test_text_render_layout():
    text = render_table(2)
    lines = text.splitlines()
    assert len(lines) == 8
    assert lines[-1].split()[-5:] == ["-i", "j", "ı", "ȷ", "0"]
    assert "-ı ȷ e_1" in lines[2]


def test_json_document_schema():
    doc = json.loads(render_table(1, "json"))
    assert set(doc) == {"level", "n", "metric", "sigma"}
    assert doc["n"] == 4 and len(doc["sigma"]) == 4
    assert doc["sigma"][0][0] == {"sign": 0, "factors": []}
    assert doc["sigma"][1][2] == {"sign": -1, "factors": ["j", "e_3"]}
    assert doc == table_document(1)


def test_default_modes():
    assert default_mode(0) == default_mode(1) == "generators"
    assert default_mode(2) == "lifted"


def test_generator_names_take_priority():
    names = [p.name for p in vocabulary(0, "generators")]
    assert names == ["j", "e_1"]


@pytest.mark.parametrize("index,mode", [
    (0, "generators"), (1, "generators"), (1, "lifted"), (2, "lifted"), (2, "unrolled"),
])
def test_decompose_inverts_evaluate(index, mode):
    idx = word_index(index, mode, 4)
    for key, word in idx.words.items():
        m = evaluate(word, index, mode)
        assert m.key() == key
        assert decompose(m, index, mode) == word


def test_collisions_are_reported():
    # at level 1 the product of all three generators is a scalar multiple of i j
    idx = word_index(1, "generators", 4)
    assert idx.collisions
    for group in idx.collisions:
        mats = {evaluate(w, 1, "generators").key() for w in group}
        assert len(mats) == 1


def test_canonicalize_signs_and_squares():
    assert canonicalize(1, ["e_2", "e_1"], 1) == UnitWord(-1, ("e_1", "e_2"))
    assert canonicalize(1, ["e_1", "e_1"], 1) == UnitWord(-1, ())
    assert canonicalize(1, ["e_3", "e_3"], 1) == UnitWord(1, ())
    assert canonicalize(-1, ["ȷ", "ı"], 2) == UnitWord(1, ("ı", "ȷ"))


def test_unknown_factor_and_no_match():
    with pytest.raises(NoMatch):
        canonicalize(1, ["k"], 1)
    with pytest.raises(NoMatch):
        decompose(BicMatrix.identity(2) * 3, 1)


def test_describe():
    assert describe(spin_ops(1)[0, 1], 1) == "(-e_1)/2"
    assert describe(BicMatrix.zeros(2), 1) == "0"
    assert describe(spin_tensor(2)[4, 5], 2) == "i j ı ȷ"


def test_unit_word_strings():
    assert str(UnitWord(-1, ("i", "ı", "e_1"))) == "-i ı e_1"
    assert str(UnitWord(1)) == "1"
    with pytest.raises(ValueError):
        UnitWord(0)
