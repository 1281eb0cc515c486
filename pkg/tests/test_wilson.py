"""Loop words, normalization and Wilson loop operators."""

import pytest

from uqsl2.uq_algebra import algebra
from uqsl2.center_slf import gta_basis
from uqsl2.linalg import ExactMatrix
from uqsl2.handle_rep import restrict_to_slf
from uqsl2.loop_wilson import (in_wilson_algebra, loop_a, loop_b, loop_binva,
                               loop_c, loop_d, m_power_identity,
                               normalization_N, parse_loop, wilson_op)


PS = (2, 3)


def test_word_reduction_and_parse():
    w = parse_loop("b1 a1^-1 a1 b1^-1 a1", 1)
    assert str(w) == "a1"
    # inversion reverses the word and flips the orientation flag
    inv = parse_loop("b1 a1", 1).inverse()
    assert inv.letters == parse_loop("a1^-1 b1^-1", 1).letters
    assert inv.orientation == -1
    with pytest.raises(ValueError):
        parse_loop("c1", 1)
    with pytest.raises(ValueError):
        parse_loop("b1 b1^-1", 1)
    with pytest.raises(ValueError):
        parse_loop("b2", 1)


def test_normalization_examples():
    assert normalization_N(loop_b(1)) == 0
    assert normalization_N(loop_a(1)) == 0
    assert normalization_N(loop_binva(1)) == 1
    assert normalization_N(loop_d(2, 2)) == normalization_N(
        parse_loop("a1 b2 a2^-1 b2^-1", 2))


@pytest.mark.parametrize("p", PS)
def test_commutator_loop_multiplies_by_character(p):
    alg = algebra(p)
    F = alg.field
    gta = gta_basis(alg)
    n = len(gta.labels)
    wm = restrict_to_slf(wilson_op(alg, loop_binva(1)))
    cols = [gta.product(gta["chi+2"], f).coords for f in gta.forms]
    mult = ExactMatrix.from_rows(F, [[cols[j][i] for j in range(n)]
                                     for i in range(n)])
    assert wm == mult


@pytest.mark.parametrize("p", PS)
def test_orientation_independence(p):
    alg = algebra(p)
    for w in (loop_b(1), loop_a(1)):
        assert wilson_op(alg, w) == wilson_op(alg, w.inverse())


@pytest.mark.parametrize("p", PS)
def test_power_identities(p):
    alg = algebra(p)
    for which in ("A", "B"):
        for n in range(-4, 5):
            assert m_power_identity(alg, which, n)


@pytest.mark.parametrize("p", PS)
def test_longer_loop_in_wilson_algebra(p):
    alg = algebra(p)
    op = wilson_op(alg, parse_loop("b1 a1 a1", 1))
    assert in_wilson_algebra(alg, op, 3)


def test_boundary_word_genus2():
    w = loop_c(2)
    assert w.genus == 2
    assert len(w) == 8
