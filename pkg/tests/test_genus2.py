"""Genus-two tower at p = 2: twists, invariants and the boundary curve."""

import pytest

from uqsl2.uq_algebra import algebra
from uqsl2.mcg_sl2z import genus_twist_op, preserves_invariants
from uqsl2.handle_rep import inv_subspace
from uqsl2.skein import genus2_skein_check


@pytest.fixture(scope="module")
def alg():
    return algebra(2)


@pytest.fixture(scope="module")
def twists(alg):
    return {lab: genus_twist_op(alg, 2, lab[0], int(lab[1]))
            for lab in ("a1", "b1", "a2", "b2", "d2", "e2")}


def test_invariant_subspace_dimension(alg):
    assert inv_subspace(alg, 2).shape[1] == 38


def test_braid_relations(twists):
    m = {k: op.matrix for k, op in twists.items()}
    for x, y in (("a1", "b1"), ("a2", "b2"), ("d2", "b1"),
                 ("d2", "b2"), ("e2", "b2")):
        assert m[x] @ m[y] @ m[x] == m[y] @ m[x] @ m[y], (x, y)


def test_disjoint_curves_commute(twists):
    m = {k: op.matrix for k, op in twists.items()}
    for x, y in (("b1", "b2"), ("b1", "a2"), ("a1", "b2"), ("a1", "a2"),
                 ("d2", "a1"), ("d2", "a2"), ("e2", "a1"), ("e2", "a2"),
                 ("e2", "b1"), ("e2", "d2")):
        assert m[x] @ m[y] == m[y] @ m[x], (x, y)


def test_twists_preserve_invariants(alg, twists):
    for lab in ("a1", "b1", "d2", "e2"):
        assert preserves_invariants(alg, 2, twists[lab]), lab


def test_boundary_curve_identity(alg):
    assert genus2_skein_check(alg)
