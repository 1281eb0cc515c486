"""Simple and projective modules: relations, characters, duality."""

import pytest

from uqsl2.uq_algebra import algebra
from uqsl2.uq_modules import (fundamental, proj_module, simple_module,
                              tensor_module)
from uqsl2.linalg import ExactMatrix


PS = (2, 3)


def _rep_respects_relations(alg, mod):
    F = alg.field
    e, f, k = mod.rep(alg.E), mod.rep(alg.F), mod.rep(alg.K)
    qhi = F.qhat.inverse()
    k2 = mod.rep(alg.K_pow(2))
    k2i = mod.rep(alg.K_pow(-2))
    ok = (k @ e == (e @ k) * F.q_pow(2))
    ok &= (k @ f == (f @ k) * F.q_pow(-2))
    ok &= (e @ f - f @ e == (k2 - k2i) * qhi)
    return ok


@pytest.mark.parametrize("p", PS)
def test_simple_modules(p):
    alg = algebra(p)
    for eps in (1, -1):
        for s in range(1, p + 1):
            mod = simple_module(alg, eps, s)
            assert mod.dim == s
            assert _rep_respects_relations(alg, mod)
            # highest weight of the K action
            k = mod.rep(alg.K)
            want = alg.field.q_pow(s - 1)
            if eps == -1:
                want = -want
            assert k.entry(0, 0) == want


@pytest.mark.parametrize("p", PS)
def test_projective_modules(p):
    alg = algebra(p)
    for eps in (1, -1):
        for s in range(1, p):
            mod = proj_module(alg, eps, s)
            assert mod.dim == 2 * p
            assert _rep_respects_relations(alg, mod)


@pytest.mark.parametrize("p", PS)
def test_fundamental_tensor_square(p):
    """X(2) (x) X(2) contains the trivial module: the intertwiner to the
    dual detects the invariant vector."""
    alg = algebra(p)
    F = alg.field
    mod = fundamental(alg)
    sq = tensor_module(mod, mod)
    assert sq.dim == 4
    # the invariant vector v0 (x) v1 - q^-1 v1 (x) v0 is killed by E, F
    col = [F.zero, F.one, -F.q_pow(-1), F.zero]
    vec = ExactMatrix.from_rows(F, [[c] for c in col])
    for gen in (alg.E, alg.F):
        assert (sq.rep(gen) @ vec).is_zero()
    assert sq.rep(alg.K) @ vec == vec


@pytest.mark.parametrize("p", PS)
def test_characters_are_symmetric(p):
    alg = algebra(p)
    for eps in (1, -1):
        for s in range(1, p + 1):
            assert simple_module(alg, eps, s).character().is_symmetric()
