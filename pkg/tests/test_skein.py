"""Temperley-Lieb diagrams and the skein representation of the torus."""

import pytest

from uqsl2.uq_algebra import algebra
from uqsl2.skein import (TLElem, composition_series, iso_F, jones_wenzl,
                         jw_recursion_check, kauffman_check,
                         meridian_eigencheck, rho_torus, slf_skein_ops,
                         tl_compose)


PS = (2, 3)


@pytest.mark.parametrize("p", PS)
def test_jones_wenzl_universal_property(p):
    alg = algebra(p)
    F = alg.field
    for n in range(1, p):
        f = jones_wenzl(alg, n)
        assert tl_compose(f, f) == f
        for i in range(n - 1):
            e = TLElem.e_gen(F, n, i)
            assert tl_compose(f, e).is_zero()
            assert tl_compose(e, f).is_zero()


def test_jones_wenzl_recursion_p3():
    assert jw_recursion_check(algebra(3), 2)


@pytest.mark.parametrize("p", PS)
def test_meridian_eigenvalues(p):
    alg = algebra(p)
    for n in range(1, p):
        assert meridian_eigencheck(alg, n)


@pytest.mark.parametrize("p", PS)
def test_curve_action_closed_formulas(p):
    # both constructors compare the diagrammatic action with the closed
    # formulas and raise on mismatch
    alg = algebra(p)
    a = rho_torus(alg, "a")
    b = rho_torus(alg, "b")
    assert a.shape == (p - 1, p - 1) and b.shape == (p - 1, p - 1)
    slf_skein_ops(alg)


@pytest.mark.parametrize("p", PS)
def test_kauffman_relation(p):
    assert kauffman_check(algebra(p))


@pytest.mark.parametrize("p", PS)
def test_composition_series(p):
    series = composition_series(algebra(p))
    assert series["dims"] == (p + 1, p - 1, p - 1)
    for key in ("aux_in_wilson", "series_invariant", "j1_simple",
                "j2_over_j1_simple", "j3_over_j2_simple",
                "indecomposable"):
        assert series[key], key


@pytest.mark.parametrize("p", PS)
def test_intertwiner(p):
    iso = iso_F(algebra(p))
    assert iso["residual_a"] and iso["residual_b"]
    assert iso["matrix"].rank() == p - 1
