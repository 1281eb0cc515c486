"""R-matrix, monodromy, ribbon element and the Drinfeld map."""

import pytest

from uqsl2.uq_algebra import algebra
from uqsl2.uq_modules import simple_module
from uqsl2.linalg import ExactMatrix
from uqsl2.ribbon import (drinfeld_map, drinfeld_u, factorizability_rank,
                          m_element, phi_v, phi_v_inv, r_matrix_ext, r_prime,
                          ribbon_v, ribbon_v_inv, ribbon_value,
                          tensor_mul_fast, yang_baxter_check)
from uqsl2.tensor import TensorElem
from uqsl2.center_slf import center_basis, gta_basis


PS = (2, 3)


@pytest.mark.parametrize("p", PS)
def test_monodromy_closed_formula(p):
    # the constructor itself compares the closed double sum with R'R
    # and the descent to the base algebra, and raises on any mismatch
    m_element(algebra(p))


def test_yang_baxter_p2():
    assert yang_baxter_check(algebra(2))


@pytest.mark.parametrize("p", PS)
def test_ribbon_axioms(p):
    alg = algebra(p)
    F = alg.field
    v, vinv, u = ribbon_v(alg), ribbon_v_inv(alg), drinfeld_u(alg)
    assert v * vinv == alg.unit()
    for x in (alg.E, alg.F, alg.K):
        assert v * x == x * v
    assert v.antipode() == v
    assert v.counit() == F.one
    assert u * vinv == alg.K_pow(2 * (p + 1))
    assert v * v == u * u.antipode()


def test_ribbon_coproduct_p2():
    alg = algebra(2)
    v = ribbon_v(alg)
    rpr = tensor_mul_fast(r_prime(alg), r_matrix_ext(alg))
    assert (tensor_mul_fast(v.coproduct(), rpr)
            == TensorElem.from_pair(v, v))


@pytest.mark.parametrize("p", PS)
def test_ribbon_eigenvalues(p):
    alg = algebra(p)
    F = alg.field
    for s in range(1, p + 1):
        # v = (-1)^(s-1) zeta^(-(s^2-1)) on the s-dimensional simple
        want = F.from_int((-1) ** (s - 1)) * F.zeta_pow(-(s * s - 1)
                                                        % (4 * p))
        assert ribbon_value(alg, s) == want
        mod = simple_module(alg, 1, s)
        assert mod.rep(ribbon_v(alg)) == ExactMatrix.identity(F, s) * want


@pytest.mark.parametrize("p", PS)
def test_factorizability(p):
    assert factorizability_rank(algebra(p)) == 2 * p ** 3


@pytest.mark.parametrize("p", PS)
def test_drinfeld_map(p):
    alg = algebra(p)
    F = alg.field
    gta = gta_basis(alg)
    Z = center_basis(alg)
    images = [drinfeld_map(f) for f in gta.forms]
    coords = [Z.decompose(z) for z in images]
    M = ExactMatrix.from_rows(F, [c.coords for c in coords])
    assert M.rank() == 3 * p - 1
    for i, fi in enumerate(gta.forms):
        for j, fj in enumerate(gta.forms):
            assert drinfeld_map(fi * fj) == images[i] * images[j]
    assert (drinfeld_map(gta["chi+2"])
            == alg.casimir() * (-(F.qhat * F.qhat)))
    assert drinfeld_map(phi_v(alg)) == ribbon_v(alg)
    assert drinfeld_map(phi_v_inv(alg)) == ribbon_v_inv(alg)
