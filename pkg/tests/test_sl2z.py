"""Projective modular action on symmetric forms and the coend picture."""

import cmath

import pytest

from uqsl2.uq_algebra import algebra
from uqsl2.center_slf import gta_basis
from uqsl2.linalg import ExactMatrix
from uqsl2.ribbon import ribbon_value
from uqsl2.mcg_sl2z import (decompose_rep, lm_operators, projective_ratio,
                            sl2z_relations, sqrt_p_value, theta1, xi_value)


PS = (2, 3)


@pytest.mark.parametrize("p", PS)
def test_dual_construction(p):
    # theta1 runs both the operator and the closed-formula construction
    # and raises on any mismatch
    theta1(algebra(p), "a")
    theta1(algebra(p), "b")


@pytest.mark.parametrize("p", PS)
def test_twist_a_triangular_with_ribbon_diagonal(p):
    alg = algebra(p)
    gta = gta_basis(alg)
    ta = theta1(alg, "a").matrix
    labs = gta.labels
    for i, lab in enumerate(labs):
        if lab.startswith("chi"):
            eps, s = (1 if lab[3] == "+" else -1), int(lab[4:])
        else:
            eps, s = 1, int(lab[1:])
        want = ribbon_value(alg, s if eps == 1
                            else (p - s if s < p else 0)).inverse()
        assert ta.entry(i, i) == want
        # off-diagonal entries only flow from characters into G forms
        for j, other in enumerate(labs):
            if j != i and ta.entry(i, j):
                assert lab.startswith("chi") and other.startswith("G")


@pytest.mark.parametrize("p", PS)
def test_relations(p):
    alg = algebra(p)
    F = alg.field
    rel = sl2z_relations(alg)
    assert rel["braid_exact"]
    assert rel["st_cubed_ok"]
    assert rel["st_sixth_ok"]
    want = -F.one if p == 2 else F.zeta_pow(3)
    assert rel["st_cubed_scalar"] == want


@pytest.mark.parametrize("p", PS)
def test_inverses_and_projectivity(p):
    alg = algebra(p)
    n = 3 * p - 1
    ta = theta1(alg, "a").matrix
    tb = theta1(alg, "b").matrix
    assert ta @ theta1(alg, "a^-1").matrix == ExactMatrix.identity(
        alg.field, n)
    s = ta @ tb @ ta
    s4 = s @ s @ s @ s
    ratio = projective_ratio(s4, ExactMatrix.identity(alg.field, n))
    assert ratio is not None


@pytest.mark.parametrize("p", PS)
def test_decomposition(p):
    dec = decompose_rep(algebra(p))
    assert dec["dims"] == (p + 1, p - 1)


@pytest.mark.parametrize("p", (2, 3, 4, 5))
def test_xi_exact_and_numeric(p):
    alg = algebra(p)
    F = alg.field
    sp = sqrt_p_value(alg)
    assert sp * sp == F.from_int(p)
    q = cmath.exp(1j * cmath.pi / p)
    qh = q - 1 / q
    fac = 1.0
    for k in range(1, p):
        fac *= (q ** k - q ** -k) / qh
    xi_inv = ((1j - 1) * cmath.sqrt(p) * (qh ** (p - 1)) * fac
              * q ** (-(p - 3) / 2.0))
    assert abs(xi_value(alg).numeric() - 1 / xi_inv) < 1e-9


@pytest.mark.parametrize("p", PS)
def test_lm_equivalence(p):
    alg = algebra(p)
    F = alg.field
    ops = lm_operators(alg)
    assert ops["s_intertwined"]
    assert ops["t_intertwined"]
    assert ops["antipode_is_identity"]
    assert ops["s_squared_scalar"] == F.from_int(2 * p ** 3)
