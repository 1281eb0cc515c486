"""Defining relations, PBW structure and the Hopf operations."""

import pytest

from uqsl2.uq_algebra import algebra, mu_left, mu_right
from uqsl2.tensor import TensorElem


PS = (2, 3)


@pytest.mark.parametrize("p", PS)
def test_dimensions(p):
    alg = algebra(p)
    assert alg.dim == 2 * p ** 3
    assert len(alg.basis) == 2 * p ** 3


@pytest.mark.parametrize("p", PS)
def test_defining_relations(p):
    alg = algebra(p)
    F = alg.field
    E, Fg, K = alg.E, alg.F, alg.K
    qhi = F.qhat.inverse()
    assert K * E == E * K * F.q_pow(2)
    assert K * Fg == Fg * K * F.q_pow(-2)
    assert E * Fg - Fg * E == (alg.K_pow(2) - alg.K_pow(-2)) * qhi
    # nilpotency and the order of K
    e_pow = alg.unit()
    f_pow = alg.unit()
    for _ in range(p):
        e_pow = e_pow * E
        f_pow = f_pow * Fg
    assert e_pow.is_zero() and f_pow.is_zero()
    k_pow = alg.unit()
    for _ in range(2 * p):
        k_pow = k_pow * K
    assert k_pow == alg.unit()


@pytest.mark.parametrize("p", PS)
def test_pbw_roundtrip(p):
    alg = algebra(p)
    x = (alg.E + alg.K) * (alg.F + alg.unit()) * alg.E
    assert alg.from_pbw_vector(x.pbw_vector()) == x


@pytest.mark.parametrize("p", PS)
def test_hopf_on_generators(p):
    alg = algebra(p)
    F = alg.field
    E, Fg, K = alg.E, alg.F, alg.K
    one = alg.unit()
    assert E.coproduct() == (TensorElem.from_pair(E, K)
                             + TensorElem.from_pair(one, E))
    assert Fg.coproduct() == (TensorElem.from_pair(Fg, one)
                              + TensorElem.from_pair(alg.K_pow(-2), Fg))
    assert K.coproduct() == TensorElem.from_pair(K, K)
    assert E.counit() == F.zero and Fg.counit() == F.zero
    assert K.counit() == F.one
    assert E.antipode() == -E * alg.K_pow(-2)
    assert Fg.antipode() == -alg.K_pow(2) * Fg
    assert K.antipode() == alg.K_pow(-2)
    for x in (E, Fg, K):
        assert x.antipode_inv().antipode() == x


@pytest.mark.parametrize("p", PS)
def test_antipode_is_algebra_antimorphism(p):
    alg = algebra(p)
    x = alg.E * alg.K + alg.F
    y = alg.F * alg.E + alg.unit()
    assert (x * y).antipode() == y.antipode() * x.antipode()


@pytest.mark.parametrize("p", PS)
def test_casimir_is_central(p):
    alg = algebra(p)
    c = alg.casimir()
    for x in (alg.E, alg.F, alg.K):
        assert c * x == x * c


@pytest.mark.parametrize("p", PS)
def test_integrals(p):
    alg = algebra(p)
    F = alg.field
    # the two-sided normalization scalar on the corner monomial
    corner = alg.monomial(p - 1, p - 1, 2 * (p + 1))
    fac = F.q_factorial(p - 1)
    zeta = F.from_int((-1) ** (p - 1) * 2 * p) * fac * fac
    assert mu_right(alg).evaluate(corner) == zeta
    # right integral: (mu x id) Delta(x) = mu(x) 1
    mu = mu_right(alg)
    for (m, n, l) in ((p - 1, p - 1, p + 1), (0, 0, 0), (1, 0, 1)):
        x = alg.monomial(m, n, 2 * (l % (2 * p)))
        acc = alg.zero_elem()
        for c, a, b in x.coproduct().legs():
            acc = acc + c * mu.evaluate(a) * b
        assert acc == alg.unit() * mu.evaluate(x)
    # mu_left is mu_right shifted by the square of K
    assert mu_left(alg) == mu_right(alg).shift(alg.K_pow(4))


@pytest.mark.parametrize("p", PS)
def test_modified_trace_form_is_symmetric(p):
    alg = algebra(p)
    phi = mu_right(alg).shift(alg.K_pow(2 * (p + 1)))
    assert phi.is_symmetric()
    assert not mu_right(alg).is_symmetric()
