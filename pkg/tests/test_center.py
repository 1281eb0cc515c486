"""Canonical central basis and the GTA basis of symmetric forms."""

import pytest

from uqsl2.uq_algebra import algebra, mu_right
from uqsl2.center_slf import center_basis, gta_basis, gta_labels
from uqsl2.suites import _closed_gta_table, _gauge_g_form


PS = (2, 3)


@pytest.mark.parametrize("p", PS)
def test_center_dimension_and_products(p):
    alg = algebra(p)
    Z = center_basis(alg)
    assert len(Z.labels) == 3 * p - 1
    for s in range(p + 1):
        for t in range(p + 1):
            want = Z[f"e{s}"] if s == t else alg.zero_elem()
            assert Z[f"e{s}"] * Z[f"e{t}"] == want
    for s in range(p + 1):
        for t in range(1, p):
            for sgn in ("+", "-"):
                w = Z[f"w{sgn}{t}"]
                want = w if s == t else alg.zero_elem()
                assert Z[f"e{s}"] * w == want
    for s in range(1, p):
        for t in range(1, p):
            for s1 in ("+", "-"):
                for s2 in ("+", "-"):
                    assert (Z[f"w{s1}{s}"] * Z[f"w{s2}{t}"]).is_zero()


@pytest.mark.parametrize("p", PS)
def test_casimir_coordinates(p):
    alg = algebra(p)
    F = alg.field
    Z = center_basis(alg)
    cas = Z.decompose(alg.casimir())
    qh2_inv = (F.qhat * F.qhat).inverse()
    for j in range(p + 1):
        assert cas[f"e{j}"] == (F.q_pow(j) + F.q_pow(-j)) * qh2_inv
    for k in range(1, p):
        assert cas[f"w+{k}"] == F.one
        assert cas[f"w-{k}"] == F.one
    assert Z.casimir_span_dim() == 2 * p


@pytest.mark.parametrize("p", PS)
def test_gta_unit_and_symmetry(p):
    alg = algebra(p)
    gta = gta_basis(alg)
    assert gta.labels == gta_labels(p)
    for f in gta.forms:
        assert f.is_symmetric()
    # chi+1 is the unit of the SLF algebra
    one = gta["chi+1"]
    for f in gta.forms:
        assert one * f == f and f * one == f


@pytest.mark.parametrize("p", PS)
def test_gta_table_against_closed_rules(p):
    alg = algebra(p)
    F = alg.field
    gta = gta_basis(alg)
    labels, closed = _closed_gta_table(p, F)
    table = gta.product_table()
    for i, li in enumerate(labels):
        for j, lj in enumerate(labels):
            got = {lab: c for lab, c in zip(labels, table[i][j].coords)
                   if c}
            assert got == closed[(li, lj)], (li, lj)


@pytest.mark.parametrize("p", PS)
def test_pseudo_character_ideal(p):
    alg = algebra(p)
    F = alg.field
    gta = gta_basis(alg)
    for s in range(1, p):
        coords = gta.product(gta[f"chi+{s}"], gta["G1"]).coords
        want = [F.q_int(s) if lab == f"G{s}" else F.zero
                for lab in gta.labels]
        assert coords == want
    assert gta.product(gta[f"chi+{p}"], gta["G1"]).is_zero()
    for s in range(1, p):
        for t in range(1, p):
            x = gta[f"chi+{s}"] + gta[f"chi-{p - s}"]
            assert gta.product(x, gta[f"G{t}"]).is_zero()


@pytest.mark.parametrize("p", PS)
def test_g_forms_gauge_independent(p):
    alg = algebra(p)
    F = alg.field
    for s in range(1, p):
        assert _gauge_g_form(alg, s, F.q + F.one) == gta_basis(alg)[f"G{s}"]


@pytest.mark.parametrize("p", PS)
def test_modified_trace_coordinates(p):
    alg = algebra(p)
    F = alg.field
    gta = gta_basis(alg)
    phi = mu_right(alg).shift(alg.K_pow(2 * (p + 1)))
    co = gta.coords(phi)
    want = {f"chi+{p}": F.from_int((-1) ** (p - 1)), f"chi-{p}": F.one}
    for s in range(1, p):
        qs = F.q_pow(s) + F.q_pow(-s)
        want[f"chi+{s}"] = F.from_int((-1) ** s) * qs
        want[f"chi-{s}"] = F.from_int((-1) ** (p - s - 1)) * qs
        want[f"G{s}"] = F.from_int((-1) ** s) * F.q_int(s) * F.q_int(s)
    for lab in gta.labels:
        assert co[lab] == want.get(lab, F.zero), lab
