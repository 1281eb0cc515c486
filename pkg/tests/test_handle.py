"""Handle algebra of the torus: loop matrices, traces and relations."""

import pytest

from uqsl2.uq_algebra import algebra
from uqsl2.center_slf import gta_basis
from uqsl2.linalg import ExactMatrix
from uqsl2.handle_rep import (BlockOp, fund_r_scalar, l10_monomial_rank,
                              matrix_op, quantum_trace, _torus_data)
from uqsl2.suites import suite_handle


PS = (2, 3)


@pytest.mark.parametrize("p", PS)
def test_boundary_fixes_exactly_slf(p):
    alg = algebra(p)
    F = alg.field
    n = alg.dim
    C = _torus_data(p)["C"]
    I = ExactMatrix.identity(F, n)
    rows = []
    for u in (0, 1):
        for w in (0, 1):
            blk = C.entry((u,), (w,))
            rows.extend((blk - I if u == w else blk).rows_as_cyc())
    assert ExactMatrix.from_rows(F, rows).kernel().shape[1] == 3 * p - 1
    for f in gta_basis(alg).forms:
        col = ExactMatrix.from_rows(F, [[v] for v in f.values])
        for u in (0, 1):
            for w in (0, 1):
                img = C.entry((u,), (w,)) @ col
                assert img == (col if u == w
                               else ExactMatrix.zeros(F, n, 1))


@pytest.mark.parametrize("p", PS)
def test_fusion_and_reflection(p):
    alg = algebra(p)
    F = alg.field
    n = alg.dim
    td = _torus_data(p)

    def sc(kind):
        return BlockOp.scalar_op(F, 2, n, fund_r_scalar(alg, kind))

    for nm in ("A", "B"):
        one = td[nm]
        cand = (one.embed_legs(2, [0]) @ sc("R'")
                @ one.embed_legs(2, [1]) @ sc("R'^-1"))
        assert matrix_op(alg, nm, tensor=True) == cand
    b1 = td["B"].embed_legs(2, [0])
    a2 = td["A"].embed_legs(2, [1])
    assert (sc("R") @ b1 @ sc("R'") @ a2
            == a2 @ sc("R") @ b1 @ sc("R^-1"))


@pytest.mark.parametrize("p", PS)
def test_loop_matrix_inverses(p):
    alg = algebra(p)
    td = _torus_data(p)
    one = BlockOp.identity(alg.field, 1, alg.dim)
    for nm in ("A", "B"):
        assert td[nm] @ td[nm + "^-1"] == one
        assert td[nm + "^-1"] @ td[nm] == one


@pytest.mark.parametrize("p", PS)
def test_trace_exchange_identities(p):
    rep = suite_handle(algebra(p), 1e-9)
    assert rep["checks"]["trace_exchange_identities"]
    assert rep["checks"]["loop_power_identities"]


def test_faithfulness_rank_p2():
    alg = algebra(2)
    assert l10_monomial_rank(alg) == 4 * 2 ** 6


@pytest.mark.parametrize("p", PS)
def test_quantum_trace_restricts_to_character_action(p):
    """tr_q(A) and tr_q(B) preserve the symmetric forms."""
    alg = algebra(p)
    td = _torus_data(p)
    gta = gta_basis(alg)
    for nm in ("A", "B"):
        op = quantum_trace(alg, td[nm])
        for f in gta.forms:
            assert op.apply(f).is_symmetric()
