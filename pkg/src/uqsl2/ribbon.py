"""Braided data living in the extension by a square root of K.

The R-matrix sits in the extension, but the monodromy RR', the Drinfeld
element u, the ribbon v and the pivot g all descend to the base algebra.
The ribbon is assembled from its central-basis coordinates, which keeps
every coefficient inside the cyclotomic field.
"""

from __future__ import annotations

from functools import lru_cache

from .cyclo import CycNum
from .linalg import ExactMatrix
from .uq_algebra import AlgElem, DualForm, UqAlgebra, algebra, mu_left, _accum
from .tensor import TensorElem, _mono_elem
from .center_slf import center_basis


def r_matrix_ext(alg: UqAlgebra, half_sign: int = 1) -> TensorElem:
    """Universal R-matrix of the extension.  half_sign selects the square
    root of q used in the Cartan part (both give the same monodromy)."""
    return _r_matrix_cached(alg.p, half_sign)


@lru_cache(maxsize=None)
def _r_matrix_cached(p: int, half_sign: int) -> TensorElem:
    alg = algebra(p)
    F = alg.field
    cartan = {}
    inv4p = F.from_int(4 * p).inverse()
    for n in range(4 * p):
        for j in range(4 * p):
            c = inv4p * F.zeta_pow(-n * j)
            if half_sign == -1 and (n * j) % 2 == 1:
                c = -c
            _accum(cartan, ((0, 0, n), (0, 0, j)), c)
    theta = TensorElem(alg, cartan)
    nil = {}
    for m in range(p):
        c = (_pow(F.qhat, m) * F.q_factorial(m).inverse()
             * F.q_pow(m * (m - 1) // 2))
        _accum(nil, ((m, 0, 0), (0, m, 0)), c)
    return theta * TensorElem(alg, nil)


def _pow(c: CycNum, n: int) -> CycNum:
    out = c.field.one
    for _ in range(n):
        out = out * c
    return out


def r_inverse(alg: UqAlgebra, half_sign: int = 1) -> TensorElem:
    """(S ox id)(R) inverts the R-matrix."""
    return _r_inverse_cached(alg.p, half_sign)


@lru_cache(maxsize=None)
def _r_inverse_cached(p: int, half_sign: int) -> TensorElem:
    return _r_matrix_cached(p, half_sign).map_legs(f1=lambda x: x.antipode())


def r_prime(alg: UqAlgebra, half_sign: int = 1) -> TensorElem:
    return _r_matrix_cached(alg.p, half_sign).flip()


def r_prime_inverse(alg: UqAlgebra, half_sign: int = 1) -> TensorElem:
    """(id ox S)(R') inverts the flipped R-matrix."""
    return _r_inverse_cached(alg.p, half_sign).flip()


@lru_cache(maxsize=None)
def _m_element_cached(p: int) -> TensorElem:
    alg = algebra(p)
    F = alg.field
    closed = {}
    inv2p = F.from_int(2 * p).inverse()
    for m in range(p):
        for n in range(p):
            base = (inv2p * _pow(F.qhat, m + n)
                    * (F.q_factorial(m) * F.q_factorial(n)).inverse()
                    * F.q_pow(m * (m - 1) // 2 + n * (n - 1) // 2 - m * m))
            for i in range(2 * p):
                for j in range(2 * p):
                    c = base * F.q_pow(m * (i - j) - i * j)
                    left = alg.monomial(m, 0, 0) * alg.monomial(0, 0, 2 * i) \
                        * alg.monomial(0, n, 0)
                    right = alg.monomial(0, m, 0) * alg.monomial(0, 0, 2 * j) \
                        * alg.monomial(n, 0, 0)
                    term = TensorElem.from_pair(left, right) * c
                    for k, v in term.terms.items():
                        _accum(closed, k, v)
    closed_t = TensorElem(alg, closed)
    product = tensor_mul_fast(r_matrix_ext(alg), r_prime(alg))
    if not (closed_t == product):
        raise RuntimeError("monodromy formula disagrees with R R'")
    if not closed_t.in_base_algebra():
        raise RuntimeError("monodromy does not descend to the base algebra")
    return closed_t


def m_element(alg: UqAlgebra) -> TensorElem:
    """The monodromy RR', computed both from the closed double sum and as
    the product of R with its flip; the two must agree."""
    return _m_element_cached(alg.p)


def drinfeld_u(alg: UqAlgebra) -> AlgElem:
    """u = S(b_i) a_i for R = a_i ox b_i."""
    out = alg.zero_elem()
    for c, a, b in r_matrix_ext(alg).legs():
        out = out + c * (b.antipode() * a)
    if not out.in_base_algebra():
        raise RuntimeError("Drinfeld element escaped the base algebra")
    return out


def ribbon_value(alg: UqAlgebra, s: int) -> CycNum:
    """Scalar by which the ribbon acts on X^+(s); s = 0 encodes X^-(p)."""
    F = alg.field
    sign = 1 if (s - 1) % 2 == 0 else -1
    return F.from_int(sign) * F.zeta_pow(-(s * s - 1))


@lru_cache(maxsize=None)
def _ribbon_cached(p: int):
    alg = algebra(p)
    F = alg.field
    Z = center_basis(alg)
    v = alg.zero_elem()
    vinv = alg.zero_elem()
    for s in range(p + 1):
        val = ribbon_value(alg, s)
        v = v + val * Z[f"e{s}"]
        vinv = vinv + val.inverse() * Z[f"e{s}"]
    for s in range(1, p):
        val = ribbon_value(alg, s)
        inv_qs = F.q_int(s).inverse()
        wpart = (F.from_int(p - s) * inv_qs * Z[f"w+{s}"]
                 - F.from_int(s) * inv_qs * Z[f"w-{s}"])
        v = v + F.qhat * val * wpart
        vinv = vinv - F.qhat * val.inverse() * wpart
    if not (v * vinv == alg.unit()):
        raise RuntimeError("ribbon inverse mismatch")
    u = drinfeld_u(alg)
    if not (u * vinv == alg.K_pow(2 * (p + 1))):
        raise RuntimeError("u v^{-1} is not the pivot")
    return v, vinv


def ribbon_v(alg: UqAlgebra) -> AlgElem:
    return _ribbon_cached(alg.p)[0]


def ribbon_v_inv(alg: UqAlgebra) -> AlgElem:
    return _ribbon_cached(alg.p)[1]


def pivotal_g(alg: UqAlgebra) -> AlgElem:
    g = drinfeld_u(alg) * ribbon_v_inv(alg)
    if not (g == alg.K_pow(2 * (alg.p + 1))):
        raise RuntimeError("pivot is not K^{p+1}")
    return g


# -- weight-projector arithmetic ------------------------------------------
#
# Writing pi_t for the projector onto the zeta^t eigenspace of K^{1/2},
# the group part of any extension element expands as K^{lh/2} =
# sum_t zeta^{t lh} pi_t.  Products of projector-basis terms never grow a
# Cartan sum, which makes large tensor products tractable.


def _idem_expand(alg, terms):
    """Tensor terms keyed by PBW monomials -> projector-basis terms keyed
    by tuples of (m, n, t) per leg."""
    p4 = 4 * alg.p
    F = alg.field
    out = {}
    for mons, c in terms.items():
        stack = [((), c)]
        for (m, n, lh) in mons:
            stack = [(key + ((m, n, t),), cc * F.zeta_pow(t * lh))
                     for key, cc in stack for t in range(p4)]
        for key, cc in stack:
            _accum(out, key, cc)
    return {k: v for k, v in out.items() if v}


def _idem_contract(alg, terms):
    """Projector-basis terms back to PBW-monomial keys."""
    p4 = 4 * alg.p
    F = alg.field
    inv = F.from_int(p4).inverse()
    out = {}
    for key, c in terms.items():
        stack = [((), c)]
        for (m, n, t) in key:
            stack = [(pk + ((m, n, l),), cc * F.zeta_pow(-t * l) * inv)
                     for pk, cc in stack for l in range(p4)]
        for k2, cc in stack:
            _accum(out, k2, cc)
    return {k: v for k, v in out.items() if v}


def _idem_mul(alg, t1, t2):
    """Bucketed product in the projector basis; pi labels must chain
    through the E and F exponents of the right factor."""
    p = alg.p
    p4 = 4 * p
    buckets = {}
    for key, c in t1.items():
        tk = tuple(leg[2] for leg in key)
        buckets.setdefault(tk, []).append((key, c))
    out = {}
    for key2, c2 in t2.items():
        need = tuple((leg[2] + 2 * leg[0] - 2 * leg[1]) % p4 for leg in key2)
        for key1, c1 in buckets.get(need, ()):
            partial = [((), c1 * c2)]
            for (a, b, _t), (cc, dd, s) in zip(key1, key2):
                fe = alg._fe_reorder(b, cc)
                new = []
                for (mp, nq, k), coeff in fe.items():
                    if a + mp >= p or nq + dd >= p:
                        continue
                    ph = coeff * alg.field.q_pow(k * (s - 2 * dd))
                    for pk, pc in partial:
                        new.append((pk + ((a + mp, nq + dd, s),), pc * ph))
                partial = new
                if not partial:
                    break
            for pk, pc in partial:
                _accum(out, pk, pc)
    return {k: v for k, v in out.items() if v}


def tensor_mul_fast(t1: TensorElem, t2: TensorElem) -> TensorElem:
    """Product of two-leg tensor elements through the projector basis."""
    alg = t1.alg
    prod = _idem_mul(alg, _idem_expand(alg, t1.terms),
                     _idem_expand(alg, t2.terms))
    return TensorElem(alg, _idem_contract(alg, prod))


def _idem_embed3(alg, t2, legs):
    """Two-leg projector terms into legs (i, j) of a three-fold tensor,
    identity (= sum of projectors) on the remaining leg."""
    p4 = 4 * alg.p
    other = 3 - legs[0] - legs[1]
    out = {}
    for (l1, l2), c in t2.items():
        for t in range(p4):
            key = [None, None, None]
            key[legs[0]] = l1
            key[legs[1]] = l2
            key[other] = (0, 0, t)
            out[tuple(key)] = c
    return out


def yang_baxter_check(alg: UqAlgebra) -> bool:
    """R12 R13 R23 = R23 R13 R12 in the three-fold tensor power."""
    R = _idem_expand(alg, r_matrix_ext(alg).terms)
    r12 = _idem_embed3(alg, R, (0, 1))
    r13 = _idem_embed3(alg, R, (0, 2))
    r23 = _idem_embed3(alg, R, (1, 2))
    lhs = _idem_mul(alg, _idem_mul(alg, r12, r13), r23)
    rhs = _idem_mul(alg, _idem_mul(alg, r23, r13), r12)
    return lhs == rhs


def factorizability_matrix(alg: UqAlgebra) -> ExactMatrix:
    """Matrix of beta -> (beta ox id)(RR') over the PBW basis and its
    dual basis."""
    F = alg.field
    rows = [[F.zero] * alg.dim for _ in range(alg.dim)]
    for ((m1, n1, lh1), (m2, n2, lh2)), c in m_element(alg).terms.items():
        i = alg.basis_index[(m1, n1, lh1 // 2)]
        j = alg.basis_index[(m2, n2, lh2 // 2)]
        rows[j][i] = rows[j][i] + c
    return ExactMatrix.from_rows(F, rows)


def factorizability_rank(alg: UqAlgebra) -> int:
    return factorizability_matrix(alg).rank_mod_prime()


@lru_cache(maxsize=None)
def _drinfeld_data(p: int):
    alg = algebra(p)
    F = alg.field
    g = alg.K_pow(2 * (p + 1))
    shifted = TensorElem.from_pair(g, alg.unit()) * m_element(alg)
    # column i: D(delta_i) in the PBW basis
    rows = [[F.zero] * alg.dim for _ in range(alg.dim)]
    for ((m1, n1, lh1), (m2, n2, lh2)), c in shifted.terms.items():
        i = alg.basis_index[(m1, n1, lh1 // 2)]
        j = alg.basis_index[(m2, n2, lh2 // 2)]
        rows[j][i] = rows[j][i] + c
    mat = ExactMatrix.from_rows(F, rows)
    return shifted, mat


def drinfeld_map(phi: DualForm) -> AlgElem:
    """D(phi) = (phi ox id)((g ox 1) RR')."""
    shifted, _ = _drinfeld_data(phi.alg.p)
    return shifted.contract_left(phi)


@lru_cache(maxsize=None)
def _drinfeld_inverse_matrix(p: int) -> ExactMatrix:
    return _drinfeld_data(p)[1].inverse()


def drinfeld_inverse(z: AlgElem) -> DualForm:
    alg = z.alg
    inv = _drinfeld_inverse_matrix(alg.p)
    col = ExactMatrix.from_rows(alg.field, [[c] for c in z.pbw_vector()])
    sol = inv @ col
    return DualForm(alg, [sol.entry(i, 0) for i in range(alg.dim)])


def phi_v(alg: UqAlgebra) -> DualForm:
    """The symmetric form with D(phi_v) = v."""
    ml = mu_left(alg)
    vinv = ribbon_v_inv(alg)
    g_inv = alg.K_pow(-2 * (alg.p + 1))
    return ml.shift(g_inv * vinv).scale(ml.evaluate(vinv).inverse())


def phi_v_inv(alg: UqAlgebra) -> DualForm:
    """The symmetric form with D(phi_{v^{-1}}) = v^{-1}."""
    ml = mu_left(alg)
    v = ribbon_v(alg)
    g_inv = alg.K_pow(-2 * (alg.p + 1))
    return ml.shift(g_inv * v).scale(ml.evaluate(v).inverse())
