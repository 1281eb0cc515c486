"""The projective SL_2(Z) action on symmetric linear forms and its
relatives.

The torus mapping class group acts on SLF through the ribbon elements
v_A^-1, v_B^-1 of the handle algebra.  This module builds the two Dehn
twist matrices twice (operator route and closed formulas), decomposes
the representation into a (p+1)-block plus C^2 (x) (p-1), realizes the
coend operators S, T on the center together with the intertwiner to the
SLF picture, and assembles the genus-g twist operators on (H*)^(x g).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .linalg import ExactMatrix
from .uq_algebra import (AlgElem, DualForm, UqAlgebra, algebra,
                         integral_left, mu_left, mu_right)
from .ribbon import (drinfeld_inverse, r_inverse, r_matrix_ext,
                     r_prime_inverse, ribbon_v, ribbon_v_inv, ribbon_value,
                     tensor_mul_fast)
from .center_slf import CoordVec, center_basis, gta_basis
from .handle_rep import (DIM_LIMIT, HdOperator, _ext_basis,
                         _iterated_coproduct, _mono_shift, _mult_matrix,
                         _shift_elem, inv_subspace, mu_l_ribbon,
                         restrict_to_slf, z_ops)


def _cpow(c, n: int):
    base = c.inverse() if n < 0 else c
    out = base.field.one
    for _ in range(abs(n)):
        out = out * base
    return out


class SlfOperator:
    """Operator on the symmetric linear forms, stored as an exact matrix
    in GTA coordinates."""

    __slots__ = ("alg", "matrix")

    def __init__(self, alg: UqAlgebra, matrix: ExactMatrix):
        n = 3 * alg.p - 1
        if matrix.shape != (n, n):
            raise ValueError("SLF operator has the wrong shape")
        self.alg = alg
        self.matrix = matrix

    def __matmul__(self, other):
        return SlfOperator(self.alg, self.matrix @ other.matrix)

    def __add__(self, other):
        return SlfOperator(self.alg, self.matrix + other.matrix)

    def __sub__(self, other):
        return SlfOperator(self.alg, self.matrix - other.matrix)

    def scale(self, c) -> "SlfOperator":
        return SlfOperator(self.alg, self.matrix * c)

    def inverse(self) -> "SlfOperator":
        return SlfOperator(self.alg, self.matrix.inverse())

    def __eq__(self, other):
        if not isinstance(other, SlfOperator):
            return NotImplemented
        return self.alg.p == other.alg.p and self.matrix == other.matrix

    def __hash__(self):
        return None

    def apply(self, vec: CoordVec) -> CoordVec:
        col = ExactMatrix.from_rows(self.alg.field,
                                    [[c] for c in vec.coords])
        out = self.matrix @ col
        return CoordVec(self.alg.field, vec.labels,
                        [out.entry(i, 0) for i in range(len(vec.labels))])

    def is_scalar(self):
        """The scalar c with self = c*id, or None."""
        n = self.matrix.shape[0]
        c = self.matrix.entry(0, 0)
        if self.matrix == ExactMatrix.scalar(self.alg.field, n, c):
            return c
        return None

    def to_json(self):
        return self.matrix.to_json()

    def __repr__(self):
        return f"SlfOperator(p={self.alg.p})"


def projective_ratio(x: ExactMatrix, y: ExactMatrix):
    """The scalar c with x = c*y, fixed by the lexicographically first
    nonzero entry of y; None if no such scalar exists."""
    rows = y.rows_as_cyc()
    lam = None
    for i in range(y.shape[0]):
        for j in range(y.shape[1]):
            if rows[i][j]:
                lam = x.entry(i, j) * rows[i][j].inverse()
                break
        if lam is not None:
            break
    if lam is None:
        return None
    return lam if x == y * lam else None


# -- the scalar xi --------------------------------------------------------

@lru_cache(maxsize=None)
def _xi_cached(p: int):
    alg = algebra(p)
    F = alg.field
    # quadratic Gauss sum over Z_4p: sum zeta^(n^2) = (1+i) * 2 sqrt(p)
    gauss = F.zero
    for n in range(4 * p):
        gauss = gauss + F.zeta_pow(n * n)
    i_unit = F.zeta_pow(p)
    sqrt_p = gauss * (F.from_int(2) * (F.one + i_unit)).inverse()
    if not (sqrt_p * sqrt_p == F.from_int(p)):
        raise RuntimeError("Gauss sum did not produce sqrt(p)")
    c = (_cpow(F.qhat, p - 1) * F.q_factorial(p - 1)
         * F.zeta_pow(-(p - 3)))
    xi_inv = (i_unit - F.one) * sqrt_p * c
    return xi_inv.inverse(), sqrt_p


def xi_value(alg: UqAlgebra):
    """xi, with 1/xi = (i-1) sqrt(p) * qhat^(p-1) * [p-1]! * q^(-(p-3)/2);
    sqrt(p) is exact via the Gauss sum.  The prefactor is pinned by the
    integral identity tau_b(chi^+_1) = mu^l(v)^-1 mu^r(K^(p+1) ?), which
    is normalization independent, and by the agreement of the closed
    tau_b matrix with the operator construction at every p."""
    return _xi_cached(alg.p)[0]


def sqrt_p_value(alg: UqAlgebra):
    return _xi_cached(alg.p)[1]


# -- the two torus twist matrices ----------------------------------------

def _vrep(alg: UqAlgebra, eps: int, s: int):
    """Ribbon eigenvalue on X^eps(s); v_{X^-(s)} = v_{X^+(p-s)}."""
    return ribbon_value(alg, s if eps == 1 else alg.p - s)


def _closed_tau_a(alg: UqAlgebra) -> ExactMatrix:
    p, F = alg.p, alg.field
    gta = gta_basis(alg)
    n = len(gta.labels)
    idx = {lab: i for i, lab in enumerate(gta.labels)}
    cols = [[F.zero] * n for _ in range(n)]
    for eps, tag in ((1, "+"), (-1, "-")):
        for s in range(1, p + 1):
            cols[idx[f"chi{tag}{s}"]][idx[f"chi{tag}{s}"]] = \
                _vrep(alg, eps, s).inverse()
    qh = F.qhat
    for s in range(1, p):
        vinv = _vrep(alg, 1, s).inverse()
        col = cols[idx[f"G{s}"]]
        col[idx[f"G{s}"]] = vinv
        inv_qs = F.q_int(s).inverse()
        col[idx[f"chi+{s}"]] = -vinv * qh * F.from_int(p - s) * inv_qs
        col[idx[f"chi-{p - s}"]] = vinv * qh * F.from_int(s) * inv_qs
    return ExactMatrix.from_rows(F, [[cols[j][i] for j in range(n)]
                                     for i in range(n)])


def _closed_tau_b(alg: UqAlgebra) -> ExactMatrix:
    p, F = alg.p, alg.field
    xi = xi_value(alg)
    gta = gta_basis(alg)
    n = len(gta.labels)
    idx = {lab: i for i, lab in enumerate(gta.labels)}
    qh = F.qhat
    cols = [[F.zero] * n for _ in range(n)]
    for eps, tag in ((1, "+"), (-1, "-")):
        for s in range(1, p + 1):
            col = cols[idx[f"chi{tag}{s}"]]
            qs = F.q_pow(-(s * s - 1))
            lam = (xi * F.from_int(eps * ((-eps) ** (p - 1)) * s) * qs)
            for ell in range(1, p):
                c = lam * F.from_int(((-1) ** s) * ((-eps) ** (p - ell))) \
                    * (F.q_pow(ell * s) + F.q_pow(-ell * s))
                col[idx[f"chi+{ell}"]] = col[idx[f"chi+{ell}"]] + c
                col[idx[f"chi-{p - ell}"]] = col[idx[f"chi-{p - ell}"]] + c
            col[idx[f"chi+{p}"]] = col[idx[f"chi+{p}"]] + lam
            col[idx[f"chi-{p}"]] = (col[idx[f"chi-{p}"]]
                                    + lam * F.from_int(((-eps) ** p)
                                                       * ((-1) ** s)))
            delta = xi * F.from_int(eps * ((-1) ** s)) * qs
            for j in range(1, p):
                col[idx[f"G{j}"]] = (delta
                                     * F.from_int((-eps) ** (j + 1))
                                     * F.q_int(j) * F.q_int(j * s))
    for s in range(1, p):
        col = cols[idx[f"G{s}"]]
        t = (xi * F.from_int((-1) ** s) * F.q_pow(-(s * s - 1))
             * qh * F.from_int(p) * F.q_int(s).inverse())
        for j in range(1, p):
            base = t * F.from_int((-1) ** (j + 1)) * F.q_int(j) \
                * F.q_int(j * s)
            col[idx[f"G{j}"]] = base * F.from_int(2)
            inv_qj = F.q_int(j).inverse()
            col[idx[f"chi+{j}"]] = -base * qh * F.from_int(p - j) * inv_qj
            col[idx[f"chi-{p - j}"]] = base * qh * F.from_int(j) * inv_qj
    return ExactMatrix.from_rows(F, [[cols[j][i] for j in range(n)]
                                     for i in range(n)])


@lru_cache(maxsize=None)
def _theta1_cached(p: int):
    alg = algebra(p)
    ops = z_ops(alg, ribbon_v_inv(alg))
    ta = restrict_to_slf(ops["A"])
    tb = restrict_to_slf(ops["B"])
    if not (ta == _closed_tau_a(alg)):
        raise RuntimeError("the two constructions of the tau_a matrix "
                           "disagree")
    if not (tb == _closed_tau_b(alg)):
        raise RuntimeError("the two constructions of the tau_b matrix "
                           "disagree")
    return ta, tb


def theta1(alg: UqAlgebra, twist: str) -> SlfOperator:
    """The projective SL_2(Z) action on SLF; twist is one of "a", "b",
    "a^-1", "b^-1".  Both constructions are run and must coincide."""
    ta, tb = _theta1_cached(alg.p)
    if twist == "a":
        return SlfOperator(alg, ta)
    if twist == "b":
        return SlfOperator(alg, tb)
    if twist == "a^-1":
        return SlfOperator(alg, ta.inverse())
    if twist == "b^-1":
        return SlfOperator(alg, tb.inverse())
    raise ValueError(f"unknown twist {twist!r}")


def sl2z_relations(alg: UqAlgebra) -> dict:
    """Braid relation and the PSL_2(Z) scalar of (tau_a tau_b)^3."""
    ta, tb = _theta1_cached(alg.p)
    F = alg.field
    n = 3 * alg.p - 1
    braid = (ta @ tb @ ta) == (tb @ ta @ tb)
    st = ta @ tb
    cube = st @ st @ st
    mlv, mlvi = mu_l_ribbon(alg)
    ratio = mlvi * mlv.inverse()
    cube_ok = cube == ExactMatrix.scalar(F, n, ratio)
    six_ok = (cube @ cube) == ExactMatrix.scalar(F, n, ratio * ratio)
    return {"braid_exact": braid, "st_cubed_scalar": ratio,
            "st_cubed_ok": cube_ok, "st_sixth_ok": six_ok}


# -- block decomposition --------------------------------------------------

def decompose_rep(alg: UqAlgebra) -> dict:
    """Split SLF into the character block P = span(X_0..X_p) and
    C^2 (x) W with W of dimension p-1, and verify the W-block closed
    formulas."""
    p, F = alg.p, alg.field
    gta = gta_basis(alg)
    n = len(gta.labels)
    idx = {lab: i for i, lab in enumerate(gta.labels)}
    qh = F.qhat
    cols = []
    # X_0 = chi^-_p, X_s = chi^+_s + chi^-_{p-s}, X_p = chi^+_p
    for s in range(p + 1):
        col = [F.zero] * n
        if s == 0:
            col[idx[f"chi-{p}"]] = F.one
        elif s == p:
            col[idx[f"chi+{p}"]] = F.one
        else:
            col[idx[f"chi+{s}"]] = F.one
            col[idx[f"chi-{p - s}"]] = F.one
        cols.append(col)
    xs = []
    for s in range(1, p):
        col = [F.zero] * n
        inv_qs = F.q_int(s).inverse()
        col[idx[f"chi+{s}"]] = qh * F.from_int(p - s) * inv_qs
        col[idx[f"chi-{p - s}"]] = -qh * F.from_int(s) * inv_qs
        xs.append(col)
        cols.append(col)
    for s in range(1, p):
        col = [F.zero] * n
        col[idx[f"G{s}"]] = F.one
        col = [a - b for a, b in zip(col, xs[s - 1])]
        cols.append(col)
    C = ExactMatrix.from_rows(F, [[cols[j][i] for j in range(n)]
                                  for i in range(n)])
    Cinv = C.inverse()
    ta, tb = _theta1_cached(alg.p)
    Ma = Cinv @ ta @ C
    Mb = Cinv @ tb @ C

    def block(M, rows, colrange):
        return ExactMatrix.from_rows(
            F, [[M.entry(i, j) for j in colrange] for i in rows])

    pr = range(p + 1)
    xr = range(p + 1, 2 * p)
    yr = range(2 * p, 3 * p - 1)
    zero_pw = all(block(M, pr, list(xr) + list(yr)).is_zero()
                  and block(M, list(xr) + list(yr), pr).is_zero()
                  for M in (Ma, Mb))
    if not zero_pw:
        raise RuntimeError("the character block does not split off")
    # the 2 x 2 tensor structure of the x, y part
    Wa = block(Ma, xr, xr)
    Wb = block(Mb, yr, yr)
    structure = (block(Ma, yr, yr) == Wa
                 and block(Ma, xr, yr) == -Wa
                 and block(Ma, yr, xr).is_zero()
                 and block(Mb, xr, xr) == Wb
                 and block(Mb, yr, xr) == Wb
                 and block(Mb, xr, yr).is_zero())
    if not structure:
        raise RuntimeError("the x, y part is not C^2 (x) W")
    # closed formulas for the W-block
    wa_ok = Wa == ExactMatrix.from_rows(
        F, [[_vrep(alg, 1, s).inverse() if s == j else F.zero
             for j in range(1, p)] for s in range(1, p)])
    xi = xi_value(alg)
    wb_rows = []
    for j in range(1, p):
        row = []
        for s in range(1, p):
            c = (xi * F.from_int((-1) ** s) * F.q_pow(-(s * s - 1))
                 * F.qhat * F.from_int(p) * F.q_int(s).inverse()
                 * F.from_int((-1) ** (j + 1)) * F.q_int(j)
                 * F.q_int(j * s))
            row.append(c)
        wb_rows.append(row)
    wb_ok = Wb == ExactMatrix.from_rows(F, wb_rows)
    if not (wa_ok and wb_ok):
        raise RuntimeError("W-block disagrees with the closed formulas")
    return {"basis": C,
            "p_block": (block(Ma, pr, pr), block(Mb, pr, pr)),
            "w_block": (Wa, Wb),
            "dims": (p + 1, p - 1)}


# -- coend operators on the center ---------------------------------------

@lru_cache(maxsize=None)
def _lm_cached(p: int):
    alg = algebra(p)
    F = alg.field
    Z = center_basis(alg)
    n = len(Z.labels)
    X = tensor_mul_fast(r_inverse(alg), r_prime_inverse(alg))
    if not X.in_base_algebra():
        raise RuntimeError("R^-1 R'^-1 escaped the base algebra")
    ml = mu_left(alg)

    def s_op(z: AlgElem) -> AlgElem:
        out = alg.zero_elem()
        for c, h1, h2 in X.legs():
            val = c * ml.evaluate(h2 * z)
            if val:
                out = out + val * h1
        return out

    vinv = ribbon_v_inv(alg)
    s_cols = [Z.decompose(s_op(Z[j])).coords for j in range(n)]
    t_cols = [Z.decompose(vinv * Z[j]).coords for j in range(n)]
    S = ExactMatrix.from_rows(F, [[s_cols[j][i] for j in range(n)]
                                  for i in range(n)])
    T = ExactMatrix.from_rows(F, [[t_cols[j][i] for j in range(n)]
                                  for i in range(n)])
    # intertwiner f(z) = mu^r(g v^-1 S(z) ?) written in GTA coordinates
    mr = mu_right(alg)
    gta = gta_basis(alg)
    gv = alg.pivot * vinv
    f_cols = [gta.coords(mr.shift(gv * Z[j].antipode())).coords
              for j in range(n)]
    Fm = ExactMatrix.from_rows(F, [[f_cols[j][i] for j in range(n)]
                                   for i in range(n)])
    return S, T, Fm


def lm_apply(alg: UqAlgebra, z: AlgElem):
    """(S(z), T(z)) for a central z."""
    Z = center_basis(alg)
    S, T, _ = _lm_cached(alg.p)
    vec = Z.decompose(z)
    col = ExactMatrix.from_rows(alg.field, [[c] for c in vec.coords])
    return (Z.combine([(S @ col).entry(i, 0) for i in range(len(Z.labels))]),
            Z.combine([(T @ col).entry(i, 0) for i in range(len(Z.labels))]))


def lm_operators(alg: UqAlgebra) -> dict:
    """The coend operators S, T on the center, the intertwiner f to the
    SLF picture, and the residual checks of the equivalence."""
    S, T, Fm = _lm_cached(alg.p)
    F = alg.field
    Z = center_basis(alg)
    n = len(Z.labels)
    ta, tb = _theta1_cached(alg.p)
    s_prime = (ta @ tb @ ta).inverse()
    t_prime = ta
    mlv, mlvi = mu_l_ribbon(alg)
    s_ok = (Fm @ S) == (s_prime @ Fm) * mlvi
    t_ok = (Fm @ T) == (t_prime @ Fm)
    # S^2 against the inverse antipode (= identity on the center),
    # projectively
    anti_cols = [Z.decompose(Z[j].antipode()).coords for j in range(n)]
    anti = ExactMatrix.from_rows(F, [[anti_cols[j][i] for j in range(n)]
                                     for i in range(n)])
    s_sq_scalar = projective_ratio(S @ S, anti)
    return {"S": S, "T": T, "f": Fm,
            "s_intertwined": s_ok, "t_intertwined": t_ok,
            "s_squared_scalar": s_sq_scalar,
            "antipode_is_identity": anti == ExactMatrix.identity(F, n)}


# -- genus-g twist operators ---------------------------------------------

@lru_cache(maxsize=None)
def _restrict_indices(p: int):
    basis = _ext_basis(p)[0]
    even = [i for i, mon in enumerate(basis) if mon[2] % 2 == 0]
    odd = [i for i, mon in enumerate(basis) if mon[2] % 2]
    return even, odd


def _restrict_matrix(alg: UqAlgebra, mat: ExactMatrix) -> ExactMatrix:
    even, odd = _restrict_indices(alg.p)
    bad = ExactMatrix(mat.field, mat.data[np.ix_(odd, even)], mat.den)
    if not bad.is_zero():
        raise RuntimeError("operator does not preserve the base dual space")
    return ExactMatrix(mat.field, mat.data[np.ix_(even, even)], mat.den)


@lru_cache(maxsize=None)
def _ef_mats(p: int):
    """E(phi) = phi(a_i ? b_i) and its inverse F(phi) = phi(S^-1(a_i)?b_i),
    assembled on the extension and restricted."""
    alg = algebra(p)
    ne = len(_ext_basis(p)[0])
    e_mat = ExactMatrix.zeros(alg.field, ne, ne)
    f_mat = ExactMatrix.zeros(alg.field, ne, ne)
    for c, a, b in r_matrix_ext(alg).legs():
        amon = next(iter(a.terms))
        bshift = _mono_shift(p, next(iter(b.terms)), "right", True)
        e_mat = e_mat + (_mono_shift(p, amon, "left", True) @ bshift) * c
        f_mat = f_mat + (_shift_elem(alg, a.antipode_inv(), "left", True)
                         @ bshift) * c
    e_mat = _restrict_matrix(alg, e_mat)
    f_mat = _restrict_matrix(alg, f_mat)
    if not (e_mat @ f_mat == ExactMatrix.identity(alg.field, alg.dim)):
        raise RuntimeError("the conjugation maps E, F are not inverse")
    return e_mat, f_mat


@lru_cache(maxsize=None)
def _torus_twist_mats(p: int):
    """The one-leg factors of the genus twists, with the exchange-law
    gates against the loop matrices."""
    alg = algebra(p)
    F = alg.field
    v = ribbon_v(alg)
    vinv = ribbon_v_inv(alg)
    t_a = _shift_elem(alg, vinv, "left")
    phi = drinfeld_inverse(vinv)
    t_b = (_shift_elem(alg, vinv, "left") @ _mult_matrix(alg, phi.values)
           @ _shift_elem(alg, v, "left"))
    # gates: the twists conjugate the loop matrices the way the point
    # pushing maps act on the loops
    from .handle_rep import _torus_data
    td = _torus_data(p)
    vf = ribbon_value(alg, 2)
    ba = td["B"] @ td["A"]
    binva = td["B^-1"] @ td["A"]
    for r in ((0,), (1,)):
        for c in ((0,), (1,)):
            be = td["B"].blocks.get((r, c),
                                    ExactMatrix.zeros(F, alg.dim, alg.dim))
            bae = ba.blocks.get((r, c),
                                ExactMatrix.zeros(F, alg.dim, alg.dim))
            if not (t_a @ be == (bae * vf.inverse()) @ t_a):
                raise RuntimeError("tau_a gate failed")
            ae = td["A"].blocks.get((r, c),
                                    ExactMatrix.zeros(F, alg.dim, alg.dim))
            bie = binva.blocks.get((r, c),
                                   ExactMatrix.zeros(F, alg.dim, alg.dim))
            if not (t_b @ ae == (bie * vf) @ t_b):
                raise RuntimeError("tau_b gate failed on A")
            if not (t_b @ be == be @ t_b):
                raise RuntimeError("tau_b gate failed on B")
    return t_a, t_b


def _embed(alg: UqAlgebra, g: int, mat: ExactMatrix, first: int,
           span: int) -> ExactMatrix:
    """Place a span-leg operator at factors first..first+span-1 (1-based)
    of the g-fold tensor power."""
    n = alg.dim
    left = ExactMatrix.identity(alg.field, n ** (first - 1))
    right = ExactMatrix.identity(alg.field, n ** (g - first - span + 1))
    return left.kron(mat).kron(right)


@lru_cache(maxsize=None)
def _d_pair_mat(p: int):
    """The two-leg core of the tau_d twist."""
    alg = algebra(p)
    F = alg.field
    e_mat, f_mat = _ef_mats(p)
    acc = ExactMatrix.zeros(F, alg.dim ** 2, alg.dim ** 2)
    for mon, c in ribbon_v_inv(alg).terms.items():
        for (lm, rm), cc in alg._mono_coproduct(mon):
            m1 = e_mat @ _mono_shift(p, rm, "right", False) @ f_mat
            x = AlgElem(alg, {lm: F.one}).antipode_inv()
            m2 = e_mat @ _shift_elem(alg, x, "left") @ f_mat
            acc = acc + m1.kron(m2) * (c * cc)
    return acc


@lru_cache(maxsize=None)
def _e_chain_mat(p: int, i: int):
    """The i-leg core of the tau_e twist (factors 1..i)."""
    alg = algebra(p)
    F = alg.field
    e_mat, f_mat = _ef_mats(p)
    dim = alg.dim ** i
    acc = ExactMatrix.zeros(F, dim, dim)
    for legs, c in _iterated_coproduct(alg, ribbon_v_inv(alg), 2 * i - 1):
        mats = []
        for j in range(1, i):
            x = AlgElem(alg, {legs[2 * (i - j) - 1]: F.one}).antipode_inv()
            mats.append(_shift_elem(alg, x, "left")
                        @ _mono_shift(p, legs[2 * (i - j)], "right", False))
        x0 = AlgElem(alg, {legs[0]: F.one}).antipode_inv()
        mats.append(e_mat @ _shift_elem(alg, x0, "left") @ f_mat)
        mat = mats[0]
        for m in mats[1:]:
            mat = mat.kron(m)
        acc = acc + mat * c
    return acc


def genus_twist_op(alg: UqAlgebra, g: int, curve: str,
                   i: int) -> HdOperator:
    """Dehn twist operator on (H*)^(x g) for the standard curves a_i,
    b_i (single factor), d_i and e_i (i >= 2)."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    if alg.dim ** g > DIM_LIMIT:
        raise ValueError("tensor power too large to materialize")
    if not 1 <= i <= g:
        raise ValueError("curve index out of range")
    t_a, t_b = _torus_twist_mats(alg.p)
    if curve == "a":
        mat = _embed(alg, g, t_a, i, 1)
    elif curve == "b":
        mat = _embed(alg, g, t_b, i, 1)
    elif curve == "d":
        if i < 2:
            raise ValueError("the d-twist formula requires i >= 2")
        mat = _embed(alg, g, _d_pair_mat(alg.p), i - 1, 2)
    elif curve == "e":
        if i < 2:
            raise ValueError("the e-twist formula requires i >= 2")
        mat = _embed(alg, g, _e_chain_mat(alg.p, i), 1, i)
    else:
        raise ValueError(f"unknown curve {curve!r}")
    return HdOperator(alg, mat, genus=g)


def preserves_invariants(alg: UqAlgebra, g: int, op: HdOperator) -> bool:
    """Does the operator map the invariant subspace into itself?"""
    basis = inv_subspace(alg, g)
    image = op.matrix @ basis
    rows = basis.rows_as_cyc()
    irows = image.rows_as_cyc()
    aug = ExactMatrix.from_rows(alg.field,
                                [r + ir for r, ir in zip(rows, irows)])
    return aug.rank() == basis.shape[1]
