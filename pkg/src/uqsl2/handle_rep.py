"""Handle-algebra operators on the dual of the quantum group.

The torus algebra embeds into the Heisenberg double, which acts
faithfully on the dual space H*.  A linear form is stored as its value
vector over the PBW basis, and each matrix coefficient of the loop
matrices A, B (and their genus-g copies) becomes an exact matrix on
that space.  The B matrix is assembled on the K^(1/2)-extension and
then restricted to the base dual space; the restriction is legal
because the assembled operator preserves the parity of the Cartan
exponent, which is checked entry by entry.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .linalg import ExactMatrix
from .uq_algebra import AlgElem, DualForm, UqAlgebra, algebra, mu_left
from .uq_modules import Module, fundamental, rep_tensor_elem, tensor_module
from .ribbon import (drinfeld_inverse, m_element, r_inverse, r_matrix_ext,
                     r_prime, r_prime_inverse, ribbon_v, ribbon_v_inv,
                     ribbon_value)
from .center_slf import center_basis, gta_basis

# Largest total dimension (module legs times coefficient space) for
# which operators are materialized.
DIM_LIMIT = 8192


def heis_apply(psi: DualForm, h: AlgElem, phi: DualForm) -> DualForm:
    """Action of the Heisenberg-double element psi (x) h on the form phi."""
    return psi * phi.shift_right(h)


# -- shift and multiplication primitives on the dual space ---------------

@lru_cache(maxsize=None)
def _ext_basis(p: int):
    basis = tuple((m, n, lh)
                  for m in range(p) for n in range(p) for lh in range(4 * p))
    return basis, {mon: i for i, mon in enumerate(basis)}


def _ext_vector(alg: UqAlgebra, x: AlgElem):
    basis, index = _ext_basis(alg.p)
    vec = [alg.field.zero] * len(basis)
    for mon, c in x.terms.items():
        vec[index[mon]] = c
    return vec


@lru_cache(maxsize=None)
def _mono_shift(p: int, mon, side: str, ext: bool) -> ExactMatrix:
    """Matrix of phi -> phi(? * mon) (side "right") or phi -> phi(mon * ?)
    (side "left") in the value-vector picture."""
    alg = algebra(p)
    h = AlgElem(alg, {mon: alg.field.one})
    if ext:
        basis = _ext_basis(p)[0]
        rows = []
        for bm in basis:
            me = AlgElem(alg, {bm: alg.field.one})
            prod = me * h if side == "right" else h * me
            rows.append(_ext_vector(alg, prod))
    else:
        rows = []
        for (m, n, l) in alg.basis:
            me = alg.monomial(m, n, 2 * l)
            prod = me * h if side == "right" else h * me
            rows.append(prod.pbw_vector())
    return ExactMatrix.from_rows(alg.field, rows)


def _shift_elem(alg: UqAlgebra, x: AlgElem, side: str,
                ext: bool = False) -> ExactMatrix:
    dim = len(_ext_basis(alg.p)[0]) if ext else alg.dim
    acc = ExactMatrix.zeros(alg.field, dim, dim)
    for mon, c in x.terms.items():
        acc = acc + _mono_shift(alg.p, mon, side, ext) * c
    return acc


def _mult_matrix(alg: UqAlgebra, values, ext: bool = False) -> ExactMatrix:
    """Matrix of left multiplication phi -> psi * phi in the dual algebra,
    where psi is given by its value vector."""
    F = alg.field
    if ext:
        basis = list(_ext_basis(alg.p)[0])
        index = _ext_basis(alg.p)[1]

        def idx(mon):
            return index[mon]
    else:
        basis = [(m, n, 2 * l) for (m, n, l) in alg.basis]

        def idx(mon):
            return alg.basis_index[(mon[0], mon[1], mon[2] // 2)]

    n = len(basis)
    rows = [[F.zero] * n for _ in range(n)]
    for j, mon in enumerate(basis):
        row = rows[j]
        for (lm, rm), c in alg._mono_coproduct(mon):
            val = values[idx(lm)]
            if val:
                k = idx(rm)
                row[k] = row[k] + c * val
    return ExactMatrix.from_rows(F, rows)


def right_shift_op(alg: UqAlgebra, h: AlgElem) -> "HdOperator":
    """phi -> phi(? h), the action of h sitting in the algebra leg."""
    return HdOperator(alg, _shift_elem(alg, h, "right"))


def left_shift_op(alg: UqAlgebra, h: AlgElem) -> "HdOperator":
    """phi -> phi(h ?)."""
    return HdOperator(alg, _shift_elem(alg, h, "left"))


def tilde_op(alg: UqAlgebra, h: AlgElem) -> "HdOperator":
    """phi -> phi(S^-1(h) ?), the twisted copy of the algebra."""
    return HdOperator(alg, _shift_elem(alg, h.antipode_inv(), "left"))


def mult_op(alg: UqAlgebra, psi: DualForm) -> "HdOperator":
    """phi -> psi * phi in the dual algebra."""
    return HdOperator(alg, _mult_matrix(alg, psi.values))


# -- operator wrappers ---------------------------------------------------

class HdOperator:
    """Exact operator on (H*)^(x g), stored as a dense matrix over the
    PBW value vectors."""

    __slots__ = ("alg", "matrix", "genus")

    def __init__(self, alg: UqAlgebra, matrix: ExactMatrix, genus: int = 1):
        if matrix.shape != (alg.dim ** genus, alg.dim ** genus):
            raise ValueError("operator matrix has wrong shape")
        self.alg = alg
        self.matrix = matrix
        self.genus = genus

    def _check(self, other):
        if self.alg is not other.alg or self.genus != other.genus:
            raise ValueError("operators act on different spaces")

    def __matmul__(self, other):
        self._check(other)
        return HdOperator(self.alg, self.matrix @ other.matrix, self.genus)

    def __add__(self, other):
        self._check(other)
        return HdOperator(self.alg, self.matrix + other.matrix, self.genus)

    def __sub__(self, other):
        self._check(other)
        return HdOperator(self.alg, self.matrix - other.matrix, self.genus)

    def __neg__(self):
        return HdOperator(self.alg, -self.matrix, self.genus)

    def scale(self, c) -> "HdOperator":
        return HdOperator(self.alg, self.matrix * c, self.genus)

    def __eq__(self, other):
        if not isinstance(other, HdOperator):
            return NotImplemented
        return (self.alg is other.alg and self.genus == other.genus
                and self.matrix == other.matrix)

    def __hash__(self):
        return None

    def is_identity(self) -> bool:
        return self.matrix == ExactMatrix.identity(self.alg.field,
                                                   self.matrix.shape[0])

    def apply_vec(self, values):
        col = ExactMatrix.from_rows(self.alg.field, [[v] for v in values])
        res = self.matrix @ col
        return [res.entry(i, 0) for i in range(res.shape[0])]

    def apply(self, phi: DualForm) -> DualForm:
        if self.genus != 1:
            raise ValueError("apply expects a genus-one operator")
        return DualForm(self.alg, self.apply_vec(phi.values))

    def to_json(self):
        return {"p": self.alg.p, "genus": self.genus,
                "matrix": self.matrix.to_json()}

    def __repr__(self):
        return f"HdOperator(p={self.alg.p}, genus={self.genus})"


def _flat(t):
    f = 0
    for x in t:
        f = 2 * f + x
    return f


def _tuples(legs):
    return itertools.product((0, 1), repeat=legs)


def _macc(acc, key, mat):
    cur = acc.get(key)
    acc[key] = mat if cur is None else cur + mat


class BlockOp:
    """Matrix of operators with two-dimensional module legs.

    The entries act on a common coefficient space of dimension vdim and
    are indexed by tuples over {0, 1}, one bit per leg.  Zero blocks are
    dropped, so sparse loop matrices stay cheap to multiply.
    """

    __slots__ = ("field", "legs", "vdim", "blocks")

    def __init__(self, fld, legs, vdim, blocks):
        self.field = fld
        self.legs = legs
        self.vdim = vdim
        self.blocks = {k: b for k, b in blocks.items() if not b.is_zero()}

    @classmethod
    def identity(cls, fld, legs, vdim):
        I = ExactMatrix.identity(fld, vdim)
        return cls(fld, legs, vdim, {(t, t): I for t in _tuples(legs)})

    @classmethod
    def scalar_op(cls, fld, legs, vdim, smat: ExactMatrix):
        """Scalar matrix on the module legs, identity on the coefficients."""
        I = ExactMatrix.identity(fld, vdim)
        blocks = {}
        for r in _tuples(legs):
            for c in _tuples(legs):
                e = smat.entry(_flat(r), _flat(c))
                if e:
                    blocks[(r, c)] = I * e
        return cls(fld, legs, vdim, blocks)

    def _check(self, other):
        if (self.field is not other.field or self.legs != other.legs
                or self.vdim != other.vdim):
            raise ValueError("incompatible block operators")

    def entry(self, r, c) -> ExactMatrix:
        blk = self.blocks.get((tuple(r), tuple(c)))
        if blk is None:
            return ExactMatrix.zeros(self.field, self.vdim, self.vdim)
        return blk

    def __matmul__(self, other):
        self._check(other)
        by_row = {}
        for (r, k), blk in self.blocks.items():
            by_row.setdefault(k, []).append((r, blk))
        out = {}
        for (k, c), oblk in other.blocks.items():
            for r, blk in by_row.get(k, ()):
                _macc(out, (r, c), blk @ oblk)
        return BlockOp(self.field, self.legs, self.vdim, out)

    def __add__(self, other):
        self._check(other)
        out = dict(self.blocks)
        for key, blk in other.blocks.items():
            _macc(out, key, blk)
        return BlockOp(self.field, self.legs, self.vdim, out)

    def __sub__(self, other):
        return self + other.scale(-self.field.one)

    def __neg__(self):
        return self.scale(-self.field.one)

    def scale(self, c) -> "BlockOp":
        return BlockOp(self.field, self.legs, self.vdim,
                       {k: blk * c for k, blk in self.blocks.items()})

    def __eq__(self, other):
        if not isinstance(other, BlockOp):
            return NotImplemented
        if (self.legs, self.vdim) != (other.legs, other.vdim):
            return False
        if set(self.blocks) != set(other.blocks):
            return False
        return all(self.blocks[k] == other.blocks[k] for k in self.blocks)

    def __hash__(self):
        return None

    def scalar_left(self, smat: ExactMatrix) -> "BlockOp":
        """Left multiplication by a scalar matrix on the module legs."""
        out = {}
        for (k, c), blk in self.blocks.items():
            kf = _flat(k)
            for r in _tuples(self.legs):
                e = smat.entry(_flat(r), kf)
                if e:
                    _macc(out, (r, c), blk * e)
        return BlockOp(self.field, self.legs, self.vdim, out)

    def scalar_right(self, smat: ExactMatrix) -> "BlockOp":
        out = {}
        for (r, k), blk in self.blocks.items():
            kf = _flat(k)
            for c in _tuples(self.legs):
                e = smat.entry(kf, _flat(c))
                if e:
                    _macc(out, (r, c), blk * e)
        return BlockOp(self.field, self.legs, self.vdim, out)

    def embed_legs(self, total, positions) -> "BlockOp":
        """View the operator inside a larger leg set, acting as the
        identity on the legs not listed in positions."""
        others = [i for i in range(total) if i not in positions]
        out = {}
        for (r, c), blk in self.blocks.items():
            for fill in itertools.product((0, 1), repeat=len(others)):
                rr = [0] * total
                cc = [0] * total
                for pos, val in zip(positions, r):
                    rr[pos] = val
                for pos, val in zip(positions, c):
                    cc[pos] = val
                for pos, val in zip(others, fill):
                    rr[pos] = val
                    cc[pos] = val
                out[(tuple(rr), tuple(cc))] = blk
        return BlockOp(self.field, total, self.vdim, out)

    def embed_factor(self, g, i, n) -> "BlockOp":
        """Let the coefficient blocks act on the i-th factor (1-based) of
        an n^g-dimensional tensor power."""
        if self.vdim != n:
            raise ValueError("coefficient dimension mismatch")
        left = ExactMatrix.identity(self.field, n ** (i - 1))
        right = ExactMatrix.identity(self.field, n ** (g - i))
        out = {k: left.kron(blk).kron(right)
               for k, blk in self.blocks.items()}
        return BlockOp(self.field, self.legs, n ** g, out)

    def to_matrix(self) -> ExactMatrix:
        F = self.field
        nb = 1 << self.legs
        big = [[F.zero] * (nb * self.vdim) for _ in range(nb * self.vdim)]
        for (r, c), blk in self.blocks.items():
            ro = _flat(r) * self.vdim
            co = _flat(c) * self.vdim
            rows = blk.rows_as_cyc()
            for i in range(self.vdim):
                row = big[ro + i]
                bi = rows[i]
                for j in range(self.vdim):
                    row[co + j] = bi[j]
        return ExactMatrix.from_rows(F, big)

    @classmethod
    def from_matrix(cls, fld, legs, vdim, mat: ExactMatrix) -> "BlockOp":
        blocks = {}
        for r in _tuples(legs):
            for c in _tuples(legs):
                ro = _flat(r) * vdim
                co = _flat(c) * vdim
                rows = [[mat.entry(ro + i, co + j) for j in range(vdim)]
                        for i in range(vdim)]
                blocks[(r, c)] = ExactMatrix.from_rows(fld, rows)
        return cls(fld, legs, vdim, blocks)

    def inverse(self) -> "BlockOp":
        inv = self.to_matrix().inverse()
        return BlockOp.from_matrix(self.field, self.legs, self.vdim, inv)

    def __repr__(self):
        return (f"BlockOp(legs={self.legs}, vdim={self.vdim}, "
                f"{len(self.blocks)} blocks)")


# -- scalar R-matrices on the module legs --------------------------------

_R_KINDS = {"R": r_matrix_ext, "R^-1": r_inverse,
            "R'": r_prime, "R'^-1": r_prime_inverse}


@lru_cache(maxsize=None)
def _fund_r_cached(p: int, kind: str) -> ExactMatrix:
    alg = algebra(p)
    fund = fundamental(alg)
    return rep_tensor_elem(_R_KINDS[kind](alg), fund, fund)


def fund_r_scalar(alg: UqAlgebra, kind: str) -> ExactMatrix:
    """4x4 matrix of the chosen R-matrix on two fundamental legs."""
    if kind not in _R_KINDS:
        raise ValueError(f"unknown R-matrix kind {kind!r}")
    return _fund_r_cached(alg.p, kind)


# -- the loop matrices A and B -------------------------------------------

def _mod_legs(mod: Module) -> int:
    if mod.dim == 2:
        return 1
    if mod.dim == 4:
        return 2
    raise ValueError("module legs must have dimension 2 or 4")


def _unflat(f, legs):
    return tuple((f >> (legs - 1 - i)) & 1 for i in range(legs))


def _scalar_blocks(alg, legs, vdim, grouped, shift_side, ext):
    """Assemble sum_i rep(scalar_i) (x) shift(mon_i) into block form."""
    blocks = {}
    dim = 1 << legs
    for mon, sc in grouped.items():
        shift = _mono_shift(alg.p, mon, shift_side, ext)
        for u in range(dim):
            for w in range(dim):
                cc = sc.entry(u, w)
                if cc:
                    _macc(blocks, (_unflat(u, legs), _unflat(w, legs)),
                          shift * cc)
    return BlockOp(alg.field, legs, vdim, blocks)


def _a_op(alg: UqAlgebra, mod: Module) -> BlockOp:
    """A = (X_i)_I Y_i with X (x) Y the monodromy element RR'."""
    grouped = {}
    for c, x, y in m_element(alg).legs():
        ymon = next(iter(y.terms))
        _macc(grouped, ymon, mod.rep(x) * c)
    return _scalar_blocks(alg, _mod_legs(mod), alg.dim, grouped,
                          "right", False)


def _l_op(alg: UqAlgebra, mod: Module, tens, invert: bool) -> BlockOp:
    """L = (a_i)_I b_i for a universal R-matrix a_i (x) b_i, or its inverse
    (S(a_i))_I b_i, on the extension of the dual space."""
    grouped = {}
    for c, a, b in tens.legs():
        sc = mod.rep(a.antipode() if invert else a) * c
        _macc(grouped, next(iter(b.terms)), sc)
    ne = len(_ext_basis(alg.p)[0])
    return _scalar_blocks(alg, _mod_legs(mod), ne, grouped, "right", True)


def _t_op(alg: UqAlgebra, mod: Module) -> BlockOp:
    """The matrix of coordinate forms T, acting by dual multiplication."""
    basis = _ext_basis(alg.p)[0]
    F = alg.field
    ne = len(basis)
    legs = _mod_legs(mod)
    dim = 1 << legs
    vals = [[[F.zero] * ne for _ in range(dim)] for _ in range(dim)]
    for i, mon in enumerate(basis):
        mat = mod.rep_tensor_leg(mon)
        for u in range(dim):
            for w in range(dim):
                vals[u][w][i] = mat.entry(u, w)
    blocks = {}
    for u in range(dim):
        for w in range(dim):
            mm = _mult_matrix(alg, vals[u][w], ext=True)
            if not mm.is_zero():
                blocks[(_unflat(u, legs), _unflat(w, legs))] = mm
    return BlockOp(F, legs, ne, blocks)


def _restrict(alg: UqAlgebra, bop: BlockOp) -> BlockOp:
    """Restrict an extension operator to the base dual space, checking
    that it preserves the parity of the Cartan exponent."""
    basis = _ext_basis(alg.p)[0]
    even = [i for i, mon in enumerate(basis) if mon[2] % 2 == 0]
    odd = [i for i, mon in enumerate(basis) if mon[2] % 2]
    import numpy as np
    blocks = {}
    for key, blk in bop.blocks.items():
        bad = ExactMatrix(blk.field, blk.data[np.ix_(odd, even)], blk.den)
        if not bad.is_zero():
            raise RuntimeError("operator does not preserve the base "
                               "dual space")
        sub = ExactMatrix(blk.field, blk.data[np.ix_(even, even)], blk.den)
        if not sub.is_zero():
            blocks[key] = sub
    return BlockOp(alg.field, bop.legs, len(even), blocks)


def _b_op(alg: UqAlgebra, mod: Module) -> BlockOp:
    """B = L^(+) T L^(-)-1, assembled on the extension and restricted."""
    lp = _l_op(alg, mod, r_matrix_ext(alg), invert=False)
    lm_inv = _l_op(alg, mod, r_prime_inverse(alg), invert=True)
    bext = lp @ _t_op(alg, mod) @ lm_inv
    b = _restrict(alg, bext)
    # the T-free product must reproduce A through the same detour
    if not (_restrict(alg, lp @ lm_inv) == _a_op(alg, mod)):
        raise RuntimeError("extension route disagrees with the "
                           "monodromy matrix")
    return b


def matrix_op(alg: UqAlgebra, which: str, tensor: bool = False) -> BlockOp:
    """The loop matrix A or B on the fundamental (or two-fold tensor) leg."""
    if which not in ("A", "B"):
        raise ValueError("which must be 'A' or 'B'")
    if not tensor:
        td = _torus_data(alg.p)
        return td[which]
    mod = tensor_module(fundamental(alg), fundamental(alg))
    return _a_op(alg, mod) if which == "A" else _b_op(alg, mod)


def quantum_trace(alg: UqAlgebra, bop: BlockOp) -> HdOperator:
    """tr(g M) of a block matrix, with the pivotal grouplike on the legs."""
    fund = fundamental(alg)
    gmat = fund.rep(alg.pivot)
    for _ in range(bop.legs - 1):
        gmat = gmat.kron(fund.rep(alg.pivot))
    acc = ExactMatrix.zeros(alg.field, bop.vdim, bop.vdim)
    for (r, c), blk in bop.blocks.items():
        e = gmat.entry(_flat(c), _flat(r))
        if e:
            acc = acc + blk * e
    return HdOperator(alg, acc, _genus_of(alg, bop.vdim))


def _genus_of(alg, vdim):
    g = 1
    d = alg.dim
    while d < vdim:
        d *= alg.dim
        g += 1
    if d != vdim:
        raise ValueError("coefficient space is not a tensor power")
    return g


def _ch_inverse(alg: UqAlgebra, mop: BlockOp) -> BlockOp:
    """Inverse of a 2x2 loop matrix through the quantum Cayley-Hamilton
    identity M^-1 = -q^2 M - q tr_q(M); the product is verified."""
    F = alg.field
    w = quantum_trace(alg, mop).matrix
    cand = {k: blk * (-F.q_pow(2)) for k, blk in mop.blocks.items()}
    for u in (0, 1):
        _macc(cand, ((u,), (u,)), w * (-F.q))
    cand = BlockOp(F, 1, mop.vdim, cand)
    ident = BlockOp.identity(F, 1, mop.vdim)
    if not (mop @ cand == ident and cand @ mop == ident):
        raise RuntimeError("Cayley-Hamilton inverse failed")
    return cand


@lru_cache(maxsize=None)
def _torus_data(p: int):
    alg = algebra(p)
    if 2 * alg.dim > DIM_LIMIT:
        raise ValueError("dual space too large to materialize")
    fund = fundamental(alg)
    a = _a_op(alg, fund)
    b = _b_op(alg, fund)
    ainv = _ch_inverse(alg, a)
    binv = _ch_inverse(alg, b)
    vf = ribbon_value(alg, 2)
    c = (b @ ainv @ binv @ a).scale(vf * vf)
    return {"A": a, "B": b, "A^-1": ainv, "B^-1": binv, "C": c}


def l10_op(alg: UqAlgebra, letter: str, row: int, col: int) -> HdOperator:
    """Matrix coefficient of a torus-algebra loop matrix as an operator
    on the dual space; letter is A, B, A^-1, B^-1 or C."""
    td = _torus_data(alg.p)
    if letter not in td:
        raise ValueError(f"unknown loop matrix {letter!r}")
    return HdOperator(alg, td[letter].entry((row,), (col,)))


# -- the full boundary matrices C^(+/-) ----------------------------------

@lru_cache(maxsize=None)
def _c_universal_cached(p: int, sign: int, tensor: bool) -> BlockOp:
    alg = algebra(p)
    mod = fundamental(alg)
    if tensor:
        mod = tensor_module(mod, fundamental(alg))
    F = alg.field
    legs = _mod_legs(mod)
    dim = 1 << legs
    pairs = {}
    for c, a, b in r_matrix_ext(alg).legs():
        if sign > 0:
            sc = mod.rep(a) * c
            hmon = next(iter(b.terms))
        else:
            sc = mod.rep(b.antipode_inv()) * c
            hmon = next(iter(a.terms))
        for (lm, rm), cc in alg._mono_coproduct(hmon):
            _macc(pairs, (lm, rm), sc * cc)
    ne = len(_ext_basis(p)[0])
    blocks = {}
    for (lm, rm), sc in pairs.items():
        linv = AlgElem(alg, {lm: F.one}).antipode_inv()
        sandwich = (_shift_elem(alg, linv, "left", ext=True)
                    @ _mono_shift(p, rm, "right", True))
        for u in range(dim):
            for w in range(dim):
                e = sc.entry(u, w)
                if e:
                    _macc(blocks, (_unflat(u, legs), _unflat(w, legs)),
                          sandwich * e)
    return _restrict(alg, BlockOp(F, legs, ne, blocks))


def c_universal(alg: UqAlgebra, sign: int, tensor: bool = False) -> BlockOp:
    """C^(+) = (a_i)_I btilde_i' b_i'' or C^(-) = (S^-1(b_i))_I atilde_i' a_i''
    as block operators on the dual space."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return _c_universal_cached(alg.p, sign, tensor)


def c_direct(alg: UqAlgebra) -> BlockOp:
    """C = (X_i)_I Ytilde_i' Y_i'' straight from the monodromy element."""
    fund = fundamental(alg)
    F = alg.field
    pairs = {}
    for c, x, y in m_element(alg).legs():
        sc = fund.rep(x) * c
        for (lm, rm), cc in alg._mono_coproduct(next(iter(y.terms))):
            _macc(pairs, (lm, rm), sc * cc)
    blocks = {}
    for (lm, rm), sc in pairs.items():
        linv = AlgElem(alg, {lm: F.one}).antipode_inv()
        sandwich = (_shift_elem(alg, linv, "left")
                    @ _mono_shift(alg.p, rm, "right", False))
        for u in (0, 1):
            for w in (0, 1):
                e = sc.entry(u, w)
                if e:
                    _macc(blocks, ((u,), (w,)), sandwich * e)
    return BlockOp(F, 1, alg.dim, blocks)


# -- central elements acting on the loop classes -------------------------

def z_ops(alg: UqAlgebra, z: AlgElem):
    """Operators of the three basic loop classes labeled by a central z:
    the a-loop, the b-loop and the v b^-1 a loop.  The a-loop acts on all
    of the dual space; the other two are valid on symmetric forms."""
    center_basis(alg).decompose(z)  # raises if z is not central
    v = ribbon_v(alg)
    vinv = ribbon_v_inv(alg)
    dz = drinfeld_inverse(z)
    za = _shift_elem(alg, z, "right")
    zb = (_shift_elem(alg, vinv, "left")
          @ _mult_matrix(alg, dz.values)
          @ _shift_elem(alg, v, "left"))
    zc = _mult_matrix(alg, dz.antipode().values)
    return {"A": HdOperator(alg, za), "B": HdOperator(alg, zb),
            "vB^-1A": HdOperator(alg, zc)}


@lru_cache(maxsize=None)
def _mu_l_ribbon(p: int):
    alg = algebra(p)
    ml = mu_left(alg)
    return ml.evaluate(ribbon_v(alg)), ml.evaluate(ribbon_v_inv(alg))


def mu_l_ribbon(alg: UqAlgebra):
    """(mu^l(v), mu^l(v^-1)), the modular pair of ribbon integrals."""
    return _mu_l_ribbon(alg.p)


def restrict_to_slf(op: HdOperator) -> ExactMatrix:
    """Matrix of an operator preserving the symmetric forms, written in
    the GTA basis."""
    alg = op.alg
    gta = gta_basis(alg)
    n = len(gta.labels)
    cols = [gta.coords(op.apply(f)).coords for f in gta.forms]
    return ExactMatrix.from_rows(alg.field,
                                 [[cols[j][i] for j in range(n)]
                                  for i in range(n)])


# -- genus-g tower -------------------------------------------------------

_LGN_LETTERS = ("A", "B", "A^-1", "B^-1", "C")


@lru_cache(maxsize=None)
def _genus_data(p: int, g: int):
    if g < 1:
        raise ValueError("genus must be at least 1")
    alg = algebra(p)
    n = alg.dim
    if 2 * n ** g > DIM_LIMIT:
        raise ValueError("genus-{} space at p={} is too large".format(g, p))
    td = _torus_data(p)
    ops = {}
    if g == 1:
        for nm in _LGN_LETTERS:
            ops[(1, nm)] = td[nm]
    else:
        cm = c_universal(alg, -1)
        cm_inv = cm.inverse()
        lam = None
        lam_inv = None
        for i in range(1, g + 1):
            for nm in _LGN_LETTERS:
                emb = td[nm].embed_factor(g, i, n)
                ops[(i, nm)] = emb if lam is None else lam @ emb @ lam_inv
            if i < g:
                ce = cm.embed_factor(g, i, n)
                cei = cm_inv.embed_factor(g, i, n)
                lam = ce if lam is None else lam @ ce
                lam_inv = cei if lam_inv is None else cei @ lam_inv
    boundary = ops[(1, "C")]
    for i in range(2, g + 1):
        boundary = boundary @ ops[(i, "C")]
    return {"ops": ops, "boundary": boundary}


def lgn_op(alg: UqAlgebra, g: int, i: int, letter: str) -> BlockOp:
    """The loop matrix of handle i in the genus-g surface algebra, as a
    block operator on (H*)^(x g)."""
    if not 1 <= i <= g:
        raise ValueError("handle index out of range")
    if letter not in _LGN_LETTERS:
        raise ValueError(f"unknown loop matrix {letter!r}")
    return _genus_data(alg.p, g)["ops"][(i, letter)]


def boundary_c(alg: UqAlgebra, g: int) -> BlockOp:
    """C(1) ... C(g), the matrix of the boundary loop."""
    return _genus_data(alg.p, g)["boundary"]


# -- the module action and its invariants --------------------------------

def _iterated_coproduct(alg: UqAlgebra, x: AlgElem, nlegs: int):
    terms = {(mon,): c for mon, c in x.terms.items()}
    for _ in range(nlegs - 1):
        new = {}
        for key, c in terms.items():
            for (lm, rm), cc in alg._mono_coproduct(key[-1]):
                k = key[:-1] + (lm, rm)
                cur = new.get(k)
                val = c * cc
                new[k] = val if cur is None else cur + val
        terms = new
    return [(k, v) for k, v in terms.items() if v]


def action_h(alg: UqAlgebra, g: int, h: AlgElem) -> ExactMatrix:
    """The algebra action on (H*)^(x g) whose invariants carry the
    mapping class group representation.  The last tensor factor receives
    the first pair of coproduct legs."""
    F = alg.field
    dim = alg.dim ** g
    if dim > DIM_LIMIT:
        raise ValueError("tensor power too large to materialize")
    acc = ExactMatrix.zeros(F, dim, dim)
    for legs, c in _iterated_coproduct(alg, h, 2 * g):
        mats = []
        for j in range(g):
            x = AlgElem(alg, {legs[2 * (g - 1 - j)]: F.one})
            y = legs[2 * (g - 1 - j) + 1]
            mats.append(_shift_elem(alg, x.antipode_inv(), "left")
                        @ _mono_shift(alg.p, y, "right", False))
        mat = mats[0]
        for m in mats[1:]:
            mat = mat.kron(m)
        acc = acc + mat * c
    return acc


@lru_cache(maxsize=None)
def _inv_cache(p: int, g: int) -> ExactMatrix:
    alg = algebra(p)
    F = alg.field
    dim = alg.dim ** g
    basis = ExactMatrix.identity(F, dim)
    gens = [(alg.K, True), (alg.E, False), (alg.F, False)]
    for h, unit_counit in gens:
        mat = action_h(alg, g, h)
        if unit_counit:
            mat = mat - ExactMatrix.identity(F, dim)
        ker = (mat @ basis).kernel()
        basis = basis @ ker
    return basis


def inv_subspace(alg: UqAlgebra, g: int) -> ExactMatrix:
    """Basis (as columns) of the invariant subspace of (H*)^(x g)."""
    return _inv_cache(alg.p, g)


# -- faithfulness of the torus representation ----------------------------

def l10_monomial_rank(alg: UqAlgebra) -> int:
    """Rank of the PBW monomials of the torus algebra acting on the dual
    space; equality with 4p^6 certifies a faithful representation."""
    p = alg.p
    n = alg.dim
    if n * n > DIM_LIMIT:
        raise ValueError("dual space too large for the rank computation")
    td = _torus_data(p)
    b1 = td["A"].entry((0,), (1,))
    c1 = td["A"].entry((1,), (0,))
    d1 = td["A"].entry((1,), (1,))
    b2 = td["B"].entry((0,), (1,))
    c2 = td["B"].entry((1,), (0,))
    d2 = td["B"].entry((1,), (1,))

    def powers(mat, count):
        out = [ExactMatrix.identity(alg.field, n)]
        for _ in range(count - 1):
            out.append(out[-1] @ mat)
        return out

    pb1, pc1, pd1 = powers(b1, p), powers(c1, p), powers(d1, 2 * p)
    pb2, pc2, pd2 = powers(b2, p), powers(c2, p), powers(d2, 2 * p)
    rows = []
    for i in range(p):
        for j in range(p):
            left = pb1[i] @ pc1[j]
            for k in range(2 * p):
                lk = left @ pd1[k]
                for l in range(p):
                    for m in range(p):
                        mid = lk @ pb2[l] @ pc2[m]
                        for o in range(2 * p):
                            mat = mid @ pd2[o]
                            rows.append([mat.entry(r, s)
                                         for r in range(n)
                                         for s in range(n)])
    return ExactMatrix.from_rows(alg.field, rows).rank_mod_prime()
