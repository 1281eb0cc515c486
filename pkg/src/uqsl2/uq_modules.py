"""Simple modules, projective covers, lifts, tensor products and characters."""

from __future__ import annotations

from .cyclo import CycNum
from .linalg import ExactMatrix
from .uq_algebra import AlgElem, DualForm, UqAlgebra, _left_multiplication_matrix


class Module:
    """A finite dimensional module given by its generator matrices.

    Vectors are columns; ``rep(x)`` is the matrix of the action of x.  When
    the module carries a chosen square root of K the matrix ``Khalf`` is
    present and the module can also represent the extended algebra.
    """

    def __init__(self, alg: UqAlgebra, name, labels, E, F, K, Khalf=None):
        self.alg = alg
        self.name = name
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.E = E
        self.F = F
        self.K = K
        self.Khalf = Khalf
        self._pow_cache = {}

    def _powers(self, gen):
        if gen in self._pow_cache:
            return self._pow_cache[gen]
        mat = getattr(self, gen)
        if mat is None:
            raise ValueError(f"module {self.name} has no lift of K")
        if gen == "Khalf":
            count = 4 * self.alg.p
        elif gen == "K":
            count = 2 * self.alg.p
        else:
            count = self.alg.p
        pows = [ExactMatrix.identity(self.alg.field, self.dim)]
        for _ in range(count - 1):
            pows.append(pows[-1] @ mat)
        self._pow_cache[gen] = pows
        return pows

    def rep(self, x: AlgElem) -> ExactMatrix:
        out = ExactMatrix.zeros(self.alg.field, self.dim, self.dim)
        Ep = self._powers("E")
        Fp = self._powers("F")
        for (m, n, lh), c in x.terms.items():
            if lh % 2 == 0:
                Kp = self._powers("Khalf" if self.Khalf is not None else "K")
                kmat = (Kp[(lh // 2) % (2 * self.alg.p)]
                        if self.Khalf is None else Kp[lh % (4 * self.alg.p)])
            else:
                kmat = self._powers("Khalf")[lh % (4 * self.alg.p)]
            out = out + (Ep[m] @ Fp[n] @ kmat) * c
        return out

    def rep_tensor_leg(self, mon) -> ExactMatrix:
        """Matrix of one PBW monomial (used when evaluating tensor legs)."""
        m, n, lh = mon
        Ep, Fp = self._powers("E"), self._powers("F")
        if lh % 2 == 0 and self.Khalf is None:
            kmat = self._powers("K")[(lh // 2) % (2 * self.alg.p)]
        else:
            kmat = self._powers("Khalf")[lh % (4 * self.alg.p)]
        return Ep[m] @ Fp[n] @ kmat

    def qtrace(self, X: ExactMatrix) -> CycNum:
        return (self.rep(self.alg.pivot) @ X).trace()

    def character(self) -> DualForm:
        alg = self.alg
        vals = []
        for (m, n, l) in alg.basis:
            vals.append(self.rep_tensor_leg((m, n, 2 * l)).trace())
        return DualForm(alg, vals)

    def check_relations(self) -> bool:
        alg = self.alg
        F = alg.field
        q2 = F.q_pow(2)
        E, Fm, K = self.E, self.F, self.K
        p = alg.p
        ident = ExactMatrix.identity(F, self.dim)
        Kinv = self._powers("K")[2 * p - 1]
        ok = ((K @ E) == (E @ K) * q2
              and (K @ Fm) == (Fm @ K) * F.q_pow(-2)
              and (E @ Fm - Fm @ E) == (K - Kinv) * F.qhat.inverse()
              and self._powers("E")[p - 1] @ E == ExactMatrix.zeros(F, self.dim, self.dim)
              and self._powers("F")[p - 1] @ Fm == ExactMatrix.zeros(F, self.dim, self.dim)
              and self._powers("K")[2 * p - 1] @ K == ident)
        if ok and self.Khalf is not None:
            ok = (self.Khalf @ self.Khalf) == K
        return ok


# -- constructions --------------------------------------------------------


def simple_module(alg: UqAlgebra, eps: int, s: int, lift_sign: int = 1) -> Module:
    """X^eps(s) with canonical basis, including the chosen lift of K."""
    if eps not in (1, -1) or not 1 <= s <= alg.p:
        raise ValueError("need eps = +-1 and 1 <= s <= p")
    F = alg.field
    d = s
    E = ExactMatrix.zeros(F, d, d)
    Fm = ExactMatrix.zeros(F, d, d)
    K = ExactMatrix.zeros(F, d, d)
    Kh = ExactMatrix.zeros(F, d, d)
    rows_E = [[F.zero] * d for _ in range(d)]
    rows_F = [[F.zero] * d for _ in range(d)]
    rows_K = [[F.zero] * d for _ in range(d)]
    rows_Kh = [[F.zero] * d for _ in range(d)]
    # eps^{1/2}: zeta^p is i, so -1 gets the root lift_sign * i.
    eps_half = F.one if eps == 1 else F.zeta_pow(alg.p) * lift_sign
    for i in range(d):
        rows_K[i][i] = eps * F.q_pow(s - 1 - 2 * i)
        rows_Kh[i][i] = eps_half * F.zeta_pow(s - 1 - 2 * i)
        if i > 0:
            rows_E[i - 1][i] = eps * F.q_int(i) * F.q_int(s - i)
        if i < d - 1:
            rows_F[i + 1][i] = F.one
    return Module(alg, f"X{'+' if eps == 1 else '-'}({s})",
                  [f"v{i}" for i in range(d)],
                  ExactMatrix.from_rows(F, rows_E),
                  ExactMatrix.from_rows(F, rows_F),
                  ExactMatrix.from_rows(F, rows_K),
                  ExactMatrix.from_rows(F, rows_Kh))


def proj_module(alg: UqAlgebra, eps: int, s: int, gauge=None,
                lift_sign: int = 1) -> Module:
    """P^eps(s) in the standard basis (b_i, x_j, y_k, a_l); an optional gauge
    replaces b_i by b_i + gauge * a_i."""
    p = alg.p
    if eps not in (1, -1) or not 1 <= s <= p - 1:
        raise ValueError("need eps = +-1 and 1 <= s <= p-1")
    F = alg.field
    t = p - s
    labels = ([f"b{i}" for i in range(s)] + [f"x{j}" for j in range(t)]
              + [f"y{k}" for k in range(t)] + [f"a{l}" for l in range(s)])
    idx = {lab: i for i, lab in enumerate(labels)}
    d = len(labels)
    rows_E = [[F.zero] * d for _ in range(d)]
    rows_F = [[F.zero] * d for _ in range(d)]
    rows_K = [[F.zero] * d for _ in range(d)]
    rows_Kh = [[F.zero] * d for _ in range(d)]
    eps_half = F.one if eps == 1 else F.zeta_pow(p) * lift_sign
    qp_half = F.zeta_pow(p)  # q^{p/2}

    def put(rows, target, source, coeff):
        rows[idx[target]][idx[source]] = rows[idx[target]][idx[source]] + coeff

    for i in range(s):
        put(rows_K, f"b{i}", f"b{i}", eps * F.q_pow(s - 1 - 2 * i))
        put(rows_Kh, f"b{i}", f"b{i}", eps_half * F.zeta_pow(s - 1 - 2 * i))
        put(rows_K, f"a{i}", f"a{i}", eps * F.q_pow(s - 1 - 2 * i))
        put(rows_Kh, f"a{i}", f"a{i}", eps_half * F.zeta_pow(s - 1 - 2 * i))
        if i > 0:
            put(rows_E, f"b{i-1}", f"b{i}", eps * F.q_int(i) * F.q_int(s - i))
            put(rows_E, f"a{i-1}", f"b{i}", F.one)
            put(rows_E, f"a{i-1}", f"a{i}", eps * F.q_int(i) * F.q_int(s - i))
        if i < s - 1:
            put(rows_F, f"b{i+1}", f"b{i}", F.one)
            put(rows_F, f"a{i+1}", f"a{i}", F.one)
    put(rows_E, f"x{t-1}", "b0", F.one)
    put(rows_F, "y0", f"b{s-1}", F.one)
    for j in range(t):
        put(rows_K, f"x{j}", f"x{j}", -eps * F.q_pow(t - 1 - 2 * j))
        put(rows_Kh, f"x{j}", f"x{j}",
            eps_half * qp_half * F.zeta_pow(t - 1 - 2 * j))
        put(rows_K, f"y{j}", f"y{j}", -eps * F.q_pow(t - 1 - 2 * j))
        put(rows_Kh, f"y{j}", f"y{j}",
            -eps_half * qp_half * F.zeta_pow(t - 1 - 2 * j))
        if j > 0:
            put(rows_E, f"x{j-1}", f"x{j}", -eps * F.q_int(j) * F.q_int(t - j))
            put(rows_E, f"y{j-1}", f"y{j}", -eps * F.q_int(j) * F.q_int(t - j))
        if j < t - 1:
            put(rows_F, f"x{j+1}", f"x{j}", F.one)
            put(rows_F, f"y{j+1}", f"y{j}", F.one)
    put(rows_F, "a0", f"x{t-1}", F.one)
    put(rows_E, f"a{s-1}", "y0", F.one)
    mats = {"E": rows_E, "F": rows_F, "K": rows_K, "Kh": rows_Kh}
    if gauge is not None:
        # b_i -> b_i + gauge a_i is the change of basis P = I + gauge * N.
        P = ExactMatrix.identity(F, d)
        rows_P = P.rows_as_cyc()
        for i in range(s):
            rows_P[idx[f"a{i}"]][idx[f"b{i}"]] = gauge
        P = ExactMatrix.from_rows(F, rows_P)
        Pinv = P.inverse()
        out = {}
        for k, rows in mats.items():
            out[k] = Pinv @ ExactMatrix.from_rows(F, rows) @ P
        return Module(alg, f"P{'+' if eps == 1 else '-'}({s})", labels,
                      out["E"], out["F"], out["K"], out["Kh"])
    return Module(alg, f"P{'+' if eps == 1 else '-'}({s})", labels,
                  ExactMatrix.from_rows(F, rows_E),
                  ExactMatrix.from_rows(F, rows_F),
                  ExactMatrix.from_rows(F, rows_K),
                  ExactMatrix.from_rows(F, rows_Kh))


def tensor_module(m1: Module, m2: Module) -> Module:
    """M1 ox M2 with the coproduct action."""
    alg = m1.alg
    F = alg.field
    i1 = ExactMatrix.identity(F, m1.dim)
    i2 = ExactMatrix.identity(F, m2.dim)
    E = i1.kron(m2.E) + m1.E.kron(m2.K)
    K2inv = m1._powers("K")[2 * alg.p - 1]
    Fm = m1.F.kron(i2) + K2inv.kron(m2.F)
    K = m1.K.kron(m2.K)
    Kh = None
    if m1.Khalf is not None and m2.Khalf is not None:
        Kh = m1.Khalf.kron(m2.Khalf)
    labels = [f"{a}*{b}" for a in m1.labels for b in m2.labels]
    return Module(alg, f"{m1.name}(x){m2.name}", labels, E, Fm, K, Kh)


def dual_module(m: Module) -> Module:
    """Categorical dual, x . phi = phi(S(x) .)."""
    alg = m.alg

    def dual_mat(x: AlgElem):
        return m.rep(x.antipode()).transpose()

    Kh = None
    if m.Khalf is not None:
        # S(K^{1/2}) = K^{-1/2}
        Kh = m.rep_tensor_leg((0, 0, (4 * alg.p - 1) % (4 * alg.p))).transpose()
    return Module(alg, f"{m.name}*", [f"{lab}^" for lab in m.labels],
                  dual_mat(alg.E), dual_mat(alg.F), dual_mat(alg.K), Kh)


def regular_module(alg: UqAlgebra) -> Module:
    E = _left_multiplication_matrix(alg.E)
    F = _left_multiplication_matrix(alg.F)
    K = _left_multiplication_matrix(alg.K)
    return Module(alg, "regular", [str(b) for b in alg.basis], E, F, K)


def fundamental(alg: UqAlgebra) -> Module:
    """X+(2) with the standard lift K^{1/2} v0 = q^{1/2} v0."""
    return simple_module(alg, 1, 2)


def self_duality_iso(alg: UqAlgebra) -> ExactMatrix:
    """D: X+(2)* -> X+(2), v^0 -> -q v_1, v^1 -> v_0."""
    F = alg.field
    return ExactMatrix.from_rows(F, [[F.zero, F.one], [-F.q, F.zero]])


def rep_tensor_elem(t, m1: Module, m2: Module) -> ExactMatrix:
    """Evaluate a TensorElem on M1 ox M2."""
    alg = m1.alg
    out = ExactMatrix.zeros(alg.field, m1.dim * m2.dim, m1.dim * m2.dim)
    for (a, b), c in t.terms.items():
        out = out + m1.rep_tensor_leg(a).kron(m2.rep_tensor_leg(b)) * c
    return out
