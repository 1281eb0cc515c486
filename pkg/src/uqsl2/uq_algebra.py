"""The restricted quantum group at a primitive 2p-th root of unity.

Elements are stored over the PBW basis E^m F^n K^(l/2), with the exponent of
K kept in half-integer units so that the algebra and its extension by a
square root of K share one representation.  Elements of the non-extended
algebra are exactly those whose K-exponents are all even.

The context object ``UqAlgebra`` owns the memoized rewriting tables (the
F^n E^m normal ordering, coproducts, antipodes of basis monomials).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .cyclo import CycNum, CyclotomicField, field


class UqAlgebra:
    """Context for computations in the quantum group at a given p."""

    def __init__(self, p: int):
        self.p = p
        self.field: CyclotomicField = field(p)
        self._fe_cache = {}
        self._antipode_cache = {}
        self._coproduct_cache = {}
        # PBW basis of the non-extended algebra, lexicographic in (m, n, l).
        self.basis = [
            (m, n, l)
            for m in range(p)
            for n in range(p)
            for l in range(2 * p)
        ]
        self.basis_index = {mon: i for i, mon in enumerate(self.basis)}
        self.dim = len(self.basis)

    # -- element constructors --------------------------------------------

    def zero_elem(self) -> "AlgElem":
        return AlgElem(self, {})

    def unit(self) -> "AlgElem":
        return AlgElem(self, {(0, 0, 0): self.field.one})

    def monomial(self, m, n, lh, coeff=None) -> "AlgElem":
        """E^m F^n K^(lh/2); lh in half-units mod 4p."""
        if not (0 <= m < self.p and 0 <= n < self.p):
            return self.zero_elem()
        c = coeff if coeff is not None else self.field.one
        if not c:
            return self.zero_elem()
        return AlgElem(self, {(m, n, lh % (4 * self.p)): c})

    @property
    def E(self):
        return self.monomial(1, 0, 0)

    @property
    def F(self):
        return self.monomial(0, 1, 0)

    def K_pow(self, lh) -> "AlgElem":
        """K^(lh/2) for an integer lh (so K itself is K_pow(2))."""
        return self.monomial(0, 0, lh)

    @property
    def K(self):
        return self.K_pow(2)

    @property
    def K_inv(self):
        return self.K_pow(-2)

    @property
    def K_half(self):
        return self.K_pow(1)

    @property
    def pivot(self) -> "AlgElem":
        return self.K_pow(2 * (self.p + 1))

    def casimir(self) -> "AlgElem":
        F = self.field
        qh2 = (F.qhat * F.qhat).inverse()
        return (self.F * self.E
                + qh2 * (F.q * self.K + F.q_pow(-1) * self.K_inv))

    def from_pbw_vector(self, values) -> "AlgElem":
        terms = {}
        for mon, c in zip(self.basis, values):
            if c:
                terms[(mon[0], mon[1], 2 * mon[2])] = c
        return AlgElem(self, terms)

    # -- normal ordering -------------------------------------------------

    def _fe_reorder(self, n, m):
        """F^n E^m in normal order, as {(a, b, c): coeff} with K-exponent c
        in full units (can be negative; not yet reduced mod 2p)."""
        key = (n, m)
        if key in self._fe_cache:
            return self._fe_cache[key]
        F = self.field
        if n == 0 or m == 0:
            out = {(m, n, 0): F.one}
        elif n == 1:
            # F E^m = E(F E^{m-1}) - E^{m-1}(q^{2(m-1)}K - q^{-2(m-1)}K^-1)/qhat
            out = {}
            inner = self._fe_reorder(1, m - 1)
            for (a, b, c), coeff in inner.items():
                # E * E^a F^b K^c
                if a + 1 < self.p:
                    _accum(out, (a + 1, b, c), coeff)
            qh_inv = F.qhat.inverse()
            if m - 1 < self.p:
                _accum(out, (m - 1, 0, 1), -F.q_pow(2 * (m - 1)) * qh_inv)
                _accum(out, (m - 1, 0, -1), F.q_pow(-2 * (m - 1)) * qh_inv)
            out = {k: v for k, v in out.items() if v}
        else:
            # F^n E^m = F^{n-1} (F E^m)
            out = {}
            for (a, b, c), coeff in self._fe_reorder(1, m).items():
                for (a2, b2, c2), coeff2 in self._fe_reorder(n - 1, a).items():
                    # E^{a2} F^{b2} K^{c2} * F^b K^c
                    if b2 + b >= self.p:
                        continue
                    phase = self.field.q_pow(-2 * c2 * b)
                    _accum(out, (a2, b2 + b, c2 + c), coeff * coeff2 * phase)
            out = {k: v for k, v in out.items() if v}
        self._fe_cache[key] = out
        return out

    def _mono_product(self, mon1, coeff1, mon2, coeff2, acc):
        m1, n1, lh1 = mon1
        m2, n2, lh2 = mon2
        p = self.p
        F = self.field
        base = coeff1 * coeff2 * F.q_pow(lh1 * (m2 - n2))
        for (a, b, c), coeff in self._fe_reorder(n1, m2).items():
            if m1 + a >= p or b + n2 >= p:
                continue
            phase = F.q_pow(-2 * c * n2)
            lh = (lh1 + lh2 + 2 * c) % (4 * p)
            _accum(acc, (m1 + a, b + n2, lh), base * coeff * phase)

    # -- Hopf structure on monomials ------------------------------------

    def _mono_coproduct(self, mon):
        """Closed-formula coproduct of a PBW monomial, as a list of
        ((mon_left, mon_right), coeff)."""
        if mon in self._coproduct_cache:
            return self._coproduct_cache[mon]
        m, n, lh = mon
        F = self.field
        out = {}
        for i in range(m + 1):
            for j in range(n + 1):
                c = (F.q_pow(i * (m - i) + j * (n - j) - 2 * (m - i) * (n - j))
                     * F.q_binomial(m, i) * F.q_binomial(n, j))
                left = (m - i, j, (lh + 2 * (j - n)) % (4 * self.p))
                right = (i, n - j, (lh + 2 * (m - i)) % (4 * self.p))
                _accum(out, (left, right), c)
        out = [(k, v) for k, v in out.items() if v]
        self._coproduct_cache[mon] = out
        return out

    def _mono_antipode(self, mon) -> "AlgElem":
        if mon in self._antipode_cache:
            return self._antipode_cache[mon]
        m, n, lh = mon
        # S(E^m F^n K^{lh/2}) = K^{-lh/2} (-KF)^n (-EK^{-1})^m,
        # with -KF = -q^{-2} F K in normal order.
        sE = self.monomial(1, 0, -2, -self.field.one)
        sF = self.monomial(0, 1, 2, -self.field.q_pow(-2))
        acc = self.K_pow(-lh)
        for _ in range(n):
            acc = acc * sF
        for _ in range(m):
            acc = acc * sE
        self._antipode_cache[mon] = acc
        return acc


@lru_cache(maxsize=None)
def algebra(p: int) -> UqAlgebra:
    return UqAlgebra(p)


def _accum(acc, key, val):
    cur = acc.get(key)
    acc[key] = val if cur is None else cur + val


class AlgElem:
    """Element of the quantum group (or its K^(1/2)-extension)."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: UqAlgebra, terms):
        self.alg = alg
        self.terms = {k: v for k, v in terms.items() if v}

    def in_base_algebra(self) -> bool:
        return all(lh % 2 == 0 for (_, _, lh) in self.terms)

    # -- ring structure --------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, AlgElem):
            return other
        if isinstance(other, (int, CycNum)):
            c = (self.alg.field.from_int(other)
                 if isinstance(other, int) else other)
            return AlgElem(self.alg, {(0, 0, 0): c})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            _accum(out, k, v)
        return AlgElem(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgElem(self.alg, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, CycNum)):
            c = (self.alg.field.from_int(other)
                 if isinstance(other, int) else other)
            return AlgElem(self.alg, {k: v * c for k, v in self.terms.items()})
        if not isinstance(other, AlgElem):
            return NotImplemented
        acc = {}
        for mon1, c1 in self.terms.items():
            for mon2, c2 in other.terms.items():
                self.alg._mono_product(mon1, c1, mon2, c2, acc)
        return AlgElem(self.alg, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, CycNum)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.alg.unit()
        for _ in range(n):
            acc = acc * self
        return acc

    def inverse(self) -> "AlgElem":
        """Inverse computed through the regular representation (the element
        must lie in the non-extended algebra)."""
        from .linalg import ExactMatrix
        alg = self.alg
        if not self.in_base_algebra():
            raise ValueError("inverse implemented on the base algebra only")
        mat = _left_multiplication_matrix(self)
        rows = [[alg.field.zero] for _ in range(alg.dim)]
        rows[alg.basis_index[(0, 0, 0)]][0] = alg.field.one
        unit_col = ExactMatrix.from_rows(alg.field, rows)
        sol = mat.solve(unit_col)
        return alg.from_pbw_vector([sol.entry(i, 0) for i in range(alg.dim)])

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    # -- Hopf operations -------------------------------------------------

    def coproduct(self) -> "TensorElem":
        from .tensor import TensorElem
        acc = {}
        for mon, c in self.terms.items():
            for (pair, c2) in self.alg._mono_coproduct(mon):
                _accum(acc, pair, c * c2)
        return TensorElem(self.alg, acc)

    def antipode(self) -> "AlgElem":
        out = self.alg.zero_elem()
        for mon, c in self.terms.items():
            out = out + c * self.alg._mono_antipode(mon)
        return out

    def antipode_inv(self) -> "AlgElem":
        # S^2 = conjugation by the pivot, so S^-1 = g^-1 S(.) g.
        g, ginv = self.alg.pivot, self.alg.K_pow(-2 * (self.alg.p + 1))
        return ginv * self.antipode() * g

    def counit(self) -> CycNum:
        acc = self.alg.field.zero
        for (m, n, _), c in self.terms.items():
            if m == 0 and n == 0:
                acc = acc + c
        return acc

    def pbw_vector(self):
        """Coefficient vector over the non-extended PBW basis."""
        alg = self.alg
        vec = [alg.field.zero] * alg.dim
        for (m, n, lh), c in self.terms.items():
            if lh % 2:
                raise ValueError("element lies outside the base algebra")
            vec[alg.basis_index[(m, n, lh // 2)]] = c
        return vec

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (m, n, lh), c in sorted(self.terms.items()):
            word = "".join(
                ([f"E^{m}"] if m else []) + ([f"F^{n}"] if n else [])
                + ([f"K^{lh}/2"] if lh else [])) or "1"
            bits.append(f"({c!r})*{word}")
        return " + ".join(bits)


def _left_multiplication_matrix(x: AlgElem):
    from .linalg import ExactMatrix
    alg = x.alg
    fld = alg.field
    cols = []
    for (m, n, l) in alg.basis:
        prod = x * alg.monomial(m, n, 2 * l)
        cols.append(prod.pbw_vector())
    rows = [[cols[j][i] for j in range(alg.dim)] for i in range(alg.dim)]
    return ExactMatrix.from_rows(fld, rows)


# -- integrals ------------------------------------------------------------


def integral_normalization(alg: UqAlgebra) -> CycNum:
    """zeta = (-1)^(p-1) * 2p * [p-1]!^2."""
    F = alg.field
    fac = F.q_factorial(alg.p - 1)
    sign = 1 if (alg.p - 1) % 2 == 0 else -1
    return sign * 2 * alg.p * fac * fac


def integral_right(x: AlgElem) -> CycNum:
    """Right integral; on F^m E^n K^j it is zeta * delta_{m,p-1} delta_{n,p-1}
    delta_{j,p+1} (the statement transports verbatim to the E-F-K order
    because reordering only produces terms of strictly smaller bidegree)."""
    alg = x.alg
    p = alg.p
    zeta = integral_normalization(alg)
    acc = alg.field.zero
    for (m, n, lh), c in x.terms.items():
        if lh % 2:
            raise ValueError("integral defined on the base algebra")
        if m == p - 1 and n == p - 1 and lh // 2 == p + 1:
            acc = acc + zeta * c
    return acc


def integral_left(x: AlgElem) -> CycNum:
    """mu^l = mu^r(g^2 ?), and g^2 = K^(2p+2) = K^2."""
    return integral_right(x.alg.K * x)


# -- linear forms on the base algebra -------------------------------------


class DualForm:
    """Linear form on the base algebra, stored by its values on the PBW
    basis (lexicographic in (m, n, l))."""

    __slots__ = ("alg", "values")

    def __init__(self, alg: UqAlgebra, values):
        self.alg = alg
        vals = list(values)
        if len(vals) != alg.dim:
            raise ValueError("value vector has wrong length")
        self.values = vals

    @classmethod
    def from_function(cls, alg, fn):
        return cls(alg, [fn(m, n, l) for (m, n, l) in alg.basis])

    @classmethod
    def counit(cls, alg):
        return cls.from_function(
            alg, lambda m, n, l: alg.field.one if m == n == 0 else alg.field.zero)

    @classmethod
    def zero(cls, alg):
        return cls(alg, [alg.field.zero] * alg.dim)

    def evaluate(self, x: AlgElem) -> CycNum:
        acc = self.alg.field.zero
        for (m, n, lh), c in x.terms.items():
            if lh % 2:
                raise ValueError("forms live on the base algebra")
            acc = acc + c * self.values[self.alg.basis_index[(m, n, lh // 2)]]
        return acc

    # -- vector space ops ------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, DualForm):
            return NotImplemented
        return DualForm(self.alg, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return DualForm(self.alg, [-a for a in self.values])

    def scale(self, c) -> "DualForm":
        return DualForm(self.alg, [a * c for a in self.values])

    def __eq__(self, other):
        if not isinstance(other, DualForm):
            return NotImplemented
        return all(a == b for a, b in zip(self.values, other.values))

    def __hash__(self):
        return None

    def is_zero(self):
        return all(v.is_zero() for v in self.values)

    # -- dual Hopf algebra ------------------------------------------------

    def __mul__(self, other):
        """Dual product: (phi psi)(x) = (phi ox psi)(Delta x)."""
        if isinstance(other, (int, CycNum)):
            return self.scale(other)
        if not isinstance(other, DualForm):
            return NotImplemented
        alg = self.alg
        out = [alg.field.zero] * alg.dim
        for idx, (m, n, l) in enumerate(alg.basis):
            acc = alg.field.zero
            for ((m1, n1, lh1), (m2, n2, lh2)), c in alg._mono_coproduct((m, n, 2 * l)):
                a = self.values[alg.basis_index[(m1, n1, lh1 // 2)]]
                if not a:
                    continue
                b = other.values[alg.basis_index[(m2, n2, lh2 // 2)]]
                if not b:
                    continue
                acc = acc + c * a * b
            out[idx] = acc
        return DualForm(alg, out)

    __rmul__ = __mul__

    def antipode(self) -> "DualForm":
        alg = self.alg
        out = []
        for (m, n, l) in alg.basis:
            out.append(self.evaluate(alg._mono_antipode((m, n, 2 * l))))
        return DualForm(alg, out)

    def shift(self, z: AlgElem) -> "DualForm":
        """phi(z ?) for a fixed element z."""
        alg = self.alg
        return DualForm(alg, [self.evaluate(z * alg.monomial(m, n, 2 * l))
                              for (m, n, l) in alg.basis])

    def shift_right(self, z: AlgElem) -> "DualForm":
        """phi(? z)."""
        alg = self.alg
        return DualForm(alg, [self.evaluate(alg.monomial(m, n, 2 * l) * z)
                              for (m, n, l) in alg.basis])

    def is_symmetric(self) -> bool:
        """phi(xy) = phi(yx) on generator pairs (enough by derivation)."""
        alg = self.alg
        gens = [alg.E, alg.F, alg.K]
        for (m, n, l) in alg.basis:
            x = alg.monomial(m, n, 2 * l)
            for gen in gens:
                if self.evaluate(x * gen) != self.evaluate(gen * x):
                    return False
        return True

    def to_json(self):
        return [v.to_json() for v in self.values]

    def __repr__(self):
        return f"DualForm(p={self.alg.p})"


def mu_right(alg: UqAlgebra) -> DualForm:
    zeta = integral_normalization(alg)
    p = alg.p
    return DualForm.from_function(
        alg, lambda m, n, l: zeta if (m, n, l) == (p - 1, p - 1, p + 1)
        else alg.field.zero)


def mu_left(alg: UqAlgebra) -> DualForm:
    # g^2 = K^(2p+2) = K^2
    return mu_right(alg).shift(alg.K * alg.K)
