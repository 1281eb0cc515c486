"""Exact arithmetic in the cyclotomic field Q(zeta), zeta = exp(i*pi/(2p)).

Every scalar in the package is a ``CycNum``: an integer coefficient vector
over the power basis 1, zeta, ..., zeta^(d-1) of Q(zeta_{4p}) together with a
single positive denominator, kept gcd-normalized.  The canonical form is
unique, so equality is plain coefficient comparison.

The field context (reduction tables, zeta powers) is cached per p in
``CyclotomicField``.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import sympy


class CyclotomicField:
    """Arithmetic context for Q(zeta_{4p}) with zeta = e^{i pi/(2p)}."""

    def __init__(self, p: int):
        if p < 2:
            raise ValueError("p must be at least 2")
        self.p = p
        self.order = 4 * p
        poly = sympy.Poly(sympy.cyclotomic_poly(self.order, sympy.Symbol("x")))
        coeffs = [int(c) for c in reversed(poly.all_coeffs())]
        self.degree = len(coeffs) - 1
        self._min_poly = coeffs
        self._pow_table = self._build_pow_table()
        self.zero = CycNum(self, (0,) * self.degree, 1)
        self.one = self.from_int(1)

    def _build_pow_table(self):
        # Integer coefficient vectors of zeta^k for 0 <= k < 4p (the minimal
        # polynomial is monic, so reduction never introduces denominators).
        d = self.degree
        table = []
        for k in range(self.order):
            if k < d:
                vec = [0] * d
                vec[k] = 1
            else:
                prev = table[k - 1]
                shifted = [0] + list(prev[: d - 1])
                lead = prev[d - 1]
                if lead:
                    for j in range(d):
                        shifted[j] -= lead * self._min_poly[j]
                vec = shifted
            table.append(tuple(vec))
        return table

    # -- constructors ----------------------------------------------------

    def from_int(self, n: int) -> "CycNum":
        vec = [0] * self.degree
        vec[0] = n
        return CycNum(self, tuple(vec), 1)

    def from_fraction(self, x) -> "CycNum":
        f = Fraction(x)
        vec = [0] * self.degree
        vec[0] = f.numerator
        return CycNum(self, tuple(vec), f.denominator)

    def zeta_pow(self, k: int) -> "CycNum":
        return CycNum(self, self._pow_table[k % self.order], 1)

    @property
    def q(self) -> "CycNum":
        return self.zeta_pow(2)

    @property
    def q_half(self) -> "CycNum":
        return self.zeta_pow(1)

    def q_pow(self, k) -> "CycNum":
        """q^k for integer k, or half-integer k given as Fraction with den 2."""
        f = Fraction(k)
        if f.denominator not in (1, 2):
            raise ValueError("exponent must be integer or half-integer")
        return self.zeta_pow(int(2 * f))

    @property
    def qhat(self) -> "CycNum":
        return self.q - self.q_pow(-1)

    # -- q-combinatorics -------------------------------------------------

    def q_int(self, n: int) -> "CycNum":
        """[n] = (q^n - q^-n)/(q - q^-1), exact (works for any integer n)."""
        if n == 0:
            return self.zero
        sign = 1 if n > 0 else -1
        n = abs(n)
        # [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}
        acc = self.zero
        for k in range(n - 1, -n, -2):
            acc = acc + self.q_pow(k)
        return acc if sign == 1 else -acc

    def q_factorial(self, n: int) -> "CycNum":
        if n < 0:
            raise ValueError("q-factorial of a negative integer")
        acc = self.one
        for k in range(2, n + 1):
            acc = acc * self.q_int(k)
        return acc

    def q_binomial(self, a: int, b: int) -> "CycNum":
        """Gaussian binomial [a; b] for 0 <= b <= a < p (exact quotient)."""
        if not 0 <= b <= a:
            return self.zero
        if a >= self.p:
            raise ValueError("q-binomial defined here only below p")
        num = self.q_factorial(a)
        den = self.q_factorial(b) * self.q_factorial(a - b)
        return num / den

    def numeric(self, x: "CycNum") -> complex:
        z = cmath.exp(1j * cmath.pi / (2 * self.p))
        acc = 0j
        for k, c in enumerate(x.nums):
            if c:
                acc += c * z**k
        return acc / x.den


@lru_cache(maxsize=None)
def field(p: int) -> CyclotomicField:
    return CyclotomicField(p)


class CycNum:
    """Element of Q(zeta_{4p}) in reduced power-basis form (immutable)."""

    __slots__ = ("field", "nums", "den")

    def __init__(self, fld: CyclotomicField, nums, den: int, _normalized=False):
        self.field = fld
        if _normalized:
            self.nums = nums
            self.den = den
            return
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            nums = tuple(-c for c in nums)
            den = -den
        g = den
        for c in nums:
            if c:
                g = math.gcd(g, c)
            if g == 1:
                break
        if g > 1:
            nums = tuple(c // g for c in nums)
            den //= g
        self.nums = tuple(nums)
        self.den = den

    # -- helpers ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycNum):
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Fraction):
            return self.field.from_fraction(other)
        return None

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(self.nums[0], self.den)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return CycNum(self.field,
                          tuple(a + b for a, b in zip(self.nums, o.nums)),
                          self.den)
        return CycNum(self.field,
                      tuple(a * o.den + b * self.den
                            for a, b in zip(self.nums, o.nums)),
                      self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.field, tuple(-c for c in self.nums), self.den,
                      _normalized=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        conv = [0] * (2 * d - 1)
        for i, a in enumerate(self.nums):
            if a:
                for j, b in enumerate(o.nums):
                    if b:
                        conv[i + j] += a * b
        out = list(conv[:d])
        table = self.field._pow_table
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = table[k]
                for j in range(d):
                    if row[j]:
                        out[j] += c * row[j]
        return CycNum(self.field, tuple(out), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        d = self.field.degree
        table = self.field._pow_table
        # Columns of M are the coefficient vectors of x * zeta^j.
        cols = []
        x = CycNum(self.field, self.nums, 1, _normalized=True)
        for j in range(d):
            prod = x * CycNum(self.field, table[j], 1, _normalized=True)
            cols.append([Fraction(c, prod.den) for c in prod.nums])
        m = [[cols[j][i] for j in range(d)] for i in range(d)]
        rhs = [Fraction(0)] * d
        rhs[0] = Fraction(1)
        sol = _solve_fraction(m, rhs)
        den_lcm = 1
        for f in sol:
            den_lcm = den_lcm * f.denominator // math.gcd(den_lcm, f.denominator)
        nums = tuple(int(f * den_lcm) for f in sol)
        # x/den inverted: multiply back by den.
        return CycNum(self.field, tuple(self.den * c for c in nums), den_lcm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conjugate(self) -> "CycNum":
        """Galois conjugation zeta -> zeta^{-1} (complex conjugation)."""
        fld = self.field
        acc = fld.zero
        for k, c in enumerate(self.nums):
            if c:
                acc = acc + c * fld.zeta_pow(-k)
        return CycNum(fld, acc.nums, acc.den * self.den)

    # -- comparisons / misc ---------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.nums == o.nums and self.den == o.den

    def __hash__(self):
        return hash((self.nums, self.den))

    def __bool__(self):
        return not self.is_zero()

    def numeric(self) -> complex:
        return self.field.numeric(self)

    def to_json(self):
        return [[c, self.den] for c in self.nums]

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.nums):
            if not c:
                continue
            base = str(c) if k == 0 else (f"{c}*z^{k}" if k > 1 else f"{c}*z")
            terms.append(base)
        body = " + ".join(terms) if terms else "0"
        if self.den != 1:
            return f"({body})/{self.den}"
        return body


def _solve_fraction(m, rhs):
    """Solve the square Fraction system m x = rhs by Gaussian elimination."""
    n = len(m)
    a = [row[:] + [rhs[i]] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ValueError("singular system")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]
