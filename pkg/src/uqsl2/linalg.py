"""Dense exact matrices over Q(zeta_{4p}).

An ``ExactMatrix`` stores one integer numerator cube of shape (rows, cols,
degree) plus a single positive denominator.  Addition and multiplication act
on the integer layers (one layer per power of zeta), with a numpy int64 fast
path when magnitude bounds allow and a Python big-int fallback otherwise.

Rank certificates for large matrices go through reduction modulo a prime
that splits the cyclotomic polynomial; full rank mod the prime is a proof of
full rank over the field.
"""

from __future__ import annotations

import math

import numpy as np

from .cyclo import CycNum, CyclotomicField

_INT64_LIMIT = 2**62


def _gcd_reduce(arr, den: int) -> tuple:
    g = den
    for v in arr.flat:
        if v:
            g = math.gcd(g, int(v))
        if g == 1:
            return arr, den
    if g > 1:
        arr = arr // g
        den //= g
    return arr, den


class ExactMatrix:
    """Matrix over Q(zeta_{4p}) with exact layered integer storage."""

    __slots__ = ("field", "data", "den", "shape")

    def __init__(self, fld: CyclotomicField, data, den: int = 1, reduce=True):
        self.field = fld
        arr = np.asarray(data, dtype=object)
        if arr.ndim != 3 or arr.shape[2] != fld.degree:
            raise ValueError("data must have shape (rows, cols, degree)")
        if den < 0:
            arr = -arr
            den = -den
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if reduce and den != 1:
            arr, den = _gcd_reduce(arr, den)
        self.data = arr
        self.den = den
        self.shape = (arr.shape[0], arr.shape[1])

    # -- constructors ----------------------------------------------------

    @classmethod
    def zeros(cls, fld, rows, cols):
        return cls(fld, np.zeros((rows, cols, fld.degree), dtype=object))

    @classmethod
    def identity(cls, fld, n):
        data = np.zeros((n, n, fld.degree), dtype=object)
        for i in range(n):
            data[i, i, 0] = 1
        return cls(fld, data)

    @classmethod
    def from_rows(cls, fld, rows):
        """Build from nested lists of CycNum (or ints)."""
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        data = np.zeros((nr, nc, fld.degree), dtype=object)
        den = 1
        entries = []
        for row in rows:
            ents = []
            for e in row:
                if not isinstance(e, CycNum):
                    e = fld.from_int(e) if isinstance(e, int) else fld.from_fraction(e)
                ents.append(e)
                den = den * e.den // math.gcd(den, e.den)
            entries.append(ents)
        for i, row in enumerate(entries):
            for j, e in enumerate(row):
                scale = den // e.den
                for k, c in enumerate(e.nums):
                    data[i, j, k] = c * scale
        return cls(fld, data, den)

    @classmethod
    def scalar(cls, fld, n, value: CycNum):
        return cls.identity(fld, n) * value

    # -- entry access ----------------------------------------------------

    def entry(self, i, j) -> CycNum:
        return CycNum(self.field, tuple(int(c) for c in self.data[i, j]), self.den)

    def rows_as_cyc(self):
        return [[self.entry(i, j) for j in range(self.shape[1])]
                for i in range(self.shape[0])]

    def is_zero(self) -> bool:
        return not self.data.any()

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        self._check(other)
        if self.den == other.den:
            return ExactMatrix(self.field, self.data + other.data, self.den)
        return ExactMatrix(self.field,
                           self.data * other.den + other.data * self.den,
                           self.den * other.den)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ExactMatrix(self.field, -self.data, self.den, reduce=False)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.den == other.den and self.shape == other.shape
                and bool((self.data == other.data).all()))

    def __hash__(self):
        return None

    def __mul__(self, scalar):
        if isinstance(scalar, int):
            return ExactMatrix(self.field, self.data * scalar, self.den)
        if not isinstance(scalar, CycNum):
            return NotImplemented
        d = self.field.degree
        table = self.field._pow_table
        out = np.zeros(self.data.shape[:2] + (2 * d - 1,), dtype=object)
        for k, c in enumerate(scalar.nums):
            if c:
                out[:, :, k : k + d] += self.data * c
        reduced = np.array(out[:, :, :d])
        for k in range(d, 2 * d - 1):
            layer = out[:, :, k]
            if layer.any():
                row = table[k]
                for j in range(d):
                    if row[j]:
                        reduced[:, :, j] += layer * row[j]
        return ExactMatrix(self.field, reduced, self.den * scalar.den)

    __rmul__ = __mul__

    def __matmul__(self, other):
        self._check_field(other)
        if self.shape[1] != other.shape[0]:
            raise ValueError("shape mismatch in matrix product")
        d = self.field.degree
        a, b = self.data, other.data
        n, m = self.shape[0], other.shape[1]
        out = [None] * (2 * d - 1)
        maxa = max((abs(int(v)) for v in a.flat), default=0)
        maxb = max((abs(int(v)) for v in b.flat), default=0)
        fits = maxa * maxb * self.shape[1] * d < _INT64_LIMIT
        if fits:
            a_l = [a[:, :, k].astype(np.int64) for k in range(d)]
            b_l = [b[:, :, k].astype(np.int64) for k in range(d)]
        else:
            a_l = [a[:, :, k] for k in range(d)]
            b_l = [b[:, :, k] for k in range(d)]
        for i in range(d):
            if not a_l[i].any():
                continue
            for j in range(d):
                if not b_l[j].any():
                    continue
                prod = a_l[i] @ b_l[j]
                if out[i + j] is None:
                    out[i + j] = prod
                else:
                    out[i + j] = out[i + j] + prod
        table = self.field._pow_table
        data = np.zeros((n, m, d), dtype=object)
        for k in range(2 * d - 1):
            layer = out[k]
            if layer is None:
                continue
            if k < d:
                data[:, :, k] += layer
            else:
                row = table[k]
                for j in range(d):
                    if row[j]:
                        data[:, :, j] += layer * row[j]
        return ExactMatrix(self.field, data, self.den * other.den)

    def kron(self, other) -> "ExactMatrix":
        """Tensor (Kronecker) product."""
        self._check_field(other)
        d = self.field.degree
        n1, m1 = self.shape
        n2, m2 = other.shape
        data = np.zeros((n1 * n2, m1 * m2, d), dtype=object)
        # Layer-wise convolution of the zeta powers.
        table = self.field._pow_table
        for k1 in range(d):
            a = self.data[:, :, k1]
            if not a.any():
                continue
            for k2 in range(d):
                b = other.data[:, :, k2]
                if not b.any():
                    continue
                block = np.kron(a, b)
                k = k1 + k2
                if k < d:
                    data[:, :, k] += block
                else:
                    row = table[k]
                    for j in range(d):
                        if row[j]:
                            data[:, :, j] += block * row[j]
        return ExactMatrix(self.field, data, self.den * other.den)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.field, self.data.transpose(1, 0, 2),
                           self.den, reduce=False)

    def trace(self) -> CycNum:
        acc = self.field.zero
        for i in range(min(self.shape)):
            acc = acc + self.entry(i, i)
        return acc

    # -- exact elimination ----------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (rows of CycNum, pivot cols)."""
        rows = self.rows_as_cyc()
        nr, nc = self.shape
        pivots = []
        r = 0
        for c in range(nc):
            piv = next((i for i in range(r, nr) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = [v * inv for v in rows[r]]
            for i in range(nr):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == nr:
                break
        return rows, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> "ExactMatrix":
        """Basis of the right kernel, returned as columns of a matrix."""
        rows, pivots = self.rref()
        nc = self.shape[1]
        free = [c for c in range(nc) if c not in pivots]
        fld = self.field
        cols = []
        for fc in free:
            vec = [fld.zero] * nc
            vec[fc] = fld.one
            for r, pc in enumerate(pivots):
                vec[pc] = -rows[r][fc]
            cols.append(vec)
        if not cols:
            return ExactMatrix.zeros(fld, nc, 0)
        return ExactMatrix.from_rows(fld, [[col[i] for col in cols]
                                           for i in range(nc)])

    def inverse(self) -> "ExactMatrix":
        n = self.shape[0]
        if self.shape[1] != n:
            raise ValueError("inverse of a non-square matrix")
        aug = ExactMatrix(self.field,
                          np.concatenate([self.data,
                                          ExactMatrix.identity(self.field, n).data
                                          * self.den], axis=1),
                          self.den)
        rows, pivots = aug.rref()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return ExactMatrix.from_rows(self.field,
                                     [row[n:] for row in rows[:n]])

    def solve(self, rhs: "ExactMatrix") -> "ExactMatrix":
        """Solve self @ X = rhs (self square and invertible)."""
        return self.inverse() @ rhs

    def solve_tall(self, rhs: "ExactMatrix") -> "ExactMatrix":
        """Solve self @ X = rhs for a (possibly tall) matrix of full column
        rank; raises if the system is inconsistent."""
        self._check_field(rhs)
        if self.shape[0] != rhs.shape[0]:
            raise ValueError("shape mismatch")
        nc = self.shape[1]
        srows = self.rows_as_cyc()
        rrows = rhs.rows_as_cyc()
        aug = ExactMatrix.from_rows(self.field,
                                    [a + b for a, b in zip(srows, rrows)])
        rows, pivots = aug.rref()
        if any(pc >= nc for pc in pivots):
            raise ValueError("inconsistent system")
        if pivots != list(range(nc)):
            raise ValueError("matrix does not have full column rank")
        return ExactMatrix.from_rows(self.field, [row[nc:] for row in rows[:nc]])

    # -- modular certificates --------------------------------------------

    def rank_mod_prime(self) -> int:
        """Rank of the reduction modulo a split prime (a lower bound on the
        true rank; equality when the result is full)."""
        fld = self.field
        ell, root = _split_prime(fld)
        den_inv = pow(self.den % ell, ell - 2, ell)
        d = fld.degree
        powers = [pow(root, k, ell) for k in range(d)]
        red = np.zeros(self.shape, dtype=np.int64)
        for k in range(d):
            layer = self.data[:, :, k]
            if layer.any():
                vals = np.vectorize(lambda v: (int(v) % ell), otypes=[np.int64])(layer)
                red = (red + vals * powers[k]) % ell
        red = (red * den_inv) % ell
        return _rank_mod(red, ell)

    # -- misc -------------------------------------------------------------

    def _check(self, other):
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")

    def _check_field(self, other):
        if not isinstance(other, ExactMatrix) or other.field is not self.field:
            raise TypeError("operands must share a field context")

    def to_json(self):
        return {
            "rows": self.shape[0],
            "cols": self.shape[1],
            "entries": [[self.entry(i, j).to_json()
                         for j in range(self.shape[1])]
                        for i in range(self.shape[0])],
        }

    def __repr__(self):
        return f"ExactMatrix({self.shape[0]}x{self.shape[1]}, p={self.field.p})"


def _split_prime(fld: CyclotomicField, start: int = 1_000_003):
    """A prime ell = 1 mod 4p together with a primitive 4p-th root mod ell."""
    n = fld.order
    ell = start + ((1 - start) % n)
    while True:
        if _is_prime(ell):
            g = _primitive_root_candidate(ell, n)
            if g is not None:
                return ell, g
        ell += n


def _primitive_root_candidate(ell, n):
    for g in range(2, 200):
        r = pow(g, (ell - 1) // n, ell)
        # r has order dividing n; require exact order n.
        ok = all(pow(r, n // pf, ell) != 1 for pf in _prime_factors(n))
        if ok:
            return r
    return None


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_prime(n):
    if n < 2:
        return False
    for w in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % w == 0:
            return n == w
        d, s = n - 1, 0
        while d % 2 == 0:
            d //= 2
            s += 1
        x = pow(w, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rank_mod(mat: np.ndarray, ell: int) -> int:
    a = mat % ell
    nr, nc = a.shape
    rank = 0
    for c in range(nc):
        piv = None
        for r in range(rank, nr):
            if a[r, c]:
                piv = r
                break
        if piv is None:
            continue
        a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), ell - 2, ell)
        a[rank] = (a[rank] * inv) % ell
        col = a[:, c].copy()
        col[rank] = 0
        a = (a - np.outer(col, a[rank])) % ell
        rank += 1
        if rank == nr:
            break
    return rank
