"""Elements of the tensor square of the quantum group (R-matrices live here)."""

from __future__ import annotations

from .cyclo import CycNum
from .uq_algebra import AlgElem, UqAlgebra, _accum


class TensorElem:
    """Finite sum of pure tensors over PBW monomial pairs."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: UqAlgebra, terms):
        self.alg = alg
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def from_pair(cls, x: AlgElem, y: AlgElem) -> "TensorElem":
        acc = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                _accum(acc, (m1, m2), c1 * c2)
        return cls(x.alg, acc)

    @classmethod
    def unit(cls, alg) -> "TensorElem":
        return cls(alg, {((0, 0, 0), (0, 0, 0)): alg.field.one})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            _accum(out, k, v)
        return TensorElem(self.alg, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElem(self.alg, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, CycNum)):
            c = (self.alg.field.from_int(other)
                 if isinstance(other, int) else other)
            return TensorElem(self.alg, {k: v * c for k, v in self.terms.items()})
        if not isinstance(other, TensorElem):
            return NotImplemented
        acc = {}
        tmp1, tmp2 = {}, {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                tmp1.clear()
                self.alg._mono_product(a1, self.alg.field.one, a2,
                                       self.alg.field.one, tmp1)
                tmp2.clear()
                self.alg._mono_product(b1, self.alg.field.one, b2,
                                       self.alg.field.one, tmp2)
                c = c1 * c2
                for mon1, d1 in tmp1.items():
                    if not d1:
                        continue
                    for mon2, d2 in tmp2.items():
                        if d2:
                            _accum(acc, (mon1, mon2), c * d1 * d2)
        return TensorElem(self.alg, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return None

    def is_zero(self):
        return not self.terms

    def flip(self) -> "TensorElem":
        return TensorElem(self.alg, {(b, a): c for (a, b), c in self.terms.items()})

    def map_legs(self, f1=None, f2=None) -> "TensorElem":
        """Apply algebra maps (AlgElem -> AlgElem) to the legs."""
        acc = {}
        alg = self.alg
        for (a, b), c in self.terms.items():
            xa = f1(_mono_elem(alg, a)) if f1 else _mono_elem(alg, a)
            xb = f2(_mono_elem(alg, b)) if f2 else _mono_elem(alg, b)
            for m1, d1 in xa.terms.items():
                for m2, d2 in xb.terms.items():
                    _accum(acc, (m1, m2), c * d1 * d2)
        return TensorElem(alg, acc)

    def counit_left(self) -> AlgElem:
        out = self.alg.zero_elem()
        for ((m, n, _lh), mon2), c in self.terms.items():
            if m == 0 and n == 0:
                out = out + c * _mono_elem(self.alg, mon2)
        return out

    def counit_right(self) -> AlgElem:
        return self.flip().counit_left()

    def legs(self):
        """Iterate (coeff, left AlgElem monomial, right AlgElem monomial)."""
        for (a, b), c in self.terms.items():
            yield c, _mono_elem(self.alg, a), _mono_elem(self.alg, b)

    def contract_left(self, form) -> AlgElem:
        """(form ox id)(self) for a linear form on the base algebra."""
        out = self.alg.zero_elem()
        for (a, b), c in self.terms.items():
            val = form.evaluate(_mono_elem(self.alg, a))
            if val:
                out = out + (c * val) * _mono_elem(self.alg, b)
        return out

    def contract_right(self, form) -> AlgElem:
        return self.flip().contract_left(form)

    def in_base_algebra(self) -> bool:
        return all(a[2] % 2 == 0 and b[2] % 2 == 0 for (a, b) in self.terms)

    def __repr__(self):
        return f"TensorElem({len(self.terms)} terms, p={self.alg.p})"


def _mono_elem(alg, mon):
    return AlgElem(alg, {mon: alg.field.one})
