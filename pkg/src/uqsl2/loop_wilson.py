"""Loop words on a punctured genus-g surface, their normalization and
lifts, and the Wilson loop operators.

A simple loop in the fundamental group is written as a reduced word in
the handle generators b_i, a_i.  The normalization N counts, through a
fixed gate layout, the caps and cups that run against the preferred
direction of the surface; it fixes the power of the ribbon element in
the lift.  Wilson loops are quantum traces of lifts and act on the
tensor powers of the dual space.
"""

from __future__ import annotations

import re

from .linalg import ExactMatrix
from .uq_algebra import UqAlgebra
from .ribbon import ribbon_value
from .handle_rep import (BlockOp, HdOperator, lgn_op, quantum_trace,
                         _torus_data)


class LoopWord:
    """Reduced word in the generators b_1, a_1, ..., b_g, a_g.

    The orientation flag records whether the loop is positively or
    negatively oriented on the surface; simplicity of the underlying
    curve is asserted by the caller (the named constructors below build
    the standard simple loops).
    """

    __slots__ = ("genus", "letters", "orientation", "simple_asserted")

    def __init__(self, genus, letters, orientation=1, simple_asserted=False):
        if genus < 1:
            raise ValueError("genus must be at least 1")
        if orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")
        reduced = []
        for gen, idx, exp in letters:
            if gen not in ("b", "a"):
                raise ValueError(f"unknown generator {gen!r}")
            if not 1 <= idx <= genus:
                raise ValueError(f"generator index {idx} out of range "
                                 f"for genus {genus}")
            if exp not in (1, -1):
                raise ValueError("exponents must be +1 or -1")
            if reduced and reduced[-1][:2] == (gen, idx) \
                    and reduced[-1][2] == -exp:
                reduced.pop()
            else:
                reduced.append((gen, idx, exp))
        self.genus = genus
        self.letters = tuple(reduced)
        self.orientation = orientation
        self.simple_asserted = simple_asserted

    def __eq__(self, other):
        if not isinstance(other, LoopWord):
            return NotImplemented
        return (self.genus == other.genus and self.letters == other.letters
                and self.orientation == other.orientation)

    def __hash__(self):
        return hash((self.genus, self.letters, self.orientation))

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> "LoopWord":
        return LoopWord(self.genus,
                        [(g, i, -e) for (g, i, e) in reversed(self.letters)],
                        -self.orientation, self.simple_asserted)

    def __mul__(self, other):
        if self.genus != other.genus:
            raise ValueError("words live on different surfaces")
        return LoopWord(self.genus, self.letters + other.letters,
                        self.orientation, False)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"{g}{i}" + ("" if e == 1 else "^-1")
                        for (g, i, e) in self.letters)

    def __repr__(self):
        return f"LoopWord({str(self)!r}, g={self.genus})"


_TOKEN = re.compile(r"([ba])(\d+)(\^(-1|1))?$")


def parse_loop(text: str, g: int) -> LoopWord:
    """Parse a loop word such as "b1 a1^-1 b1^-1"; the result is freely
    reduced and must be non-empty."""
    letters = []
    toks = text.split()
    if not toks:
        raise ValueError("empty loop word")
    for tok in toks:
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"unknown token {tok!r}")
        letters.append((m.group(1), int(m.group(2)),
                        int(m.group(4)) if m.group(4) else 1))
    w = LoopWord(g, letters)
    if not w.letters:
        raise ValueError("loop word reduces to the empty word")
    return w


def trivial_loop(g: int) -> LoopWord:
    """The contractible loop."""
    return LoopWord(g, [], simple_asserted=True)


def loop_b(g: int, i: int = 1) -> LoopWord:
    return LoopWord(g, [("b", i, 1)], simple_asserted=True)


def loop_a(g: int, i: int = 1) -> LoopWord:
    return LoopWord(g, [("a", i, 1)], simple_asserted=True)


def loop_d(g: int, i: int) -> LoopWord:
    """d_1 = b1 a1^-1 b1^-1 and d_i = a_{i-1} b_i a_i^-1 b_i^-1."""
    letters = [] if i == 1 else [("a", i - 1, 1)]
    letters += [("b", i, 1), ("a", i, -1), ("b", i, -1)]
    return LoopWord(g, letters, simple_asserted=True)


def loop_e(g: int, i: int) -> LoopWord:
    letters = []
    for j in range(1, i):
        letters += [("b", j, 1), ("a", j, -1), ("b", j, -1), ("a", j, 1)]
    letters += [("b", i, 1), ("a", i, -1), ("b", i, -1)]
    return LoopWord(g, letters, simple_asserted=True)


def loop_s(g: int, i: int) -> LoopWord:
    letters = loop_e(g, i).letters + (("a", i, 1),)
    return LoopWord(g, list(letters), simple_asserted=True)


def loop_c(g: int) -> LoopWord:
    """The boundary loop of the surface."""
    return loop_s(g, g)


def loop_binva(g: int) -> LoopWord:
    """b^-1 a, whose lift is v B^-1 A."""
    return LoopWord(g, [("b", 1, -1), ("a", 1, 1)], simple_asserted=True)


# -- normalization -------------------------------------------------------

def _gates(letter):
    """Entry and exit gates of one traversed handle generator.  Handle i
    carries four gates 4i-3..4i; the b-loop runs 4i-3 -> 4i-1 and the
    a-loop runs 4i-2 -> 4i, reversed for inverse letters."""
    gen, idx, exp = letter
    base = 4 * (idx - 1)
    if gen == "b":
        enter, leave = base + 1, base + 3
    else:
        enter, leave = base + 2, base + 4
    return (enter, leave) if exp == 1 else (leave, enter)


def normalization_N(w: LoopWord, circle: bool = False) -> int:
    """The normalization of a simple loop (or, with circle=True, of its
    free homotopy class) from its gate sequence."""
    seq = []
    for letter in w.letters:
        seq.extend(_gates(letter))
    k = len(seq) // 2
    total = sum(1 for i in range(k) if seq[2 * i] > seq[2 * i + 1])
    gaps = k if circle else k - 1
    if circle and seq:
        seq = seq + [seq[0]]
    total -= sum(1 for i in range(gaps)
                 if seq[2 * i + 1] >= seq[2 * i + 2])
    return total


# -- lifts and Wilson loops ----------------------------------------------

_LETTER_OP = {("b", 1): "B", ("b", -1): "B^-1",
              ("a", 1): "A", ("a", -1): "A^-1"}


def lift_op(alg: UqAlgebra, w: LoopWord) -> BlockOp:
    """The lift of a simple loop in the fundamental representation, as a
    block operator on (H*)^(x g)."""
    if w.orientation == -1:
        return lift_op(alg, w.inverse()).inverse()
    g = w.genus
    out = BlockOp.identity(alg.field, 1, alg.dim ** g)
    for gen, idx, exp in w.letters:
        out = out @ lgn_op(alg, g, idx, _LETTER_OP[(gen, exp)])
    vf = ribbon_value(alg, 2)
    n = normalization_N(w)
    if n > 0:
        for _ in range(n):
            out = out.scale(vf)
    elif n < 0:
        vfi = vf.inverse()
        for _ in range(-n):
            out = out.scale(vfi)
    return out


def wilson_op(alg: UqAlgebra, w: LoopWord) -> HdOperator:
    """W(x) = tr_q of the lift of x."""
    return quantum_trace(alg, lift_op(alg, w))


def w_op(alg: UqAlgebra, which: str) -> HdOperator:
    """The basic torus Wilson operators W_A, W_B and W_BA = tr_q(BA)."""
    td = _torus_data(alg.p)
    if which in ("A", "B"):
        return quantum_trace(alg, td[which])
    if which == "BA":
        return quantum_trace(alg, td["B"] @ td["A"])
    raise ValueError(f"unknown Wilson label {which!r}")


# -- Chebyshev powers ----------------------------------------------------

MAX_POWER = 64


def _chebyshev_pair(x: ExactMatrix, n: int):
    """(R_n(x), R_{n-1}(x)) with R_0 = 0, R_1 = 1 and the three-term
    recurrence R_{n+1} = x R_n - R_{n-1}, extended to negative n."""
    F = x.field
    dim = x.shape[0]
    zero = ExactMatrix.zeros(F, dim, dim)
    one = ExactMatrix.identity(F, dim)
    prev, cur = zero, one  # R_0, R_1
    if n >= 1:
        for _ in range(n - 1):
            prev, cur = cur, x @ cur - prev
        return cur, prev
    # walk the recurrence downward from (R_1, R_0)
    cur, nxt = zero, one  # R_0, R_1
    for _ in range(1 - n):
        cur, nxt = x @ cur - nxt, cur  # R_{m-1} from (R_m, R_{m+1})
    return nxt, cur


def m_power_identity(alg: UqAlgebra, which: str, n: int) -> bool:
    """Check M^n = (-1)^(n+1) q^(-n+1) R_n(W_M) M
    + (-1)^(n+1) q^(-n) R_(n-1)(W_M) as an operator identity."""
    if abs(n) > MAX_POWER:
        raise ValueError("power out of range")
    td = _torus_data(alg.p)
    if which not in ("A", "B"):
        raise ValueError("which must be 'A' or 'B'")
    m = td[which]
    minv = td[which + "^-1"]
    F = alg.field
    lhs = BlockOp.identity(F, 1, alg.dim)
    base = m if n >= 0 else minv
    for _ in range(abs(n)):
        lhs = lhs @ base
    w = quantum_trace(alg, m).matrix
    rn, rn1 = _chebyshev_pair(w, n)
    sign = F.one if (n + 1) % 2 == 0 else -F.one
    cm = rn * (sign * F.q_pow(-n + 1))
    ci = rn1 * (sign * F.q_pow(-n))
    rhs_blocks = {k: cm @ blk for k, blk in m.blocks.items()}
    for u in (0, 1):
        key = ((u,), (u,))
        cur = rhs_blocks.get(key)
        rhs_blocks[key] = ci if cur is None else cur + ci
    return lhs == BlockOp(F, 1, alg.dim, rhs_blocks)


# -- membership in the Wilson algebra ------------------------------------

def in_wilson_algebra(alg: UqAlgebra, op: HdOperator,
                      degree: int) -> bool:
    """Does the operator lie in the unital algebra generated by W_A and
    W_B, using monomials up to the given degree?"""
    wa = w_op(alg, "A").matrix
    wb = w_op(alg, "B").matrix
    n = alg.dim
    mons = [ExactMatrix.identity(alg.field, n)]
    layer = [mons[0]]
    for _ in range(degree):
        nxt = []
        for m in layer:
            nxt.append(m @ wa)
            nxt.append(m @ wb)
        mons.extend(nxt)
        layer = nxt

    def vec(m):
        return [m.entry(i, j) for i in range(n) for j in range(n)]

    base = ExactMatrix.from_rows(alg.field, [vec(m) for m in mons])
    with_op = ExactMatrix.from_rows(alg.field,
                                    [vec(m) for m in mons]
                                    + [vec(op.matrix)])
    return base.rank_mod_prime() == with_op.rank_mod_prime()
