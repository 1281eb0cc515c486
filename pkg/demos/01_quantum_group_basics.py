"""Tour of the restricted quantum group at a 2p-th root of unity.

Builds the algebra for p = 3, prints its PBW structure, and spot-checks
the Hopf operations and the closed coproduct formula on a monomial.
Everything is exact: scalars live in the cyclotomic field Q(zeta_{4p}).
"""

from uqsl2 import algebra
from uqsl2.tensor import TensorElem

p = 3
alg = algebra(p)
F = alg.field

print(f"restricted quantum group at p = {p}")
print(f"  dimension: {alg.dim} = 2p^3")
print(f"  q = zeta^2 with zeta a primitive {4 * p}-th root of unity")
print(f"  qhat = q - q^-1 = {F.qhat!r}")
print(f"  quantum integers: " +
      ", ".join(f"[{n}] = {F.q_int(n)!r}" for n in range(1, p + 1)))
print()

E, Fg, K = alg.E, alg.F, alg.K
print("defining relations:")
print("  K E K^-1 = q^2 E :", K * E == E * K * F.q_pow(2))
print("  [E, F] = (K - K^-1)/qhat :",
      E * Fg - Fg * E == (alg.K_pow(2) - alg.K_pow(-2)) * F.qhat.inverse())
print(f"  E^p = F^p = 0 :", (E ** p).is_zero() and (Fg ** p).is_zero())
print()

x = alg.monomial(1, 2, 2)
print(f"Hopf operations on the monomial E F^2 K:")
print(f"  counit: {x.counit()!r}")
print(f"  coproduct terms: {len(list(x.coproduct().legs()))}")
dx = x.coproduct()
closed = (E.coproduct() * (Fg.coproduct() * Fg.coproduct())
          * K.coproduct())
print("  closed formula == Delta(E) Delta(F)^2 Delta(K):", dx == closed)
print("  counit axiom:", dx.counit_left() == x and dx.counit_right() == x)

s2 = x.antipode().antipode()
g = alg.pivot
print("  S^2 = conjugation by the pivot K^{p+1}:",
      s2 == g * x * alg.K_pow(-2 * (p + 1)))
