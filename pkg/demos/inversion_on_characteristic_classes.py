"""The mod-2 characteristic algebra of commutative plane-bundle structures
and the action of pointwise inversion on it.

Besides the two Stiefel-Whitney generators the algebra carries a degree-2
class r killed by w1 and by itself, and a degree-3 class s.  Inversion
fixes everything except w2, which it shifts by r; the difference class
a2 = w2 + (inverted w2) is therefore r, restricts to zero on every
algebraic structure, and is the obstruction the surface computations use.
"""

from kocom.bcom_o2 import (
    RANK2_LINE,
    RANK2_RANK2,
    a2_class,
    bcom_o2_algebra,
    inversion_pullback,
    line_pair_restriction,
    so2_restriction,
    splitting_oracle_w2_tensor,
)
from kocom.f2poly import total_steenrod_square

alg = bcom_o2_algebra(cap=6)
print("basis by degree")
for d in range(7):
    print(f"  degree {d}: " + ", ".join(str(x) for x in alg.basis(d)))

phi = inversion_pullback(alg)
print()
print("inversion pullback on the generators")
for name in ("w1", "w2", "r", "s"):
    print(f"  {name} -> {phi(alg.gen(name))}")
print("applied twice it is the identity, e.g. on w2:", phi(phi(alg.gen("w2"))))

a2 = a2_class(alg)
print()
print(f"obstruction class a2 = w2 + inverted w2 = {a2}")
print(f"  restricted to a pair of line bundles: {line_pair_restriction(alg)(a2)}")
print(f"  restricted to oriented plane bundles: {so2_restriction(alg)(a2)}")

print()
print("total Steenrod squares")
for name in ("w1", "w2", "r", "s"):
    print(f"  Sq({name}) = {total_steenrod_square(alg.gen(name))}")

print()
print("splitting-principle identities for w2 of tensor products")
print(f"  rank2 x rank2: {splitting_oracle_w2_tensor(RANK2_RANK2)}")
print(f"  rank2 x line:  {splitting_oracle_w2_tensor(RANK2_LINE)}")
