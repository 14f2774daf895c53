"""Walk through the cocycle family on the sphere and its clutching degrees.

The k-th standard cocycle puts the rotation R_{kt*pi} on the upper
boundary arc, the fixed reflection A on the equatorial arc, and their
product on the lower arc.  Raising it to the n-th pointwise power and
reading off the winding number of the clutching loop reproduces the
degree table nk/2 (n even) / (n-1)k/2 (n odd) exactly, in rational
arithmetic with no rounding anywhere.
"""

from kocom import (
    bundle_class,
    clutching_function,
    oriented_invariant,
    power_cocycle,
    standard_cocycle,
    tc_invariant,
    tc_sum,
    validate,
)

print("validity of the family under pointwise powers")
for k in (0, 1, 2, 3):
    report = validate(power_cocycle(standard_cocycle(k), 3))
    print(f"  k={k}, n=3: {report.summary()}")

print()
print("clutching degrees of the n-th power of the k-th cocycle")
ks = range(-3, 4)
ns = range(-3, 4)
header = "      " + " ".join(f"k={k:+d}" for k in ks)
print(header)
for n in ns:
    row = [f"n={n:+d}:"]
    for k in ks:
        loop = clutching_function(power_cocycle(standard_cocycle(k), n))
        row.append(f"{bundle_class(loop):4d}")
    print("  " + " ".join(row))

print()
print("n = 1 clutches the trivial bundle for every k, yet the structure")
print("itself is seen by the degree of the pointwise inverse:")
for k in (1, 2, 3):
    inv = tc_invariant(standard_cocycle(k))
    print(f"  k={k}: {inv}")

print()
print("adding the oriented bundle of Euler number m shifts the pair to")
print("(m, -k-m); distinct k stay distinct on every underlying bundle:")
for m in (0, 2):
    sums = [
        tc_sum(tc_invariant(standard_cocycle(k)), oriented_invariant(m))
        for k in (-2, -1, 0, 1, 2)
    ]
    print(f"  m={m}: " + ", ".join(str(s) for s in sums))
