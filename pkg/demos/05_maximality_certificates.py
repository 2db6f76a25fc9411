"""
Arboreal maximality certificates at level 4
===========================================

For a rational base point a (not 0 or 2), the level-4 Galois image sits
inside the 256-element arithmetic model.  To certify it is everything,
each of the 15 maximal subgroups must be ruled out:

  * ten of them miss some cycle type that the full model has, so a
    Frobenius observation (splitting degrees of the specialized iterate
    mod p) can eliminate them;
  * the other five realize every cycle type and are invisible to that
    statistic; they fall to the independence of the square classes of
    -1, 2, a, 2 - a, which pins the quotient modulo the Frattini
    subgroup directly.

Every verdict is a certificate that can be rechecked by table lookups.
"""

import dataclasses
from fractions import Fraction

from imgroups import (
    BasePoint,
    cycle_blind_subgroups,
    maximality_verdict,
    recheck_certificate,
    sample_frobenius,
    square_class_test,
)

# the square-class gate
for a in (5, 1, 8):
    rep = square_class_test(BasePoint(Fraction(a)))
    verdictish = "independent" if rep.passed else \
        f"dependent, witness subset {rep.dependent_subset}"
    print(f"a = {a}: classes {rep.parts} -> {verdictish}")

# raw Frobenius data for a = 5: primes and observed cycle types
obs = sample_frobenius(BasePoint(Fraction(5)), 60)
print("\nfirst observations for a = 5:")
for o in obs[:6]:
    print(f"  p = {o.prime:>3}: {'+'.join(map(str, o.cycle_type))}")

# the five subgroups no cycle type can touch
print("\ncycle-type-blind subgroups:", ", ".join(cycle_blind_subgroups()))

# full verdicts
v = maximality_verdict(BasePoint(Fraction(5)))
print(f"\na = 5: {v.status} after {v.primes_tried} usable primes")
print("  eliminated by Frobenius:",
      ", ".join(f"{n}@p={o.prime}" for n, o in v.frobenius_eliminations))
print("  eliminated by square classes:",
      ", ".join(v.square_class_eliminations))

v1 = maximality_verdict(BasePoint(Fraction(1)))
print(f"a = 1: {v1.status} ({v1.reason})")

# small prime bounds leave survivors rather than overclaiming
v60 = maximality_verdict(BasePoint(Fraction(5)), 60)
print(f"a = 5 with primes < 60: {v60.status}, surviving {v60.surviving}")

# certificates recheck, and tampering is caught
print("\nrecheck stored certificate:", recheck_certificate(v))
name, o = v.frobenius_eliminations[0]
forged = dataclasses.replace(
    v,
    frobenius_eliminations=((name, dataclasses.replace(o, cycle_type=(1,) * 16)),)
    + v.frobenius_eliminations[1:],
)
print("recheck forged certificate:", recheck_certificate(forged))
