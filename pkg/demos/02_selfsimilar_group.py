"""
The self-similar group of the map 2/(x-1)^2
===========================================

Three generators defined by wreath recursion:

    a1 = root swap
    a2 = (a3^-1, a2^-1) followed by the root swap
    a3 = (a2, a3)

Truncating the recursion at depth n gives a finite 2-group for every n.
This script walks the ledger of those quotients.
"""

from imgroups import (
    abelian_invariants,
    builtin_system_f,
    centralizer,
    commutator_subgroup,
    geometric_group,
    subgroup_H,
    subgroup_U,
    subgroup_index,
    verify_geometric_presentation,
)

sysf = builtin_system_f()

# unfold the recursion: each generator becomes a concrete portrait
for name in ("a1", "a2", "a3"):
    p = sysf.unfold(name, 3)
    print(f"{name} at level 3: {p.encode():>6}   cycle type {p.cycle_type()}")

# group orders stabilize to |G_n| = 2^(n+2)
print("\n  n  |G_n|")
for n in range(1, 8):
    print(f"  {n}  {len(geometric_group(n)):>5}")

# the subgroup ledger is level-independent from n = 3 on
n = 5
g = geometric_group(n)
print(f"\nat level {n}:")
for i in (1, 2, 3):
    print(f"  index of the normal closure of a{i}:",
          subgroup_index(g, subgroup_H(i, n)))
print("  index of the twist subgroup U:", subgroup_index(g, subgroup_U(n)))
print("  index of the commutator subgroup:",
      subgroup_index(g, commutator_subgroup(g)))
print("  abelianization invariants:", abelian_invariants(g))

# each generator is self-centralizing up to a factor of 2
for name in ("a1", "a2", "a3"):
    c = centralizer(g, sysf.unfold(name, n))
    print(f"  |centralizer of {name}| = {len(c)}")

# the defining relations hold in every truncation
checks = verify_geometric_presentation(4)
print("\npresentation checks at level 4:",
      "all pass" if all(checks.values()) else checks)
