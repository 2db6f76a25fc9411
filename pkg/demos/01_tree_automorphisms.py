"""
Automorphisms of the rooted binary tree
=======================================

An automorphism of the depth-n binary tree is a choice of "swap or
don't" at each of the 2^n - 1 internal nodes.  We store those bits
breadth-first, root first, and ship them around as level:HEX strings.
"""

from imgroups import Portrait, adding_machine, are_conjugate, identity, sigma

# the root swap exchanges the two halves of the tree
s = sigma(3)
print("root swap        ", s.encode(), "acts on leaves as", s.leaf_permutation())

# the adding machine is the odometer: on leaves read as binary counters
# it acts by +1 with carry
a = adding_machine(3)
print("adding machine   ", a.encode(), "acts on leaves as", a.leaf_permutation())
print("one 8-cycle:", a.cycle_type(), " order:", a.order())

# composition is left factor first: (u * v)(leaf) = v(u(leaf))
u, v = s, a
w = u * v
lhs = [v.leaf_permutation()[i] for i in u.leaf_permutation()]
print("composite        ", w.encode(), "checks out:", w.leaf_permutation() == lhs)

# inverses, identity, and the wire format round trip
assert (a * a.inverse()) == identity(3)
assert Portrait.decode(a.encode()) == a

# the odometer property survives conjugation, and is detected two ways
# (a sign criterion and a direct cycle count) that must always agree
g = Portrait.decode("3:2F")
conj = g.inverse() * a * g
print("conjugated machine", conj.encode(), "still an odometer:",
      conj.is_level_odometer())
print("conjugate to the original:", are_conjugate(a, conj))

# the sign character at each depth is the permutation parity there
for m in (1, 2, 3):
    print(f"sign of the adding machine at depth {m}: {a.sign(m):+d}")
