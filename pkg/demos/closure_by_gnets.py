"""
F-closure through gnets
=======================

A point lies in FCl(A) exactly when some gnet with values in A converges to it.
"""

from gtfspace import example_space, f_closure, witness_gnet
from gtfspace.io import gnet_to_dict

space = example_space("triple_prime", 3)
u = space.universe
a = u.parse(["3", "4"])
print("A =", u.format(a), " FCl(A) =", u.format(f_closure(space, a)))

for label in u.labels:
    g = witness_gnet(space, u.index(label), a)
    if g is None:
        print(f"{label}: no gnet")
        continue
    print(f"{label}: {gnet_to_dict(g, u)['map']}")
