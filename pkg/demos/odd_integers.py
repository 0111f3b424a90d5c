"""
Odd initial segments on a truncated line
========================================

Four associating functions on the same generalized topology.
"""

from gtfspace import example_space, f_interior, open_hull, preimage

# W = {1..10}, mu holds {1}, {1,3}, ..., {1,3,5,7,9}
k = 5
for name in ("base", "prime", "double_prime", "triple_prime"):
    space = example_space(name, k)
    u = space.universe
    print(f"{name:>13}: F_8 = {u.format_family(space.assoc[u.index('8')]) or 'no sets'}")

# the odd points are the only ones inside the union of mu
space = example_space("prime", k)
u = space.universe
o4 = u.parse(["1", "3", "5", "7"])

# F-interior reaches even points whose families hold a set inside the argument
print("FInt(O_4) =", u.format(f_interior(space, o4)))
print("hull(O_4) =", u.format(open_hull(space, o4)))

# points associated with O_4 in the triple-primed space
triple = example_space("triple_prime", k)
print("preimage(O_4) =", u.format(preimage(triple, o4)))
