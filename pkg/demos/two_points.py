"""
The smallest space where the two convergences differ
====================================================
"""

from gtfspace import (
    chain,
    constant_gnet,
    converges,
    e_converges,
    e_neighbourhoods,
    enumerate_f_open,
    is_et1,
    is_ft1,
)
from gtfspace.io import space_from_dict

space = space_from_dict({"universe": ["w", "v"], "mu": [[], ["w"]], "assoc": {"v": [["w"]]}})
u = space.universe
v = u.index("v")

# only the trivial sets are F-open
print("F-open:", u.format_family(enumerate_f_open(space)))
print("E_v:", u.format_family(e_neighbourhoods(space, v).family))

# the constant gnet at v
g = constant_gnet(chain(1), v)
print("(v) -> v:  ", converges(space, g, v))
print("(v) ->E v: ", e_converges(space, g, v))

print("FT1:", is_ft1(space), " ET1:", is_et1(space))
