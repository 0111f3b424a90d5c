"""The E level: F-open neighbourhoods, E-interior/closure and E-open sets.

Everything here is computed from the explicit enumeration of F-open sets,
so each call is bounded by the same universe-size cap.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sets
from .fops import DEFAULT_CAP, enumerate_f_open
from .sets import PointSet
from .space import GeneralizedTopology, GtfSpace


@dataclass(frozen=True)
class ENeighbourhoods:
    point: int
    family: frozenset

    def __iter__(self):
        return iter(sets.canonical(self.family))

    def __len__(self) -> int:
        return len(self.family)


def e_families(space: GtfSpace, cap: int = DEFAULT_CAP) -> tuple:
    """``E_w`` for every point, indexed like ``space.assoc``."""
    cached = space.__dict__.get("_e_families")
    if cached is None:
        opens = enumerate_f_open(space, cap)
        cached = tuple(frozenset(s for s in opens if s >> w & 1) for w in range(space.n))
        space.__dict__["_e_families"] = cached
    else:
        enumerate_f_open(space, cap)  # re-applies the cap
    return cached


def e_neighbourhoods(space: GtfSpace, w: int, cap: int = DEFAULT_CAP) -> ENeighbourhoods:
    return ENeighbourhoods(w, e_families(space, cap)[w])


def e_interior(space: GtfSpace, a: PointSet, cap: int = DEFAULT_CAP) -> PointSet:
    out = 0
    for w, ew in enumerate(e_families(space, cap)):
        if any(s & ~a == 0 for s in ew):
            out |= 1 << w
    return out


def e_closure(space: GtfSpace, a: PointSet, cap: int = DEFAULT_CAP) -> PointSet:
    out = 0
    for w, ew in enumerate(e_families(space, cap)):
        if all(s & a for s in ew):
            out |= 1 << w
    return out


def e_open_family(space: GtfSpace, cap: int = DEFAULT_CAP) -> GeneralizedTopology:
    """All E-open sets, returned as a (validated) generalized topology.

    When every ``F_w`` is non-empty the result is also checked to be strong.
    """
    e_families(space, cap)
    opens = frozenset(s for s in sets.all_subsets(space.n) if e_interior(space, s, cap) == s)
    topology = GeneralizedTopology(opens)
    if all(space.assoc) and not topology.is_strong(space.universe):
        raise AssertionError("E-open sets do not cover W although every F_w is non-empty")
    return topology
