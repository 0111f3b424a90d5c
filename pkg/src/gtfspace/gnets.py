"""Finite posets, gnets and their two convergence relations.

A gnet is any map from a finite poset into ``W``.  The poset is stored as
``up[i]``, the bitmask of elements ``j`` with ``i <= j``, which makes
"eventually" and "frequently" one mask test per element:

* eventually in ``U``: some ``up[i]`` lies inside the elements mapped into ``U``;
* frequently in ``U``: every ``up[i]`` meets the elements mapped into ``U``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Optional, Sequence

from . import sets
from .eops import e_families
from .errors import DomainError, MalformedInputError, ResourceError
from .fops import DEFAULT_CAP, f_closure
from .sets import PointSet, Universe
from .space import GtfSpace

SUBSET_POSET_CAP = 10


@dataclass(frozen=True)
class FinitePoset:
    """A partial order on ``elements``; ``up[i]`` is the up-set of element ``i``."""

    elements: tuple
    up: tuple

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "up", tuple(self.up))
        if not elements:
            raise MalformedInputError("a poset must have at least one element")
        if len(set(elements)) != len(elements):
            raise MalformedInputError("duplicate poset element labels")
        if len(self.up) != len(elements):
            raise MalformedInputError("up-set table does not match the element list")
        for i, ui in enumerate(self.up):
            if not ui >> i & 1:
                raise MalformedInputError(f"order is not reflexive at {elements[i]!r}")
            if ui >> len(elements):
                raise MalformedInputError(f"up-set of {elements[i]!r} leaves the poset")
            for j in sets.iter_bits(ui):
                if j != i and self.up[j] >> i & 1:
                    raise MalformedInputError(
                        f"order is not antisymmetric: {elements[i]!r} and {elements[j]!r}"
                    )
                if self.up[j] & ~ui:
                    k = sets.lowest(self.up[j] & ~ui)
                    raise MalformedInputError(
                        f"order is not transitive: {elements[i]!r} <= {elements[j]!r} "
                        f"<= {elements[k]!r}"
                    )

    @classmethod
    def from_pairs(cls, elements: Sequence, leq: Iterable[tuple]) -> "FinitePoset":
        """Build from ``(a, b)`` label pairs meaning ``a <= b``.

        Reflexive pairs may be omitted.  The relation is otherwise taken as
        given: a non-transitive list is rejected, not completed.
        """
        elements = tuple(str(e) for e in elements)
        index = {e: i for i, e in enumerate(elements)}
        up = [1 << i for i in range(len(elements))]
        for a, b in leq:
            try:
                up[index[str(a)]] |= 1 << index[str(b)]
            except KeyError as exc:
                raise MalformedInputError(f"order pair mentions unknown element {exc.args[0]!r}") from None
        return cls(elements, tuple(up))

    @classmethod
    def from_covers(cls, elements: Sequence, covers: Iterable[tuple]) -> "FinitePoset":
        """Reflexive-transitive closure of the given cover pairs."""
        elements = tuple(str(e) for e in elements)
        index = {e: i for i, e in enumerate(elements)}
        succ = [0] * len(elements)
        for a, b in covers:
            try:
                succ[index[str(a)]] |= 1 << index[str(b)]
            except KeyError as exc:
                raise MalformedInputError(f"cover pair mentions unknown element {exc.args[0]!r}") from None
        up = []
        for i in range(len(elements)):
            seen, stack = 1 << i, [i]
            while stack:
                for j in sets.iter_bits(succ[stack.pop()] & ~seen):
                    seen |= 1 << j
                    stack.append(j)
            up.append(seen)
        return cls(elements, tuple(up))

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def pairs(self) -> list[tuple[str, str]]:
        """The full order relation as label pairs, reflexive pairs included."""
        return [
            (self.elements[i], self.elements[j])
            for i in range(len(self.elements))
            for j in sets.iter_bits(self.up[i])
        ]

    def maximal(self) -> list[int]:
        return [i for i, ui in enumerate(self.up) if ui == 1 << i]


def chain(n: int) -> FinitePoset:
    """``0 <= 1 <= ... <= n-1``."""
    full = (1 << n) - 1
    return FinitePoset(tuple(range(n)), tuple(full & ~((1 << i) - 1) for i in range(n)))


def antichain(n: int) -> FinitePoset:
    return FinitePoset(tuple(range(n)), tuple(1 << i for i in range(n)))


@lru_cache(maxsize=None)
def _subset_poset(universe: Universe) -> FinitePoset:
    # element e stands for the non-empty set with mask e + 1; C <= D iff D is a subset of C
    up = []
    for c in range(1, universe.full + 1):
        mask = 0
        for d in sets.submasks(c):
            if d:
                mask |= 1 << (d - 1)
        up.append(mask)
    return FinitePoset(tuple(universe.format(c) for c in range(1, universe.full + 1)), tuple(up))


def subset_poset(universe: Universe, cap: int = SUBSET_POSET_CAP) -> FinitePoset:
    """Non-empty subsets of ``universe`` under reverse inclusion.

    Element ``e`` is the set with bitmask ``e + 1``; going up means shrinking.
    """
    if universe.size > cap:
        raise ResourceError(f"subset poset over {universe.size} points exceeds the cap of {cap}")
    return _subset_poset(universe)


def is_directed(p: FinitePoset) -> bool:
    return all(p.up[i] & p.up[j] for i in range(len(p)) for j in range(i + 1, len(p)))


def is_sequence(p: FinitePoset) -> bool:
    """True when the order is a finite linear chain."""
    return all(p.leq(i, j) or p.leq(j, i) for i in range(len(p)) for j in range(i + 1, len(p)))


@dataclass(frozen=True)
class Gnet:
    """A map from ``domain`` into the points of a space; ``values[i]`` is a point index."""

    domain: FinitePoset
    values: tuple

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if len(values) != len(self.domain):
            raise MalformedInputError("gnet must assign a point to every poset element")
        if any(v < 0 for v in values):
            raise MalformedInputError("negative point index in gnet")
        object.__setattr__(self, "values", values)

    def image(self) -> PointSet:
        return sets.from_indices(self.values)

    @cached_property
    def tails(self) -> frozenset:
        """Point sets ``{f(j) : j >= i}``, one per element ``i`` (duplicates merged)."""
        vals = self.values
        return frozenset(
            sets.from_indices(vals[j] for j in sets.iter_bits(ui)) for ui in self.domain.up
        )

    def hits(self, u: PointSet) -> int:
        """Elements of the domain mapped into ``u``, as a bitmask."""
        out = 0
        for i, v in enumerate(self.values):
            if u >> v & 1:
                out |= 1 << i
        return out


def constant_gnet(p: FinitePoset, w: int) -> Gnet:
    return Gnet(p, (w,) * len(p))


def subset_gnet(universe: Universe, cap: int = SUBSET_POSET_CAP) -> Gnet:
    """Gnet on the reverse-inclusion subset poset sending each set to its least point."""
    p = subset_poset(universe, cap)
    return Gnet(p, tuple(sets.lowest(e + 1) for e in range(len(p))))


def eventually(g: Gnet, u: PointSet) -> bool:
    return any(t & ~u == 0 for t in g.tails)


def frequently(g: Gnet, u: PointSet) -> bool:
    return all(t & u for t in g.tails)


def _check_point(space: GtfSpace, g: Gnet) -> None:
    if any(v >= space.n for v in g.values):
        raise MalformedInputError("gnet takes a value outside the universe")


def _converges(g: Gnet, family: Iterable[PointSet]) -> bool:
    return all(eventually(g, s) for s in family)


def _frequent(g: Gnet, family: Iterable[PointSet]) -> bool:
    return all(frequently(g, s) for s in family)


def converges(space: GtfSpace, g: Gnet, w: int) -> bool:
    space.require_valid()
    _check_point(space, g)
    return _converges(g, space.assoc[w])


def limits(space: GtfSpace, g: Gnet) -> PointSet:
    space.require_valid()
    _check_point(space, g)
    return sets.from_indices(w for w in range(space.n) if _converges(g, space.assoc[w]))


def limit_points(space: GtfSpace, g: Gnet) -> PointSet:
    space.require_valid()
    _check_point(space, g)
    return sets.from_indices(w for w in range(space.n) if _frequent(g, space.assoc[w]))


def e_converges(space: GtfSpace, g: Gnet, w: int, cap: int = DEFAULT_CAP) -> bool:
    _check_point(space, g)
    return _converges(g, e_families(space, cap)[w])


def e_limits(space: GtfSpace, g: Gnet, cap: int = DEFAULT_CAP) -> PointSet:
    _check_point(space, g)
    fams = e_families(space, cap)
    return sets.from_indices(w for w in range(space.n) if _converges(g, fams[w]))


def e_limit_points(space: GtfSpace, g: Gnet, cap: int = DEFAULT_CAP) -> PointSet:
    _check_point(space, g)
    fams = e_families(space, cap)
    return sets.from_indices(w for w in range(space.n) if _frequent(g, fams[w]))


def _separated(fam_w, fam_v, w: int, v: int) -> bool:
    return any(not g >> v & 1 for g in fam_w) and any(not h >> w & 1 for h in fam_v)


def is_ft1(space: GtfSpace) -> bool:
    space.require_valid()
    a = space.assoc
    return all(_separated(a[w], a[v], w, v) for w in range(space.n) for v in range(w + 1, space.n))


def is_et1(space: GtfSpace, cap: int = DEFAULT_CAP) -> bool:
    e = e_families(space, cap)
    return all(_separated(e[w], e[v], w, v) for w in range(space.n) for v in range(w + 1, space.n))


def witness_gnet(space: GtfSpace, w: int, a: PointSet, cap: int = SUBSET_POSET_CAP) -> Optional[Gnet]:
    """A gnet with values in ``a`` converging to ``w``, or ``None`` if ``w`` is not in FCl(a).

    With ``F_w`` empty the domain is the reverse-inclusion subset poset and
    every element maps to the least point of ``a``.  Otherwise the domain is
    ``F_w`` itself under reverse inclusion and ``G`` maps to the least point
    of ``G & a``.
    """
    space.require_valid()
    if not a:
        raise DomainError("witness gnets need a non-empty target set")
    if not f_closure(space, a) >> w & 1:
        return None
    fw = space.assoc[w]
    if not fw:
        p = subset_poset(space.universe, cap)
        g = constant_gnet(p, sets.lowest(a))
    else:
        members = sets.canonical(fw)
        up = []
        for c in members:
            up.append(sets.from_indices(j for j, d in enumerate(members) if sets.is_subset(d, c)))
        p = FinitePoset(tuple(space.fmt(c) for c in members), tuple(up))
        g = Gnet(p, tuple(sets.lowest(c & a) for c in members))
    if not converges(space, g, w) or not sets.is_subset(g.image(), a):
        raise AssertionError(f"witness gnet for {space.label(w)} fails its own check")
    return g


def all_gnets(p: FinitePoset, n: int):
    """Every map from ``p`` into an ``n`` point universe."""
    for values in product(range(n), repeat=len(p)):
        yield Gnet(p, values)
