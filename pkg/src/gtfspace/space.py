"""Generalized topologies and gtf-structures over a finite universe.

A generalized topology ``mu`` on ``W`` contains the empty set and is closed
under unions of non-empty subfamilies.  For a finite family every such union
is a finite union, so closure under binary unions is equivalent and that is
what :func:`is_union_closed` checks.

A gtf-structure adds an associating function ``F`` sending every point to a
subfamily of ``mu``.  Points inside ``union(mu)`` have no freedom: ``F_w`` is
exactly the family of open sets containing ``w``.  Points outside (orphans)
may be associated with any subfamily of ``mu``, the empty set included.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional

from . import sets
from .errors import DomainError, InvalidSpaceError, MalformedInputError
from .sets import EMPTY, PointSet, Universe


def union_closure(generators: Iterable[PointSet]) -> frozenset:
    """Smallest union-closed family containing ``generators`` and the empty set."""
    family = {EMPTY}
    frontier = set(generators) - family
    while frontier:
        new = set()
        for g in frontier:
            if g in family:
                continue
            family.add(g)
            for x in list(family):
                u = x | g
                if u not in family:
                    new.add(u)
        frontier = new
    return frozenset(family)


def is_union_closed(family: frozenset) -> bool:
    return all((a | b) in family for a in family for b in family)


@dataclass(frozen=True)
class GeneralizedTopology:
    """A validated generalized topology; ``opens`` is the family ``mu``."""

    opens: frozenset
    union: PointSet = field(init=False)

    def __post_init__(self):
        opens = frozenset(self.opens)
        if EMPTY not in opens:
            raise MalformedInputError("a generalized topology must contain the empty set")
        if not is_union_closed(opens):
            bad = next((a, b) for a in opens for b in opens if (a | b) not in opens)
            raise MalformedInputError(
                f"family is not closed under unions: {bin(bad[0])} | {bin(bad[1])} missing"
            )
        object.__setattr__(self, "opens", opens)
        object.__setattr__(self, "union", sets.union_all(opens))

    def __contains__(self, s: PointSet) -> bool:
        return s in self.opens

    def __iter__(self):
        return iter(sets.canonical(self.opens))

    def __len__(self) -> int:
        return len(self.opens)

    def is_strong(self, universe: Universe) -> bool:
        return self.union == universe.full


def build_topology(universe: Universe, generators: Iterable[PointSet]) -> GeneralizedTopology:
    gens = [universe.check(g) for g in generators]
    return GeneralizedTopology(union_closure(gens))


@dataclass
class ValidationReport:
    """Outcome of :func:`validate_gtf`; ``violations`` holds one dict per broken clause."""

    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def messages(self) -> list[str]:
        return [v["message"] for v in self.violations]


@dataclass(frozen=True)
class GtfSpace:
    """A triple ``<W, mu, F>``; ``assoc[i]`` is the family ``F`` of point ``i``.

    Construction does not validate, so that :func:`validate_gtf` can report on
    broken input.  Every operator calls :meth:`require_valid` first.  Use
    :func:`make_space` to build a space from the orphan part of ``F`` only.
    """

    universe: Universe
    topology: GeneralizedTopology
    assoc: tuple

    def __post_init__(self):
        assoc = tuple(frozenset(f) for f in self.assoc)
        if len(assoc) != self.universe.size:
            raise MalformedInputError(
                f"assoc has {len(assoc)} entries for a universe of size {self.universe.size}"
            )
        object.__setattr__(self, "assoc", assoc)

    @property
    def n(self) -> int:
        return self.universe.size

    @property
    def full(self) -> PointSet:
        return self.universe.full

    @property
    def mu(self) -> frozenset:
        return self.topology.opens

    @property
    def union_mu(self) -> PointSet:
        return self.topology.union

    @cached_property
    def report(self) -> ValidationReport:
        return _validate(self)

    def require_valid(self) -> "GtfSpace":
        if not self.report.ok:
            raise InvalidSpaceError(self.report)
        return self

    def label(self, i: int) -> str:
        return self.universe.labels[i]

    def fmt(self, mask: PointSet) -> str:
        return self.universe.format(mask)


def forced_assoc(topology: GeneralizedTopology, w: int) -> frozenset:
    """The family ``F_w`` is forced to be for a point ``w`` inside ``union(mu)``."""
    b = 1 << w
    return frozenset(x for x in topology.opens if x & b)


def make_space(
    universe: Universe,
    topology: GeneralizedTopology,
    orphan_assoc: Optional[Mapping[int, Iterable[PointSet]]] = None,
    *,
    check: bool = True,
) -> GtfSpace:
    """Build a space, deriving ``F`` on ``union(mu)`` from the topology.

    Entries of ``orphan_assoc`` for points inside ``union(mu)`` are kept as
    given, so a conflicting value surfaces as a validation error.
    """
    orphan_assoc = dict(orphan_assoc or {})
    for i in orphan_assoc:
        if not 0 <= i < universe.size:
            raise MalformedInputError(f"assoc refers to point index {i} outside the universe")
    assoc = []
    for w in range(universe.size):
        if w in orphan_assoc:
            assoc.append(frozenset(universe.check(s) for s in orphan_assoc[w]))
        elif topology.union >> w & 1:
            assoc.append(forced_assoc(topology, w))
        else:
            assoc.append(frozenset())
    space = GtfSpace(universe, topology, tuple(assoc))
    if check:
        space.require_valid()
    return space


def _validate(space: GtfSpace) -> ValidationReport:
    report = ValidationReport()
    u = space.universe
    for x in space.mu:
        if x & ~space.full:
            report.violations.append(
                {"clause": "universe", "set": bin(x), "message": f"open set {bin(x)} leaves the universe"}
            )
    for w in range(space.n):
        fw = space.assoc[w]
        inside = space.union_mu >> w & 1
        for x in sets.canonical(fw):
            if x not in space.mu:
                report.violations.append({
                    "clause": "associated-in-mu",
                    "point": u.labels[w],
                    "set": u.labels_of(x & space.full),
                    "message": f"F_{u.labels[w]} contains {u.format(x & space.full)} which is not in mu",
                })
        if inside:
            expected = forced_assoc(space.topology, w)
            for x in sets.canonical(expected - fw):
                report.violations.append({
                    "clause": "forced-missing",
                    "point": u.labels[w],
                    "set": u.labels_of(x),
                    "message": f"F_{u.labels[w]} lacks open neighbourhood {u.format(x)}",
                })
            for x in sets.canonical((fw & space.mu) - expected):
                report.violations.append({
                    "clause": "forced-extra",
                    "point": u.labels[w],
                    "set": u.labels_of(x),
                    "message": f"F_{u.labels[w]} contains {u.format(x)} which does not contain the point",
                })
    return report


def validate_gtf(space: GtfSpace) -> ValidationReport:
    """Check both clauses of the gtf-structure definition."""
    return space.report


def interior(space: GtfSpace, a: PointSet) -> PointSet:
    space.require_valid()
    return sets.union_all(x for x in space.mu if x & ~a == 0)


def closure(space: GtfSpace, a: PointSet) -> PointSet:
    space.require_valid()
    return space.full & ~interior(space, space.full & ~a)


def orphaned_points(space: GtfSpace) -> PointSet:
    space.require_valid()
    return space.full & ~space.union_mu


def preimage(space: GtfSpace, a: PointSet) -> PointSet:
    """Points whose associated family contains the open set ``a``."""
    space.require_valid()
    if a not in space.mu:
        raise DomainError(f"{space.fmt(a)} is not an open set")
    return sets.from_indices(z for z in range(space.n) if a in space.assoc[z])


def kernel(space: GtfSpace, v: int) -> PointSet:
    """Intersection of ``F_v``; ``W`` when ``F_v`` is empty."""
    space.require_valid()
    return sets.intersect_all(space.assoc[v], space.full)


def empty_flagged_points(space: GtfSpace) -> PointSet:
    space.require_valid()
    return sets.from_indices(z for z in range(space.n) if EMPTY in space.assoc[z])


EXAMPLE_VARIANTS = ("base", "prime", "double_prime", "triple_prime")


def example_space(name: str, k: int) -> GtfSpace:
    """Truncation of the odd-initial-segment space on the integers to ``{1..2k}``.

    ``mu`` holds the sets ``O_j = {1, 3, ..., 2j-1}`` for ``j <= k``.  Odd points
    receive their forced neighbourhoods; even points follow the named variant:

    * ``base``: nothing.
    * ``prime``: copy ``F`` of the odd predecessor ``n-1``.
    * ``double_prime``: copy ``F`` of the odd successor ``n+1``; empty at ``n = 2k``.
    * ``triple_prime``: every non-empty open set that ``n+1`` is not forced to
      contain.  At ``n = 2k`` the successor lies outside the truncation and
      owns no truncated open set, so all of ``mu`` minus the empty set remains.
    """
    if name not in EXAMPLE_VARIANTS:
        raise DomainError(f"unknown example {name!r}; expected one of {EXAMPLE_VARIANTS}")
    if k < 1:
        raise DomainError("k must be a positive integer")
    universe = Universe(tuple(str(i) for i in range(1, 2 * k + 1)))
    chain = [sets.from_indices(range(0, 2 * j, 2)) for j in range(1, k + 1)]
    topology = GeneralizedTopology(frozenset([EMPTY, *chain]))

    def point(m):
        return m - 1

    def forced(m):
        # odd m in range; otherwise the truncation holds no open set containing m
        if 1 <= m <= 2 * k - 1:
            return forced_assoc(topology, point(m))
        return frozenset()

    orphan_assoc = {}
    for n in range(2, 2 * k + 1, 2):
        if name == "base":
            fam = frozenset()
        elif name == "prime":
            fam = forced(n - 1)
        elif name == "double_prime":
            fam = forced(n + 1)
        else:
            fam = frozenset(chain) - forced(n + 1)
        orphan_assoc[point(n)] = fam
    return make_space(universe, topology, orphan_assoc)
