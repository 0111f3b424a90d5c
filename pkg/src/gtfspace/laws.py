"""Space generators and the law suite.

Every law is an instance generator plus a predicate that is ``True`` when the
claim holds on one instance.  A positive law passes when no instance fails.
An anti-law encodes a claim that is *false* in general; it passes once some
instance fails, and that instance is kept as a replayable witness.

Witnesses are plain JSON-ready dicts carrying the serialized space, the
context seed and the instance parameters, so :func:`replay` can rebuild the
exact situation without access to the run that produced it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from typing import Callable, Iterable, Iterator, Optional, Sequence

from . import sets
from .eops import e_families, e_open_family
from .errors import GtfError, ResourceError
from .fops import enumerate_f_open, f_closure, f_interior, open_hull
from .gnets import (
    FinitePoset,
    Gnet,
    all_gnets,
    chain,
    constant_gnet,
    e_limits,
    is_et1,
    is_ft1,
    limit_points,
    limits,
    witness_gnet,
)
from .io import gnet_from_dict, gnet_to_dict, space_from_dict, space_to_dict
from .sets import EMPTY, PointSet, Universe
from .space import (
    GeneralizedTopology,
    GtfSpace,
    build_topology,
    closure,
    interior,
    is_union_closed,
    make_space,
)

DEFAULT_SEED = 20240611
DEFAULT_SPACES = 500
DEFAULT_GNETS = 200
DEFAULT_FAMILIES = 40
MAX_EXHAUSTIVE = 3


# -- space generators --------------------------------------------------------


@dataclass(frozen=True)
class SpaceGenParams:
    universe_size: int = 4
    generator_count: int = 3
    orphan_assoc_density: float = 0.3
    include_empty_prob: float = 0.1
    seed: int = 0

    def __post_init__(self):
        if not 1 <= self.universe_size <= 16:
            raise ValueError("universe_size must lie in 1..16")
        if self.generator_count < 0:
            raise ValueError("generator_count must be non-negative")
        for name in ("orphan_assoc_density", "include_empty_prob"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")


def random_space(params: SpaceGenParams) -> GtfSpace:
    """Union-close random generators, then give each orphan a random subfamily of mu."""
    rng = random.Random(params.seed)
    n = params.universe_size
    universe = Universe.of_size(n)
    generators = [rng.randrange(1, 1 << n) for _ in range(params.generator_count)]
    topology = build_topology(universe, generators)
    nonempty = [x for x in sets.canonical(topology.opens) if x]
    orphan_assoc = {}
    for w in sets.iter_bits(universe.full & ~topology.union):
        fam = {x for x in nonempty if rng.random() < params.orphan_assoc_density}
        if rng.random() < params.include_empty_prob:
            fam.add(EMPTY)
        orphan_assoc[w] = fam
    return make_space(universe, topology, orphan_assoc)


def random_params(rng: random.Random, min_size: int, max_size: int) -> SpaceGenParams:
    return SpaceGenParams(
        universe_size=rng.randint(min_size, max_size),
        generator_count=rng.randint(0, 6),
        orphan_assoc_density=rng.choice((0.0, 0.25, 0.5, 0.75, 1.0)),
        include_empty_prob=rng.choice((0.0, 0.0, 0.15, 0.5)),
        seed=rng.getrandbits(64),
    )


def random_spaces(count: int, seed: int = DEFAULT_SEED, max_size: int = 7, min_size: int = 2) -> Iterator[GtfSpace]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_space(random_params(rng, min_size, max_size))


def union_closed_families(n: int) -> Iterator[frozenset]:
    """Every union-closed family over ``n`` points that contains the empty set."""
    nonempty = list(range(1, 1 << n))
    for choice in range(1 << len(nonempty)):
        fam = frozenset([EMPTY, *(s for k, s in enumerate(nonempty) if choice >> k & 1)])
        if is_union_closed(fam):
            yield fam


def exhaustive_spaces(n: int) -> Iterator[GtfSpace]:
    """Each gtf-structure on ``n <= 3`` labelled points exactly once."""
    if n > MAX_EXHAUSTIVE:
        raise ResourceError(f"exhaustive enumeration is limited to {MAX_EXHAUSTIVE} points")
    universe = Universe.of_size(n)
    for fam in union_closed_families(n):
        topology = GeneralizedTopology(fam)
        orphans = list(sets.iter_bits(universe.full & ~topology.union))
        members = sets.canonical(fam)
        choices = [
            frozenset(m for k, m in enumerate(members) if pick >> k & 1)
            for pick in range(1 << len(members))
        ]
        for assignment in product(choices, repeat=len(orphans)):
            yield make_space(universe, topology, dict(zip(orphans, assignment)))


def exhaustive_spaces_upto(n: int) -> Iterator[GtfSpace]:
    for k in range(1, n + 1):
        yield from exhaustive_spaces(k)


def acceptance_spaces(
    samples: int = DEFAULT_SPACES, seed: int = DEFAULT_SEED, max_size: int = 7, exhaustive: int = 2
) -> Iterator[GtfSpace]:
    """Exhaustive small spaces followed by seeded random ones."""
    yield from exhaustive_spaces_upto(exhaustive)
    yield from random_spaces(samples, seed, max_size)


# -- per-space evaluation context --------------------------------------------


def random_poset(rng: random.Random, max_elements: int = 5) -> FinitePoset:
    k = rng.randint(1, max_elements)
    density = rng.random()
    covers = [(i, j) for i in range(k) for j in range(i + 1, k) if rng.random() < density]
    return FinitePoset.from_covers(range(k), covers)


class LawContext:
    """Lookup tables and samples shared by every law evaluated on one space."""

    def __init__(self, space: GtfSpace, seed: int = 0, gnet_samples: int = DEFAULT_GNETS,
                 family_samples: int = DEFAULT_FAMILIES):
        self.space = space.require_valid()
        self.seed = seed
        self.gnet_samples = gnet_samples
        self.family_samples = family_samples
        self.n = space.n
        self.full = space.full
        self.union_mu = space.union_mu
        self._cache = {}

    @property
    def subsets(self) -> range:
        return sets.all_subsets(self.n)

    @cached_property
    def fint(self) -> list:
        return [f_interior(self.space, a) for a in self.subsets]

    @cached_property
    def fcl(self) -> list:
        return [f_closure(self.space, a) for a in self.subsets]

    @cached_property
    def int_(self) -> list:
        return [interior(self.space, a) for a in self.subsets]

    @cached_property
    def cl(self) -> list:
        return [closure(self.space, a) for a in self.subsets]

    @cached_property
    def f_open(self) -> list:
        return enumerate_f_open(self.space, cap=self.n)

    @cached_property
    def efam(self) -> tuple:
        return e_families(self.space, cap=self.n)

    @cached_property
    def eint(self) -> list:
        out = []
        for a in self.subsets:
            out.append(sets.from_indices(
                w for w, ew in enumerate(self.efam) if any(s & ~a == 0 for s in ew)
            ))
        return out

    @cached_property
    def ecl(self) -> list:
        return [self.full & ~self.eint[self.full & ~a] for a in self.subsets]

    @cached_property
    def kernels(self) -> list:
        return [sets.intersect_all(fw, self.full) for fw in self.space.assoc]

    @cached_property
    def empty_flagged(self) -> PointSet:
        return sets.from_indices(z for z, fz in enumerate(self.space.assoc) if EMPTY in fz)

    @cached_property
    def families(self) -> list:
        """Families of 1 to 4 distinct subsets; exhaustive up to 3 points, sampled above."""
        if self.n <= 3:
            return [c for r in range(1, 5) for c in combinations(self.subsets, r)]
        rng = random.Random(self.seed ^ 0x5EED)
        out = []
        for _ in range(self.family_samples):
            r = rng.randint(1, 4)
            out.append(tuple(rng.randrange(1 << self.n) for _ in range(r)))
        return out

    @cached_property
    def gnets(self) -> list:
        """All gnets over chains of length up to 3, then random gnets on random posets."""
        out = []
        for k in (1, 2, 3):
            out.extend(all_gnets(chain(k), self.n))
        rng = random.Random(self.seed)
        for _ in range(self.gnet_samples):
            p = random_poset(rng)
            out.append(Gnet(p, tuple(rng.randrange(self.n) for _ in range(len(p)))))
        return out

    @cached_property
    def constant_gnets(self) -> list:
        return [constant_gnet(chain(1), w) for w in range(self.n)]

    def _memo(self, kind: str, g: Gnet, fn: Callable) -> PointSet:
        key = (kind, id(g))
        hit = self._cache.get(key)
        if hit is None or hit[0] is not g:
            hit = (g, fn(self.space, g))
            self._cache[key] = hit
        return hit[1]

    def limits(self, g: Gnet) -> PointSet:
        return self._memo("lim", g, limits)

    def e_limits(self, g: Gnet) -> PointSet:
        return self._memo("elim", g, lambda s, x: e_limits(s, x, cap=s.n))

    def limit_points(self, g: Gnet) -> PointSet:
        return self._memo("lp", g, limit_points)


# -- law registry -------------------------------------------------------------


@dataclass(frozen=True)
class Law:
    law_id: str
    kind: str  # "law", "anti" or "probe"
    description: str
    signature: dict
    instances: Callable[[LawContext], Iterable[dict]]
    predicate: Callable[..., bool]


LAWS: dict = {}


def law(law_id: str, description: str, signature: Optional[dict] = None, kind: str = "law"):
    def register(pair):
        instances, predicate = pair
        LAWS[law_id] = Law(law_id, kind, description, signature or {}, instances, predicate)
        return pair
    return register


def anti(law_id, description, signature=None):
    return law(law_id, description, signature, kind="anti")


def probe(law_id, description, signature=None):
    """An open question: status is recorded, never asserted."""
    return law(law_id, description, signature, kind="probe")


def _none(ctx):
    yield {}


def _each_set(ctx):
    for a in ctx.subsets:
        yield {"a": a}


def _each_point(ctx):
    for w in range(ctx.n):
        yield {"w": w}


def _each_family(ctx):
    for xs in ctx.families:
        yield {"xs": xs}


def _each_gnet(ctx):
    for g in ctx.gnets:
        yield {"g": g}


def _implies(p: bool, q: bool) -> bool:
    return not p or q


def _union(xs):
    return sets.union_all(xs)


def _inter(ctx, xs):
    return sets.intersect_all(xs, ctx.full)


SET = {"a": "set"}
PAIR = {"a": "set", "b": "set"}
POINT = {"w": "point"}
FAMILY = {"xs": "family"}
GNET = {"g": "gnet"}


def _l1_instances(ctx):
    for b in ctx.subsets:
        for a in sets.submasks(b):
            yield {"a": a, "b": b}


law("L1", "A <= B implies FInt(A) <= FInt(B)", PAIR)((
    _l1_instances,
    lambda ctx, a, b: sets.is_subset(ctx.fint[a], ctx.fint[b]),
))

law("L2", "Int(A) <= FInt(A)", SET)((
    _each_set,
    lambda ctx, a: sets.is_subset(ctx.int_[a], ctx.fint[a]),
))

law("L3", "FInt(A) & union(mu) == Int(A)", SET)((
    _each_set,
    lambda ctx, a: ctx.fint[a] & ctx.union_mu == ctx.int_[a],
))

law("L4", "FInt(FInt(A)) & union(mu) <= FInt(A)", SET)((
    _each_set,
    lambda ctx, a: sets.is_subset(ctx.fint[ctx.fint[a]] & ctx.union_mu, ctx.fint[a]),
))


def _l5_instances(ctx):
    for a in sets.canonical(ctx.space.mu):
        yield {"a": a}


def _preimage(ctx, a):
    return sets.from_indices(z for z, fz in enumerate(ctx.space.assoc) if a in fz)


law("L5", "A in mu implies preimage(A) <= FInt(A)", SET)((
    _l5_instances,
    lambda ctx, a: sets.is_subset(_preimage(ctx, a), ctx.fint[a]),
))

law("L6", "FInt(W) == W iff every F_w is non-empty")((
    _none,
    lambda ctx: (ctx.fint[ctx.full] == ctx.full) == all(ctx.space.assoc),
))

law("L7", "FInt(empty) == empty iff no F_w contains the empty set")((
    _none,
    lambda ctx: (ctx.fint[EMPTY] == EMPTY) == (ctx.empty_flagged == EMPTY),
))


def _l8(ctx, a):
    if any(x and sets.is_subset(x, a) for x in ctx.space.mu):
        return True
    return ctx.fint[a] == EMPTY or sets.is_subset(ctx.fint[a], ctx.empty_flagged)


law("L8", "no non-empty open subset of X implies FInt(X) empty or inside Z", SET)((_each_set, _l8))


def _l9(ctx, xs):
    u = _union(xs)
    ok = sets.is_subset(_union(ctx.fint[x] for x in xs), ctx.fint[u])
    if all(sets.is_subset(x, ctx.fint[x]) for x in xs):
        ok = ok and sets.is_subset(u, ctx.fint[u])
    return ok


law("L9", "union of FInt(X_i) <= FInt(union X_i); union <= FInt(union) for uF-open X_i", FAMILY)((
    _each_family, _l9,
))


def _l10(ctx, xs):
    i = _inter(ctx, xs)
    ok = sets.is_subset(ctx.fint[i], _inter(ctx, [ctx.fint[x] for x in xs]))
    if all(sets.is_subset(ctx.fint[x], x) for x in xs):
        ok = ok and sets.is_subset(ctx.fint[i], i)
    return ok


law("L10", "FInt(meet X_i) <= meet FInt(X_i); FInt(meet) <= meet for dF-open X_i", FAMILY)((
    _each_family, _l10,
))

law("L11", "A <= FInt(A) <= union(mu) implies A in mu", SET)((
    _each_set,
    lambda ctx, a: _implies(
        sets.is_subset(a, ctx.fint[a]) and sets.is_subset(ctx.fint[a], ctx.union_mu),
        a in ctx.space.mu,
    ),
))


def _l12(ctx, w):
    has_open = any(s >> w & 1 for s in ctx.f_open)
    if bool(ctx.space.assoc[w]) != has_open:
        return False
    for g in ctx.space.assoc[w]:
        hull = open_hull(ctx.space, g)
        if ctx.fint[hull] != hull or not hull >> w & 1:
            return False
    return True


law("L12", "F_w non-empty iff some F-open set contains w (open hull witnesses it)", POINT)((
    _each_point, _l12,
))

law("L13", "A F-open implies W - A F-closed", SET)((
    _each_set,
    lambda ctx, a: _implies(ctx.fint[a] == a, ctx.fcl[ctx.full & ~a] == ctx.full & ~a),
))


def _l14(ctx, xs):
    if (ctx.fcl[EMPTY] == EMPTY) != all(ctx.space.assoc):
        return False
    if (ctx.fcl[ctx.full] == ctx.full) != (ctx.empty_flagged == EMPTY):
        return False
    u, i = _union(xs), _inter(ctx, xs)
    if not sets.is_subset(_union(ctx.fcl[x] for x in xs), ctx.fcl[u]):
        return False
    if all(sets.is_subset(x, ctx.fcl[x]) for x in xs) and not sets.is_subset(u, ctx.fcl[u]):
        return False
    if not sets.is_subset(ctx.fcl[i], _inter(ctx, [ctx.fcl[x] for x in xs])):
        return False
    if all(sets.is_subset(ctx.fcl[x], x) for x in xs) and not sets.is_subset(ctx.fcl[i], i):
        return False
    return True


law("L14", "FCl(empty)/FCl(W) characterisations and the FCl union/intersection laws", FAMILY)((
    _each_family, _l14,
))

law("L15", "FCl(A) <= Cl(A)", SET)((
    _each_set,
    lambda ctx, a: sets.is_subset(ctx.fcl[a], ctx.cl[a]),
))

law("E1", "E_w empty iff F_w empty", POINT)((
    _each_point,
    lambda ctx, w: (not ctx.efam[w]) == (not ctx.space.assoc[w]),
))


def _e2(ctx):
    eo = frozenset(s for s in ctx.subsets if ctx.eint[s] == s)
    if EMPTY not in eo or not is_union_closed(eo):
        return False
    if all(ctx.space.assoc) and sets.union_all(eo) != ctx.full:
        return False
    try:
        returned = e_open_family(ctx.space, cap=ctx.n)
    except (GtfError, AssertionError):
        return False
    return returned.opens == eo


law("E2", "E-open sets form a generalized topology, strong when every F_w is non-empty")((_none, _e2))


def _e3(ctx):
    orphans = ctx.full & ~ctx.union_mu
    if any(ctx.space.assoc[w] for w in sets.iter_bits(orphans)):
        return True
    return all(ctx.efam[v] == ctx.space.assoc[v] for v in range(ctx.n))


law("E3", "orphans all unassociated implies E_v == F_v for every point")((_none, _e3))

law("E4", "EInt(meet X_i) <= meet X_i", FAMILY)((
    _each_family,
    lambda ctx, xs: sets.is_subset(ctx.eint[_inter(ctx, xs)], _inter(ctx, xs)),
))

law("E5", "every member of E_w contains w, hence EInt(A) <= A", SET)((
    _each_set,
    lambda ctx, a: all(s >> w & 1 for w, ew in enumerate(ctx.efam) for s in ew)
    and sets.is_subset(ctx.eint[a], a),
))


def _g1_instances(ctx):
    posets = [chain(1), chain(3), FinitePoset(("x", "y"), (1, 2))]
    for p in posets:
        for w in range(ctx.n):
            yield {"g": constant_gnet(p, w)}


def _const_point(g):
    return g.values[0]


law("G1", "a constant gnet (w) is convergent iff it converges to w", GNET)((
    _g1_instances,
    lambda ctx, g: bool(ctx.limits(g)) == bool(ctx.limits(g) >> _const_point(g) & 1),
))

law("G2", "constant (w) convergent iff w in union(mu) or F_w empty", GNET)((
    _g1_instances,
    lambda ctx, g: bool(ctx.limits(g)) == bool(
        ctx.union_mu >> _const_point(g) & 1 or not ctx.space.assoc[_const_point(g)]
    ),
))


def _g3(ctx):
    unique = True
    for g in ctx.constant_gnets:
        lim = ctx.limits(g)
        if lim and sets.size(lim) > 1:
            unique = False
    return unique == is_ft1(ctx.space)


law("G3", "every convergent constant gnet has a unique limit iff the space is FT1")((_none, _g3))


def _g4_instances(ctx):
    for g in ctx.gnets:
        yield {"part": "kernel", "g": g, "w": 0, "v": 0}
    for w in range(ctx.n):
        for v in range(ctx.n):
            if w != v:
                yield {"part": "converse", "g": ctx.constant_gnets[w], "w": w, "v": v}


def _g4(ctx, part, g, w, v):
    if part == "kernel":
        lim = ctx.limits(g)
        for v2 in range(ctx.n):
            if ctx.kernels[v2] & lim & ~(1 << v2) and not lim >> v2 & 1:
                return False
        return True
    # (w) convergent and every sampled gnet converging to w also converges to v
    if not ctx.limits(ctx.constant_gnets[w]) >> w & 1:
        return True
    if any(ctx.limits(h) >> w & 1 and not ctx.limits(h) >> v & 1 for h in ctx.gnets):
        return True
    return bool(ctx.kernels[v] >> w & 1)


law("G4", "w in meet(F_v) iff limits at w transfer to v (both stated directions)",
    {"part": "str", "g": "gnet", "w": "point", "v": "point"})((_g4_instances, _g4))

law("G5", "a gnet converging to w forces the empty set out of F_w", GNET)((
    _each_gnet,
    lambda ctx, g: not ctx.limits(g) & ctx.empty_flagged,
))


def _g6(ctx, g):
    lim, elim = ctx.limits(g), ctx.e_limits(g)
    for m in g.domain.maximal():
        fm = g.values[m]
        if (ctx.union_mu >> fm & 1 or not ctx.space.assoc[fm]) and not lim >> fm & 1:
            return False
        if not elim >> fm & 1:
            return False
    return True


law("G6", "a maximal element's value is a limit (under the side condition) and always an E-limit", GNET)((
    _each_gnet, _g6,
))

law("G7", "convergence implies E-convergence", GNET)((
    _each_gnet,
    lambda ctx, g: sets.is_subset(ctx.limits(g), ctx.e_limits(g)),
))


def _g8(ctx):
    unique = True
    for g in ctx.constant_gnets:
        elim = ctx.e_limits(g)
        if not elim:
            return False
        if sets.size(elim) > 1:
            unique = False
    return unique == is_et1(ctx.space, cap=ctx.n)


law("G8", "constant gnets are E-convergent; unique E-limits iff the space is ET1")((_none, _g8))


def _g9_instances(ctx):
    for w in range(ctx.n):
        for a in range(1, 1 << ctx.n):
            yield {"part": "witness", "w": w, "a": a, "g": None}
    for g in ctx.gnets:
        yield {"part": "sampled", "w": 0, "a": g.image(), "g": g}


def _g9(ctx, part, w, a, g):
    if part == "witness":
        return witness_ok(ctx.space, w, a, fcl=ctx.fcl[a])
    lim = ctx.limits(g)
    return sets.is_subset(lim, ctx.fcl[g.image()])


def witness_ok(space: GtfSpace, w: int, a: PointSet, fcl: Optional[PointSet] = None) -> bool:
    """One instance of the closure characterisation by gnets with values in ``a``."""
    if fcl is None:
        fcl = f_closure(space, a)
    try:
        g = witness_gnet(space, w, a)
    except AssertionError:
        return False
    if g is None:
        return not fcl >> w & 1
    if not fcl >> w & 1 or not sets.is_subset(g.image(), a):
        return False
    # literal quantifiers: for each G some element whose whole up-set maps into G
    up, vals = g.domain.up, g.values
    return all(
        any(all(s >> vals[j] & 1 for j in sets.iter_bits(up[i])) for i in range(len(vals)))
        for s in space.assoc[w]
    )


law("G9", "w in FCl(A) iff some gnet with values in A converges to w",
    {"part": "str", "w": "point", "a": "set", "g": "gnet?"})((_g9_instances, _g9))


# anti-laws: the predicate is the tempting but false claim


anti("A1", "FInt(A) <= A (fails in general)", SET)((
    _each_set, lambda ctx, a: sets.is_subset(ctx.fint[a], a),
))

anti("A2", "A <= FCl(A) (fails in general)", SET)((
    _each_set, lambda ctx, a: sets.is_subset(a, ctx.fcl[a]),
))

anti("A3", "FCl(A) <= A (fails in general)", SET)((
    _each_set, lambda ctx, a: sets.is_subset(ctx.fcl[a], a),
))

anti("A4a", "FInt(union X_i) <= union FInt(X_i) (fails in general)", FAMILY)((
    _each_family,
    lambda ctx, xs: sets.is_subset(ctx.fint[_union(xs)], _union(ctx.fint[x] for x in xs)),
))

anti("A4b", "meet FInt(X_i) <= FInt(meet X_i) (fails in general)", FAMILY)((
    _each_family,
    lambda ctx, xs: sets.is_subset(_inter(ctx, [ctx.fint[x] for x in xs]), ctx.fint[_inter(ctx, xs)]),
))

anti("A4c", "FCl(union X_i) <= union FCl(X_i) (fails in general)", FAMILY)((
    _each_family,
    lambda ctx, xs: sets.is_subset(ctx.fcl[_union(xs)], _union(ctx.fcl[x] for x in xs)),
))

anti("A5", "Cl(A) <= FCl(A) (fails in general)", SET)((
    _each_set, lambda ctx, a: sets.is_subset(ctx.cl[a], ctx.fcl[a]),
))


def _gnet_point_instances(ctx):
    for g in ctx.gnets:
        for w in range(ctx.n):
            yield {"g": g, "w": w}


anti("A6", "E-convergence implies convergence (fails in general)", {"g": "gnet", "w": "point"})((
    _gnet_point_instances,
    lambda ctx, g, w: _implies(bool(ctx.e_limits(g) >> w & 1), bool(ctx.limits(g) >> w & 1)),
))

anti("A7", "an E-limit of a gnet in A lies in FCl(A) (fails in general)", {"g": "gnet", "w": "point"})((
    _gnet_point_instances,
    lambda ctx, g, w: _implies(bool(ctx.e_limits(g) >> w & 1), bool(ctx.fcl[g.image()] >> w & 1)),
))

# probes: E-level analogues of the F laws, status recorded only


probe("P1", "A <= B implies EInt(A) <= EInt(B)", PAIR)((
    _l1_instances,
    lambda ctx, a, b: sets.is_subset(ctx.eint[a], ctx.eint[b]),
))

probe("P2", "Int(A) <= EInt(A)", SET)((
    _each_set,
    lambda ctx, a: sets.is_subset(ctx.int_[a], ctx.eint[a]),
))

probe("P3", "FInt(A) <= EInt(A)", SET)((
    _each_set,
    lambda ctx, a: sets.is_subset(ctx.fint[a], ctx.eint[a]),
))

probe("P4", "union of EInt(X_i) == EInt(union X_i)", FAMILY)((
    _each_family,
    lambda ctx, xs: _union(ctx.eint[x] for x in xs) == ctx.eint[_union(xs)],
))

probe("P5", "ECl(A) <= Cl(A)", SET)((
    _each_set,
    lambda ctx, a: sets.is_subset(ctx.ecl[a], ctx.cl[a]),
))

probe("P6", "ECl(A) <= FCl(A)", SET)((
    _each_set,
    lambda ctx, a: sets.is_subset(ctx.ecl[a], ctx.fcl[a]),
))

POSITIVE_LAWS = tuple(k for k, v in LAWS.items() if v.kind == "law")
ANTI_LAWS = tuple(k for k, v in LAWS.items() if v.kind == "anti")
PROBES = tuple(k for k, v in LAWS.items() if v.kind == "probe")
ANTI_CLAIMS = {
    "A1": ("A1",), "A2": ("A2",), "A3": ("A3",), "A4": ("A4a", "A4b", "A4c"),
    "A5": ("A5",), "A6": ("A6",), "A7": ("A7",),
}


# -- witnesses ----------------------------------------------------------------


def _encode(kind: str, value, universe: Universe):
    if kind in ("gnet", "gnet?"):
        return None if value is None else gnet_to_dict(value, universe)
    if kind == "set":
        return universe.labels_of(value)
    if kind == "point":
        return universe.labels[value]
    if kind == "family":
        return [universe.labels_of(x) for x in value]
    return value


def _decode(kind: str, value, universe: Universe):
    if kind in ("gnet", "gnet?"):
        return None if value is None else gnet_from_dict(value, universe)
    if kind == "set":
        return universe.parse(value)
    if kind == "point":
        return universe.index(value)
    if kind == "family":
        return tuple(universe.parse(x) for x in value)
    return value


def make_witness(lw: Law, ctx: LawContext, params: dict) -> dict:
    u = ctx.space.universe
    return {
        "law_id": lw.law_id,
        "space": space_to_dict(ctx.space),
        "seed": ctx.seed,
        "gnet_samples": ctx.gnet_samples,
        "family_samples": ctx.family_samples,
        "params": {k: _encode(lw.signature[k], v, u) for k, v in params.items()},
    }


def replay(witness: dict) -> bool:
    """Re-evaluate a recorded witness; ``True`` when the claim fails again on it."""
    lw = LAWS[witness["law_id"]]
    space = space_from_dict(witness["space"])
    ctx = LawContext(space, witness["seed"], witness["gnet_samples"], witness["family_samples"])
    params = {k: _decode(lw.signature[k], v, space.universe) for k, v in witness["params"].items()}
    return not lw.predicate(ctx, **params)


# -- running ------------------------------------------------------------------


@dataclass
class LawReport:
    law_id: str
    kind: str
    description: str
    spaces_checked: int = 0
    instances_checked: int = 0
    violation_count: int = 0
    violations: list = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.kind == "probe":
            return "fails" if self.violation_count else "holds"
        if self.kind == "anti":
            return "counterexample-found" if self.violation_count else "fail"
        return "fail" if self.violation_count else "pass"

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> dict:
        return {
            "law_id": self.law_id,
            "kind": self.kind,
            "description": self.description,
            "status": self.status,
            "spaces_checked": self.spaces_checked,
            "instances_checked": self.instances_checked,
            "violation_count": self.violation_count,
            "witnesses": self.violations,
        }


def run_laws(
    spaces: Iterable[GtfSpace],
    law_ids: Optional[Sequence[str]] = None,
    seed: int = DEFAULT_SEED,
    gnet_samples: int = DEFAULT_GNETS,
    family_samples: int = DEFAULT_FAMILIES,
    max_witnesses: int = 3,
) -> list[LawReport]:
    """Evaluate laws over ``spaces``; reports come back ordered as ``law_ids``.

    Anti-laws and probes stop searching once they hold a counterexample.  Each space gets
    its own context seed drawn from ``seed``, so a run is reproducible.
    """
    ids = list(law_ids) if law_ids is not None else list(LAWS)
    unknown = [i for i in ids if i not in LAWS]
    if unknown:
        raise KeyError(f"unknown law ids {unknown}")
    reports = {i: LawReport(i, LAWS[i].kind, LAWS[i].description) for i in ids}
    rng = random.Random(seed)
    for space in spaces:
        active = [i for i in ids if LAWS[i].kind == "law" or not reports[i].violation_count]
        if not active:
            break
        ctx = LawContext(space, rng.getrandbits(32), gnet_samples, family_samples)
        for i in active:
            lw, rep = LAWS[i], reports[i]
            rep.spaces_checked += 1
            for params in lw.instances(ctx):
                rep.instances_checked += 1
                if lw.predicate(ctx, **params):
                    continue
                rep.violation_count += 1
                if len(rep.violations) < max_witnesses:
                    rep.violations.append(make_witness(lw, ctx, params))
                if lw.kind != "law":
                    break
    return [reports[i] for i in ids]


def format_table(reports: Sequence[LawReport]) -> str:
    lines = [f"{'law':<5} {'kind':<5} {'status':<20} {'spaces':>6} {'instances':>10} {'hits':>6}  description"]
    for r in reports:
        lines.append(
            f"{r.law_id:<5} {r.kind:<5} {r.status:<20} {r.spaces_checked:>6} "
            f"{r.instances_checked:>10} {r.violation_count:>6}  {r.description}"
        )
    return "\n".join(lines)
