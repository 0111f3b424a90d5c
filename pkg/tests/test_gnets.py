import random

import pytest
from hypothesis import given, settings, strategies as st

from gtfspace import (
    DomainError,
    FinitePoset,
    Gnet,
    MalformedInputError,
    ResourceError,
    Universe,
    antichain,
    chain,
    constant_gnet,
    converges,
    e_converges,
    e_limits,
    example_space,
    f_closure,
    is_et1,
    is_ft1,
    limit_points,
    limits,
    subset_poset,
    witness_gnet,
)
from gtfspace import sets
from gtfspace.gnets import all_gnets, eventually, frequently, is_directed, is_sequence, subset_gnet
from gtfspace.laws import exhaustive_spaces_upto, random_poset

from conftest import spaces
import oracle


# -- posets ------------------------------------------------------------------------


def test_from_pairs_adds_reflexive_pairs():
    p = FinitePoset.from_pairs(["x", "y"], [("x", "y")])
    assert p.leq(0, 1) and p.leq(0, 0) and not p.leq(1, 0)


def test_from_pairs_rejects_non_transitive():
    with pytest.raises(MalformedInputError, match="transitive"):
        FinitePoset.from_pairs("abc", [("a", "b"), ("b", "c")])


def test_from_pairs_rejects_cycle():
    with pytest.raises(MalformedInputError, match="antisymmetric"):
        FinitePoset.from_pairs("ab", [("a", "b"), ("b", "a")])


def test_from_pairs_unknown_element():
    with pytest.raises(MalformedInputError, match="unknown"):
        FinitePoset.from_pairs("ab", [("a", "z")])


def test_empty_poset_rejected():
    with pytest.raises(MalformedInputError):
        FinitePoset((), ())


def test_from_covers_closes_transitively():
    p = FinitePoset.from_covers("abc", [("a", "b"), ("b", "c")])
    assert p.leq(0, 2)
    assert p.maximal() == [2]


def test_chain_and_antichain():
    assert is_sequence(chain(4)) and is_directed(chain(4))
    assert not is_directed(antichain(2)) and is_directed(antichain(1))
    assert antichain(3).maximal() == [0, 1, 2]


def test_subset_poset():
    u = Universe(("a", "b", "c"))
    p = subset_poset(u)
    assert len(p) == 7
    top = p.elements.index("{a}")
    full = p.elements.index("{a,b,c}")
    assert p.leq(full, top) and not p.leq(top, full)
    assert is_directed(p) is False  # {a} and {b} have no common upper bound
    with pytest.raises(ResourceError):
        subset_poset(Universe.of_size(4), cap=3)


def test_gnet_requires_full_map():
    with pytest.raises(MalformedInputError):
        Gnet(chain(2), (0,))


# -- eventually / frequently ---------------------------------------------------------


def literal(g):
    p = g.domain
    leq = set(p.pairs())
    value = {e: v for e, v in zip(p.elements, g.values)}
    return list(p.elements), leq, value


@settings(max_examples=200)
@given(st.integers(0, 2**32), st.integers(1, 4))
def test_eventually_frequently_match_literal_quantifiers(seed, n):
    rng = random.Random(seed)
    p = random_poset(rng, 6)
    g = Gnet(p, tuple(rng.randrange(n) for _ in range(len(p))))
    elements, leq, value = literal(g)
    for u in range(1 << n):
        members = set(sets.iter_bits(u))
        assert eventually(g, u) == oracle.eventually(elements, leq, value, members)
        assert frequently(g, u) == oracle.frequently(elements, leq, value, members)


def test_eventually_on_chain():
    g = Gnet(chain(3), (0, 1, 1))
    assert eventually(g, 0b10) and not eventually(g, 0b01)
    assert frequently(g, 0b10) and not frequently(g, 0b01)


# -- convergence ---------------------------------------------------------------------


def test_two_point_convergence(tp):
    u = tp.universe
    w, v = u.index("w"), u.index("v")
    const_v = constant_gnet(chain(1), v)
    assert not converges(tp, const_v, v)
    assert e_converges(tp, const_v, v)
    assert limits(tp, const_v) == 0
    assert e_limits(tp, const_v) == u.full
    const_w = constant_gnet(chain(2), w)
    assert limits(tp, const_w) == u.full


def test_two_point_separation(tp):
    assert not is_ft1(tp)
    assert not is_et1(tp)


def test_separation_on_discrete_space():
    u = Universe.of_size(3)
    from gtfspace import build_topology, make_space

    space = make_space(u, build_topology(u, [1, 2, 4]), {})
    assert is_ft1(space) and is_et1(space)


def test_vacuous_convergence_to_unassociated_points():
    space = example_space("base", 2)
    u = space.universe
    g = constant_gnet(chain(1), u.index("3"))
    assert u.labels_of(limits(space, g)) == ["2", "3", "4"]


@settings(max_examples=100)
@given(spaces(max_size=4), st.integers(0, 2**32))
def test_limits_match_definition(space, seed):
    rng = random.Random(seed)
    p = random_poset(rng, 5)
    g = Gnet(p, tuple(rng.randrange(space.n) for _ in range(len(p))))
    elements, leq, value = literal(g)
    for w in range(space.n):
        conv = all(
            oracle.eventually(elements, leq, value, set(sets.iter_bits(s))) for s in space.assoc[w]
        )
        freq = all(
            oracle.frequently(elements, leq, value, set(sets.iter_bits(s))) for s in space.assoc[w]
        )
        assert conv == bool(limits(space, g) >> w & 1) == converges(space, g, w)
        assert freq == bool(limit_points(space, g) >> w & 1)
    if is_directed(p):
        assert sets.is_subset(limits(space, g), limit_points(space, g))
    assert sets.is_subset(limits(space, g), e_limits(space, g))


def test_gnet_value_outside_universe(tp):
    with pytest.raises(MalformedInputError):
        limits(tp, Gnet(chain(1), (5,)))


def test_all_gnets_count():
    assert len(list(all_gnets(chain(2), 3))) == 9


# -- witness gnets -------------------------------------------------------------------


def check_witness(space, w, a):
    g = witness_gnet(space, w, a)
    if not f_closure(space, a) >> w & 1:
        assert g is None
        return
    assert g is not None
    assert sets.is_subset(g.image(), a)
    elements, leq, value = literal(g)
    for s in space.assoc[w]:
        assert oracle.eventually(elements, leq, value, set(sets.iter_bits(s)))


def test_witness_two_point_space(tp):
    u = tp.universe
    g = witness_gnet(tp, u.index("v"), u.parse(["w"]))
    assert g.values == (u.index("w"),)
    assert witness_gnet(tp, u.index("v"), u.parse(["v"])) is None


def test_witness_for_unassociated_point_uses_subset_poset():
    space = example_space("base", 2)
    u = space.universe
    g = witness_gnet(space, u.index("2"), u.parse(["3", "4"]))
    assert len(g.domain) == 15
    assert set(g.values) == {u.index("3")}


def test_witness_rejects_empty_target(tp):
    with pytest.raises(DomainError):
        witness_gnet(tp, 0, 0)


def test_witness_exhaustive_small_spaces():
    for space in exhaustive_spaces_upto(3):
        for w in range(space.n):
            for a in range(1, space.full + 1):
                check_witness(space, w, a)


@settings(max_examples=100)
@given(spaces(max_size=5), st.data())
def test_witness_random(space, data):
    w = data.draw(st.integers(0, space.n - 1))
    a = data.draw(st.integers(1, space.full))
    check_witness(space, w, a)


def test_subset_gnet_converges_to_its_directions():
    u = Universe.of_size(3)
    g = subset_gnet(u)
    # up-set of {x} is just {x}: every singleton tail is hit
    assert eventually(g, 0b001)
    assert eventually(g, 0b010)
