import pytest
from hypothesis import given, settings, strategies as st

from gtfspace import (
    DomainError,
    ResourceError,
    Universe,
    build_topology,
    classify_closedness,
    classify_openness,
    closure,
    enumerate_f_open,
    example_space,
    f_closure,
    f_interior,
    interior,
    make_space,
    open_hull,
)
from gtfspace import sets
from gtfspace.io import space_to_dict

from conftest import spaces
from oracle import Oracle


def lab(space, mask):
    return frozenset(space.universe.labels_of(mask))


def test_fint_two_point_space(tp):
    u = tp.universe
    assert f_interior(tp, u.parse(["w"])) == u.full
    assert f_interior(tp, u.parse(["v"])) == 0
    assert f_interior(tp, 0) == 0


def test_fcl_two_point_space(tp):
    u = tp.universe
    assert f_closure(tp, u.parse(["v"])) == 0
    assert f_closure(tp, u.parse(["w"])) == u.full


def test_fcl_vacuous_for_unassociated_points():
    space = example_space("base", 3)
    u = space.universe
    assert u.labels_of(f_closure(space, 0)) == ["2", "4", "6"]


def test_classification_two_point_space(tp):
    u = tp.universe
    w = classify_openness(tp, u.parse(["w"]))
    assert (w.f_open, w.df_open, w.uf_open) == (False, False, True)
    assert classify_openness(tp, u.full).f_open
    v = classify_closedness(tp, u.parse(["v"]))
    assert (v.f_closed, v.df_closed, v.uf_closed) == (False, True, False)


def test_open_hull_prime_example():
    space = example_space("prime", 5)
    u = space.universe
    o4 = u.parse(["1", "3", "5", "7"])
    assert u.labels_of(open_hull(space, o4)) == [str(i) for i in range(1, 9)]


def test_open_hull_rejects_non_open(tp):
    with pytest.raises(DomainError):
        open_hull(tp, tp.universe.parse(["v"]))


def test_f_open_family_two_point_space(tp):
    assert enumerate_f_open(tp) == [0, tp.full]


def test_enumeration_cap():
    space = example_space("base", 3)
    with pytest.raises(ResourceError, match="--cap"):
        enumerate_f_open(space, cap=5)
    assert enumerate_f_open(space, cap=6)


@settings(max_examples=150)
@given(spaces())
def test_operators_match_oracle(space):
    o = Oracle(space_to_dict(space))
    for a in range(space.full + 1):
        la = lab(space, a)
        assert lab(space, f_interior(space, a)) == o.fint(la)
        assert lab(space, f_closure(space, a)) == o.fcl(la)
    assert {lab(space, s) for s in enumerate_f_open(space)} == o.f_open()


@settings(max_examples=150)
@given(spaces(), st.data())
def test_duality_and_monotonicity(space, data):
    a = data.draw(st.integers(0, space.full))
    b = data.draw(st.integers(0, space.full)) | a
    comp = space.full & ~a
    assert f_closure(space, a) == space.full & ~f_interior(space, comp)
    assert sets.is_subset(f_interior(space, a), f_interior(space, b))
    assert sets.is_subset(f_closure(space, a), f_closure(space, b))
    assert sets.is_subset(interior(space, a), f_interior(space, a))
    assert sets.is_subset(f_closure(space, a), closure(space, a))
    assert f_interior(space, a) & space.union_mu == interior(space, a)


@settings(max_examples=150)
@given(spaces(), st.data())
def test_classification_consistency(space, data):
    a = data.draw(st.integers(0, space.full))
    o, c = classify_openness(space, a), classify_closedness(space, a)
    assert o.f_open == (o.df_open and o.uf_open)
    assert c.f_closed == (c.df_closed and c.uf_closed)
    # F-open complements are F-closed, and conversely
    co = classify_closedness(space, space.full & ~a)
    assert o.f_open == co.f_closed
    assert o.df_open == co.uf_closed
    assert o.uf_open == co.df_closed


@settings(max_examples=150)
@given(spaces())
def test_open_hull_is_f_open_and_covers_preimage(space):
    for g in space.mu:
        hull = open_hull(space, g)
        assert f_interior(space, hull) == hull
        assert sets.is_subset(g, hull)
        for z, fz in enumerate(space.assoc):
            if g in fz:
                assert hull >> z & 1


@settings(max_examples=100)
@given(spaces())
def test_empty_set_f_open_iff_unflagged(space):
    opens = set(enumerate_f_open(space))
    assert (0 in opens) == (not any(0 in fz for fz in space.assoc))
    assert (space.full in opens) == all(space.assoc)


def test_f_open_sets_need_not_be_union_closed():
    # c only sees {a,b}, so {a} and {b} are F-open while {a,b} pulls c in
    u = Universe(("a", "b", "c"))
    space = make_space(u, build_topology(u, [0b001, 0b010]), {2: [0b011]})
    opens = enumerate_f_open(space)
    assert 0b001 in opens and 0b010 in opens and 0b011 not in opens


def test_fint_not_contained_in_set():
    u = Universe(("a", "b"))
    space = make_space(u, build_topology(u, [0b01]), {1: [0b01]})
    assert f_interior(space, 0b01) == 0b11
