import pytest
from hypothesis import given, settings, strategies as st

from gtfspace import (
    DomainError,
    GeneralizedTopology,
    GtfSpace,
    InvalidSpaceError,
    MalformedInputError,
    Universe,
    build_topology,
    closure,
    empty_flagged_points,
    example_space,
    interior,
    kernel,
    make_space,
    orphaned_points,
    preimage,
    validate_gtf,
)
from gtfspace import sets
from gtfspace.io import space_to_dict
from gtfspace.space import forced_assoc, is_union_closed

from conftest import spaces
from oracle import Oracle, union_closure


def labels(space, fam):
    return {frozenset(space.universe.labels_of(x)) for x in fam}


def fs(*labels_):
    return frozenset(str(x) for x in labels_)


# -- build_topology -------------------------------------------------------------


def test_build_topology_single_generator():
    u = Universe(("w", "v"))
    mu = build_topology(u, [u.parse(["w"])])
    assert mu.opens == {0, u.parse(["w"])}


def test_build_topology_no_generators():
    u = Universe(("a",))
    assert build_topology(u, []).opens == {0}


def test_build_topology_chain_is_already_closed():
    u = Universe(tuple(str(i) for i in range(1, 6)))
    gens = [u.parse(x) for x in (["1"], ["1", "3"], ["1", "3", "5"])]
    mu = build_topology(u, gens)
    assert labels(mu_space(u, mu), mu.opens) == {fs(), fs(1), fs(1, 3), fs(1, 3, 5)}


def mu_space(u, mu):
    return make_space(u, mu, {})


def test_build_topology_rejects_out_of_range():
    with pytest.raises(MalformedInputError):
        build_topology(Universe(("a", "b")), [0b100])


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(1, (1 << n) - 1), max_size=6))))
def test_build_topology_matches_oracle_and_is_idempotent(args):
    n, gens = args
    u = Universe.of_size(n)
    mu = build_topology(u, gens)
    expected = union_closure([u.labels_of(g) for g in gens])
    assert {frozenset(u.labels_of(x)) for x in mu.opens} == expected
    assert build_topology(u, mu.opens) == mu
    assert 0 in mu.opens and is_union_closed(mu.opens)
    assert mu.union == sets.union_all(mu.opens)


def test_topology_rejects_non_union_closed_family():
    with pytest.raises(MalformedInputError):
        GeneralizedTopology(frozenset({0, 0b01, 0b10}))
    with pytest.raises(MalformedInputError):
        GeneralizedTopology(frozenset({0b01}))


# -- validate_gtf ---------------------------------------------------------------


def test_two_point_space_is_valid(tp):
    assert validate_gtf(tp).ok


def test_orphan_with_non_open_set_is_rejected():
    u = Universe(("w", "v", "u"))
    mu = build_topology(u, [u.parse(["w"])])
    space = make_space(u, mu, {u.index("v"): [u.parse(["w"]), u.parse(["u"])]}, check=False)
    report = validate_gtf(space)
    assert not report.ok
    assert [v["clause"] for v in report.violations] == ["associated-in-mu"]
    assert report.violations[0]["point"] == "v" and report.violations[0]["set"] == ["u"]
    with pytest.raises(InvalidSpaceError):
        interior(space, 0)


def test_forced_only_space_is_valid():
    u = Universe.of_size(4)
    mu = build_topology(u, [0b0011, 0b0110])
    assert validate_gtf(make_space(u, mu, {})).ok


def test_conflicting_forced_value_is_reported():
    u = Universe(("w", "v"))
    mu = build_topology(u, [u.parse(["w"])])
    space = make_space(u, mu, {0: []}, check=False)
    assert [v["clause"] for v in validate_gtf(space).violations] == ["forced-missing"]
    u3 = Universe(("a", "b", "c"))
    mu3 = build_topology(u3, [0b001, 0b010])
    space = make_space(u3, mu3, {0: [0b001, 0b010, 0b011]}, check=False)
    assert [v["clause"] for v in validate_gtf(space).violations] == ["forced-extra"]


@settings(max_examples=200)
@given(spaces(), st.data())
def test_validation_agrees_with_direct_recheck(space, data):
    # perturb one point's family and compare with a literal re-check of both clauses
    w = data.draw(st.integers(0, space.n - 1))
    extra = data.draw(st.integers(0, space.full))
    assoc = list(space.assoc)
    assoc[w] = assoc[w] | {extra}
    broken = GtfSpace(space.universe, space.topology, tuple(assoc))
    mu = space.mu
    direct = all(
        (fam == forced_assoc(space.topology, p)) if space.union_mu >> p & 1 else fam <= mu
        for p, fam in enumerate(broken.assoc)
    )
    assert validate_gtf(broken).ok == direct


# -- classical operators and bookkeeping ------------------------------------------


def test_interior_examples(tp):
    u = tp.universe
    assert interior(tp, u.parse(["w"])) == u.parse(["w"])
    assert interior(tp, u.parse(["v"])) == 0
    odd = example_space("base", 5)
    assert odd.universe.labels_of(interior(odd, odd.universe.parse(["1", "3", "6"]))) == ["1", "3"]


def test_closure_examples(tp):
    u = tp.universe
    assert closure(tp, u.parse(["v"])) == u.parse(["v"])
    assert closure(tp, u.parse(["w"])) == u.full
    assert closure(tp, u.full) == u.full


@settings(max_examples=100)
@given(spaces())
def test_interior_and_closure_properties(space):
    o = Oracle(space_to_dict(space))
    for a in range(space.full + 1):
        i = interior(space, a)
        assert sets.is_subset(i, a) and i in space.mu
        assert closure(space, a) == space.full & ~interior(space, space.full & ~a)
        assert frozenset(space.universe.labels_of(i)) == o.int_(frozenset(space.universe.labels_of(a)))


def test_orphaned_points(tp):
    assert orphaned_points(tp) == tp.universe.parse(["v"])
    odd = example_space("prime", 4)
    assert odd.universe.labels_of(orphaned_points(odd)) == ["2", "4", "6", "8"]
    u = Universe(("a", "b"))
    strong = make_space(u, build_topology(u, [0b11]), {})
    assert orphaned_points(strong) == 0


def test_preimage(tp):
    assert preimage(tp, tp.universe.parse(["w"])) == tp.full
    with pytest.raises(DomainError):
        preimage(tp, tp.universe.parse(["v"]))


def test_preimage_of_empty_set_is_empty_flagged():
    u = Universe(("a", "b", "c"))
    space = make_space(u, build_topology(u, [0b001]), {1: [0], 2: []})
    assert preimage(space, 0) == empty_flagged_points(space) == u.parse(["b"])


def test_preimage_triple_prime_matches_enumeration():
    space = example_space("triple_prime", 5)
    u = space.universe
    a = u.parse(["1", "3", "5", "7"])
    o = Oracle(space_to_dict(space))
    expected = {z for z in o.order if frozenset(u.labels_of(a)) in o.F[z]}
    assert set(u.labels_of(preimage(space, a))) == expected == {"1", "3", "5", "7", "8", "10"}


def test_kernel(tp):
    assert kernel(tp, tp.universe.index("v")) == tp.universe.parse(["w"])
    u = Universe(("a", "b", "c"))
    space = make_space(u, build_topology(u, [0b001]), {2: []})
    assert kernel(space, 2) == u.full
    odd = example_space("base", 4)
    ou = odd.universe
    mixed = make_space(ou, odd.topology, {ou.index("2"): [ou.parse(["1", "3"]), ou.parse(["1", "3", "5"])]})
    assert ou.labels_of(kernel(mixed, ou.index("2"))) == ["1", "3"]


@settings(max_examples=100)
@given(spaces())
def test_kernel_properties(space):
    for v in range(space.n):
        k = kernel(space, v)
        folded = space.full
        for g in space.assoc[v]:
            folded &= g
        assert k == folded
        if space.union_mu >> v & 1:
            assert k >> v & 1


def test_empty_flagged_points(tp):
    assert empty_flagged_points(tp) == 0
    for name in ("base", "prime", "double_prime", "triple_prime"):
        assert empty_flagged_points(example_space(name, 4)) == 0


# -- example spaces ----------------------------------------------------------------


def fam_labels(space, point):
    u = space.universe
    return {frozenset(u.labels_of(x)) for x in space.assoc[u.index(point)]}


def test_triple_prime_eight():
    space = example_space("triple_prime", 5)
    assert fam_labels(space, "8") == {fs(1), fs(1, 3), fs(1, 3, 5), fs(1, 3, 5, 7)}


def test_prime_eight_truncated():
    space = example_space("prime", 6)
    assert fam_labels(space, "8") == {fs(1, 3, 5, 7), fs(1, 3, 5, 7, 9), fs(1, 3, 5, 7, 9, 11)}
    assert fam_labels(space, "8") == fam_labels(space, "7")


def test_double_prime_eight_truncated():
    space = example_space("double_prime", 5)
    assert fam_labels(space, "8") == {fs(1, 3, 5, 7, 9)}
    assert fam_labels(space, "10") == set()


def test_triple_prime_at_truncation_edge():
    space = example_space("triple_prime", 3)
    assert fam_labels(space, "6") == {fs(1), fs(1, 3), fs(1, 3, 5)}


def test_base_example_shape():
    space = example_space("base", 3)
    assert space.universe.labels == ("1", "2", "3", "4", "5", "6")
    assert labels(space, space.mu) == {fs(), fs(1), fs(1, 3), fs(1, 3, 5)}
    assert all(not space.assoc[space.universe.index(p)] for p in ("2", "4", "6"))
    assert fam_labels(space, "3") == {fs(1, 3), fs(1, 3, 5)}


@pytest.mark.parametrize("k", range(1, 8))
def test_triple_prime_cross_check(k):
    triple, prime = example_space("triple_prime", k), example_space("prime", k)
    u = triple.universe
    nonempty = triple.mu - {0}
    for n in range(2, 2 * k, 2):
        successor = u.index(str(n + 1))
        # F''' at n equals non-empty opens minus F' at delta(n) = n + 1
        assert triple.assoc[u.index(str(n))] == nonempty - prime.assoc[successor]


def test_example_errors():
    with pytest.raises(DomainError):
        example_space("quadruple", 3)
    with pytest.raises(DomainError):
        example_space("base", 0)
