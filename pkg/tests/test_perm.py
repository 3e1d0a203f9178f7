from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SMALL_CATALOG, cached_group

from cmred.catalog import G40_12_GENERATORS, parse_cycles
from cmred.perm import (
    CapacityError,
    Permutation,
    PermutationError,
    center,
    central_involutions,
    compose,
    double_cosets,
    element_order,
    generate_group,
    inverse,
    join_subgroup,
    left_cosets,
    orbit_count,
    overgroups,
    subgroups_of_order,
)


def G40():
    return generate_group(parse_cycles(G40_12_GENERATORS))


perms = st.integers(1, 9).flatmap(
    lambda n: st.permutations(range(n)).map(lambda p: Permutation(tuple(p))))


@given(perms)
def test_inverse_composes_to_identity(p):
    assert compose(p, inverse(p)).is_identity()
    assert compose(inverse(p), p).is_identity()


@given(perms)
def test_element_order_is_least_power(p):
    k = element_order(p)
    q = p
    for _ in range(k - 1):
        assert not q.is_identity()
        q = q * p
    assert q.is_identity()


def test_composition_applies_right_factor_first():
    p = Permutation.from_cycles([(1, 2)], 3)
    q = Permutation.from_cycles([(2, 3)], 3)
    # q sends 1->1, then p sends 1->2
    assert (p * q).images[0] == 1
    assert (p * q).images[2] == 0


def test_degree_mismatch_rejected():
    with pytest.raises(PermutationError):
        compose(Permutation.identity(2), Permutation.identity(3))
    with pytest.raises(PermutationError):
        generate_group([Permutation.identity(2), Permutation.identity(3)])


def test_four_cycle_order():
    (p,) = parse_cycles("(3,4,8,9)", degree=10)
    assert element_order(p) == 4


def test_worked_group_order_and_center():
    G = G40()
    assert G.order == 40
    (iota,) = central_involutions(G)
    assert str(iota) == "(2,7)"


def test_order_ten_element():
    G = G40()
    flip = Permutation.from_cycles([(2, 7)], 10)
    fives = [x for x in G.elements if element_order(x) == 5]
    assert fives
    for x in fives:
        y = flip * x
        # oracle: repeated composition
        k, z = 1, y
        while not z.is_identity():
            z, k = z * y, k + 1
        assert k == element_order(y)
    # the product of the flip with a 5-cycle of this group has order 10
    assert any(element_order(flip * x) == 10 for x in fives)


def test_trivial_and_symmetric():
    assert generate_group([], degree=4).order == 1
    assert generate_group([Permutation.identity(4)]).order == 1
    s3 = generate_group(parse_cycles("(1,2);(1,2,3)"))
    assert s3.order == 6
    # oracle: all of S3 by brute force
    assert {p.images for p in s3.elements} == {
        (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)}


def test_order_cap():
    with pytest.raises(CapacityError, match="order_cap=10"):
        generate_group(parse_cycles("(1,2);(1,2,3,4,5)"), order_cap=10)


def test_generation_is_deterministic():
    a = generate_group(parse_cycles(G40_12_GENERATORS))
    b = generate_group(list(reversed(parse_cycles(G40_12_GENERATORS))))
    assert a.elements == b.elements
    assert list(a.elements) == sorted(a.elements)


@pytest.mark.parametrize("spec,_g", SMALL_CATALOG)
def test_group_axioms(spec, _g):
    G = cached_group(spec)
    T = G.table
    e = G.identity_index
    assert (T[e] == range(G.order)).all()
    inv = G.inverse_indices
    assert all(T[i, inv[i]] == e for i in range(G.order))
    for g in G.generators:
        assert g in G


def test_central_involutions_examples():
    assert central_involutions(generate_group(parse_cycles("(1,2,3)"))) == []
    d8 = cached_group("dihedral:8")
    assert center(d8).order == 2
    assert [str(z) for z in central_involutions(d8)] == ["(1,3)(2,4)"]


def test_delta_candidates_worked_group():
    G = G40()
    (iota,) = central_involutions(G)
    deltas = subgroups_of_order(G, 4, iota)
    assert len(deltas) == 10
    for d in deltas:
        assert d.order == 4 and iota not in d
        assert join_subgroup(G, iota, d).order == 8


def test_d8_order_two_subgroups():
    G = cached_group("dihedral:8")
    (iota,) = central_involutions(G)
    assert len(subgroups_of_order(G, 2, iota)) == 4
    assert len(subgroups_of_order(G, 2)) == 5


def test_subgroup_cap():
    G = cached_group("wreath-c2:symmetric:3")
    with pytest.raises(CapacityError, match="subgroup_search_cap"):
        subgroups_of_order(G, 8, subgroup_search_cap=40)


def _all_subgroups_brute(G, max_gens=3):
    """Subgroups as closures of every subset of at most ``max_gens`` elements."""
    T = G.table

    def close(gens):
        seen = {G.identity_index}
        frontier = [G.identity_index]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = int(T[x, s])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    subs = {frozenset([G.identity_index])}
    for k in range(1, max_gens + 1):
        for gens in combinations(range(G.order), k):
            subs.add(close(gens))
    return subs


@pytest.mark.parametrize("spec", ["dihedral:8", "dihedral:12", "cyclic:10", "dihedral:20",
                                  "product:alternating:4,cyclic:2", "builtin:G40_12"])
def test_subgroup_search_is_complete(spec):
    G = cached_group(spec)
    brute = _all_subgroups_brute(G)
    iotas = central_involutions(G)
    for m in sorted({len(s) for s in brute}):
        found = {frozenset(G.indices_of(h.elements).tolist()) for h in subgroups_of_order(G, m)}
        assert found == {s for s in brute if len(s) == m}
        for iota in iotas:
            i = G.index_of(iota)
            found = {frozenset(G.indices_of(h.elements).tolist())
                     for h in subgroups_of_order(G, m, iota)}
            assert found == {s for s in brute if len(s) == m and i not in s}


def test_overgroups_of_trivial_in_c4():
    G = cached_group("cyclic:4")
    trivial = generate_group([], degree=4)
    assert sorted(h.order for h in overgroups(G, trivial)) == [1, 2, 4]


@pytest.mark.parametrize("spec,_g", SMALL_CATALOG)
def test_cosets_partition_and_lagrange(spec, _g):
    G = cached_group(spec)
    for m in (1, 2):
        for h in subgroups_of_order(G, m)[:3]:
            space = left_cosets(G, h)
            assert space.index * h.order == G.order
            seen = sorted(i for mem in space.members for i in mem)
            assert seen == list(range(G.order))
            assert all(space.coset_of[i] >= 0 for i in range(G.order))


def test_right_action_requires_normalizer():
    G = cached_group("symmetric:3")
    h = generate_group(parse_cycles("(1,2)", degree=3))
    space = left_cosets(G, h)
    with pytest.raises(PermutationError):
        space.right_action(Permutation.from_cycles([(1, 2, 3)], 3))


@pytest.mark.parametrize("spec,g", SMALL_CATALOG)
def test_double_coset_count_matches_partition(spec, g):
    G = cached_group(spec)
    for iota in central_involutions(G):
        for delta in subgroups_of_order(G, G.order // (2 * g), iota):
            space = left_cosets(G, delta)
            for sigma in G.elements:
                cyclic = generate_group([sigma])
                n = orbit_count(space, "left", sigma)
                assert n == len(double_cosets(G, cyclic, delta))


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_translation_preserves_orbit_structure(data):
    G = G40()
    (iota,) = central_involutions(G)
    delta = data.draw(st.sampled_from(subgroups_of_order(G, 4, iota)))
    sigma = data.draw(st.sampled_from(G.elements))
    tau = data.draw(st.sampled_from(G.elements))
    space = left_cosets(G, delta)
    # conjugate elements have the same orbit count on G/Delta
    assert orbit_count(space, "left", sigma) == orbit_count(space, "left", tau * sigma * inverse(tau))
