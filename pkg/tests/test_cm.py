import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SMALL_CATALOG, cached_group

from cmred.catalog import parse_cycles
from cmred.cm import (
    PAIR,
    SELF,
    CMType,
    DecompositionSignature,
    enumerate_cm_types,
    is_primitive,
    is_primitive_by_fibers,
    orbit_word,
    sigma_orbits,
    signature,
    stabilizer,
    words_from_orbits,
)
from cmred.perm import (
    central_involutions,
    generate_group,
    inverse,
    join_subgroup,
    left_cosets,
    orbit_count,
    overgroups,
    subgroups_of_order,
)
from cmred.words import WordMultiset


def worked_space():
    G = cached_group("builtin:G40_12")
    (iota,) = central_involutions(G)
    (delta_gen,) = parse_cycles("(3,4,8,9)", degree=10)
    delta = generate_group([delta_gen])
    return G, iota, left_cosets(G, delta)


# the five representative CM types of the worked example, by coset elements
WORKED_TYPES = {
    "A": ["()", "(1,3)(4,8)", "(1,4,9,3)", "(1,8,9,4,3)", "(1,9,8,3)(2,7)"],
    "B": ["()", "(1,3)(4,8)", "(1,4,9,3)", "(1,8,9,4,3)(2,7)", "(1,9,8,3)(2,7)"],
    "C": ["()", "(1,3)(4,8)", "(1,4,9,3)(2,7)", "(1,8,9,4,3)", "(1,9,8,3)(2,7)"],
    "D": ["()", "(1,3)(4,8)", "(1,4,9,3)(2,7)", "(1,8,9,4,3)(2,7)", "(1,9,8,3)(2,7)"],
    "E": ["()", "(1,3)(2,7)(4,8)", "(1,4,9,3)(2,7)", "(1,8,9,4,3)(2,7)", "(1,9,8,3)(2,7)"],
}


def named_type(space, iota, name):
    ids = set()
    for text in WORKED_TYPES[name]:
        (p,) = parse_cycles(text, degree=10)
        ids.add(space.coset_id(p))
    conj = space.right_action(iota)
    return CMType(space, frozenset(ids), conj)


def test_worked_example_counts():
    G, iota, space = worked_space()
    assert space.index == 10
    assert len(enumerate_cm_types(space, iota)) == 32
    assert len(enumerate_cm_types(space, iota, collapse_conjugates=True)) == 16
    h0 = join_subgroup(G, iota, space.subgroup)
    assert h0.order == 8


@pytest.mark.parametrize("name", sorted(WORKED_TYPES))
def test_listed_types_are_primitive_cm_types(name):
    G, iota, space = worked_space()
    t = named_type(space, iota, name)
    assert t.g == 5
    assert {t.conjugation[c] for c in t.members} == set(t.complement)
    assert t in enumerate_cm_types(space, iota)
    assert is_primitive(t) and is_primitive_by_fibers(t)


def test_each_delta_has_one_imprimitive_conjugate_pair():
    G = cached_group("builtin:G40_12")
    (iota,) = central_involutions(G)
    for delta in subgroups_of_order(G, 4, iota):
        space = left_cosets(G, delta)
        cands = overgroups(G, delta)
        bad = [t for t in enumerate_cm_types(space, iota) if not is_primitive(t)]
        assert len(bad) == 2
        assert bad[0].conjugate() == bad[1]
        for t in enumerate_cm_types(space, iota):
            assert is_primitive(t) == is_primitive_by_fibers(t, cands)


@pytest.mark.parametrize("spec,g", SMALL_CATALOG)
def test_primitivity_oracles_agree(spec, g):
    G = cached_group(spec)
    for iota in central_involutions(G):
        for delta in subgroups_of_order(G, G.order // (2 * g), iota):
            space = left_cosets(G, delta)
            cands = overgroups(G, delta)
            for t in enumerate_cm_types(space, iota):
                assert is_primitive(t) == is_primitive_by_fibers(t, cands)
                assert stabilizer(t).order % delta.order == 0


def test_cyclic_quartic_types():
    # C4 with trivial Delta: every CM type is primitive
    G = cached_group("cyclic:4")
    (iota,) = central_involutions(G)
    space = left_cosets(G, generate_group([], degree=4))
    types = enumerate_cm_types(space, iota)
    assert len(types) == 4
    assert sum(is_primitive(t) for t in types) == 4


def test_biquadratic_types_are_imprimitive():
    G = cached_group("product:cyclic:2,cyclic:2")
    space = left_cosets(G, generate_group([], degree=4))
    for iota in central_involutions(G):
        types = enumerate_cm_types(space, iota)
        assert not all(is_primitive(t) for t in types)


def test_orbit_word_orientation():
    assert str(orbit_word((0, 1, 2), {0}, "forward")) == "[FFV]"
    assert orbit_word((0, 1, 2, 3), {0, 1}, "reverse") == orbit_word((0, 1, 2, 3), {0, 1})
    with pytest.raises(ValueError):
        orbit_word((0,), set(), "sideways")


def test_signature_labels():
    sig = DecompositionSignature.from_profile([(2, SELF), (1, PAIR)])
    assert (sig.alpha, sig.beta) == (3, 2)
    assert sig.label() == "𝒫₁𝒫₁ᶜ𝒫₂"
    assert sig.label("ascii") == "P1P1cP2"
    assert DecompositionSignature.from_profile([(5, PAIR)]).label("ascii") == "PPc"
    assert DecompositionSignature.from_profile([(10, SELF)]).label("ascii") == "P"
    assert DecompositionSignature.from_profile([(1, SELF)] * 3).label("ascii") == "P1P2P3"


def test_identity_gives_split_prime():
    G, iota, space = worked_space()
    cycles = sigma_orbits(space, G.identity)
    sig = signature(cycles, space.right_action(iota))
    assert (sig.alpha, sig.beta) == (10, 5)
    t = named_type(space, iota, "A")
    assert words_from_orbits(cycles, t) == WordMultiset.parse("F,F,F,F,F,V,V,V,V,V")


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_signature_properties(data):
    G, iota, space = worked_space()
    h0_space = left_cosets(G, join_subgroup(G, iota, space.subgroup))
    sigma = data.draw(st.sampled_from(G.elements))
    t = data.draw(st.sampled_from(enumerate_cm_types(space, iota)))
    cycles = sigma_orbits(space, sigma)
    sig = signature(cycles, space.right_action(iota),
                    reference_beta=orbit_count(h0_space, "left", sigma))
    assert sig.beta <= sig.alpha <= 2 * sig.beta
    raw = words_from_orbits(cycles, t)
    assert raw.total_length == 10 and len(raw) == sig.alpha
    assert raw.factored().is_self_dual()
    # the complementary type reads every letter swapped
    assert words_from_orbits(cycles, t.conjugate()) == raw.dual()


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_translation_equivariance(data):
    """Words of (tau S, tau sigma tau^-1) equal words of (S, sigma)."""
    G, iota, space = worked_space()
    sigma = data.draw(st.sampled_from(G.elements))
    tau = data.draw(st.sampled_from(G.elements))
    t = data.draw(st.sampled_from(enumerate_cm_types(space, iota)))
    move = space.left_action(tau)
    moved = CMType(space, frozenset(move[c] for c in t.members), t.conjugation)
    assert is_primitive(moved) == is_primitive(t)
    before = words_from_orbits(sigma_orbits(space, sigma), t)
    after = words_from_orbits(sigma_orbits(space, tau * sigma * inverse(tau)), moved)
    assert before == after
