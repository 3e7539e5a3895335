"""Forbidden-cone enumeration, membership tests, and vanishing certificates."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toric_exc.cohomology import cohomology
from toric_exc.cones import (
    ForbiddenConeSpec,
    HypothesisViolated,
    certify_acyclic,
    certify_higher_acyclic,
    enumerate_forbidden,
    forbidden_witness,
    higher_acyclic_predicate,
    in_forbidden_cone,
    lemma_acyclic_predicate,
)
from toric_exc.fan import Fan, build_Pn, build_Vn, complex_CI
from toric_exc.picard import divisor, orbit_Fckl, ray_coefficients
from toric_exc.simplicial import reduced_homology


def visible_profile(fan, rays):
    """Contribution ranks straight from the subcomplex, no cone machinery."""
    hom = reduced_homology(complex_CI(fan, rays))
    ranks = [0] * (fan.rank + 1)
    for deg, (rank, torsion) in hom.items():
        assert not torsion
        if 0 <= deg + 1 <= fan.rank:
            ranks[deg + 1] = rank
    return tuple(ranks)


def generic_clone(fan):
    return Fan(fan.rank, fan.rays, fan.max_cones)


coeff = st.integers(min_value=-4, max_value=4)


# -- enumeration --------------------------------------------------------------


def test_visible_subsets_exhaustive_hexagon():
    fan = build_Vn(2)
    by_rays = {spec.rays: spec.profile for spec in enumerate_forbidden(fan)}
    seen = 0
    for mask in range(1 << fan.nrays):
        s = frozenset(i for i in range(fan.nrays) if mask >> i & 1)
        profile = visible_profile(fan, s)
        if any(profile):
            assert by_rays[s] == profile
            seen += 1
        else:
            assert s not in by_rays
    assert seen == len(by_rays) == 34


def test_visible_subsets_sampled_dim4():
    fan = build_Vn(4)
    by_rays = {spec.rays: spec.profile for spec in enumerate_forbidden(fan)}
    assert len(by_rays) == 314
    rng = random.Random(0)
    masks = rng.sample(range(1 << fan.nrays), 150)
    for mask in masks:
        s = frozenset(i for i in range(fan.nrays) if mask >> i & 1)
        profile = visible_profile(fan, s)
        if any(profile):
            assert by_rays[s] == profile
        else:
            assert s not in by_rays


def test_primitive_union_brute_path_matches_closed_form():
    fan = build_Vn(2)
    clone = generic_clone(fan)
    fast = {(spec.rays, spec.profile) for spec in enumerate_forbidden(fan)}
    slow = {(spec.rays, spec.profile) for spec in enumerate_forbidden(clone)}
    assert fast == slow


def test_all_subsets_path_matches_closed_form():
    fan = build_Vn(2)
    unrestricted = enumerate_forbidden(fan, restrict_to_primitive_unions=False)
    assert {(s.rays, s.profile) for s in unrestricted} \
        == {(s.rays, s.profile) for s in enumerate_forbidden(fan)}


def test_spec_counts():
    assert len(enumerate_forbidden(build_Vn(2))) == 34
    assert len(enumerate_forbidden(build_Vn(4))) == 314
    assert len(enumerate_forbidden(build_Vn(6))) == 2986


def test_specs_sorted_and_degrees():
    specs = enumerate_forbidden(build_Vn(2))
    keys = [(len(s.rays), sorted(s.rays)) for s in specs]
    assert keys == sorted(keys)
    empty = specs[0]
    assert empty.rays == frozenset()
    assert empty.profile == (1, 0, 0)
    assert empty.degrees == (0,)


def test_projective_space_specs():
    specs = enumerate_forbidden(build_Pn(2))
    assert [(sorted(s.rays), s.profile) for s in specs] \
        == [([], (1, 0, 0)), ([0, 1, 2], (0, 0, 1))]
    specs = enumerate_forbidden(build_Pn(3))
    assert [(sorted(s.rays), s.profile) for s in specs] \
        == [([], (1, 0, 0, 0)), ([0, 1, 2, 3], (0, 0, 0, 1))]


# -- membership ---------------------------------------------------------------


def test_boundary_class_needs_closed_test():
    # h^1 = 1 carried by a single character on the cone boundary: the open
    # test misses every cone and would certify a non-acyclic class.
    fan = build_Vn(2)
    d = divisor(-1, [-1, 1, 1])
    assert cohomology(fan, d).ranks == (0, 1, 0)
    closed_hits = [s.rays for s in enumerate_forbidden(fan)
                   if in_forbidden_cone(fan, s, d)]
    assert closed_hits == [frozenset({0, 3})]
    assert not any(in_forbidden_cone(fan, s, d, strict=True)
                   for s in enumerate_forbidden(fan))
    assert not certify_acyclic(fan, d)
    assert forbidden_witness(fan, d).rays == frozenset({0, 3})


@settings(max_examples=40, deadline=None)
@given(h=coeff, d=st.tuples(coeff, coeff, coeff))
def test_interval_path_matches_lp_path(h, d):
    fan = build_Vn(2)
    clone = generic_clone(fan)
    dd = divisor(h, d)
    raw = ray_coefficients(2, dd)
    for spec in enumerate_forbidden(fan):
        assert in_forbidden_cone(fan, spec, dd) \
            == in_forbidden_cone(clone, spec, raw)


def test_interval_path_matches_lp_path_dim4():
    fan = build_Vn(4)
    clone = generic_clone(fan)
    specs = enumerate_forbidden(fan)[::11]
    rng = random.Random(1)
    for _ in range(6):
        dd = divisor(rng.randint(-4, 4), [rng.randint(-4, 4) for _ in range(5)])
        raw = ray_coefficients(4, dd)
        for spec in specs:
            assert in_forbidden_cone(fan, spec, dd) \
                == in_forbidden_cone(clone, spec, raw)


@settings(max_examples=30, deadline=None)
@given(h=coeff, d=st.tuples(coeff, coeff, coeff), m=st.tuples(
    st.integers(min_value=-2, max_value=2), st.integers(min_value=-2, max_value=2)))
def test_membership_ignores_choice_of_lift(h, d, m):
    fan = build_Vn(2)
    clone = generic_clone(fan)
    raw = ray_coefficients(2, divisor(h, d))
    shifted = tuple(a + sum(mi * ui for mi, ui in zip(m, ray))
                    for a, ray in zip(raw, fan.rays))
    for spec in enumerate_forbidden(fan)[::5]:
        assert in_forbidden_cone(clone, spec, raw) \
            == in_forbidden_cone(clone, spec, shifted)


# -- certificates against the oracle ------------------------------------------


@settings(max_examples=60, deadline=None)
@given(h=coeff, d=st.tuples(coeff, coeff, coeff))
def test_certificates_sound_and_hits_complete(h, d):
    fan = build_Vn(2)
    dd = divisor(h, d)
    ranks = cohomology(fan, dd).ranks
    if certify_acyclic(fan, dd):
        assert ranks == (0, 0, 0)
    if certify_higher_acyclic(fan, dd):
        assert ranks[1:] == (0, 0)
    empty = enumerate_forbidden(fan)[0]
    if any(ranks):
        assert not certify_acyclic(fan, dd)
    if any(ranks[1:]):
        assert not certify_higher_acyclic(fan, dd)
    if ranks[0]:
        assert in_forbidden_cone(fan, empty, dd)


def test_structure_sheaf_only_hits_effective_cone():
    fan = build_Vn(2)
    o = divisor(0, [0, 0, 0])
    hits = [s.rays for s in enumerate_forbidden(fan) if in_forbidden_cone(fan, s, o)]
    assert hits == [frozenset()]
    assert certify_higher_acyclic(fan, o)
    assert not certify_acyclic(fan, o)


# -- family predicates --------------------------------------------------------


def family_shapes(n):
    for k in range(n + 2):
        for ell in range(n + 2 - k):
            yield k, ell


def test_predicate_hypothesis_gate():
    with pytest.raises(HypothesisViolated):
        lemma_acyclic_predicate(2, 1, 2, 1)
    with pytest.raises(HypothesisViolated):
        lemma_acyclic_predicate(2, 0, 0, 0)
    with pytest.raises(HypothesisViolated):
        lemma_acyclic_predicate(2, 0, -1, 1)
    with pytest.raises(HypothesisViolated):
        lemma_acyclic_predicate(2, 0, 2, 2)
    with pytest.raises(HypothesisViolated):
        higher_acyclic_predicate(4, 0, 3, 3)
    assert higher_acyclic_predicate(2, 0, 0, 0) is not None
    assert isinstance(higher_acyclic_predicate(2, 2, 2, 1), bool)


def test_lemma_predicate_sound_hexagon():
    fan = build_Vn(2)
    true_count = checked = 0
    for k, ell in family_shapes(2):
        for c in range(-4, 5):
            if k > ell or (c, k, ell) == (0, 0, 0):
                continue
            if not lemma_acyclic_predicate(2, c, k, ell):
                continue
            true_count += 1
            for member in orbit_Fckl(2, c, k, ell):
                assert cohomology(fan, member).is_zero
                assert certify_acyclic(fan, member)
                checked += 1
    assert true_count == 8
    assert checked == 19


def test_lemma_predicate_sound_dim4():
    fan = build_Vn(4)
    true_count = 0
    for k, ell in family_shapes(4):
        for c in range(-4, 5):
            if k > ell or (c, k, ell) == (0, 0, 0):
                continue
            if not lemma_acyclic_predicate(4, c, k, ell):
                continue
            true_count += 1
            for member in orbit_Fckl(4, c, k, ell):
                assert cohomology(fan, member).is_zero
    assert true_count == 29


def test_higher_predicate_sound_hexagon():
    fan = build_Vn(2)
    true_count = 0
    for k, ell in family_shapes(2):
        for c in range(-4, 5):
            if not higher_acyclic_predicate(2, c, k, ell):
                continue
            true_count += 1
            for member in orbit_Fckl(2, c, k, ell):
                assert cohomology(fan, member).ranks[1:] == (0, 0)
                assert certify_higher_acyclic(fan, member)
    assert true_count == 20


def test_higher_predicate_sound_dim4():
    fan = build_Vn(4)
    true_count = 0
    for k, ell in family_shapes(4):
        for c in range(-4, 5):
            if not higher_acyclic_predicate(4, c, k, ell):
                continue
            true_count += 1
            for member in orbit_Fckl(4, c, k, ell):
                assert cohomology(fan, member).ranks[1:] == (0,) * 4
    assert true_count == 62


def test_lemma_is_higher_plus_no_sections():
    # the full-vanishing range is exactly the positive-degree range with the
    # section-bearing stripe (l = 0, -k <= c <= 0) removed
    for n in (2, 4, 6, 8):
        for k, ell in family_shapes(n):
            if k > ell:
                continue
            for c in range(-2 * n - 2, 2 * n + 3):
                if (c, k, ell) == (0, 0, 0):
                    continue
                effective = ell == 0 and -k <= c <= 0
                assert lemma_acyclic_predicate(n, c, k, ell) \
                    == (higher_acyclic_predicate(n, c, k, ell) and not effective)
