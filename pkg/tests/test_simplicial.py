"""Reduced homology against hand values and a sympy-based oracle."""

from itertools import combinations

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from toric_exc.simplicial import (
    has_torsion,
    homology_ranks,
    is_acyclic,
    reduced_homology,
    simplicial_complex,
)


def oracle_homology(facets):
    """Independent computation: sympy rank and Smith form on fresh matrices."""
    faces = set()
    for facet in facets:
        labels = tuple(sorted(set(facet)))
        for k in range(len(labels) + 1):
            faces.update(frozenset(c) for c in combinations(labels, k))
    if not faces:
        return {}
    top = max(len(f) for f in faces) - 1
    layers = {
        p: sorted((f for f in faces if len(f) == p + 1), key=sorted)
        for p in range(-1, top + 1)
    }
    rank_b, tors_b = {}, {}
    for p in range(0, top + 1):
        index = {f: i for i, f in enumerate(layers[p - 1])}
        m = sympy.zeros(len(layers[p - 1]), len(layers[p]))
        for j, face in enumerate(layers[p]):
            labels = sorted(face)
            for i in range(len(labels)):
                sub = frozenset(labels[:i] + labels[i + 1 :])
                m[index[sub], j] = (-1) ** i
        rank_b[p] = m.rank()
        if m.rows and m.cols:
            diag = [abs(x) for x in sympy_snf(m, domain=sympy.ZZ).diagonal()]
        else:
            diag = []
        tors_b[p] = tuple(sorted(int(d) for d in diag if d > 1))
    return {
        p: (len(layers[p]) - rank_b.get(p, 0) - rank_b.get(p + 1, 0),
            tors_b.get(p + 1, ()))
        for p in range(-1, top + 1)
    }


def test_void_complex():
    assert reduced_homology(simplicial_complex([])) == {}


def test_empty_face_only():
    assert reduced_homology(simplicial_complex([[]])) == {-1: (1, ())}


def test_single_point_acyclic():
    k = simplicial_complex([[0]])
    assert reduced_homology(k) == {-1: (0, ()), 0: (0, ())}
    assert is_acyclic(k)


def test_two_points():
    assert homology_ranks(simplicial_complex([[0], [1]])) == {-1: 0, 0: 1}


def test_three_points():
    assert homology_ranks(simplicial_complex([[0], [1], [2]]))[0] == 2


def test_triangle_boundary_is_circle():
    k = simplicial_complex([[0, 1], [1, 2], [0, 2]])
    assert homology_ranks(k) == {-1: 0, 0: 0, 1: 1}


def test_filled_triangle_acyclic():
    assert is_acyclic(simplicial_complex([[0, 1, 2]]))


def test_tetrahedron_boundary_is_sphere():
    facets = list(combinations(range(4), 3))
    assert homology_ranks(simplicial_complex(facets)) == {-1: 0, 0: 0, 1: 0, 2: 1}


def test_projective_plane_torsion():
    # six-vertex triangulation: 10 triangles, every pair of vertices an edge
    facets = [
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
        (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6),
    ]
    k = simplicial_complex(facets)
    assert len(k.faces_of_dim(1)) == 15
    assert reduced_homology(k) == {-1: (0, ()), 0: (0, ()), 1: (0, (2,)), 2: (0, ())}
    assert has_torsion(k)
    assert not is_acyclic(k)


def test_annulus_vs_disk():
    # hollow square: a circle
    k = simplicial_complex([[0, 1], [1, 2], [2, 3], [0, 3]])
    assert homology_ranks(k)[1] == 1


small_facet_lists = st.lists(
    st.sets(st.integers(0, 5), min_size=1, max_size=4).map(tuple),
    min_size=0,
    max_size=7,
)


@settings(max_examples=50, deadline=None)
@given(small_facet_lists)
def test_matches_sympy_oracle(facets):
    assert reduced_homology(simplicial_complex(facets)) == oracle_homology(facets)


@settings(max_examples=50, deadline=None)
@given(small_facet_lists)
def test_reduced_euler_characteristic(facets):
    k = simplicial_complex(facets)
    hom = reduced_homology(k)
    chi_faces = sum((-1) ** (len(f) - 1) for f in k.faces)
    chi_hom = sum((-1) ** p * r for p, (r, _) in hom.items())
    assert chi_faces == chi_hom


@settings(max_examples=40, deadline=None)
@given(small_facet_lists, st.permutations(list(range(6))))
def test_relabel_invariance(facets, perm):
    relabeled = [[perm[v] for v in f] for f in facets]
    assert reduced_homology(simplicial_complex(facets)) == reduced_homology(
        simplicial_complex(relabeled)
    )
