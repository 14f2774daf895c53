"""Component classification of commuting tuples, face maps, the boundary
tables, and the homology of the component complex."""

import itertools

import pytest
from hypothesis import given, strategies as st

from kocom.commuting import (
    RELABELINGS,
    boundary_matrix,
    canonical_tuple,
    classify_component,
    component_complex,
    component_homology,
    enumerate_components,
    face_map,
    generates_cyclic,
    h2_bcom_so3,
    relabel,
)
from kocom.integral import is_zero, mat_mult, smith_normal_form
from kocom.o2 import D4Element

I, C1, C2, C3 = D4Element.I, D4Element.C1, D4Element.C2, D4Element.C3

#: The table rows frozen from the face-map computation on the seven listed
#: exotic triples; (1,0) marks the trivial pair component, (0,1) the exotic
#: one.  Columns are d0, d1, d2, d3.
FACE_TABLE = {
    (C1, C2, I): ("(1,0)", "(1,0)", "(0,1)", "(0,1)"),
    (C1, C2, C1): ("(0,1)", "(0,1)", "(0,1)", "(0,1)"),
    (I, C2, C3): ("(0,1)", "(0,1)", "(1,0)", "(1,0)"),
    (C1, I, C3): ("(1,0)", "(0,1)", "(0,1)", "(1,0)"),
    (C1, C2, C3): ("(0,1)", "(1,0)", "(1,0)", "(0,1)"),
    (C1, C2, C2): ("(1,0)", "(0,1)", "(1,0)", "(0,1)"),
    (C2, C2, C3): ("(0,1)", "(1,0)", "(0,1)", "(1,0)"),
}

LISTED_TRIPLES = tuple(FACE_TABLE)

d4_tuples = st.lists(st.sampled_from(list(D4Element)), min_size=0, max_size=4).map(
    tuple
)


def test_classify_examples():
    assert not classify_component((I, C2)).exotic
    label = classify_component((C1, C2, C2))
    assert label.exotic and label.canonical == (C1, C2, C2)
    assert not classify_component((C3, C3, C3)).exotic  # generates one cyclic group
    assert not classify_component(()).exotic


def test_component_counts():
    assert [len(enumerate_components(n)) for n in range(4)] == [1, 1, 2, 8]


def test_exotic_triple_count_by_brute_force():
    # independent count: tuples generating a non-cyclic subgroup, divided by
    # the six free relabelings
    noncyclic = sum(
        1
        for t in itertools.product(D4Element, repeat=3)
        if not generates_cyclic(t)
    )
    assert noncyclic == 42
    assert len(enumerate_components(3)) == 1 + noncyclic // 6


def test_listed_triples_match_canonical_components():
    listed = {canonical_tuple(t) for t in LISTED_TRIPLES}
    computed = {c.canonical for c in enumerate_components(3) if c.exotic}
    assert listed == computed
    assert len(listed) == 7


def test_face_map_examples():
    assert face_map(0, (C1, C2, C2)) == (C2, C2)
    assert not classify_component(face_map(0, (C1, C2, C2))).exotic
    assert face_map(1, (C1, C2, C2)) == (C3, C2)
    assert classify_component(face_map(1, (C1, C2, C2))).exotic
    assert face_map(3, (C1, C2, I)) == (C1, C2)
    assert classify_component(face_map(3, (C1, C2, I))).exotic
    with pytest.raises(IndexError):
        face_map(4, (C1, C2, C2))
    with pytest.raises(IndexError):
        face_map(-1, (C1, C2, C2))


def test_face_table_all_entries():
    for triple, row in FACE_TABLE.items():
        for i in range(4):
            face = classify_component(face_map(i, triple))
            assert row[i] == ("(0,1)" if face.exotic else "(1,0)"), (triple, i)


def test_simplicial_identities_exhaustive():
    for n in range(2, 5):
        for t in itertools.product(D4Element, repeat=n):
            for j in range(n + 1):
                for i in range(j):
                    assert face_map(i, face_map(j, t)) == face_map(
                        j - 1, face_map(i, t)
                    )


@given(d4_tuples, st.sampled_from(range(len(RELABELINGS))))
def test_relabeling_equivariance(t, perm_index):
    perm = RELABELINGS[perm_index]
    assert classify_component(relabel(perm, t)) == classify_component(t)
    for i in range(len(t) + 1):
        assert face_map(i, relabel(perm, t)) == relabel(perm, face_map(i, t))


def test_boundary_level_2():
    assert boundary_matrix(2) == [[1, 1]]


def test_boundary_level_3():
    mat = boundary_matrix(3)
    assert len(mat) == 2 and len(mat[0]) == 8
    nonzero_cols = [
        tuple(row[j] for row in mat)
        for j in range(8)
        if any(row[j] for row in mat)
    ]
    assert sorted(nonzero_cols) == [(-2, 2), (2, -2)]
    assert smith_normal_form(mat) == [2]


def test_boundaries_compose_to_zero():
    complex_ = component_complex(4)
    for p in range(2, 5):
        assert is_zero(mat_mult(complex_.boundary(p - 1), complex_.boundary(p)))


def test_homology_values():
    assert str(component_homology(2)) == "Z/2"
    assert str(h2_bcom_so3()) == "Z/2 + Z/2"


def test_level_zero_and_one():
    assert boundary_matrix(1) == [[0]]
    assert str(component_homology(0)) == "Z"
