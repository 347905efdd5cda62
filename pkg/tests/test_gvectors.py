"""Edge maps, walks, and g-dagger vectors/clusters."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlab import (
    GVector,
    MutationPath,
    UnknownVertex,
    g_dagger_cluster,
    g_dagger_vector,
    mutate,
    phi_minus,
    phi_path,
    phi_plus,
    phi_step,
    pos_neg_split,
    walk,
)
from test_quiver import skew_matrices


@st.composite
def matrix_vertex_vector(draw, max_n=8, max_entry=4, max_coord=10):
    b = draw(skew_matrices(max_n=max_n, max_entry=max_entry))
    k = draw(st.sampled_from(list(b.vertices)))
    g = GVector(
        tuple(
            draw(st.integers(min_value=-max_coord, max_value=max_coord))
            for _ in b.vertices
        )
    )
    return b, k, g


def test_path_literal_round_trip():
    assert MutationPath.parse("1,2,1").steps == ("1", "2", "1")
    assert MutationPath.parse("").steps == ()
    assert MutationPath.parse("1, 2").literal() == "1,2"


def test_walk_empty_is_base(a2):
    node = walk(a2, ())
    assert node.b_at_node == a2
    assert node.label_map == {"1": "1", "2": "2"}


def test_walk_backtrack_cancels(a2):
    node = walk(a2, ("1", "1"))
    assert node.b_at_node == a2
    assert node.label_map == {"1": "1", "2": "2"}


def test_walk_single_step_marks_slot(a3):
    node = walk(a3, ("2",))
    assert node.b_at_node == mutate(a3, "2")
    assert node.label_map == {"1": "1", "2": "2*", "3": "3"}


def test_walk_unknown_label(a2):
    with pytest.raises(UnknownVertex):
        walk(a2, ("3",))


def test_phi_plus_on_basis_vector(a2):
    # e_k goes to -e_k plus the positive column [b_jk]_+
    img = phi_plus(GVector((0, 1)), a2, "2")
    assert img.coords == (1, -1)


def test_phi_branches_agree_on_wall(a2):
    g = GVector((5, 0))
    assert phi_plus(g, a2, "2") == phi_minus(g, a2, "2") == phi_step(g, a2, "2")


def test_phi_step_examples(a2):
    assert phi_step(GVector((0, 1)), a2, "2").coords == (1, -1)
    assert phi_step(GVector((0, -1)), a2, "2").coords == (0, 1)


@given(matrix_vertex_vector())
def test_phi_edge_round_trip(data):
    b, k, g = data
    assert phi_step(phi_step(g, b, k), mutate(b, k), k) == g


@given(skew_matrices(max_n=6, max_entry=4))
@settings(max_examples=60, deadline=None)
def test_phi_branch_matrices_are_unimodular(b):
    """Each linear branch fixes n-1 basis vectors and has determinant -1."""
    from qlab.verify import int_det

    n = len(b.vertices)
    for k in b.vertices:
        for branch in (phi_plus, phi_minus):
            cols = [branch(GVector.basis(n, i), b, k).coords for i in range(n)]
            rows = [[cols[j][i] for j in range(n)] for i in range(n)]
            assert int_det(rows) == -1


@given(matrix_vertex_vector(max_coord=6))
def test_phi_piecewise_linearity(data):
    """Additive and Z>=0-homogeneous on each closed halfspace."""
    b, k, g = data
    for sign in (1, -1):
        # two vectors in the same closed halfspace {sign * g_k >= 0}
        u = GVector(tuple(sign * abs(c) for c in g.coords))
        h = GVector(tuple(sign * abs(c) for c in reversed(g.coords)))
        total = GVector(tuple(a + c for a, c in zip(u, h)))
        assert phi_step(total, b, k).coords == tuple(
            x + y for x, y in zip(phi_step(u, b, k), phi_step(h, b, k))
        )
        tripled = GVector(tuple(3 * c for c in u.coords))
        assert phi_step(tripled, b, k).coords == tuple(3 * c for c in phi_step(u, b, k))


def test_phi_path_empty_and_cancellation(a2):
    g = GVector((3, -2))
    assert phi_path(g, a2, ()) == g
    for k in a2.vertices:
        assert phi_path(g, a2, (k, k)) == g


def test_phi_path_from_mutated_source(a2):
    # the step from the mu_1 node back toward the base uses that node's matrix
    assert phi_path(GVector((1, 0)), mutate(a2, "1"), ("1",)).coords == (-1, 1)


def test_g_dagger_vector_examples(a2):
    assert g_dagger_vector(a2, (), "1").coords == (1, 0)
    assert g_dagger_vector(a2, ("1",), "1").coords == (-1, 1)
    assert g_dagger_vector(a2, ("1",), "2").coords == (0, 1)


def test_g_dagger_cluster_examples(a2):
    base = g_dagger_cluster(a2, ())
    assert {l: v.coords for l, v in base.vectors.items()} == {"1": (1, 0), "2": (0, 1)}
    one = g_dagger_cluster(a2, ("1",))
    assert {v.coords for v in one.vectors.values()} == {(-1, 1), (0, 1)}


def test_pentagon_vector_union(a2):
    """All paths of length <= 5 reach exactly the five A2 g-dagger vectors."""
    seen = set()
    paths = [()]
    for _ in range(5):
        paths = [p + (k,) for p in paths for k in a2.vertices]
        for p in paths:
            for v in g_dagger_cluster(a2, p).vectors.values():
                seen.add(v.coords)
    assert seen == {(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1)}


@given(skew_matrices(max_n=5, max_entry=3), st.data())
@settings(max_examples=50, deadline=None)
def test_backtracking_prefix_is_invisible(b, data):
    labels = list(b.vertices)
    path = tuple(
        data.draw(st.sampled_from(labels)) for _ in range(data.draw(st.integers(0, 4)))
    )
    k = data.draw(st.sampled_from(labels))
    direct = g_dagger_cluster(b, path)
    padded = g_dagger_cluster(b, (k, k) + path)
    assert {l: v.coords for l, v in direct.vectors.items()} == {
        l: v.coords for l, v in padded.vectors.items()
    }


def test_pos_neg_split_examples():
    p, q = pos_neg_split(GVector((2, -3, 0)))
    assert p.coords == (2, 0, 0) and q.coords == (0, 3, 0)
    p, q = pos_neg_split(GVector((0, 0)))
    assert p.coords == (0, 0) and q.coords == (0, 0)
    p, q = pos_neg_split(GVector((0, 1)))
    assert p.coords == (0, 1) and q.coords == (0, 0)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=8))
def test_pos_neg_split_reconstructs_with_disjoint_support(coords):
    g = GVector(tuple(coords))
    p, q = pos_neg_split(g)
    assert all(a >= 0 for a in p) and all(a >= 0 for a in q)
    assert tuple(a - b for a, b in zip(p, q)) == g.coords
    assert all(a * b == 0 for a, b in zip(p, q))
