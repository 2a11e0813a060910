import random

import pytest
from hypothesis import given, settings, strategies as st

from _gen import random_plane_embedding
from graphjac.errors import GuardError, InputError
from graphjac.intlinalg import cokernel_group
from graphjac.jacobian import jacobian, reduced_laplacian
from graphjac.multigraph import Multigraph, complete_graph
from graphjac.planar import (PlanarEmbedding, cycle_embedding, dual_graph,
                             embedding_from_coordinates, face_cycle_matrix,
                             face_incidence_matrix, format_embedding, format_faces,
                             inner_faces, jacobian_via_faces, outer_face, parse_embedding,
                             trace_faces)


@st.composite
def embeddings(draw, max_n=9, max_extra=8):
    rng = random.Random(draw(st.integers(0, 10**6)))
    return random_plane_embedding(rng, draw(st.integers(2, max_n)), draw(st.integers(0, max_extra)))


def test_cycle_faces():
    emb = cycle_embedding(5)
    faces = trace_faces(emb)
    assert len(faces) == 2 and faces.lengths == [5, 5]
    assert face_cycle_matrix(emb).tolist() == [[5]]


def test_k4_drawing():
    coords = [(0, 0), (2, 0), (1, 2), (1, 0.7)]
    emb = embedding_from_coordinates(complete_graph(4), coords)
    assert sorted(trace_faces(emb).lengths) == [3, 3, 3, 3]
    assert jacobian_via_faces(emb) == jacobian(complete_graph(4))


def test_tree_single_face():
    g = Multigraph(3, ((0, 1), (1, 2)))
    emb = embedding_from_coordinates(g, [(0, 0), (1, 0), (2, 1)])
    assert trace_faces(emb).lengths == [4]
    assert face_cycle_matrix(emb).rows == 0
    assert jacobian_via_faces(emb).is_trivial()


def test_bridge_contributes_nothing():
    # triangle with a pendant edge: the bridge lies on the outer face twice
    g = Multigraph(4, ((0, 1), (1, 2), (2, 0), (0, 3)))
    emb = embedding_from_coordinates(g, [(0, 0), (1, 0), (0, 1), (-1, -1)])
    assert face_cycle_matrix(emb).tolist() == [[3]]


def test_euler_guard_on_bad_rotation():
    # K4 with a rotation system of genus 1
    g = complete_graph(4)
    emb = embedding_from_coordinates(g, [(0, 0), (2, 0), (1, 2), (1, 0.7)])
    rot = [list(r) for r in emb.rotations]
    rot[3] = [rot[3][0], rot[3][2], rot[3][1]]
    with pytest.raises(GuardError):
        trace_faces(PlanarEmbedding(g, rot))


def test_disconnected_embedding_guard():
    g = Multigraph(4, ((0, 1), (2, 3)))
    emb = PlanarEmbedding(g, (((0, 0),), ((0, 1),), ((1, 0),), ((1, 1),)))
    with pytest.raises(GuardError):
        trace_faces(emb)


def test_rotation_validation():
    g = Multigraph(2, ((0, 1),))
    with pytest.raises(InputError):
        PlanarEmbedding(g, (((0, 1),), ((0, 0),)))
    with pytest.raises(InputError):
        PlanarEmbedding(g, (((0, 0),), ()))


@given(embeddings())
@settings(max_examples=150, deadline=None)
def test_face_matrix_equals_dual_reduced_laplacian(emb):
    B = face_cycle_matrix(emb)
    Bf = face_incidence_matrix(emb)
    assert B == Bf @ Bf.T
    dual, _ = dual_graph(emb)
    assert B == reduced_laplacian(dual.without_loops(), outer_face(emb))
    assert B.rows == emb.graph.genus()


@given(embeddings())
@settings(max_examples=150, deadline=None)
def test_face_groups_match_laplacian_and_dual(emb):
    jac = jacobian(emb.graph)
    assert jacobian_via_faces(emb) == jac
    assert jacobian(dual_graph(emb)[0]) == jac
    for k in range(len(trace_faces(emb))):
        assert cokernel_group(face_cycle_matrix(emb.with_outer(k))) == jac


@given(embeddings())
@settings(max_examples=100, deadline=None)
def test_euler_and_dual_counts(emb):
    g = emb.graph
    faces = trace_faces(emb)
    assert g.vertex_count - g.edge_count + len(faces) == 2
    assert sum(faces.lengths) == 2 * g.edge_count
    dual, edge_map = dual_graph(emb)
    assert dual.vertex_count == len(faces) and dual.edge_count == g.edge_count
    assert edge_map == list(range(g.edge_count))
    assert len(inner_faces(emb)) == len(faces) - 1


@given(embeddings())
@settings(max_examples=60, deadline=None)
def test_embedding_round_trip(emb):
    text = format_embedding(emb.with_outer(0))
    assert format_embedding(parse_embedding(text)) == text


def test_outer_face_selection():
    emb = cycle_embedding(4)
    assert outer_face(emb) == 0
    assert outer_face(emb.with_outer(1)) == 1
    with pytest.raises(InputError):
        outer_face(emb.with_outer(5))


def test_format_faces_marks_outer(data_dir):
    emb = parse_embedding((data_dir / "four_face.emb").read_text())
    lines = format_faces(emb).splitlines()
    assert len(lines) == 5
    assert sum("outer" in line for line in lines) == 1


@pytest.mark.parametrize("text", ["n 2\ne 0 1\nrot 0 0:0\nrot 0 0:1\n",
                                  "n 2\ne 0 1\nrot 0 0-0\nrot 1 0:1\n",
                                  "n 2\ne 0 1\nrot 0 0:0\nrot 1 0:1\nouter\n"])
def test_embedding_parse_errors(text):
    with pytest.raises(InputError):
        parse_embedding(text)
