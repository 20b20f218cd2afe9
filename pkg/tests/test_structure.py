import random

import pytest
from hypothesis import given, settings, strategies as st

from promweb.tableaux import LabeledWord, first_balance_positions, yamanouchi_words
from promweb.webs import (
    boundary_path,
    classify_regions,
    cut,
    enumerate_webs,
    grow,
    initial_cuts,
    neighbor_pairs,
    path_weights,
    random_dual_path,
)
from promweb.webs.structure import Crossing, CROSSING_WEIGHTS

NINE_POINT_WORD = LabeledWord.from_labels((1, 1, 1, 0, 0, -1, 0, -1, -1))
TRIPOD = LabeledWord.from_labels((1, 0, -1))


def prefix_weights(labels, k):
    head = labels[:k]
    return head.count(1) - head.count(0), head.count(0) - head.count(-1)


def test_neighbor_pairs_examples():
    assert len(neighbor_pairs(grow(NINE_POINT_WORD))) == 4
    assert neighbor_pairs(grow(TRIPOD)) == [(1, 2), (2, 3), (3, 1)]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_at_least_three_neighbor_pairs(n):
    assert all(len(neighbor_pairs(web)) >= 3 for _, web in enumerate_webs(n))


def test_neighbors_of_sorted_word_include_wraparound():
    for n in (2, 3, 4):
        web = grow(LabeledWord.parse("1" * n + "2" * n + "3" * n))
        assert (3 * n, 1) in neighbor_pairs(web)


def test_tripod_cuts():
    web = grow(TRIPOD)
    e_star, v_star, left, right = initial_cuts(web)
    assert len(left) == len(right) == 1
    assert {web.vertex_position(left.end), web.vertex_position(right.end)} == {2, 3}


def test_nine_point_cut_endpoints_follow_balance_positions():
    web = grow(NINE_POINT_WORD)
    _, _, left, right = initial_cuts(web)
    assert (web.vertex_position(left.end), web.vertex_position(right.end)) == \
        first_balance_positions(NINE_POINT_WORD.labels) == (7, 9)


def test_cut_rejects_non_incident_vertex():
    web = grow(NINE_POINT_WORD)
    with pytest.raises(ValueError):
        cut(web, 0, web.position_vertex(5))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cuts_are_disjoint_everywhere(n):
    for _, web in enumerate_webs(n):
        for e, (t, h) in enumerate(web.edges):
            for v in (t, h):
                if web.is_boundary(v):
                    continue
                left, right = cut(web, e, v, "left"), cut(web, e, v, "right")
                assert set(left.vertices) & set(right.vertices) == {v}
                assert len(set(left.vertices)) == len(left.vertices)
                assert len(set(right.vertices)) == len(right.vertices)
                assert web.is_boundary(left.end) and web.is_boundary(right.end)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_initial_cut_labels_alternate(n):
    for _, web in enumerate_webs(n):
        labels = web.edge_labels()
        _, _, left, right = initial_cuts(web)
        left_labels = [labels[e] for e in left.edges[1:]]
        right_labels = [labels[e] for e in right.edges[1:]]
        assert left_labels == [0 if k % 2 == 0 else 1 for k in range(len(left_labels))]
        assert left_labels[-1] == 0
        assert right_labels == [-1 if k % 2 == 0 else 0 for k in range(len(right_labels))]
        assert right_labels[-1] == -1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_region_depth_changes(n):
    delta = {"L": -1, "M": 0, "R": 1}
    for _, web in enumerate_webs(n):
        fc = classify_regions(web)
        before, after = web.face_depths(), web.rotate().face_depths()
        assert set(fc.regions) == set(before)
        for f, region in fc.regions.items():
            assert after[f] - before[f] == delta[region]
        assert after[fc.L1] == 0


def test_tripod_regions_are_single_gaps():
    fc = classify_regions(grow(TRIPOD))
    assert [len(fc.faces(r)) for r in "LMR"] == [1, 1, 1]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cut_endpoints_are_balance_positions(n):
    for w, web in enumerate_webs(n):
        _, _, left, right = initial_cuts(web)
        got = (web.vertex_position(left.end), web.vertex_position(right.end))
        assert got == first_balance_positions(w.labels)


def test_crossing_weights_cancel_around_a_vertex():
    assert tuple(map(sum, zip(*CROSSING_WEIGHTS.values()))) == (0, 0)


def test_empty_path_has_zero_weight():
    assert path_weights(grow(NINE_POINT_WORD), []) == (0, 0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_boundary_path_weights_are_prefix_counts(n):
    for w, web in enumerate_webs(n):
        for k in range(3 * n + 1):
            assert path_weights(web, boundary_path(web, k)) == prefix_weights(w.labels, k)


def test_path_weights_reject_broken_paths():
    web = grow(NINE_POINT_WORD)
    fo = web.topology.face_of
    with pytest.raises(ValueError):
        path_weights(web, [Crossing(0, fo[2], fo[3])])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_weights_depend_only_on_endpoints(n):
    rng = random.Random(n)
    for _, web in enumerate_webs(n):
        faces = web.disk_faces()
        for _ in range(10):
            s, t = rng.choice(faces), rng.choice(faces)
            p1 = random_dual_path(web, s, t, rng, wander=rng.randrange(12))
            p2 = random_dual_path(web, s, t, rng, wander=rng.randrange(12))
            assert path_weights(web, p1) == path_weights(web, p2)


@given(st.integers(min_value=2, max_value=4), st.data())
@settings(max_examples=40, deadline=None)
def test_closed_dual_walks_have_zero_weight(n, data):
    words = list(yamanouchi_words((n, n, n)))
    web = grow(data.draw(st.sampled_from(words)))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    f = rng.choice(web.disk_faces())
    assert path_weights(web, random_dual_path(web, f, f, rng, wander=15)) == (0, 0)
