import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from promweb.spider import attach_uncrossing_raw
from promweb.tableaux import LabeledWord, count_syt, promote, promote_word, tableau_of_word, \
    word_of_tableau, yamanouchi_words
from promweb.webs import (
    GrowthStall,
    Matching,
    PlanarWeb,
    enumerate_webs,
    grow,
    matching_of_word,
    rotate_matching,
    validate,
    word_of_matching,
)
from promweb.webs.render import to_dot, to_svg, tutte_layout

NINE_POINT_WORD = LabeledWord.from_labels((1, 1, 1, 0, 0, -1, 0, -1, -1))


def nine_point_web() -> PlanarWeb:
    """The nine-point web drawn with straight edges; boundary on y = 5, web below."""
    coords = [(x, 5) for x in range(1, 10)] + [
        (3.5, 4), (5.5, 4), (7.5, 4), (4.5, 3), (4.5, 2), (6, 2), (6, 1)]
    l = {k: k - 1 for k in range(1, 10)}
    a = {k: 8 + k for k in range(1, 8)}
    edges = [(l[1], a[7]), (l[2], a[5]), (l[3], a[1]), (l[4], a[1]), (l[5], a[2]), (l[6], a[2]),
             (l[7], a[3]), (l[8], a[3]), (l[9], a[7]), (a[4], a[1]), (a[4], a[2]), (a[4], a[5]),
             (a[6], a[5]), (a[6], a[3]), (a[6], a[7])]
    return PlanarWeb.from_embedding(coords, edges, [l[k] for k in range(1, 10)])


NINE_POINT_LABELS = [1, 1, 1, 0, 0, -1, 0, -1, -1, -1, 1, 0, -1, 1, 0]


def tripod() -> PlanarWeb:
    return grow(LabeledWord.from_labels((1, 0, -1)))


def test_tripod_shape():
    web = tripod()
    assert web.num_vertices == 4
    assert sorted(web.signs) == [-1, -1, -1, 1]
    assert web.word_at_cut().labels == (1, 0, -1)
    assert validate(web).ok


def test_tripod_depths():
    depths = tripod().face_depths()
    assert sorted(depths.values()) == [0, 1, 1]


def test_nine_point_hand_built_web_is_valid():
    assert validate(nine_point_web()).ok


def test_nine_point_depths_and_labels():
    web = nine_point_web()
    assert sorted(web.face_depths().values()) == [0, 1, 1, 2, 2, 2, 3, 3, 3]
    assert web.edge_labels() == NINE_POINT_LABELS
    assert web.word_at_cut() == NINE_POINT_WORD


def test_nine_point_growth_reproduces_the_drawing():
    assert grow(NINE_POINT_WORD).canonical_form() == nine_point_web().canonical_form()


def test_nine_point_rotation():
    assert nine_point_web().rotate().word_at_cut().labels == (1, 1, 0, 0, -1, 1, -1, 0, -1)


def test_every_internal_vertex_sees_all_three_labels():
    for _, web in enumerate_webs(3):
        labels = web.edge_labels()
        for v, rot in enumerate(web.rotation):
            if not web.is_boundary(v):
                assert sorted(labels[h >> 1] for h in rot) == [-1, 0, 1]


def test_injected_square_fails_non_elliptic():
    # A web with a square: two H-pieces stacked (the result of an uncrossing).
    web = attach_uncrossing_raw(grow(LabeledWord.parse("112233")), 2)
    report = validate(web)
    assert report.checks["degrees"] and report.checks["bipartite_orientation"]
    assert not report.checks["non_elliptic"]
    assert not report.ok


def test_bad_orientation_is_reported():
    web = tripod()
    flipped = PlanarWeb(tuple(-s for s in web.signs), web.edges, web.rotation, web.boundary)
    report = validate(flipped)
    assert not report.checks["bipartite_orientation"]


def test_growth_stall_on_unbalanced_word():
    with pytest.raises(GrowthStall, match="stalled"):
        grow(LabeledWord.parse("1112213"))


def test_json_round_trip():
    web = grow(NINE_POINT_WORD).rotate(2)
    data = json.loads(json.dumps(web.to_json()))
    back = PlanarWeb.from_json(data)
    assert back == web
    assert set(data) == {"signs", "boundary", "cut", "vertices", "edges", "rotations"}


def test_full_turn_restores_word():
    web = grow(NINE_POINT_WORD)
    assert web.rotate(9).word_at_cut() == NINE_POINT_WORD
    assert web.rotate(9) == web


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumerate_counts(n):
    assert len(list(enumerate_webs(n))) == count_syt((n, n, n))


def test_forty_two_distinct_webs():
    codes = {web.canonical_form() for _, web in enumerate_webs(3)}
    assert len(codes) == 42


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_round_trip_and_validity(n):
    for w, web in enumerate_webs(n):
        assert web.word_at_cut() == w
        assert validate(web).ok


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rotation_is_promotion(n):
    for w, web in enumerate_webs(n):
        assert web.rotate().word_at_cut() == promote_word(w)
        assert word_of_tableau(promote(tableau_of_word(w))) == web.rotate().word_at_cut()


def test_rotation_matches_regrown_web_structurally():
    for w, web in enumerate_webs(3):
        assert web.rotate().canonical_form() == grow(promote_word(w)).canonical_form()


def test_growth_labels_are_depth_labels():
    for _, web in enumerate_webs(4):
        assert list(web.growth_labels) == web.edge_labels()


def test_growth_random_order_same_web():
    rng = random.Random(7)
    for w, web in enumerate_webs(3):
        for _ in range(10):
            assert grow(w, rng=rng).canonical_form() == web.canonical_form()


def test_adjacent_faces_differ_by_at_most_one():
    for _, web in enumerate_webs(3):
        depth = web.face_depths()
        fo = web.topology.face_of
        for e in range(len(web.edges)):
            assert abs(depth[fo[2 * e]] - depth[fo[2 * e + 1]]) <= 1


# ----- matchings -----

def test_matching_examples():
    m = matching_of_word(LabeledWord.parse("121122"))
    assert m.arcs() == [(1, 2), (3, 6), (4, 5)]
    assert str(word_of_matching(rotate_matching(m))) == "111222"
    m2 = matching_of_word(LabeledWord.parse("121212"))
    assert str(word_of_matching(rotate_matching(m2))) == "112122"
    assert rotate_matching(m2, 2) == m2


def test_single_arc_fixed():
    m = Matching.from_arcs([(1, 2)])
    assert rotate_matching(m) == m


def test_crossing_matching_rejected():
    with pytest.raises(ValueError, match="cross"):
        Matching.from_arcs([(1, 3), (2, 4)])


@pytest.mark.parametrize("n", range(1, 7))
def test_matching_rotation_is_promotion(n):
    for w in yamanouchi_words((n, n)):
        m = matching_of_word(w)
        assert word_of_matching(m) == w
        rotated = word_of_matching(rotate_matching(m))
        assert rotated == word_of_tableau(promote(tableau_of_word(w)))


@given(st.integers(min_value=1, max_value=6), st.data())
@settings(max_examples=50, deadline=None)
def test_matching_full_turn(n, data):
    words = list(yamanouchi_words((n, n)))
    m = matching_of_word(data.draw(st.sampled_from(words)))
    assert rotate_matching(m, 2 * n) == m


# ----- rendering -----

def test_render_outputs():
    web = grow(NINE_POINT_WORD)
    dot = to_dot(web)
    assert dot.startswith("digraph") and dot.count("->") == len(web.edges)
    svg = to_svg(web)
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    pos = tutte_layout(web)
    assert pos.shape == (web.num_vertices, 2)
