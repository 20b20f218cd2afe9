"""Structural queries on irreducible webs: neighbours, cuts, regions, weights."""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .planar import PlanarWeb

LEFT, RIGHT = "left", "right"

# Weight vector (omega1, omega2) picked up when a path crosses an edge with
# the given label from its right face to its left face.
CROSSING_WEIGHTS = {1: (1, 0), 0: (-1, 1), -1: (0, -1)}


def neighbor_pairs(web: PlanarWeb, cut: int | None = None) -> list[tuple[int, int]]:
    """Cyclically consecutive boundary positions (1-based) sharing an internal vertex."""
    nb = web.num_boundary
    pairs = []
    for k in range(1, nb + 1):
        u = web.position_vertex(k, cut)
        v = web.position_vertex(k % nb + 1, cut)
        if web.other_end(web.rotation[u][0]) == web.other_end(web.rotation[v][0]):
            pairs.append((k, k % nb + 1))
    return pairs


@dataclass(frozen=True)
class CutPath:
    """Alternating-turn walk: ``edges[0]`` enters ``vertices[0]``, and so on.

    The last vertex is a boundary vertex.
    """

    edges: tuple[int, ...]
    vertices: tuple[int, ...]
    first_turn: str

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __len__(self):
        return len(self.edges) - 1


class CutError(RuntimeError):
    pass


def cut(web: PlanarWeb, e: int, v: int, first_turn: str = LEFT) -> CutPath:
    """Walk along ``e`` into ``v`` and alternate turns until the boundary."""
    if first_turn not in (LEFT, RIGHT):
        raise ValueError(f"first_turn must be {LEFT!r} or {RIGHT!r}")
    tail, head = web.edges[e]
    if v not in (tail, head):
        raise ValueError(f"edge {e} is not incident to vertex {v}")
    h_in = 2 * e + (1 if v == head else 0)
    edges, vertices = [e], [v]
    turn = first_turn
    seen = {v}
    while not web.is_boundary(v):
        rot = web.rotation[v]
        i = rot.index(h_in)
        h_out = rot[i - 1] if turn == LEFT else rot[(i + 1) % len(rot)]
        v = web.other_end(h_out)
        if v in seen:
            raise CutError(f"cut revisits vertex {v}")
        seen.add(v)
        edges.append(h_out >> 1)
        vertices.append(v)
        h_in = h_out ^ 1
        turn = RIGHT if turn == LEFT else LEFT
    return CutPath(tuple(edges), tuple(vertices), first_turn)


def initial_cuts(web: PlanarWeb, cut_pos: int | None = None) -> tuple[int, int, CutPath, CutPath]:
    """(e*, v*, left cut, right cut) for the first boundary vertex."""
    first = web.position_vertex(1, cut_pos)
    e_star = web.boundary_edge(first)
    v_star = web.other_end(web.rotation[first][0])
    return e_star, v_star, cut(web, e_star, v_star, LEFT), cut(web, e_star, v_star, RIGHT)


@dataclass(frozen=True)
class FaceClassification:
    regions: dict[int, str]
    L1: int
    M1: int
    R1: int
    f0: int
    left_end: int
    right_end: int

    def faces(self, region: str) -> list[int]:
        return sorted(f for f, r in self.regions.items() if r == region)


def classify_regions(web: PlanarWeb, cut_pos: int | None = None) -> FaceClassification:
    """Split the disk faces into L, M, R along e* and the two cuts from v*."""
    cut_pos = web.cut if cut_pos is None else cut_pos
    topo = web.topology
    nb = web.num_boundary
    e_star, v_star, left, right = initial_cuts(web, cut_pos)
    if set(left.vertices) & set(right.vertices) != {v_star}:
        raise CutError("left and right cuts meet away from v*")
    walls = {e_star, *left.edges, *right.edges}

    parent = {f: f for f in web.disk_faces()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in range(len(web.edges)):
        if e not in walls:
            parent[find(topo.face_of[2 * e])] = find(topo.face_of[2 * e + 1])

    a = web.vertex_position(left.end, cut_pos)
    f0 = topo.f0(cut_pos, nb)
    l1 = topo.arc_face(cut_pos, nb)
    m_anchor = topo.arc_face(cut_pos + a - 1, nb)
    anchors = {find(l1): "L", find(m_anchor): "M", find(f0): "R"}
    if len(anchors) != 3:
        raise CutError("cuts do not separate three regions")
    regions = {}
    for f in parent:
        root = find(f)
        if root not in anchors:
            raise CutError(f"face {f} lies in none of the three regions")
        regions[f] = anchors[root]

    h_in = 2 * e_star + 1
    rot = web.rotation[v_star]
    m1 = topo.face_of[rot[(rot.index(h_in) + 1) % 3]]
    if len(right.edges) > 1:
        e2 = right.edges[1]
        sides = (topo.face_of[2 * e2], topo.face_of[2 * e2 + 1])
        r1 = next(f for f in sides if regions[f] == "R")
    else:
        r1 = f0
    return FaceClassification(regions, l1, m1, r1, f0, left.end, right.end)


@dataclass(frozen=True)
class Crossing:
    """One dual step: cross ``edge`` from ``source`` face into ``target`` face."""

    edge: int
    source: int
    target: int


def path_weights(web: PlanarWeb, path: Sequence[Crossing], cut_pos: int | None = None
                 ) -> tuple[int, int]:
    """Total (omega1, omega2) picked up along a chain of dual steps."""
    labels = web.edge_labels(cut_pos)
    fo = web.topology.face_of
    w1 = w2 = 0
    prev = None
    for step in path:
        left, right = fo[2 * step.edge], fo[2 * step.edge + 1]
        if prev is not None and step.source != prev:
            raise ValueError(f"step across edge {step.edge} does not start where the last ended")
        if (step.source, step.target) == (right, left):
            sign = 1
        elif (step.source, step.target) == (left, right):
            sign = -1
        else:
            raise ValueError(f"edge {step.edge} does not separate faces "
                             f"{step.source} and {step.target}")
        d1, d2 = CROSSING_WEIGHTS[labels[step.edge]]
        w1 += sign * d1
        w2 += sign * d2
        prev = step.target
    return w1, w2


def boundary_path(web: PlanarWeb, k: int, cut_pos: int | None = None) -> list[Crossing]:
    """Path from f0 running just inside the boundary across the first k boundary edges."""
    cut_pos = web.cut if cut_pos is None else cut_pos
    topo = web.topology
    nb = web.num_boundary
    steps = []
    for j in range(k):
        e = web.boundary_edge(web.position_vertex(j + 1, cut_pos))
        steps.append(Crossing(e, topo.arc_face(cut_pos + j - 1, nb), topo.arc_face(cut_pos + j, nb)))
    return steps


def random_dual_path(web: PlanarWeb, source: int, target: int, rng: random.Random,
                     wander: int = 10) -> list[Crossing]:
    """A random walk of ``wander`` steps from ``source`` followed by a shortest
    route to ``target``, staying inside the disk."""
    adj = web.topology.adj
    steps = []
    f = source
    for _ in range(wander):
        g, e = rng.choice(adj[f])
        steps.append(Crossing(e, f, g))
        f = g
    back = {f: None}
    queue = deque([f])
    while queue:
        x = queue.popleft()
        if x == target:
            break
        for g, e in adj[x]:
            if g not in back:
                back[g] = (x, e)
                queue.append(g)
    tail = []
    x = target
    while back[x] is not None:
        y, e = back[x]
        tail.append(Crossing(e, y, x))
        x = y
    return steps + tail[::-1]
