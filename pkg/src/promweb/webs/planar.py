"""Webs in a disk as combinatorial maps.

Edge ``e`` owns two half-edges: ``2e`` sits at the tail (a negative
vertex) and ``2e + 1`` at the head (a positive vertex).  Each vertex lists
its half-edges in counterclockwise order.  The boundary vertices are listed
in the order they appear on the line when the web is stretched out with the
web hanging below it; ``cut`` says which boundary vertex comes first.

Faces are computed on the map augmented by boundary arcs joining
consecutive boundary vertices, so regions touching the boundary are closed
off correctly.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Sequence

from ..tableaux import LabeledWord

PLUS, MINUS = 1, -1


class _Topology:
    """Half-edge bookkeeping for the boundary-augmented map."""

    def __init__(self, web: PlanarWeb):
        n_edges = len(web.edges)
        nb = len(web.boundary)
        self.n_web = 2 * n_edges
        total = self.n_web + 2 * nb
        origin = [0] * total
        for e, (tail, head) in enumerate(web.edges):
            origin[2 * e] = tail
            origin[2 * e + 1] = head
        for k in range(nb):
            origin[self.n_web + 2 * k] = web.boundary[k]
            origin[self.n_web + 2 * k + 1] = web.boundary[(k + 1) % nb]
        self.origin = origin

        succ = [0] * total
        pred = [0] * total
        boundary_pos = {v: k for k, v in enumerate(web.boundary)}
        for v, rot in enumerate(web.rotation):
            if v in boundary_pos:
                k = boundary_pos[v]
                rot = (self.n_web + 2 * k, self.n_web + 2 * ((k - 1) % nb) + 1) + tuple(rot)
            for i, h in enumerate(rot):
                succ[h] = rot[(i + 1) % len(rot)]
                pred[h] = rot[i - 1]
        self.succ = succ
        self.pred = pred

        face_of = [-1] * total
        faces: list[list[int]] = []
        for h0 in range(total):
            if face_of[h0] >= 0:
                continue
            orbit = []
            h = h0
            while face_of[h] < 0:
                face_of[h] = len(faces)
                orbit.append(h)
                h = pred[h ^ 1]
            faces.append(orbit)
        self.face_of = face_of
        self.faces = faces
        self.outer = face_of[self.n_web] if nb else -1

        adj: dict[int, list[tuple[int, int]]] = {f: [] for f in range(len(faces))}
        for e in range(n_edges):
            left, right = face_of[2 * e], face_of[2 * e + 1]
            adj[left].append((right, e))
            adj[right].append((left, e))
        self.adj = adj

    def f0(self, cut: int, nb: int) -> int:
        return self.face_of[self.n_web + 2 * ((cut - 1) % nb) + 1]

    def arc_face(self, k: int, nb: int) -> int:
        """Disk face just below the boundary arc between positions k and k+1."""
        return self.face_of[self.n_web + 2 * (k % nb) + 1]

    def is_arc(self, h: int) -> bool:
        return h >= self.n_web


@dataclass(frozen=True)
class PlanarWeb:
    signs: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]
    boundary: tuple[int, ...]
    cut: int = 0
    growth_labels: tuple[int, ...] | None = field(default=None, compare=False)

    @cached_property
    def topology(self) -> _Topology:
        return _Topology(self)

    @property
    def num_vertices(self) -> int:
        return len(self.signs)

    @property
    def num_boundary(self) -> int:
        return len(self.boundary)

    def is_boundary(self, v: int) -> bool:
        return v in self._boundary_set

    @cached_property
    def _boundary_set(self) -> frozenset[int]:
        return frozenset(self.boundary)

    def origin(self, h: int) -> int:
        return self.edges[h >> 1][h & 1]

    def other_end(self, h: int) -> int:
        return self.edges[h >> 1][(h & 1) ^ 1]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def position_vertex(self, k: int, cut: int | None = None) -> int:
        """Boundary vertex at 1-based position ``k`` when read from ``cut``."""
        cut = self.cut if cut is None else cut
        return self.boundary[(cut + k - 1) % self.num_boundary]

    def vertex_position(self, v: int, cut: int | None = None) -> int:
        cut = self.cut if cut is None else cut
        return (self.boundary.index(v) - cut) % self.num_boundary + 1

    def boundary_edge(self, v: int) -> int:
        (h,) = self.rotation[v]
        return h >> 1

    def _with_topology(self, **changes) -> PlanarWeb:
        new = replace(self, **changes)
        if "topology" in self.__dict__:
            new.__dict__["topology"] = self.topology
        return new

    def rotate(self, k: int = 1) -> PlanarWeb:
        """Move the cut ``k`` steps: the first boundary vertex becomes the last."""
        return self._with_topology(cut=(self.cut + k) % self.num_boundary)

    def at_cut(self, cut: int) -> PlanarWeb:
        return self._with_topology(cut=cut % self.num_boundary)

    # ----- depths and labels -----

    def face_depths(self, cut: int | None = None) -> dict[int, int]:
        """Breadth-first distance of every reachable face from the outer face."""
        cut = self.cut if cut is None else cut
        topo = self.topology
        start = topo.f0(cut, self.num_boundary)
        depth = {start: 0}
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for g, _ in topo.adj[f]:
                if g not in depth:
                    depth[g] = depth[f] + 1
                    queue.append(g)
        return depth

    def edge_labels(self, cut: int | None = None) -> list[int]:
        """Depth of the left face minus depth of the right face, per edge."""
        depth = self.face_depths(cut)
        fo = self.topology.face_of
        return [depth[fo[2 * e]] - depth[fo[2 * e + 1]] for e in range(len(self.edges))]

    def word_at_cut(self, cut: int | None = None) -> LabeledWord:
        cut = self.cut if cut is None else cut
        labels = self.edge_labels(cut)
        nb = self.num_boundary
        return LabeledWord.from_labels(
            [labels[self.boundary_edge(self.boundary[(cut + k) % nb])] for k in range(nb)])

    def words_at_all_cuts(self) -> list[LabeledWord]:
        return [self.word_at_cut(c) for c in range(self.num_boundary)]

    # ----- faces -----

    def disk_faces(self) -> list[int]:
        topo = self.topology
        return [f for f in range(len(topo.faces)) if f != topo.outer]

    def internal_faces(self) -> list[int]:
        """Faces not touching the boundary circle."""
        topo = self.topology
        return [f for f, orbit in enumerate(topo.faces)
                if not any(topo.is_arc(h) for h in orbit)]

    def face_size(self, f: int) -> int:
        topo = self.topology
        return sum(1 for h in topo.faces[f] if not topo.is_arc(h))

    # ----- canonical form and serialization -----

    def canonical_form(self, cut: int | None = None) -> tuple:
        """Relabelling-invariant code; equal codes mean isomorphic planar webs
        with matching boundary positions (read from ``cut``)."""
        cut = self.cut if cut is None else cut
        nb = self.num_boundary
        order = [self.boundary[(cut + k) % nb] for k in range(nb)]
        newid = {v: i for i, v in enumerate(order)}
        start = {v: self.rotation[v][0] for v in order}
        queue = deque(order)
        code = []
        while queue:
            v = queue.popleft()
            rot = self.rotation[v]
            i0 = rot.index(start[v])
            nbrs = []
            for h in rot[i0:] + rot[:i0]:
                u = self.other_end(h)
                if u not in newid:
                    newid[u] = len(newid)
                    start[u] = h ^ 1
                    queue.append(u)
                nbrs.append(newid[u])
            code.append((self.signs[v], tuple(nbrs)))
        return (len(self.signs) - len(newid),) + tuple(code)

    def to_json(self) -> dict:
        return {
            "signs": [self.signs[v] for v in self.boundary],
            "boundary": list(self.boundary),
            "cut": self.cut,
            "vertices": [{"id": v, "sign": s} for v, s in enumerate(self.signs)],
            "edges": [{"tail": t, "head": h} for t, h in self.edges],
            "rotations": {str(v): list(rot) for v, rot in enumerate(self.rotation)},
        }

    @classmethod
    def from_json(cls, data: dict) -> PlanarWeb:
        vertices = sorted(data["vertices"], key=lambda item: item["id"])
        if [item["id"] for item in vertices] != list(range(len(vertices))):
            raise ValueError("vertex ids must be 0..V-1")
        signs = tuple(int(item["sign"]) for item in vertices)
        edges = tuple((int(e["tail"]), int(e["head"])) for e in data["edges"])
        rotation = tuple(tuple(int(h) for h in data["rotations"][str(v)])
                         for v in range(len(vertices)))
        return cls(signs, edges, rotation, tuple(int(v) for v in data["boundary"]),
                   int(data.get("cut", 0)))

    @classmethod
    def from_embedding(cls, coords: Sequence[tuple[float, float]],
                       edges: Sequence[tuple[int, int]],
                       boundary: Sequence[int]) -> PlanarWeb:
        """Build a web from straight-line vertex positions (y pointing up).

        Vertex signs follow the edge orientation: tails negative, heads positive.
        """
        signs = [0] * len(coords)
        darts: list[list[tuple[float, int]]] = [[] for _ in coords]
        for e, (t, h) in enumerate(edges):
            signs[t] = MINUS
            signs[h] = PLUS
            for here, there, half in ((t, h, 2 * e), (h, t, 2 * e + 1)):
                dx = coords[there][0] - coords[here][0]
                dy = coords[there][1] - coords[here][1]
                darts[here].append((math.atan2(dy, dx), half))
        rotation = tuple(tuple(h for _, h in sorted(ds)) for ds in darts)
        return cls(tuple(signs), tuple(map(tuple, edges)), rotation, tuple(boundary))


@dataclass
class ValidationReport:
    checks: dict[str, bool]
    messages: dict[str, str]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": dict(self.checks), "messages": dict(self.messages)}


def validate(web: PlanarWeb, irreducible: bool = True) -> ValidationReport:
    """Check the web axioms one by one; failures are reported, not raised."""
    checks: dict[str, bool] = {}
    messages: dict[str, str] = {}

    bad = [e for e, (t, h) in enumerate(web.edges)
           if web.signs[t] != MINUS or web.signs[h] != PLUS]
    checks["bipartite_orientation"] = not bad
    if bad:
        messages["bipartite_orientation"] = f"edges not oriented - to +: {bad}"

    wrong_deg = [v for v in range(web.num_vertices)
                 if web.degree(v) != (1 if web.is_boundary(v) else 3)]
    rot_ok = all(web.origin(h) == v for v, rot in enumerate(web.rotation) for h in rot)
    all_darts = sorted(h for rot in web.rotation for h in rot)
    rot_ok = rot_ok and all_darts == list(range(2 * len(web.edges)))
    checks["degrees"] = not wrong_deg and rot_ok
    if wrong_deg:
        messages["degrees"] = f"vertices with wrong degree: {wrong_deg}"
    elif not rot_ok:
        messages["degrees"] = "rotation system does not match the edge list"

    pairs = [tuple(e) for e in web.edges]
    dupes = sorted({p for p in pairs if pairs.count(p) > 1})
    checks["no_multi_edges"] = not dupes
    if dupes:
        messages["no_multi_edges"] = f"repeated edges: {dupes}"

    if rot_ok:
        topo = web.topology
        n_v = web.num_vertices
        n_e = len(web.edges) + web.num_boundary
        n_f = len(topo.faces)
        components = _count_components(web)
        planar = n_v - n_e + n_f == 2 * components
        checks["planar"] = planar
        if not planar:
            messages["planar"] = f"V - E + F = {n_v - n_e + n_f}, expected {2 * components}"
        if irreducible:
            small = [(f, web.face_size(f)) for f in web.internal_faces() if web.face_size(f) < 6]
            checks["non_elliptic"] = not small
            if small:
                messages["non_elliptic"] = f"internal faces with fewer than 6 sides: {small}"
    else:
        checks["planar"] = False
        messages["planar"] = "rotation system unusable"
    return ValidationReport(checks, messages)


def _count_components(web: PlanarWeb) -> int:
    """Components of the web plus boundary arcs."""
    parent = list(range(web.num_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    links: Iterable[tuple[int, int]] = list(web.edges)
    nb = web.num_boundary
    links = list(links) + [(web.boundary[k], web.boundary[(k + 1) % nb]) for k in range(nb)]
    for a, b in links:
        parent[find(a)] = find(b)
    return len({find(v) for v in range(web.num_vertices)})
