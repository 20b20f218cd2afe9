"""Spider reduction and the symmetric group action on web spaces.

Rank ``A2`` webs are planar webs with all boundary vertices negative; rank
``A1`` webs are noncrossing matchings.  Linear combinations are kept in a
:class:`WebSum` keyed by the dominant word of each irreducible web.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .tableaux import LabeledWord, as_partition, count_syt, enumeration_cap, \
    EnumerationLimitError, promote_word, yamanouchi_words
from .webs.growth import grow
from .webs.matching import Matching, matching_of_word, rotate_matching, word_of_matching
from .webs.planar import MINUS, PLUS, PlanarWeb

A1, A2 = "A1", "A2"
LOOP_VALUE = {A1: -2, A2: 3}
BIGON_VALUE = -2


@dataclass(frozen=True)
class WebSum:
    """Integer combination of irreducible webs, keyed by dominant word."""

    rank: str
    size: int
    terms: dict[LabeledWord, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.rank not in (A1, A2):
            raise ValueError(f"unknown rank {self.rank!r}")
        clean = {w: int(c) for w, c in self.terms.items() if c}
        for w in clean:
            if len(w) != self.size:
                raise ValueError(f"word {w} does not have length {self.size}")
        object.__setattr__(self, "terms", clean)

    @classmethod
    def basis(cls, rank: str, word: LabeledWord, coeff: int = 1) -> WebSum:
        return cls(rank, len(word), {word: coeff})

    def _check(self, other: WebSum):
        if (self.rank, self.size) != (other.rank, other.size):
            raise ValueError("web sums of different rank or boundary size")

    def __add__(self, other: WebSum) -> WebSum:
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return WebSum(self.rank, self.size, terms)

    def __neg__(self) -> WebSum:
        return self.scale(-1)

    def __sub__(self, other: WebSum) -> WebSum:
        return self + (-other)

    def scale(self, c: int) -> WebSum:
        return WebSum(self.rank, self.size, {w: c * v for w, v in self.terms.items()})

    __rmul__ = scale

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[LabeledWord, int]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].rows)

    def to_json(self) -> dict[str, int]:
        return {str(w): c for w, c in self.items()}

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{w}]" for w, c in self.items())


# ----- planar surgery -----

def _splice(web: PlanarWeb, remove: set[int], pairs: Sequence[tuple[int, int]]
            ) -> tuple[PlanarWeb, int]:
    """Delete the vertices in ``remove`` and join their ports two by two.

    A port is a half-edge at a removed vertex; each pair in ``pairs`` is
    joined through the removed region.  Chains of joins that close up
    without reaching a kept vertex are returned as a loop count.
    """
    partner: dict[int, int] = {}
    for a, b in pairs:
        partner[a] = b
        partner[b] = a
    inside = lambda h: web.origin(h ^ 1) in remove  # noqa: E731
    visited: set[int] = set()
    joins: list[tuple[int, int]] = []
    for h in sorted(partner):
        if h in visited or inside(h):
            continue
        visited.add(h)
        cur = partner[h]
        visited.add(cur)
        while inside(cur):
            nxt = cur ^ 1
            visited.add(nxt)
            cur = partner[nxt]
            visited.add(cur)
        a, b = h ^ 1, cur ^ 1
        tail_h, head_h = (a, b) if a % 2 == 0 else (b, a)
        if tail_h % 2 or not head_h % 2:
            raise ValueError("splice would join two edges of the same orientation")
        joins.append((tail_h, head_h))
    loops = 0
    for h in sorted(partner):
        if h in visited:
            continue
        loops += 1
        cur = h
        while cur not in visited:
            visited.add(cur)
            visited.add(partner[cur])
            cur = partner[cur] ^ 1

    keep_v = [v for v in range(web.num_vertices) if v not in remove]
    vid = {v: i for i, v in enumerate(keep_v)}
    keep_e = [e for e, (t, h) in enumerate(web.edges) if t not in remove and h not in remove]
    hmap: dict[int, int] = {}
    edges = []
    for e in keep_e:
        hmap[2 * e] = 2 * len(edges)
        hmap[2 * e + 1] = 2 * len(edges) + 1
        edges.append((vid[web.edges[e][0]], vid[web.edges[e][1]]))
    for tail_h, head_h in joins:
        hmap[tail_h] = 2 * len(edges)
        hmap[head_h] = 2 * len(edges) + 1
        edges.append((vid[web.origin(tail_h)], vid[web.origin(head_h)]))
    new = PlanarWeb(
        signs=tuple(web.signs[v] for v in keep_v),
        edges=tuple(edges),
        rotation=tuple(tuple(hmap[h] for h in web.rotation[v]) for v in keep_v),
        boundary=tuple(vid[b] for b in web.boundary),
        cut=web.cut,
    )
    return new, loops


@dataclass(frozen=True)
class _Feature:
    darts: tuple[int, ...]
    vertices: tuple[int, ...]
    resolutions: tuple[tuple[tuple[int, int], ...], ...]
    coefficient: int


def _features(web: PlanarWeb) -> list[_Feature]:
    """Reducible bigon and square faces, sorted by dart set."""
    topo = web.topology
    found = []
    for orbit in topo.faces:
        if any(topo.is_arc(h) for h in orbit) or len(orbit) not in (2, 4):
            continue
        verts = [web.origin(h) for h in orbit]
        if len(set(verts)) != len(orbit):
            continue
        on_face = {h >> 1 for h in orbit}
        ports = []
        for v in verts:
            rest = [h for h in web.rotation[v] if h >> 1 not in on_face]
            if len(rest) != 1:
                break
            ports.append(rest[0])
        else:
            if len(orbit) == 2:
                res = (((ports[0], ports[1]),),)
                coeff = BIGON_VALUE
            else:
                p1, p2, p3, p4 = ports
                res = (((p1, p2), (p3, p4)), ((p2, p3), (p4, p1)))
                coeff = 1
            found.append(_Feature(tuple(sorted(orbit)), tuple(verts), res, coeff))
    found.sort(key=lambda f: f.darts)
    return found


def _closed_count(web: PlanarWeb) -> int:
    return web.canonical_form()[0]


def reduce(web: PlanarWeb, rng: random.Random | None = None, rank: str = A2) -> WebSum:
    """Apply loop, bigon and square rules until only irreducible webs remain.

    The smallest reducible face (by dart set) is resolved first; with
    ``rng`` a random one is chosen.
    """
    if rank != A2:
        raise ValueError("planar reduction is only defined for A2 webs")
    if any(web.signs[b] != MINUS for b in web.boundary):
        raise ValueError("boundary vertices must all be negative")
    total: dict[LabeledWord, int] = {}
    stack = [(web, 1)]
    while stack:
        current, coeff = stack.pop()
        feats = _features(current)
        if not feats:
            if _closed_count(current):
                raise ValueError("closed component without a reducible face")
            key = current.at_cut(0).word_at_cut()
            if not key.is_dominant():
                raise ValueError(f"reduced web has non-dominant word {key}")
            total[key] = total.get(key, 0) + coeff
            continue
        feat = rng.choice(feats) if rng is not None else feats[0]
        for pairing in feat.resolutions:
            new, loops = _splice(current, set(feat.vertices), pairing)
            stack.append((new, coeff * feat.coefficient * LOOP_VALUE[A2] ** loops))
    return WebSum(A2, web.num_boundary, total)


# ----- uncrossings -----

def attach_uncrossing_raw(web: PlanarWeb, i: int) -> PlanarWeb:
    """Attach the H-piece at positions i, i+1 (1-based, read from the cut) without reducing.

    The new boundary points feed a positive vertex p; a negative vertex m
    feeds p and takes over the two old boundary edges.
    """
    nb = web.num_boundary
    if not 1 <= i < nb:
        raise IndexError(f"uncrossing index {i} out of range 1..{nb - 1}")
    bl, br = web.position_vertex(i), web.position_vertex(i + 1)
    el, er = web.boundary_edge(bl), web.boundary_edge(br)
    keep_v = [v for v in range(web.num_vertices) if v not in (bl, br)]
    vid = {v: k for k, v in enumerate(keep_v)}
    cl, cr, p, m = (len(keep_v) + k for k in range(4))
    signs = [web.signs[v] for v in keep_v] + [MINUS, MINUS, PLUS, MINUS]
    edges = [(vid.get(t, m), vid[h]) for t, h in web.edges]
    ne = len(edges)
    leg_l, leg_r, stem = ne, ne + 1, ne + 2
    edges += [(cl, p), (cr, p), (m, p)]
    rotation = [list(web.rotation[v]) for v in keep_v]
    rotation += [[2 * leg_l], [2 * leg_r],
                 [2 * leg_r + 1, 2 * leg_l + 1, 2 * stem + 1],
                 [2 * stem, 2 * el, 2 * er]]
    old_order = [web.position_vertex(k) for k in range(1, nb + 1)]
    boundary = [vid[v] if v not in (bl, br) else (cl if v == bl else cr) for v in old_order]
    return PlanarWeb(tuple(signs), tuple(edges), tuple(map(tuple, rotation)), tuple(boundary))


def _t_matching(m: Matching, i: int) -> tuple[int, Matching]:
    nb = len(m.partner)
    if not 1 <= i < nb:
        raise IndexError(f"uncrossing index {i} out of range 1..{nb - 1}")
    a, b = m.partner[i - 1], m.partner[i]
    if a == i + 1:
        return LOOP_VALUE[A1], m
    arcs = [arc for arc in m.arcs() if i not in arc and i + 1 not in arc]
    arcs += [(i, i + 1), tuple(sorted((a, b)))]
    return 1, Matching.from_arcs(arcs)


@lru_cache(maxsize=None)
def _t_basis(rank: str, word: LabeledWord, i: int) -> WebSum:
    if rank == A1:
        coeff, m = _t_matching(matching_of_word(word), i)
        return WebSum.basis(A1, word_of_matching(m), coeff)
    return reduce(attach_uncrossing_raw(basis_web(word), i))


@lru_cache(maxsize=None)
def basis_web(word: LabeledWord) -> PlanarWeb:
    return grow(word)


def attach_uncrossing(x: WebSum, i: int) -> WebSum:
    """The operator t_i, extended linearly."""
    out = WebSum(x.rank, x.size)
    for w, c in x.terms.items():
        out = out + _t_basis(x.rank, w, i).scale(c)
    return out


def coxeter_action(i: int, x: WebSum) -> WebSum:
    """s_i = 1 + t_i."""
    return x + attach_uncrossing(x, i)


def permutation_action(word: Sequence[int], x: WebSum) -> WebSum:
    """Act by s_{word[0]} s_{word[1]} ... ; the rightmost generator acts first."""
    for i in reversed(list(word)):
        x = coxeter_action(i, x)
    return x


def long_cycle_word(size: int) -> list[int]:
    """Generators of c = s_{N-1} ... s_2 s_1."""
    return list(range(size - 1, 0, -1))


def long_cycle_action(x: WebSum) -> WebSum:
    return permutation_action(long_cycle_word(x.size), x)


def rotate_basis(rank: str, word: LabeledWord) -> LabeledWord:
    """Word of the basis web rotated one step."""
    if rank == A1:
        return word_of_matching(rotate_matching(matching_of_word(word)))
    return promote_word(word)


# ----- matrices -----

def rank_shape(rank: str, n: int):
    return as_partition((n, n) if rank == A1 else (n, n, n))


def web_basis(rank: str, n: int, cap: int | None = None) -> list[LabeledWord]:
    shape = rank_shape(rank, n)
    cap = enumeration_cap() if cap is None else cap
    if count_syt(shape) > cap:
        raise EnumerationLimitError(f"basis of size {count_syt(shape)} exceeds the cap {cap}")
    return list(yamanouchi_words(shape))


def matrix_of(op, rank: str, n: int) -> np.ndarray:
    """Matrix of a linear operator on the web basis; column j is op(basis[j])."""
    basis = web_basis(rank, n)
    index = {w: k for k, w in enumerate(basis)}
    mat = np.zeros((len(basis), len(basis)), dtype=object)
    for j, w in enumerate(basis):
        for v, c in op(WebSum.basis(rank, w)).terms.items():
            mat[index[v], j] = c
    return mat


@lru_cache(maxsize=None)
def _rep_matrix_cached(i: int, n: int, rank: str) -> np.ndarray:
    return matrix_of(lambda x: coxeter_action(i, x), rank, n)


def rep_matrix(i: int, n: int, rank: str) -> np.ndarray:
    """Matrix of s_i in the irreducible web basis (lex order of words)."""
    size = 2 * n if rank == A1 else 3 * n
    if not 1 <= i < size:
        raise IndexError(f"generator index {i} out of range 1..{size - 1}")
    return _rep_matrix_cached(i, n, rank).copy()


def word_matrix(word: Iterable[int], n: int, rank: str) -> np.ndarray:
    dim = count_syt(rank_shape(rank, n))
    mat = np.eye(dim, dtype=int).astype(object)
    for i in word:
        mat = mat.dot(rep_matrix(i, n, rank))
    return mat


def long_cycle_matrix(n: int, rank: str) -> np.ndarray:
    size = 2 * n if rank == A1 else 3 * n
    return word_matrix(long_cycle_word(size), n, rank)


def rotation_sign(rank: str) -> int:
    """(-1)^(b-1) with b the number of rows."""
    return -1 if rank == A1 else 1
