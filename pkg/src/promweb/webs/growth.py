"""Growth: build the irreducible web of a balanced three-letter Yamanouchi word.

Each boundary point starts a strand heading down.  A strand is an edge with
one end attached; ``down`` strands point away from the boundary (their tail
is attached), ``up`` strands point back toward it (their head is attached).
Local rules combine adjacent strands until none remain.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from ..tableaux import EnumerationLimitError, LabeledWord, as_partition, count_syt, \
    enumeration_cap, yamanouchi_words
from .planar import MINUS, PLUS, PlanarWeb

DOWN, UP = "down", "up"

# Two down strands (a before b in the order 1 < 0 < -1) meet at a + vertex.
Y_DOWN = {(1, 0): -1, (1, -1): 0, (0, -1): 1}
# Two up strands (a after b) meet at a - vertex.
Y_UP = {(0, 1): -1, (-1, 1): 0, (-1, 0): 1}
# Adjacent strands joining into a single edge.
ARCS = {(DOWN, 1, UP, 1), (UP, -1, DOWN, -1)}
# (down a, up b) -> (up c, down d), joined by a horizontal edge labelled -1.
H_RULES = {(0, 0): (1, 1), (0, 1): (1, 0), (1, 0): (0, 1)}
# (up a, down b) -> (down c, up d), joined by a horizontal edge labelled 1.
REVERSE_H_RULES = {(0, 0): (-1, -1), (0, -1): (-1, 0), (-1, 0): (0, -1)}


class GrowthStall(RuntimeError):
    """No rule applies but strands remain; the input was not a valid word."""


@dataclass
class _Strand:
    direction: str
    label: int
    edge: int


class _Builder:
    def __init__(self):
        self.signs: list[int] = []
        self.rotation: list[list[int]] = []
        self.edges: list[list[int | None]] = []
        self.labels: list[int] = []
        self.dead: set[int] = set()

    def vertex(self, sign: int, rot: list[int]) -> int:
        self.signs.append(sign)
        self.rotation.append(rot)
        return len(self.signs) - 1

    def edge(self, label: int, tail=None, head=None) -> int:
        self.edges.append([tail, head])
        self.labels.append(label)
        return len(self.edges) - 1

    def freeze(self, boundary: list[int]) -> PlanarWeb:
        keep = [e for e in range(len(self.edges)) if e not in self.dead]
        new_id = {e: i for i, e in enumerate(keep)}
        remap = lambda h: 2 * new_id[h >> 1] + (h & 1)  # noqa: E731
        return PlanarWeb(
            signs=tuple(self.signs),
            edges=tuple((self.edges[e][0], self.edges[e][1]) for e in keep),
            rotation=tuple(tuple(remap(h) for h in rot) for rot in self.rotation),
            boundary=tuple(boundary),
            growth_labels=tuple(self.labels[e] for e in keep),
        )


def _rule(left: _Strand, right: _Strand) -> str | None:
    pair = (left.label, right.label)
    if left.direction == DOWN and right.direction == DOWN and pair in Y_DOWN:
        return "y_down"
    if left.direction == UP and right.direction == UP and pair in Y_UP:
        return "y_up"
    if (left.direction, left.label, right.direction, right.label) in ARCS:
        return "arc"
    if left.direction == DOWN and right.direction == UP and pair in H_RULES:
        return "h"
    if left.direction == UP and right.direction == DOWN and pair in REVERSE_H_RULES:
        return "reverse_h"
    return None


def _fire(b: _Builder, kind: str, left: _Strand, right: _Strand) -> list[_Strand]:
    el, er = left.edge, right.edge
    if kind == "y_down":
        f = b.edge(Y_DOWN[(left.label, right.label)])
        p = b.vertex(PLUS, [2 * er + 1, 2 * el + 1, 2 * f + 1])
        b.edges[el][1] = b.edges[er][1] = b.edges[f][1] = p
        return [_Strand(UP, b.labels[f], f)]
    if kind == "y_up":
        f = b.edge(Y_UP[(left.label, right.label)])
        m = b.vertex(MINUS, [2 * er, 2 * el, 2 * f])
        b.edges[el][0] = b.edges[er][0] = b.edges[f][0] = m
        return [_Strand(DOWN, b.labels[f], f)]
    if kind == "arc":
        down, up = (left, right) if left.direction == DOWN else (right, left)
        head = b.edges[up.edge][1]
        b.edges[down.edge][1] = head
        rot = b.rotation[head]
        rot[rot.index(2 * up.edge + 1)] = 2 * down.edge + 1
        b.dead.add(up.edge)
        return []
    if kind == "h":
        c, d = H_RULES[(left.label, right.label)]
        h = b.edge(-1)
        f1, f2 = b.edge(c), b.edge(d)
        p = b.vertex(PLUS, [2 * h + 1, 2 * el + 1, 2 * f1 + 1])
        m = b.vertex(MINUS, [2 * er, 2 * h, 2 * f2])
        b.edges[el][1] = b.edges[h][1] = b.edges[f1][1] = p
        b.edges[er][0] = b.edges[h][0] = b.edges[f2][0] = m
        return [_Strand(UP, c, f1), _Strand(DOWN, d, f2)]
    if kind == "reverse_h":
        c, d = REVERSE_H_RULES[(left.label, right.label)]
        h = b.edge(1)
        f1, f2 = b.edge(c), b.edge(d)
        m = b.vertex(MINUS, [2 * h, 2 * el, 2 * f1])
        p = b.vertex(PLUS, [2 * er + 1, 2 * h + 1, 2 * f2 + 1])
        b.edges[el][0] = b.edges[h][0] = b.edges[f1][0] = m
        b.edges[er][1] = b.edges[h][1] = b.edges[f2][1] = p
        return [_Strand(DOWN, c, f1), _Strand(UP, d, f2)]
    raise AssertionError(kind)


def grow(word: LabeledWord, rng: random.Random | None = None) -> PlanarWeb:
    """Grow the web of ``word``.

    Rules fire on the leftmost applicable pair; with ``rng`` a random
    applicable pair is chosen instead, which must give the same web.
    """
    labels = word.labels
    b = _Builder()
    boundary = []
    strands = []
    for lab in labels:
        e = b.edge(lab)
        v = b.vertex(MINUS, [2 * e])
        b.edges[e][0] = v
        boundary.append(v)
        strands.append(_Strand(DOWN, lab, e))
    while strands:
        options = [(i, kind) for i in range(len(strands) - 1)
                   if (kind := _rule(strands[i], strands[i + 1])) is not None]
        if not options:
            state = " ".join(f"{s.direction}:{s.label}" for s in strands)
            raise GrowthStall(f"growth of {word} stalled with strands [{state}]")
        i, kind = rng.choice(options) if rng is not None else options[0]
        strands[i:i + 2] = _fire(b, kind, strands[i], strands[i + 1])
    return b.freeze(boundary)


def enumerate_webs(n: int, cap: int | None = None) -> Iterator[tuple[LabeledWord, PlanarWeb]]:
    """Pairs (word, web) for all balanced words on 3n letters, in lex order."""
    shape = as_partition((n, n, n))
    cap = enumeration_cap() if cap is None else cap
    size = count_syt(shape)
    if size > cap:
        raise EnumerationLimitError(f"{size} webs exceed the cap {cap}")
    for w in yamanouchi_words(shape):
        yield w, grow(w)
