"""Noncrossing perfect matchings: the two-row webs."""
from __future__ import annotations

from dataclasses import dataclass

from ..tableaux import LabeledWord


@dataclass(frozen=True)
class Matching:
    """``partner[i - 1]`` is the point matched to ``i`` (points are 1..2n)."""

    partner: tuple[int, ...]

    def __post_init__(self):
        partner = tuple(int(p) for p in self.partner)
        object.__setattr__(self, "partner", partner)
        size = len(partner)
        if size % 2:
            raise ValueError("a perfect matching needs an even number of points")
        for i, j in enumerate(partner, start=1):
            if not 1 <= j <= size or j == i or partner[j - 1] != i:
                raise ValueError(f"not a fixed-point-free involution: {partner}")
        for i, j in self.arcs():
            for k, l in self.arcs():
                if i < k < j < l:
                    raise ValueError(f"arcs ({i},{j}) and ({k},{l}) cross")

    @classmethod
    def from_arcs(cls, arcs) -> Matching:
        size = 2 * len(arcs)
        partner = [0] * size
        for i, j in arcs:
            partner[i - 1], partner[j - 1] = j, i
        return cls(tuple(partner))

    @property
    def n(self) -> int:
        return len(self.partner) // 2

    def arcs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.partner, start=1) if i < j]

    def __str__(self):
        return " ".join(f"({i},{j})" for i, j in self.arcs())


def matching_of_word(w: LabeledWord) -> Matching:
    """Match every 2 to the nearest unmatched 1 on its left."""
    if not w.is_dominant() or w.num_rows != 2:
        raise ValueError(f"{w} is not a balanced two-letter Yamanouchi word")
    partner = [0] * len(w)
    stack = []
    for i, r in enumerate(w.rows, start=1):
        if r == 1:
            stack.append(i)
        else:
            j = stack.pop()
            partner[i - 1], partner[j - 1] = j, i
    return Matching(tuple(partner))


def word_of_matching(m: Matching) -> LabeledWord:
    return LabeledWord(tuple(1 if j > i else 2 for i, j in enumerate(m.partner, start=1)))


def rotate_matching(m: Matching, k: int = 1) -> Matching:
    """Shift every point down by ``k`` (point 1 wraps to 2n)."""
    size = len(m.partner)
    shift = lambda i: (i - 1 - k) % size + 1  # noqa: E731
    return Matching.from_arcs([(shift(i), shift(j)) for i, j in m.arcs()])
