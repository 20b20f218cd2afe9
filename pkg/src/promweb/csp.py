"""Promotion orbits, fixed points, and the cyclic sieving check."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .qcombinatorics import eval_at_root, fixed_webs_formula, q_hook_polynomial
from .tableaux import LabeledWord, Partition, as_partition, enumerate_syt, promote, \
    promote_word
from .webs.growth import enumerate_webs


@dataclass(frozen=True)
class OrbitCensus:
    """Orbit sizes of a cyclic action of order dividing ``period``."""

    period: int
    orbits: dict[int, int]
    total: int
    fixed: tuple[int, ...]

    def __post_init__(self):
        if sum(k * o for k, o in self.orbits.items()) != self.total:
            raise AssertionError("orbit sizes do not add up to the total")
        if self.fixed[0] != self.total:
            raise AssertionError("every element is fixed by the identity")
        derived = self.fixed_from_orbits()
        if derived != self.fixed:
            raise AssertionError(f"fixed points {self.fixed} disagree with orbit census {derived}")

    def fixed_from_orbits(self) -> tuple[int, ...]:
        return tuple(sum(k * o for k, o in self.orbits.items() if d % k == 0)
                     for d in range(self.period))

    def to_json(self) -> dict:
        return {"period": self.period, "total": self.total,
                "orbits": {str(k): self.orbits[k] for k in sorted(self.orbits)},
                "fixed": list(self.fixed)}


def census(elements: Sequence[Hashable], step: Callable, period: int) -> OrbitCensus:
    """Orbit decomposition plus directly iterated fixed-point counts."""
    index = {x: i for i, x in enumerate(elements)}
    perm = [index[step(x)] for x in elements]
    seen = [False] * len(perm)
    sizes: Counter[int] = Counter()
    for start in range(len(perm)):
        if seen[start]:
            continue
        k, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            k += 1
        if period % k:
            raise AssertionError(f"orbit of size {k} does not divide {period}")
        sizes[k] += 1
    fixed = []
    current = list(range(len(perm)))
    for _ in range(period):
        fixed.append(sum(1 for i, j in enumerate(current) if i == j))
        current = [perm[j] for j in current]
    if current != list(range(len(perm))):
        raise AssertionError(f"the action does not have order dividing {period}")
    return OrbitCensus(period, dict(sorted(sizes.items())), len(perm), tuple(fixed))


def promotion_orbits(shape, cap: int | None = None) -> OrbitCensus:
    shape = as_partition(shape)
    return census(enumerate_syt(shape, cap), promote, shape.n)


@dataclass(frozen=True)
class CSPRow:
    d: int
    fixed: int
    value: int

    @property
    def ok(self) -> bool:
        return self.fixed == self.value


@dataclass(frozen=True)
class CSPReport:
    shape: Partition
    rows: tuple[CSPRow, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def to_json(self) -> dict:
        return {str(r.d): {"fixed": r.fixed, "eval": r.value, "pass": r.ok} for r in self.rows}


def verify_csp(shape, cap: int | None = None) -> CSPReport:
    """Compare promotion fixed points with the q-hook polynomial at roots of unity."""
    shape = as_partition(shape)
    poly = q_hook_polynomial(shape)
    fixed = promotion_orbits(shape, cap).fixed
    m = shape.n
    return CSPReport(shape, tuple(CSPRow(d, fixed[d], eval_at_root(poly, m, d))
                                  for d in range(m)))


def _web_word_census(n: int, cap: int | None) -> tuple[list[LabeledWord], list[LabeledWord]]:
    words, rotated = [], []
    for w, web in enumerate_webs(n, cap):
        words.append(w)
        rotated.append(web.rotate().word_at_cut())
    return words, rotated


def rotation_census(n: int, cap: int | None = None) -> OrbitCensus:
    """Orbit census of web rotation, computed on the webs themselves."""
    words, rotated = _web_word_census(n, cap)
    image = dict(zip(words, rotated))
    return census(words, image.__getitem__, 3 * n)


def rotation_fixed_counts(n: int, d: int, cap: int | None = None) -> int:
    """Number of webs with 3n boundary points equal to their d-fold rotation."""
    if d < 1 or (3 * n) % d:
        raise ValueError(f"d={d} must divide 3n={3 * n}")
    count = 0
    for _, web in enumerate_webs(n, cap):
        if web.rotate(d).word_at_cut() == web.word_at_cut():
            count += 1
    return count


def formula_check(n: int, cap: int | None = None) -> dict[int, tuple[int, int]]:
    """For each divisor d of 3n: (webs fixed by 3n/d rotations, closed-form count)."""
    fixed = rotation_census(n, cap).fixed
    size = 3 * n
    return {d: (fixed[size // d % size], fixed_webs_formula(n, d))
            for d in range(1, size + 1) if size % d == 0}


def three_fold_words(n: int) -> tuple[LabeledWord, LabeledWord]:
    """The two row-alphabet words whose promotion orbits carry the 3-fold symmetric webs."""
    if n < 3:
        raise ValueError("need n >= 3")
    first = LabeledWord.parse("123" * n)
    second = LabeledWord.parse("11122" + "132" * (n - 3) + "2333")
    return first, second


def word_orbit(w: LabeledWord) -> list[LabeledWord]:
    orbit = [w]
    while (nxt := promote_word(orbit[-1])) != w:
        orbit.append(nxt)
    return orbit
