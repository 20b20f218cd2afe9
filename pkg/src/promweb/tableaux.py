"""Partitions, standard Young tableaux and jeu-de-taquin promotion.

Tableaux are stored row-major as tuples of tuples.  Yamanouchi words are
stored as row indices (1-based); for at most three rows they can also be
read in the label alphabet ``1, 0, -1`` (row 1, row 2, row 3).
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, Sequence

DEFAULT_ENUM_CAP = 10**6
ENUM_CAP_ENV = "PROMWEB_ENUM_CAP"

ROW_TO_LABEL = {1: 1, 2: 0, 3: -1}
LABEL_TO_ROW = {1: 1, 0: 2, -1: 3}


class EnumerationLimitError(RuntimeError):
    """Raised when an enumeration would exceed the configured size cap."""


def enumeration_cap() -> int:
    value = os.environ.get(ENUM_CAP_ENV)
    return int(value) if value else DEFAULT_ENUM_CAP


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"4,4,4"`` or the rectangle shorthand ``"3x4"`` (rows x columns)."""
        text = text.strip()
        if "x" in text:
            rows, cols = text.split("x")
            return cls.rectangle(int(rows), int(cols))
        return cls(tuple(int(p) for p in text.replace(" ", "").split(",") if p))

    @classmethod
    def rectangle(cls, rows: int, cols: int) -> Partition:
        return cls((cols,) * rows)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def num_rows(self) -> int:
        return len(self.parts)

    def is_rectangle(self) -> bool:
        return len(set(self.parts)) == 1

    def conjugate(self) -> tuple[int, ...]:
        return tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))


def as_partition(shape) -> Partition:
    if isinstance(shape, Partition):
        return shape
    if isinstance(shape, str):
        return Partition.parse(shape)
    return Partition(tuple(shape))


def hook_lengths(shape) -> list[list[int]]:
    shape = as_partition(shape)
    cols = shape.conjugate()
    return [[(row_len - j - 1) + (cols[j] - i - 1) + 1 for j in range(row_len)]
            for i, row_len in enumerate(shape.parts)]


def count_syt(shape) -> int:
    """Number of standard tableaux of ``shape`` by the hook length formula."""
    shape = as_partition(shape)
    denom = prod(h for row in hook_lengths(shape) for h in row)
    count, rem = divmod(factorial(shape.n), denom)
    assert rem == 0, f"hook product {denom} does not divide {shape.n}!"
    return count


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or any(not row for row in rows):
            raise ValueError("tableau rows must be non-empty")
        Partition(tuple(len(r) for r in rows))
        n = sum(len(r) for r in rows)
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, n + 1)):
            raise ValueError(f"entries must be exactly 1..{n}")
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if j + 1 < len(row) and row[j + 1] <= x:
                    raise ValueError(f"row {i + 1} is not increasing")
                if i + 1 < len(rows) and j < len(rows[i + 1]) and rows[i + 1][j] <= x:
                    raise ValueError(f"column {j + 1} is not increasing")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> StandardTableau:
        return cls(tuple(tuple(r) for r in data))

    def __str__(self):
        width = len(str(self.n))
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows)


@dataclass(frozen=True)
class LabeledWord:
    """A word recording, for each entry 1..n, the row it sits in.

    ``rows`` holds 1-based row indices.  The label view maps rows 1, 2, 3 to
    1, 0, -1 and is only defined for words with at most three rows.
    """

    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("empty word")
        if min(rows) < 1:
            raise ValueError(f"row indices must be positive: {rows}")

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> LabeledWord:
        try:
            return cls(tuple(LABEL_TO_ROW[int(x)] for x in labels))
        except KeyError as exc:
            raise ValueError(f"labels must lie in {{1, 0, -1}}: {tuple(labels)}") from exc

    @classmethod
    def parse(cls, text: str, alphabet: str = "rows") -> LabeledWord:
        """Parse a word.

        ``alphabet="rows"`` reads ``"111223233"``; ``alphabet="labels"`` reads
        whitespace/comma separated tokens from ``1 0 -1`` where ``m1`` and
        ``1bar`` are accepted for -1.
        """
        text = text.strip()
        if alphabet == "rows":
            if not text.isdigit():
                raise ValueError(f"row-alphabet words are digit strings: {text!r}")
            return cls(tuple(int(c) for c in text))
        if alphabet == "labels":
            tokens = text.replace(",", " ").split()
            table = {"1": 1, "0": 0, "-1": -1, "m1": -1, "1bar": -1}
            try:
                return cls.from_labels([table[t] for t in tokens])
            except KeyError as exc:
                raise ValueError(f"unknown label token in {text!r}") from exc
        raise ValueError(f"unknown alphabet {alphabet!r}")

    @property
    def labels(self) -> tuple[int, ...]:
        if max(self.rows) > 3:
            raise ValueError("label alphabet only covers three rows")
        return tuple(ROW_TO_LABEL[r] for r in self.rows)

    @property
    def num_rows(self) -> int:
        return max(self.rows)

    def content(self) -> tuple[int, ...]:
        return tuple(self.rows.count(r) for r in range(1, self.num_rows + 1))

    def is_balanced(self) -> bool:
        return len(set(self.content())) == 1

    def first_violation(self) -> int | None:
        """1-based position of the first prefix breaking the Yamanouchi property."""
        counts = [0] * (self.num_rows + 2)
        for pos, r in enumerate(self.rows, start=1):
            counts[r] += 1
            if r > 1 and counts[r] > counts[r - 1]:
                return pos
        return None

    def is_yamanouchi(self) -> bool:
        return self.first_violation() is None

    def is_dominant(self) -> bool:
        return self.is_yamanouchi() and self.is_balanced()

    def __len__(self):
        return len(self.rows)

    def __str__(self):
        return "".join(map(str, self.rows))


def yamanouchi_words(shape) -> Iterator[LabeledWord]:
    """All Yamanouchi words of the given content, lexicographically."""
    shape = as_partition(shape)
    target = shape.parts
    k = len(target)
    counts = [0] * k
    word: list[int] = []

    def extend():
        if len(word) == shape.n:
            yield LabeledWord(tuple(word))
            return
        for r in range(k):
            if counts[r] < target[r] and (r == 0 or counts[r] < counts[r - 1]):
                counts[r] += 1
                word.append(r + 1)
                yield from extend()
                word.pop()
                counts[r] -= 1

    yield from extend()


def _check_cap(shape: Partition, cap: int | None) -> None:
    cap = enumeration_cap() if cap is None else cap
    size = count_syt(shape)
    if size > cap:
        raise EnumerationLimitError(f"SYT({shape}) has {size} elements, above the cap {cap}")


def enumerate_syt(shape, cap: int | None = None) -> list[StandardTableau]:
    shape = as_partition(shape)
    _check_cap(shape, cap)
    return [tableau_of_word(w) for w in yamanouchi_words(shape)]


def word_of_tableau(t: StandardTableau) -> LabeledWord:
    where = {}
    for i, row in enumerate(t.rows, start=1):
        for x in row:
            where[x] = i
    return LabeledWord(tuple(where[x] for x in range(1, t.n + 1)))


def tableau_of_word(w: LabeledWord) -> StandardTableau:
    bad = w.first_violation()
    if bad is not None:
        raise ValueError(f"word {w} is not Yamanouchi: prefix of length {bad} fails")
    rows: list[list[int]] = [[] for _ in range(w.num_rows)]
    for i, r in enumerate(w.rows, start=1):
        rows[r - 1].append(i)
    return StandardTableau(tuple(tuple(r) for r in rows))


def promote(t: StandardTableau) -> StandardTableau:
    """Jeu-de-taquin promotion: drop 1, slide the hole out, refill with n."""
    rows = [[x - 1 for x in row] for row in t.rows]
    a, b = 0, 0
    while True:
        right = rows[a][b + 1] if b + 1 < len(rows[a]) else None
        below = rows[a + 1][b] if a + 1 < len(rows) and b < len(rows[a + 1]) else None
        if right is None and below is None:
            break
        assert right != below
        if below is None or (right is not None and right < below):
            rows[a][b] = right
            b += 1
        else:
            rows[a][b] = below
            a += 1
    rows[a][b] = t.n
    return StandardTableau(tuple(tuple(r) for r in rows))


def promote_power(t: StandardTableau, k: int) -> StandardTableau:
    for _ in range(k):
        t = promote(t)
    return t


def promotion_permutation(tableaux: Sequence[StandardTableau]) -> list[int]:
    """Index permutation ``perm[i] = index of promote(tableaux[i])``."""
    index = {t: i for i, t in enumerate(tableaux)}
    return [index[promote(t)] for t in tableaux]


def promotion_order(shape, cap: int | None = None) -> int:
    tableaux = enumerate_syt(shape, cap)
    perm = promotion_permutation(tableaux)
    current = list(perm)
    k = 1
    identity = list(range(len(perm)))
    while current != identity:
        current = [perm[i] for i in current]
        k += 1
    return k


def first_balance_positions(labels: Sequence[int]) -> tuple[int, int]:
    """Positions (1-based) used by three-row word promotion.

    ``a`` is the first prefix with as many 1s as 0s; ``b`` is the first
    prefix after ``a`` with as many 0s as -1s.
    """
    ones = zeros = bars = 0
    a = None
    for pos, x in enumerate(labels, start=1):
        ones += x == 1
        zeros += x == 0
        bars += x == -1
        if a is None:
            if ones == zeros:
                a = pos
        elif zeros == bars:
            return a, pos
    raise ValueError(f"no balance positions in {tuple(labels)}")


def promote_word(w: LabeledWord) -> LabeledWord:
    """Promotion read directly on a balanced three-letter Yamanouchi word."""
    if not w.is_dominant() or w.num_rows != 3:
        raise ValueError(f"{w} is not a balanced Yamanouchi word on three letters")
    labels = list(w.labels)
    a, b = first_balance_positions(labels)
    labels[a - 1] = 1
    labels[b - 1] = 0
    return LabeledWord.from_labels(labels[1:] + [-1])
