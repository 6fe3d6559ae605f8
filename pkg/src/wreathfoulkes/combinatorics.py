"""Partitions, multipartitions, standard tableaux and their descent statistics."""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb
from typing import Iterator, NamedTuple, Sequence

Partition = tuple  # weakly decreasing tuple of positive ints


class BoundaryConvention(enum.Enum):
    """How the last entry ``n`` of a tableau is classified as a column-descent."""

    SENTINEL = "sentinel"  # n is a column-descent iff component(n) < r-1
    COMPLEMENT = "complement"  # n is a column-descent iff n is not a descent


class Box(NamedTuple):
    row: int
    column: int
    component: int


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate_partition(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= i) for i in range(1, lam[0] + 1))


@dataclass(frozen=True, order=True)
class Multipartition:
    """An r-tuple of partitions; components are indexed 0..r-1."""

    components: tuple

    def __post_init__(self):
        comps = tuple(tuple(int(p) for p in c) for c in self.components)
        for c in comps:
            if any(p <= 0 for p in c) or any(a < b for a, b in zip(c, c[1:])):
                raise ValueError(f"not a partition: {c}")
        object.__setattr__(self, "components", comps)

    @property
    def r(self) -> int:
        return len(self.components)

    @property
    def n(self) -> int:
        return sum(sum(c) for c in self.components)

    def __getitem__(self, i: int) -> Partition:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def sizes(self) -> tuple[int, ...]:
        return tuple(sum(c) for c in self.components)

    def boxes(self) -> list[Box]:
        return [Box(i + 1, j + 1, c)
                for c, comp in enumerate(self.components)
                for i, part in enumerate(comp)
                for j in range(part)]

    def add_box(self, box: Box) -> "Multipartition":
        comps = [list(c) for c in self.components]
        comp = comps[box.component]
        if box.row == len(comp) + 1:
            comp.append(1)
        else:
            comp[box.row - 1] += 1
        return Multipartition(tuple(tuple(c) for c in comps))

    def remove_box(self, box: Box) -> "Multipartition":
        comps = [list(c) for c in self.components]
        comp = comps[box.component]
        comp[box.row - 1] -= 1
        if comp[box.row - 1] == 0:
            comp.pop()
        return Multipartition(tuple(tuple(c) for c in comps))

    def __str__(self):
        return json.dumps([list(c) for c in self.components], separators=(",", ":"))

    def __repr__(self):
        return f"Multipartition({self})"

    @classmethod
    def parse(cls, text: str) -> "Multipartition":
        data = json.loads(text)
        return cls(tuple(tuple(c) for c in data))

    @classmethod
    def from_parts(cls, *components: Sequence[int]) -> "Multipartition":
        return cls(tuple(tuple(c) for c in components))

    @classmethod
    def one_row(cls, r: int, n: int) -> "Multipartition":
        """((n); empty; ...; empty)."""
        return cls(((n,) if n else (),) + ((),) * (r - 1))


def _compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def multipartitions(r: int, n: int) -> tuple[Multipartition, ...]:
    """All r-multipartitions of n.

    Ordered by the size vector (n_0, ..., n_{r-1}) in decreasing lexicographic
    order, then componentwise reverse-lexicographic.
    """
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    out = []
    for sizes in _compositions(n, r):
        stack: list[tuple] = [()]
        for s in sizes:
            stack = [acc + (p,) for acc in stack for p in partitions(s)]
        out.extend(Multipartition(c) for c in stack)
    return tuple(out)


def conjugate_multipartition(lam: Multipartition) -> Multipartition:
    """Reverse the components and conjugate each one."""
    return Multipartition(tuple(conjugate_partition(c) for c in reversed(lam.components)))


def conjugate_components(lam: Multipartition) -> Multipartition:
    """Conjugate each component in place, without reversing their order."""
    return Multipartition(tuple(conjugate_partition(c) for c in lam.components))


def removable_boxes(lam: Multipartition) -> list[Box]:
    out = []
    for c, comp in enumerate(lam.components):
        for i, part in enumerate(comp):
            nxt = comp[i + 1] if i + 1 < len(comp) else 0
            if part > nxt:
                out.append(Box(i + 1, part, c))
    return out


def addable_boxes(lam: Multipartition) -> list[Box]:
    out = []
    for c, comp in enumerate(lam.components):
        for i in range(len(comp) + 1):
            cur = comp[i] if i < len(comp) else 0
            if i == 0 or comp[i - 1] > cur:
                out.append(Box(i + 1, cur + 1, c))
    return out


def in_Y(lam: Multipartition, k: int) -> bool:
    """Row-length condition under which s_k(lam) is nonzero."""
    return len(lam[0]) <= k + 1 and all(len(c) <= k for c in lam.components[1:])


def in_Y_tilde(lam: Multipartition, k: int) -> bool:
    """Column-length condition under which c_k(lam) is nonzero."""
    def width(c):
        return c[0] if c else 0
    return width(lam[0]) <= k + 1 and all(width(c) <= k for c in lam.components[1:])


@dataclass(frozen=True)
class StandardTableau:
    """A standard filling of a multipartition; ``rows[c][i]`` is row i+1 of component c."""

    rows: tuple

    @cached_property
    def shape(self) -> Multipartition:
        return Multipartition(tuple(tuple(len(row) for row in comp) for comp in self.rows))

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def r(self) -> int:
        return len(self.rows)

    @cached_property
    def position(self) -> dict[int, Box]:
        return {entry: Box(i + 1, j + 1, c)
                for c, comp in enumerate(self.rows)
                for i, row in enumerate(comp)
                for j, entry in enumerate(row)}

    def component_of(self, i: int) -> int:
        return self.position[i].component

    def is_standard(self) -> bool:
        n = self.n
        if sorted(self.position) != list(range(1, n + 1)):
            return False
        for comp in self.rows:
            for i, row in enumerate(comp):
                if any(a >= b for a, b in zip(row, row[1:])):
                    return False
                if i and any(row[j] <= comp[i - 1][j] for j in range(len(row))):
                    return False
        return True

    def to_json(self) -> list:
        return [[list(row) for row in comp] for comp in self.rows]

    @classmethod
    def from_json(cls, data) -> "StandardTableau":
        return cls(tuple(tuple(tuple(row) for row in comp) for comp in data))

    def conjugate(self) -> "StandardTableau":
        """Reverse the components and transpose each one."""
        return StandardTableau(tuple(_transpose(comp) for comp in reversed(self.rows)))

    def __str__(self):
        return json.dumps(self.to_json(), separators=(",", ":"))


def _transpose(comp: tuple) -> tuple:
    if not comp:
        return ()
    return tuple(tuple(row[j] for row in comp if len(row) > j) for j in range(len(comp[0])))


def _place(rows: tuple, box: Box, entry: int) -> tuple:
    comps = [list(list(row) for row in comp) for comp in rows]
    comp = comps[box.component]
    if box.row == len(comp) + 1:
        comp.append([entry])
    else:
        comp[box.row - 1].append(entry)
    return tuple(tuple(tuple(row) for row in c) for c in comps)


@lru_cache(maxsize=None)
def standard_tableaux(lam: Multipartition) -> tuple[StandardTableau, ...]:
    """All standard tableaux of shape ``lam``.

    Built by placing the largest entry in each removable box in turn, in the
    order returned by :func:`removable_boxes`.
    """
    n = lam.n
    if n == 0:
        return (StandardTableau(tuple(() for _ in range(lam.r))),)
    out = []
    for box in removable_boxes(lam):
        for t in standard_tableaux(lam.remove_box(box)):
            out.append(StandardTableau(_place(t.rows, box, n)))
    return tuple(out)


def num_standard_tableaux(lam: Multipartition) -> int:
    return len(standard_tableaux(lam))


def descent_set(T: StandardTableau) -> frozenset[int]:
    pos = T.position
    n = len(pos)
    des = set()
    for i in range(1, n):
        a, b = pos[i], pos[i + 1]
        if (a.component == b.component and b.row > a.row) or a.component > b.component:
            des.add(i)
    if n and pos[n].component > 0:
        des.add(n)
    return frozenset(des)


def column_descent_set(T: StandardTableau,
                       conv: BoundaryConvention = BoundaryConvention.COMPLEMENT) -> frozenset[int]:
    pos = T.position
    n = len(pos)
    cdes = set()
    for i in range(1, n):
        a, b = pos[i], pos[i + 1]
        if (a.component == b.component and b.column > a.column) or a.component < b.component:
            cdes.add(i)
    if n:
        last = pos[n].component
        if conv is BoundaryConvention.COMPLEMENT:
            if last == 0:
                cdes.add(n)
        elif last < T.r - 1:
            cdes.add(n)
    return frozenset(cdes)


@lru_cache(maxsize=None)
def descent_histogram(lam: Multipartition) -> tuple[int, ...]:
    """Entry k is the number of standard tableaux of shape lam with k descents."""
    hist = [0] * (lam.n + 1)
    for T in standard_tableaux(lam):
        hist[len(descent_set(T))] += 1
    return tuple(hist)


@lru_cache(maxsize=None)
def column_descent_histogram(lam: Multipartition, conv: BoundaryConvention) -> tuple[int, ...]:
    hist = [0] * (lam.n + 1)
    for T in standard_tableaux(lam):
        hist[len(column_descent_set(T, conv))] += 1
    return tuple(hist)


def m_count(lam: Multipartition, k: int) -> int:
    """Number of standard tableaux of shape lam with exactly k descents."""
    if k < 0 or k > lam.n:
        return 0
    return descent_histogram(lam)[k]


def mbar_count(lam: Multipartition, k: int,
               conv: BoundaryConvention = BoundaryConvention.COMPLEMENT) -> int:
    """Number of standard tableaux of shape lam with exactly k column-descents."""
    if k < 0 or k > lam.n:
        return 0
    return column_descent_histogram(lam, conv)[k]


def _count_fillings(shape: Partition, alphabet: int, strict_rows: bool) -> int:
    """Count fillings of a Young diagram with letters 1..alphabet.

    Rows weakly increase and columns strictly increase, or the reverse when
    ``strict_rows`` is set.
    """
    cells = [(i, j) for i, part in enumerate(shape) for j in range(part)]
    if not cells:
        return 1
    if alphabet <= 0:
        return 0
    fill: dict[tuple[int, int], int] = {}

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, fill[(i, j - 1)] + (1 if strict_rows else 0))
        if i > 0:
            lo = max(lo, fill[(i - 1, j)] + (0 if strict_rows else 1))
        total = 0
        for v in range(lo, alphabet + 1):
            fill[(i, j)] = v
            total += rec(idx + 1)
        return total

    return rec(0)


def _alphabet_sizes(r: int, k: int) -> list[int]:
    return [k + 1] + [k] * (r - 1)


@lru_cache(maxsize=None)
def row_semistandard_count(lam: Multipartition, k: int) -> int:
    """s_k(lam): row-semistandard x_k-tableaux, by enumeration of each component."""
    total = 1
    for comp, a in zip(lam.components, _alphabet_sizes(lam.r, k)):
        total *= _count_fillings(comp, a, strict_rows=False)
        if not total:
            return 0
    return total


@lru_cache(maxsize=None)
def column_semistandard_count(lam: Multipartition, k: int) -> int:
    """c_k(lam): column-semistandard x_k-tableaux."""
    total = 1
    for comp, a in zip(lam.components, _alphabet_sizes(lam.r, k)):
        total *= _count_fillings(comp, a, strict_rows=True)
        if not total:
            return 0
    return total


def binomial_transform_check(lam: Multipartition, k: int) -> dict:
    """Compare s_k(lam) against the two binomial transforms of the descent counts.

    ``printed`` uses binomial(n+1, j); ``corrected`` uses binomial(n+j, j).
    """
    n = lam.n
    s = row_semistandard_count(lam, k)
    printed = sum(comb(n + 1, j) * m_count(lam, k - j) for j in range(k + 1))
    corrected = sum(comb(n + j, j) * m_count(lam, k - j) for j in range(k + 1))
    return {
        "shape": str(lam),
        "k": k,
        "s_k": s,
        "printed": printed,
        "corrected": corrected,
        "printed_holds": printed == s,
        "corrected_holds": corrected == s,
    }
