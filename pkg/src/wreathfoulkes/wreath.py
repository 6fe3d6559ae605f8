"""The wreath product W(r, n) of r-colored permutations."""
from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterator

import numpy as np

from . import _kernels
from .combinatorics import Multipartition, StandardTableau, multipartitions

_LETTER = re.compile(r"^(\d+)\^(\d+)$")


@dataclass(frozen=True)
class ColoredPermutation:
    """``w = w(1)^{c_1} ... w(n)^{c_n}``; acts on colored digits by (j, z) -> (w(j), z + c_j).

    Products compose these maps right to left, so ``(u * v)`` applies ``v``
    first.  This is the composition under which the substitution action on
    polynomials is a left action.
    """

    r: int
    images: tuple
    colors: tuple

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        colors = tuple(int(c) % self.r for c in self.colors)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation: {images}")
        if len(colors) != len(images):
            raise ValueError("images and colors differ in length")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "colors", colors)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def parse(cls, text: str, r: int) -> "ColoredPermutation":
        images, colors = [], []
        for tok in text.split():
            m = _LETTER.match(tok)
            if not m:
                raise ValueError(f"bad letter {tok!r}; expected like '3^0'")
            images.append(int(m.group(1)))
            c = int(m.group(2))
            if not 0 <= c < r:
                raise ValueError(f"color {c} out of range for r={r}")
            colors.append(c)
        return cls(r, tuple(images), tuple(colors))

    def __str__(self):
        return " ".join(f"{a}^{c}" for a, c in zip(self.images, self.colors))

    def _check(self, other: "ColoredPermutation"):
        if self.r != other.r or self.n != other.n:
            raise ValueError(f"mismatched groups W({self.r},{self.n}) and W({other.r},{other.n})")

    def __mul__(self, other: "ColoredPermutation") -> "ColoredPermutation":
        self._check(other)
        images = tuple(self.images[b - 1] for b in other.images)
        colors = tuple((other.colors[i] + self.colors[b - 1]) % self.r
                       for i, b in enumerate(other.images))
        return ColoredPermutation(self.r, images, colors)

    def inverse(self) -> "ColoredPermutation":
        images = [0] * self.n
        colors = [0] * self.n
        for j, (a, c) in enumerate(zip(self.images, self.colors)):
            images[a - 1] = j + 1
            colors[a - 1] = -c % self.r
        return ColoredPermutation(self.r, tuple(images), tuple(colors))

    def __pow__(self, e: int) -> "ColoredPermutation":
        base = self if e >= 0 else self.inverse()
        out = identity(self.r, self.n)
        for _ in range(abs(e)):
            out = out * base
        return out

    def embed(self) -> "ColoredPermutation":
        """Image in W(r, n+1): append the fixed point n+1 with color 0."""
        return ColoredPermutation(self.r, self.images + (self.n + 1,), self.colors + (0,))


def multiply(a: ColoredPermutation, b: ColoredPermutation) -> ColoredPermutation:
    return a * b


def inverse(a: ColoredPermutation) -> ColoredPermutation:
    return a.inverse()


def identity(r: int, n: int) -> ColoredPermutation:
    return ColoredPermutation(r, tuple(range(1, n + 1)), (0,) * n)


def generators(r: int, n: int) -> list[ColoredPermutation]:
    """s_0 (color 1 on the first letter) and the adjacent transpositions s_1..s_{n-1}."""
    gens = [ColoredPermutation(r, tuple(range(1, n + 1)), (1 % r,) + (0,) * (n - 1))]
    for i in range(1, n):
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        gens.append(ColoredPermutation(r, tuple(img), (0,) * n))
    return gens


def elements(r: int, n: int) -> Iterator[ColoredPermutation]:
    for perm in itertools.permutations(range(1, n + 1)):
        for cols in itertools.product(range(r), repeat=n):
            yield ColoredPermutation(r, perm, cols)


def group_order(r: int, n: int) -> int:
    return r ** n * factorial(n)


def cycles(w: ColoredPermutation) -> list[tuple[tuple[int, ...], int]]:
    """Disjoint cycles as (positions, total color mod r)."""
    seen = [False] * w.n
    out = []
    for s in range(w.n):
        if seen[s]:
            continue
        cyc, csum, j = [], 0, s
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            csum += w.colors[j]
            j = w.images[j] - 1
        out.append((tuple(cyc), csum % w.r))
    return out


def cycle_type(w: ColoredPermutation) -> Multipartition:
    parts: list[list[int]] = [[] for _ in range(w.r)]
    for cyc, color in cycles(w):
        parts[color].append(len(cyc))
    return Multipartition(tuple(tuple(sorted(p, reverse=True)) for p in parts))


def length(w: ColoredPermutation) -> int:
    """Number of cycles of color 0 (parts of the first component of the type)."""
    return sum(1 for _, color in cycles(w) if color == 0)


def class_length(mu: Multipartition) -> int:
    return len(mu[0])


def descent_set(w: ColoredPermutation) -> frozenset[int]:
    n = w.n
    des = set()
    for i in range(n):
        nxt_img = w.images[i + 1] if i + 1 < n else n + 1
        nxt_col = w.colors[i + 1] if i + 1 < n else 0
        c = w.colors[i]
        if c > nxt_col or (c == nxt_col and w.images[i] > nxt_img):
            des.add(i + 1)
    return frozenset(des)


def descent_number(w: ColoredPermutation) -> int:
    return len(descent_set(w))


@lru_cache(maxsize=None)
def eulerian(r: int, n: int, k: int) -> int:
    """E_{r,n}(k) from the three-term recurrence."""
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return ((r * k + 1) * eulerian(r, n - 1, k)
            + (r * (n + 1) - (r * k + 1)) * eulerian(r, n - 1, k - 1))


def eulerian_row(r: int, n: int) -> list[int]:
    return [eulerian(r, n, k) for k in range(n + 1)]


def eulerian_bruteforce(r: int, n: int, backend: str | None = None) -> list[int]:
    """Descent-number distribution by counting every element of W(r, n)."""
    images, colors = _kernels.group_arrays(r, n)
    des = _kernels.descent_numbers(images, colors, backend)
    return np.bincount(des, minlength=n + 1).tolist()


def length_distribution(r: int, n: int, backend: str | None = None) -> list[int]:
    images, colors = _kernels.group_arrays(r, n)
    ell = _kernels.color0_cycle_counts(images, colors, r, backend)
    return np.bincount(ell, minlength=n + 1).tolist()


# -- RSK ------------------------------------------------------------------------------

def _row_insert(comp: list[list[int]], a: int) -> tuple[int, int]:
    """Row-insert ``a`` in place; returns the (row, column) of the new box, 1-based."""
    row = 0
    while True:
        if row == len(comp):
            comp.append([a])
            return row + 1, 1
        cur = comp[row]
        j = next((t for t, x in enumerate(cur) if x > a), None)
        if j is None:
            cur.append(a)
            return row + 1, len(cur)
        cur[j], a = a, cur[j]
        row += 1


def _freeze(comps: list[list[list[int]]]) -> StandardTableau:
    return StandardTableau(tuple(tuple(tuple(row) for row in c) for c in comps))


def rsk(w: ColoredPermutation) -> tuple[StandardTableau, StandardTableau]:
    """Insertion and recording tableaux: letter j goes into component c_j."""
    S: list[list[list[int]]] = [[] for _ in range(w.r)]
    T: list[list[list[int]]] = [[] for _ in range(w.r)]
    for j, (a, c) in enumerate(zip(w.images, w.colors), start=1):
        row, col = _row_insert(S[c], a)
        if row > len(T[c]):
            T[c].append([j])
        else:
            T[c][row - 1].append(j)
    return _freeze(S), _freeze(T)


def rsk_inverse(S: StandardTableau, T: StandardTableau) -> ColoredPermutation:
    if S.shape != T.shape:
        raise ValueError(f"shapes differ: {S.shape} vs {T.shape}")
    r, n = S.r, S.n
    comps = [[list(row) for row in c] for c in S.rows]
    pos = T.position
    images = [0] * n
    colors = [0] * n
    for j in range(n, 0, -1):
        box = pos[j]
        comp = comps[box.component]
        row = box.row - 1
        a = comp[row].pop()
        if not comp[row]:
            comp.pop()
        for up in range(row - 1, -1, -1):
            cur = comp[up]
            t = max(i for i, x in enumerate(cur) if x < a)
            cur[t], a = a, cur[t]
        images[j - 1] = a
        colors[j - 1] = box.component
    return ColoredPermutation(r, tuple(images), tuple(colors))


# -- conjugacy classes -----------------------------------------------------------------

@lru_cache(maxsize=None)
def centralizer_order(mu: Multipartition) -> int:
    r = mu.r
    total = 1
    for comp in mu.components:
        for part, a in Counter(comp).items():
            total *= part ** a * factorial(a)
        total *= r ** len(comp)
    return total


def class_size(mu: Multipartition) -> int:
    return group_order(mu.r, mu.n) // centralizer_order(mu)


def class_representative(mu: Multipartition) -> ColoredPermutation:
    """An element of type mu: consecutive cycles, color carried by the first letter."""
    r, n = mu.r, mu.n
    images = [0] * n
    colors = [0] * n
    start = 0
    for color, comp in enumerate(mu.components):
        for part in comp:
            for t in range(part):
                images[start + t] = start + (t + 1) % part + 1
            colors[start] = color
            start += part
    return ColoredPermutation(r, tuple(images), tuple(colors))


def classes(r: int, n: int) -> tuple[Multipartition, ...]:
    return multipartitions(r, n)


# -- Ewens-type weights ----------------------------------------------------------------

def ewens_weight(w: ColoredPermutation, q) -> Fraction:
    q = Fraction(q)
    return (w.r * q + 1) ** length(w)


def ewens_normalizer(r: int, n: int, q) -> Fraction:
    """sum over W(r, n) of (rq+1)^length, via class sizes."""
    q = Fraction(q)
    return sum(class_size(mu) * (r * q + 1) ** len(mu[0]) for mu in multipartitions(r, n))


def ewens_closed_form(r: int, n: int, q) -> Fraction:
    q = Fraction(q)
    return prod((r * (q + i) for i in range(1, n + 1)), start=Fraction(1))


def ewens_printed_normalizer(r: int, n: int, q) -> Fraction:
    """(rq+1)(r(q+1)+1)...(r(q+n)+1), kept for comparison only."""
    q = Fraction(q)
    return prod((r * (q + i) + 1 for i in range(n + 1)), start=Fraction(1))


def ewens_probability(w: ColoredPermutation, q) -> Fraction:
    return ewens_weight(w, q) / ewens_normalizer(w.r, w.n, q)
