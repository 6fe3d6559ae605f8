"""Exact irreducible characters of W(r, n) over Q(xi_r)."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .combinatorics import Multipartition, multipartitions, removable_boxes
from .exact import Cyclotomic, as_cyclotomic, conjugate
from .wreath import centralizer_order, class_size, group_order


# -- symmetric group characters ----------------------------------------------------

@lru_cache(maxsize=None)
def _sn_beta(beta: tuple, mu: tuple) -> int:
    # beta: strictly decreasing beta-numbers; mu: cycle lengths still to remove
    if not mu:
        return 1
    L, rest = mu[0], mu[1:]
    occupied = set(beta)
    total = 0
    for b in beta:
        t = b - L
        if t < 0 or t in occupied:
            continue
        # beads strictly between t and b give the leg length of the rim hook
        height = sum(1 for x in beta if t < x < b)
        new = tuple(sorted((x if x != b else t for x in beta), reverse=True))
        val = _sn_beta(new, rest)
        total += -val if height % 2 else val
    return total


def sn_character(lam, mu) -> int:
    """chi^lam of S_n at cycle type mu (Murnaghan-Nakayama with beta-numbers)."""
    lam = tuple(lam)
    mu = tuple(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"|{lam}| != |{mu}|")
    m = len(lam)
    beta = tuple(lam[i] + (m - 1 - i) for i in range(m))
    return _sn_beta(beta, mu)


# -- class functions -----------------------------------------------------------------

@dataclass(frozen=True)
class ClassFunction:
    """A function on the conjugacy classes of W(r, n), keyed by cycle type."""

    r: int
    n: int
    values: Mapping[Multipartition, Cyclotomic] = field(hash=False)

    def __post_init__(self):
        vals = {mu: as_cyclotomic(self.r, self.values.get(mu, 0)) for mu in multipartitions(self.r, self.n)}
        extra = set(self.values) - set(vals)
        if extra:
            raise ValueError(f"classes not in W({self.r},{self.n}): {sorted(map(str, extra))}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_callable(cls, r: int, n: int, fn: Callable[[Multipartition], object]) -> "ClassFunction":
        return cls(r, n, {mu: fn(mu) for mu in multipartitions(r, n)})

    def __call__(self, mu: Multipartition) -> Cyclotomic:
        return self.values[mu]

    def _check(self, other: "ClassFunction"):
        if (self.r, self.n) != (other.r, other.n):
            raise ValueError(f"domains differ: W({self.r},{self.n}) vs W({other.r},{other.n})")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.r, self.n, {mu: v + other.values[mu] for mu, v in self.values.items()})

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.r, self.n, {mu: v - other.values[mu] for mu, v in self.values.items()})

    def __neg__(self):
        return ClassFunction(self.r, self.n, {mu: -v for mu, v in self.values.items()})

    def scale(self, c) -> "ClassFunction":
        return ClassFunction(self.r, self.n, {mu: v * c for mu, v in self.values.items()})

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.r, self.n, {mu: v * other.values[mu] for mu, v in self.values.items()})
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return (self.r, self.n) == (other.r, other.n) and all(
            self.values[mu] == other.values[mu] for mu in self.values)

    def __hash__(self):
        return hash((self.r, self.n, tuple(self.values.values())))

    def at_identity(self) -> Cyclotomic:
        return self.values[identity_class(self.r, self.n)]

    def to_list(self) -> list[Cyclotomic]:
        return [self.values[mu] for mu in multipartitions(self.r, self.n)]


def identity_class(r: int, n: int) -> Multipartition:
    return Multipartition(((1,) * n,) + ((),) * (r - 1))


def zero_function(r: int, n: int) -> ClassFunction:
    return ClassFunction(r, n, {})


def trivial_character(r: int, n: int) -> ClassFunction:
    return ClassFunction.from_callable(r, n, lambda mu: 1)


def regular_character(r: int, n: int) -> ClassFunction:
    e = identity_class(r, n)
    return ClassFunction(r, n, {e: group_order(r, n)})


def inner_product(f: ClassFunction, g: ClassFunction) -> Cyclotomic:
    f._check(g)
    total = Cyclotomic.rational(f.r, 0)
    for mu, v in f.values.items():
        if v:
            total = total + v * conjugate(g.values[mu]) * class_size(mu)
    return total / group_order(f.r, f.n)


def restrict(f: ClassFunction) -> ClassFunction:
    """Restriction to W(r, n-1), embedded as the elements fixing n with color 0."""
    if f.n < 1:
        raise ValueError("cannot restrict from n = 0")

    def value(mu: Multipartition):
        comps = list(mu.components)
        comps[0] = tuple(sorted(comps[0] + (1,), reverse=True))
        return f.values[Multipartition(tuple(comps))]

    return ClassFunction.from_callable(f.r, f.n - 1, value)


# -- induction on class data -----------------------------------------------------------

def _splittings(mu: Multipartition, sizes: tuple[int, ...]):
    """Ways to distribute the cycles of mu among len(sizes) factors with given sizes.

    Yields tuples of multipartitions, one per factor.  Cycles of equal length
    and color are interchangeable, so only multiplicities are distributed.
    """
    r = mu.r
    m = len(sizes)
    groups = [(c, L, a) for c, comp in enumerate(mu.components) for L, a in sorted(Counter(comp).items())]

    def distribute(a: int, slots: int):
        if slots == 1:
            yield (a,)
            return
        for first in range(a, -1, -1):
            for rest in distribute(a - first, slots - 1):
                yield (first,) + rest

    def rec(idx: int, remaining: tuple[int, ...], acc: list):
        if idx == len(groups):
            if not any(remaining):
                yield acc
            return
        c, L, a = groups[idx]
        for split in distribute(a, m):
            if any(s * L > rem for s, rem in zip(split, remaining)):
                continue
            new_rem = tuple(rem - s * L for s, rem in zip(split, remaining))
            yield from rec(idx + 1, new_rem, acc + [(c, L, split)])

    for assignment in rec(0, tuple(sizes), []):
        parts = [[[] for _ in range(r)] for _ in range(m)]
        for c, L, split in assignment:
            for t, s in enumerate(split):
                parts[t][c].extend([L] * s)
        yield tuple(Multipartition(tuple(tuple(sorted(p, reverse=True)) for p in comps)) for comps in parts)


def _twisted_value(lam_i: tuple, twist: int, nu: Multipartition) -> tuple[int, int]:
    """(integer part, root exponent) of the twisted inflated S_m character at type nu."""
    cycle_lengths = [L for comp in nu.components for L in comp]
    val = sn_character(lam_i, cycle_lengths) if cycle_lengths else 1
    color_sum = sum(c * len(comp) for c, comp in enumerate(nu.components))
    return val, (twist * color_sum) % nu.r


def _character_value(lam: Multipartition, mu: Multipartition, twists: tuple[int, ...]) -> Cyclotomic:
    r = lam.r
    acc = [0] * r
    cg = centralizer_order(mu)
    for split in _splittings(mu, lam.sizes()):
        ch = 1
        e = 0
        for lam_i, twist, nu in zip(lam.components, twists, split):
            v, t = _twisted_value(lam_i, twist, nu)
            ch *= v
            e += t
            if not ch:
                break
        if ch:
            denom = 1
            for nu in split:
                denom *= centralizer_order(nu)
            acc[e % r] += ch * (cg // denom)
    return Cyclotomic(r, acc)


@dataclass(frozen=True)
class CharacterTable:
    r: int
    n: int
    rows: Mapping[Multipartition, ClassFunction] = field(hash=False)
    labeling: str = "direct"

    @property
    def classes(self) -> tuple[Multipartition, ...]:
        return multipartitions(self.r, self.n)

    def __getitem__(self, lam: Multipartition) -> ClassFunction:
        return self.rows[lam]


LABELINGS = ("direct", "galois")


def _twists(r: int, labeling: str) -> tuple[int, ...]:
    if labeling == "direct":
        return tuple(range(r))
    if labeling == "galois":
        return tuple((-i) % r for i in range(r))
    raise ValueError(f"unknown labeling {labeling!r}")


def irreducible_table(r: int, n: int, labeling: str = "direct") -> CharacterTable:
    """Row lam is induced from the product of W(r, |lam^(i)|) of the S-character of
    lam^(i) twisted by xi^(t_i * color sum), with t_i = i ("direct") or -i ("galois")."""
    return _table(r, n, labeling)


@lru_cache(maxsize=None)
def _table(r: int, n: int, labeling: str) -> CharacterTable:
    twists = _twists(r, labeling)
    rows = {}
    for lam in multipartitions(r, n):
        rows[lam] = ClassFunction(r, n, {mu: _character_value(lam, mu, twists) for mu in multipartitions(r, n)})
    return CharacterTable(r, n, rows, labeling)


def irreducible_character(lam: Multipartition, labeling: str = "direct") -> ClassFunction:
    return irreducible_table(lam.r, lam.n, labeling).rows[lam]


@lru_cache(maxsize=None)
def _weighted_conjugate_rows(r: int, n: int, labeling: str) -> dict:
    # class_size(mu) * conjugate(chi^lam(mu)), so each projection is a plain dot product
    table = irreducible_table(r, n, labeling)
    return {lam: [(mu, conjugate(chi.values[mu]) * class_size(mu)) for mu in table.classes]
            for lam, chi in table.rows.items()}


def decompose(f: ClassFunction, labeling: str = "direct") -> dict[Multipartition, Cyclotomic]:
    """<f, chi^lam> for every irreducible chi^lam."""
    order = group_order(f.r, f.n)
    out = {}
    for lam, weighted in _weighted_conjugate_rows(f.r, f.n, labeling).items():
        acc = Cyclotomic.rational(f.r, 0)
        for mu, w in weighted:
            v = f.values[mu]
            if v:
                acc = acc + v * w
        out[lam] = acc / order
    return out


def recompose(coeffs: Mapping[Multipartition, object], r: int, n: int, labeling: str = "direct") -> ClassFunction:
    table = irreducible_table(r, n, labeling)
    out = zero_function(r, n)
    for lam, c in coeffs.items():
        if c:
            out = out + table.rows[lam].scale(c)
    return out


def branching_sum(lam: Multipartition, labeling: str = "direct") -> ClassFunction:
    """Sum of chi^(lam - box) over the removable boxes of lam."""
    out = zero_function(lam.r, lam.n - 1)
    for box in removable_boxes(lam):
        out = out + irreducible_character(lam.remove_box(box), labeling)
    return out


def table_is_orthonormal(table: CharacterTable) -> bool:
    rows = list(table.rows.values())
    for i, a in enumerate(rows):
        for j, b in enumerate(rows[i:], start=i):
            if inner_product(a, b) != (1 if i == j else 0):
                return False
    return True


def column_orthogonality_holds(table: CharacterTable) -> bool:
    classes = table.classes
    for i, mu in enumerate(classes):
        for nu in classes[i:]:
            s = sum((chi(mu) * conjugate(chi(nu)) for chi in table.rows.values()),
                    Cyclotomic.rational(table.r, 0))
            if s != (centralizer_order(mu) if mu == nu else 0):
                return False
    return True


def rational_coefficients(coeffs: Mapping[Multipartition, Cyclotomic]) -> dict[Multipartition, Fraction] | None:
    """The coefficient map as rationals, or None if any coefficient is irrational."""
    out = {}
    for lam, c in coeffs.items():
        if not c.is_rational():
            return None
        out[lam] = c.rational_value()
    return out
