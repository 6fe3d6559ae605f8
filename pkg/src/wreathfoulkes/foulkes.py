"""Block characters, Foulkes characters and the identities relating them.

A block function on W(r, n) depends on an element only through its length
(number of color-0 cycles), so it is stored as the n+1 values at lengths 0..n.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import chartable as ct
from .combinatorics import (BoundaryConvention, Multipartition, addable_boxes, m_count,
                            mbar_count, multipartitions)
from .wreath import eulerian_row
from .exact import Cyclotomic, as_cyclotomic, exact_rank, exact_solve


class ConventionMismatch(ValueError):
    """An irreducible multiplicity came out negative or non-integral."""


@dataclass(frozen=True)
class BlockFunction:
    r: int
    n: int
    values_by_length: tuple

    def __post_init__(self):
        vals = tuple(as_cyclotomic(self.r, v) for v in self.values_by_length)
        if len(vals) != self.n + 1:
            raise ValueError(f"need {self.n + 1} values, got {len(vals)}")
        object.__setattr__(self, "values_by_length", vals)

    def at_length(self, ell: int) -> Cyclotomic:
        return self.values_by_length[ell]

    def __add__(self, other: "BlockFunction") -> "BlockFunction":
        self._check(other)
        return BlockFunction(self.r, self.n, tuple(a + b for a, b in zip(self.values_by_length, other.values_by_length)))

    def __sub__(self, other: "BlockFunction") -> "BlockFunction":
        self._check(other)
        return BlockFunction(self.r, self.n, tuple(a - b for a, b in zip(self.values_by_length, other.values_by_length)))

    def scale(self, c) -> "BlockFunction":
        return BlockFunction(self.r, self.n, tuple(v * c for v in self.values_by_length))

    def _check(self, other):
        if (self.r, self.n) != (other.r, other.n):
            raise ValueError("block functions on different groups")

    def to_class_function(self) -> ct.ClassFunction:
        return ct.ClassFunction.from_callable(self.r, self.n, lambda mu: self.values_by_length[len(mu[0])])

    def restrict(self) -> "BlockFunction":
        """Restriction to W(r, n-1): an embedded element gains one color-0 fixed point."""
        if self.n < 1:
            raise ValueError("cannot restrict from n = 0")
        return BlockFunction(self.r, self.n - 1, self.values_by_length[1:])


def zero_block(r: int, n: int) -> BlockFunction:
    return BlockFunction(r, n, (0,) * (n + 1))


def from_class_function(f: ct.ClassFunction) -> BlockFunction | None:
    """The block function equal to f, or None if f is not constant on lengths."""
    vals: dict[int, Cyclotomic] = {}
    for mu, v in f.values.items():
        ell = len(mu[0])
        if vals.setdefault(ell, v) != v:
            return None
    return BlockFunction(f.r, f.n, tuple(vals[ell] for ell in range(f.n + 1)))


def chi_block(r: int, n: int, k) -> BlockFunction:
    """(rk+1)^length; k may be any rational."""
    base = r * Fraction(k) + 1
    return BlockFunction(r, n, tuple(base ** ell for ell in range(n + 1)))


def chi_signed_closed(r: int, n: int, k: int) -> BlockFunction:
    """(-1)^(n+r-1) * (-rk-1)^length, exactly as printed; compared against direct traces."""
    sign = (-1) ** (n + r - 1)
    return BlockFunction(r, n, tuple(sign * (-r * k - 1) ** ell for ell in range(n + 1)))


def alternating_transform(blocks: list[BlockFunction]) -> list[BlockFunction]:
    """phi_i = sum_j (-1)^j C(n+1, j) * blocks[i-j]."""
    r, n = blocks[0].r, blocks[0].n
    out = []
    for i in range(len(blocks)):
        acc = zero_block(r, n)
        for j in range(i + 1):
            acc = acc + blocks[i - j].scale((-1) ** j * comb(n + 1, j))
        out.append(acc)
    return out


def inverse_transform(phis: list[BlockFunction]) -> list[BlockFunction]:
    """chi_k = sum_j C(n+j, j) * phis[k-j]."""
    r, n = phis[0].r, phis[0].n
    out = []
    for k in range(len(phis)):
        acc = zero_block(r, n)
        for j in range(k + 1):
            acc = acc + phis[k - j].scale(comb(n + j, j))
        out.append(acc)
    return out


def foulkes_all(r: int, n: int) -> list[BlockFunction]:
    return alternating_transform([chi_block(r, n, k) for k in range(n + 1)])


def foulkes(r: int, n: int, k: int) -> BlockFunction:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return foulkes_all(r, n)[k]


def foulkes_inverse_check(r: int, n: int) -> dict:
    chis = [chi_block(r, n, k) for k in range(n + 1)]
    back = inverse_transform(foulkes_all(r, n))
    bad = [k for k in range(n + 1) if back[k] != chis[k]]
    return {"r": r, "n": n, "ok": not bad, "failing_k": bad}


def power_matrix_rank(r: int, n: int) -> int:
    """Rank of [(ra+1)^b]_{a,b=0..n}."""
    return exact_rank([[Fraction(r * a + 1) ** b for b in range(n + 1)] for a in range(n + 1)])


# -- decompositions ---------------------------------------------------------------------

def foulkes_multiplicities(r: int, n: int, k: int, labeling: str = "direct") -> dict[Multipartition, int]:
    """<phi_k, chi^lam> for every lam; must be non-negative integers."""
    coeffs = ct.decompose(foulkes(r, n, k).to_class_function(), labeling)
    out = {}
    for lam, c in coeffs.items():
        if not c.is_rational() or c.rational_value().denominator != 1 or c.rational_value() < 0:
            raise ConventionMismatch(f"<phi_{k}, chi^{lam}> = {c} in W({r},{n})")
        out[lam] = int(c.rational_value())
    return out


def calibrate_labeling(r: int, n: int) -> str:
    """First labeling under which every <phi_k, chi^lam> equals m_k(lam)."""
    for labeling in ct.LABELINGS:
        try:
            if all(mult[lam] == m_count(lam, k)
                   for k in range(n + 1)
                   for mult in [foulkes_multiplicities(r, n, k, labeling)]
                   for lam in multipartitions(r, n)):
                return labeling
        except ConventionMismatch:
            continue
    raise ConventionMismatch(f"no labeling reproduces tableau counts in W({r},{n})")


def descent_combination(r: int, n: int, k: int, labeling: str = "direct") -> ct.ClassFunction:
    """sum_lam m_k(lam) chi^lam."""
    return ct.recompose({lam: m_count(lam, k) for lam in multipartitions(r, n)}, r, n, labeling)


def signed_foulkes_combinatorial(r: int, n: int, k: int,
                                 conv: BoundaryConvention = BoundaryConvention.COMPLEMENT,
                                 labeling: str = "direct") -> ct.ClassFunction:
    """sum_lam mbar_k(lam) chi^lam."""
    return ct.recompose({lam: mbar_count(lam, k, conv) for lam in multipartitions(r, n)}, r, n, labeling)


def signed_foulkes_from_blocks(blocks: list[BlockFunction]) -> list[BlockFunction]:
    """Alternating transform applied to a family of signed block functions."""
    return alternating_transform(blocks)


# -- branching and properties ---------------------------------------------------------

def branching_check(r: int, n: int) -> dict:
    """Restriction of chi_k and phi_k to W(r, n-1), as exact block functions."""
    if n < 1:
        raise ValueError("need n >= 1")
    failures = []
    for k in range(n + 1):
        if chi_block(r, n, k).restrict() != chi_block(r, n - 1, k).scale(r * k + 1):
            failures.append(("chi", k))
    phis = foulkes_all(r, n)
    prev = foulkes_all(r, n - 1)
    zero = zero_block(r, n - 1)
    for k in range(n + 1):
        lower = prev[k - 1] if 1 <= k <= n else zero
        same = prev[k] if k <= n - 1 else zero
        expected = lower.scale(r * (n + 1) - (r * k + 1)) + same.scale(r * k + 1)
        if phis[k].restrict() != expected:
            failures.append(("phi", k))
    return {"r": r, "n": n, "ok": not failures, "failures": failures}


def properties_check(r: int, n: int) -> dict:
    phis = foulkes_all(r, n)
    dims = [phi.at_length(n) for phi in phis]
    dims_ok = dims == [as_cyclotomic(r, e) for e in eulerian_row(r, n)]
    total = phis[0]
    for phi in phis[1:]:
        total = total + phi
    regular_ok = total.to_class_function() == ct.regular_character(r, n)
    return {"r": r, "n": n, "dims": [str(d) for d in dims], "dims_ok": dims_ok,
            "regular_ok": regular_ok, "ok": dims_ok and regular_ok}


def aggregated_branching_check(r: int, n: int) -> list[dict]:
    """Sum over boxes addable to mu of m_k(mu + box) against the Eulerian-type recursion.

    Returns the failing (mu, k) cases; empty when the identity holds.
    """
    bad = []
    for mu in multipartitions(r, n - 1):
        for k in range(n + 1):
            lhs = sum(m_count(mu.add_box(b), k) for b in addable_boxes(mu))
            rhs = (r * (n + 1) - (r * k + 1)) * m_count(mu, k - 1) + (r * k + 1) * m_count(mu, k)
            if lhs != rhs:
                bad.append({"mu": str(mu), "k": k, "lhs": lhs, "rhs": rhs})
    return bad


def unsummed_branching_witness(r_max: int = 3, n_max: int = 4) -> dict | None:
    """Smallest (n, r, lam, box, k) where m_k(lam) differs from the single-box form

    (r(n+1) - (rk+1)) m_{k-1}(lam - box) + (rk+1) m_k(lam - box).
    """
    for n in range(1, n_max + 1):
        for r in range(1, r_max + 1):
            for lam in multipartitions(r, n):
                for box in ct.removable_boxes(lam):
                    mu = lam.remove_box(box)
                    for k in range(n + 1):
                        lhs = m_count(lam, k)
                        rhs = (r * (n + 1) - (r * k + 1)) * m_count(mu, k - 1) + (r * k + 1) * m_count(mu, k)
                        if lhs != rhs:
                            return {"r": r, "n": n, "lam": str(lam), "box": list(box), "k": k,
                                    "lhs": lhs, "rhs": rhs}
    return None


# -- the simplex of normalized block characters ------------------------------------------

def lambda_k(r: int, n: int, k: int) -> Multipartition:
    """((n-k); (1^k); empty; ...)."""
    if r < 2:
        raise ValueError("needs r >= 2")
    return Multipartition(((n - k,) if n - k else (), (1,) * k) + ((),) * (r - 2))


def block_coefficients(f: BlockFunction, labeling: str = "direct") -> list[Cyclotomic]:
    """Coordinates of f in the basis phi_0..phi_n.

    For r >= 2 coordinate k is <f, chi^lam_k> / C(n, k).  For r = 1 the shapes
    lam_k do not exist and the coordinates are obtained by solving the linear
    system in the length basis instead.
    """
    r, n = f.r, f.n
    if r >= 2:
        cf = f.to_class_function()
        return [ct.inner_product(cf, ct.irreducible_character(lambda_k(r, n, k), labeling)) / comb(n, k)
                for k in range(n + 1)]
    phis = foulkes_all(r, n)
    A = [[phis[k].at_length(ell) for k in range(n + 1)] for ell in range(n + 1)]
    return exact_solve(A, list(f.values_by_length))


def reconstruct(coeffs: list, r: int, n: int) -> BlockFunction:
    acc = zero_block(r, n)
    for c, phi in zip(coeffs, foulkes_all(r, n)):
        acc = acc + phi.scale(c)
    return acc


def is_block_character(f: BlockFunction, labeling: str = "direct") -> bool:
    """True iff every Foulkes coordinate of f is a non-negative rational."""
    for c in block_coefficients(f, labeling):
        if not c.is_rational() or c.rational_value() < 0:
            return False
    return True


def generalized_binomial(x: Fraction, n: int) -> Fraction:
    num = Fraction(1)
    for t in range(n):
        num *= x - t
    return num / factorial(n)


def q_block_expansion(r: int, n: int, q) -> list[Fraction]:
    """Coefficient j is C(q+n-j, n); these expand (rq+1)^length in the phi basis."""
    q = Fraction(q)
    return [generalized_binomial(q + n - j, n) for j in range(n + 1)]


def q_block_check(r: int, n: int, q) -> bool:
    coeffs = q_block_expansion(r, n, q)
    return reconstruct(coeffs, r, n) == chi_block(r, n, q)


def q_block_threshold(n: int, q) -> bool:
    """Exact condition for every C(q+n-j, n), j = 0..n, to be non-negative."""
    return all(generalized_binomial(Fraction(q) + n - j, n) >= 0 for j in range(n + 1))
