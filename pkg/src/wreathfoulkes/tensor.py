"""W(r, n) acting on tensor powers of a colored vector space.

V has k+1 basis vectors of color 0 and k of each color 1..r-1.  An element
sends the factor in slot a to slot w(a) and multiplies by xi^(c_a * color(v)).
In the signed variant, factors carry a parity per color and moving odd factors
past each other costs a sign (the Koszul rule); the all-odd parity gives the
uniform -1 per adjacent transposition.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _kernels
from . import chartable as ct
from .combinatorics import Multipartition, column_semistandard_count, multipartitions, row_semistandard_count
from .exact import BudgetExceeded, Cyclotomic
from .wreath import ColoredPermutation, class_representative, cycles

DEFAULT_BUDGET = 10 ** 7

ALL_EVEN = "even"
ALL_ODD = "odd"
SUPER = "super"  # color 0 even, every other color odd


def basis_colors(r: int, k: int) -> list[int]:
    return [0] * (k + 1) + [c for c in range(1, r) for _ in range(k)]


def parity_vector(r: int, parity) -> tuple[int, ...]:
    """Parity per color from a name or an explicit sequence of 0/1."""
    if parity == ALL_EVEN or parity is None:
        return (0,) * r
    if parity == ALL_ODD:
        return (1,) * r
    if parity == SUPER:
        return (0,) + (1,) * (r - 1)
    vec = tuple(int(p) for p in parity)
    if len(vec) != r or any(p not in (0, 1) for p in vec):
        raise ValueError(f"parity must be {r} values in {{0,1}}, got {parity!r}")
    return vec


def _cycle_factor(r: int, k: int, color: int, length: int, parities: tuple[int, ...]) -> list[int]:
    # sum over single-space basis vectors v of xi^(color * c(v)) * (-1)^(p(c(v)) * (length - 1))
    acc = [0] * r
    for c in basis_colors(r, k):
        sign = -1 if parities[c] and (length - 1) % 2 else 1
        acc[(color * c) % r] += sign
    return acc


def _convolve(a: list[int], b: list[int], r: int) -> list[int]:
    out = [0] * r
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[(i + j) % r] += x * y
    return out


def trace(w: ColoredPermutation, k: int, parity=None) -> Cyclotomic:
    """Trace of w on V^(tensor n), from the cycle structure of w."""
    r = w.r
    parities = parity_vector(r, parity)
    acc = [1] + [0] * (r - 1)
    for cyc, color in cycles(w):
        acc = _convolve(acc, _cycle_factor(r, k, color, len(cyc), parities), r)
    return Cyclotomic(r, acc)


def unsigned_trace(w: ColoredPermutation, k: int) -> Cyclotomic:
    return trace(w, k, ALL_EVEN)


def signed_trace(w: ColoredPermutation, k: int, parity=ALL_ODD) -> Cyclotomic:
    return trace(w, k, parity)


def naive_trace(w: ColoredPermutation, k: int, parity=None, budget: int = DEFAULT_BUDGET,
                backend: str | None = None) -> Cyclotomic:
    """Trace by summing over every basis tensor fixed by w."""
    r, n = w.r, w.n
    dim = r * k + 1
    if dim ** n > budget:
        raise BudgetExceeded(f"(rk+1)^n = {dim ** n} exceeds budget {budget}")
    counts = _kernels.tensor_trace_counts(
        np.array(w.images), np.array(w.colors), np.array(basis_colors(r, k)),
        np.array(parity_vector(r, parity)), r, backend)
    return Cyclotomic(r, [int(x) for x in counts])


@lru_cache(maxsize=None)
def tensor_character(r: int, n: int, k: int, parity=None) -> ct.ClassFunction:
    if not isinstance(parity, (str, type(None))):
        parity = tuple(parity)
    return ct.ClassFunction.from_callable(r, n, lambda mu: trace(class_representative(mu), k, parity))


def tensor_multiplicity(lam: Multipartition, k: int, labeling: str = "direct") -> Cyclotomic:
    return ct.decompose(tensor_character(lam.r, lam.n, k, ALL_EVEN), labeling)[lam]


def signed_tensor_multiplicity(lam: Multipartition, k: int, parity=ALL_ODD, labeling: str = "direct") -> Cyclotomic:
    return ct.decompose(tensor_character(lam.r, lam.n, k, parity), labeling)[lam]


def multiplicity_report(r: int, n: int, k: int, parity=None, labeling: str = "direct") -> dict:
    """Compare tensor multiplicities with s_k (even parity) or c_k (any other parity)."""
    signed = parity_vector(r, parity) != (0,) * r
    coeffs = ct.decompose(tensor_character(r, n, k, parity if signed else ALL_EVEN), labeling)
    count = column_semistandard_count if signed else row_semistandard_count
    mismatches = []
    for lam in multipartitions(r, n):
        expected = count(lam, k)
        if coeffs[lam] != expected:
            mismatches.append({"lam": str(lam), "multiplicity": str(coeffs[lam]), "expected": expected})
    return {"r": r, "n": n, "k": k, "parity": list(parity_vector(r, parity)),
            "compared_with": "c_k" if signed else "s_k", "ok": not mismatches, "mismatches": mismatches}


def signed_closed_form_report(r: int, n: int, k: int, parities: Sequence = (ALL_ODD, SUPER)) -> list[dict]:
    """Does any parity assignment reproduce (-1)^(n+r-1) (-rk-1)^length at every class?"""
    from .foulkes import chi_signed_closed

    closed = chi_signed_closed(r, n, k).to_class_function()
    out = []
    for parity in parities:
        chi = tensor_character(r, n, k, parity)
        bad = [{"class": str(mu), "trace": str(chi(mu)), "printed": str(closed(mu))}
               for mu in multipartitions(r, n) if chi(mu) != closed(mu)]
        out.append({"parity": list(parity_vector(r, parity)), "matches": not bad, "first_mismatch": bad[:1]})
    return out
