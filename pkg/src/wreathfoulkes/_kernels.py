"""Integer kernels over whole groups of colored permutations.

Each kernel has a numba ``@njit`` version and a pure-numpy version with the
same signature.  Set ``WREATHFOULKES_DISABLE_NUMBA=1`` to force the numpy
path (numba is also skipped if it cannot be imported).
"""
from __future__ import annotations

import itertools
import os
from functools import lru_cache

import numpy as np

_DISABLED = os.environ.get("WREATHFOULKES_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:
    if _DISABLED:
        raise ImportError
    import numba as nb
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via the env flag
    nb = None
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"


@lru_cache(maxsize=16)
def group_arrays(r: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """One-line images (1-based) and colors of every element of W(r, n).

    Rows are ordered by permutation (lexicographic) and then by color vector
    (lexicographic), the same order as :func:`wreathfoulkes.wreath.elements`.
    """
    if n == 0:
        perms = np.zeros((1, 0), dtype=np.int64)
        cols = np.zeros((1, 0), dtype=np.int64)
    else:
        perms = np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int64)
        cols = np.array(list(itertools.product(range(r), repeat=n)), dtype=np.int64)
    images = np.repeat(perms, len(cols), axis=0)
    colors = np.tile(cols, (len(perms), 1))
    images.setflags(write=False)
    colors.setflags(write=False)
    return images, colors


# -- descent numbers ---------------------------------------------------------------

def _descent_numbers_np(images: np.ndarray, colors: np.ndarray) -> np.ndarray:
    m, n = images.shape
    nxt_img = np.concatenate([images[:, 1:], np.full((m, 1), n + 1, dtype=images.dtype)], axis=1)
    nxt_col = np.concatenate([colors[:, 1:], np.zeros((m, 1), dtype=colors.dtype)], axis=1)
    des = (colors > nxt_col) | ((colors == nxt_col) & (images > nxt_img))
    return des.sum(axis=1).astype(np.int64)


def _descent_numbers_py(images, colors):
    m, n = images.shape
    out = np.zeros(m, dtype=np.int64)
    for t in range(m):
        d = 0
        for i in range(n):
            if i + 1 < n:
                ni = images[t, i + 1]
                nc = colors[t, i + 1]
            else:
                ni = n + 1
                nc = 0
            c = colors[t, i]
            if c > nc or (c == nc and images[t, i] > ni):
                d += 1
        out[t] = d
    return out


# -- color-0 cycle counts (the length statistic) ------------------------------------

def _color0_cycles_np(images: np.ndarray, colors: np.ndarray, r: int) -> np.ndarray:
    m, n = images.shape
    rows = np.arange(m)
    seen = np.zeros((m, n), dtype=bool)
    count = np.zeros(m, dtype=np.int64)
    for start in range(n):
        fresh = ~seen[:, start]
        cur = np.full(m, start)
        csum = np.zeros(m, dtype=np.int64)
        active = fresh.copy()
        while active.any():
            idx = rows[active]
            seen[idx, cur[active]] = True
            csum[active] += colors[idx, cur[active]]
            cur[active] = images[idx, cur[active]] - 1
            active &= cur != start
        count += fresh & (csum % r == 0)
    return count


def _color0_cycles_py(images, colors, r):
    m, n = images.shape
    out = np.zeros(m, dtype=np.int64)
    seen = np.zeros(n, dtype=np.bool_)
    for t in range(m):
        for i in range(n):
            seen[i] = False
        cnt = 0
        for s in range(n):
            if seen[s]:
                continue
            csum = 0
            j = s
            while not seen[j]:
                seen[j] = True
                csum += colors[t, j]
                j = images[t, j] - 1
            if csum % r == 0:
                cnt += 1
        out[t] = cnt
    return out


# -- naive tensor trace ---------------------------------------------------------------

def _tensor_trace_py(images, colors, basis_colors, parities, r):
    """Accumulate, over basis tensors fixed by one element, the signed phase exponents.

    Returns an int64 vector ``acc`` with trace = sum_e acc[e] * xi^e.
    ``images``/``colors`` describe a single element (1-D arrays).
    """
    n = images.shape[0]
    dim = basis_colors.shape[0]
    acc = np.zeros(r, dtype=np.int64)
    idx = np.zeros(n, dtype=np.int64)
    total = dim ** n
    for _ in range(total):
        fixed = True
        for a in range(n):
            if idx[images[a] - 1] != idx[a]:
                fixed = False
                break
        if fixed:
            e = 0
            for a in range(n):
                e += colors[a] * basis_colors[idx[a]]
            # Koszul sign: sign of the permutation restricted to odd-parity slots
            odd_inv = 0
            for a in range(n):
                if parities[basis_colors[idx[a]]] == 1:
                    for b in range(a + 1, n):
                        if parities[basis_colors[idx[b]]] == 1 and images[a] > images[b]:
                            odd_inv += 1
            if odd_inv % 2 == 0:
                acc[e % r] += 1
            else:
                acc[e % r] -= 1
        a = 0
        while a < n:
            idx[a] += 1
            if idx[a] < dim:
                break
            idx[a] = 0
            a += 1
    return acc


def _tensor_trace_np(images, colors, basis_colors, parities, r):
    n = images.shape[0]
    dim = basis_colors.shape[0]
    grid = np.indices((dim,) * n).reshape(n, -1).T if n else np.zeros((1, 0), dtype=np.int64)
    fixed = np.all(grid[:, images - 1] == grid, axis=1)
    sel = grid[fixed]
    bc = basis_colors[sel]
    e = (bc * colors[None, :]).sum(axis=1) % r
    odd = parities[bc] == 1
    inv = np.zeros(len(sel), dtype=np.int64)
    for a in range(n):
        for b in range(a + 1, n):
            if images[a] > images[b]:
                inv += odd[:, a] & odd[:, b]
    sign = np.where(inv % 2 == 0, 1, -1)
    return np.bincount(e, weights=sign, minlength=r).astype(np.int64)


if HAVE_NUMBA:
    _descent_numbers_nb = nb.njit(cache=True)(_descent_numbers_py)
    _color0_cycles_nb = nb.njit(cache=True)(_color0_cycles_py)
    _tensor_trace_nb = nb.njit(cache=True)(_tensor_trace_py)


def descent_numbers(images: np.ndarray, colors: np.ndarray, backend: str | None = None) -> np.ndarray:
    if (backend or BACKEND) == "numba":
        return _descent_numbers_nb(images, colors)
    return _descent_numbers_np(images, colors)


def color0_cycle_counts(images: np.ndarray, colors: np.ndarray, r: int,
                        backend: str | None = None) -> np.ndarray:
    if (backend or BACKEND) == "numba":
        return _color0_cycles_nb(images, colors, r)
    return _color0_cycles_np(images, colors, r)


def tensor_trace_counts(images: np.ndarray, colors: np.ndarray, basis_colors: np.ndarray,
                        parities: np.ndarray, r: int, backend: str | None = None) -> np.ndarray:
    images = np.ascontiguousarray(images, dtype=np.int64)
    colors = np.ascontiguousarray(colors, dtype=np.int64)
    basis_colors = np.ascontiguousarray(basis_colors, dtype=np.int64)
    parities = np.ascontiguousarray(parities, dtype=np.int64)
    if (backend or BACKEND) == "numba":
        return _tensor_trace_nb(images, colors, basis_colors, parities, r)
    return _tensor_trace_np(images, colors, basis_colors, parities, r)
