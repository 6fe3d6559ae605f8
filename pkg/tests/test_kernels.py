import os
import subprocess
import sys

import numpy as np
import pytest

from wreathfoulkes import _kernels
from wreathfoulkes import wreath as wr
from wreathfoulkes.tensor import basis_colors, parity_vector

needs_numba = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba unavailable")


def test_group_arrays_follow_element_order():
    images, colors = _kernels.group_arrays(2, 3)
    for row, w in enumerate(wr.elements(2, 3)):
        assert tuple(images[row]) == w.images and tuple(colors[row]) == w.colors


@pytest.mark.parametrize("r,n", [(1, 5), (2, 4), (3, 3), (2, 0)])
def test_numpy_kernels_match_python_definitions(r, n):
    images, colors = _kernels.group_arrays(r, n)
    els = list(wr.elements(r, n))
    assert _kernels.descent_numbers(images, colors, "numpy").tolist() == [wr.descent_number(w) for w in els]
    assert _kernels.color0_cycle_counts(images, colors, r, "numpy").tolist() == [wr.length(w) for w in els]


@needs_numba
@pytest.mark.parametrize("r,n", [(1, 5), (2, 4), (3, 3), (4, 3)])
def test_numba_matches_numpy(r, n):
    images, colors = _kernels.group_arrays(r, n)
    assert np.array_equal(_kernels.descent_numbers(images, colors, "numba"),
                          _kernels.descent_numbers(images, colors, "numpy"))
    assert np.array_equal(_kernels.color0_cycle_counts(images, colors, r, "numba"),
                          _kernels.color0_cycle_counts(images, colors, r, "numpy"))


@needs_numba
@pytest.mark.parametrize("r,n,k,parity", [(2, 3, 1, "even"), (2, 4, 2, "odd"), (3, 3, 1, "super")])
def test_tensor_kernel_backends_agree(r, n, k, parity):
    for mu in wr.classes(r, n):
        w = wr.class_representative(mu)
        args = (np.array(w.images), np.array(w.colors), np.array(basis_colors(r, k)),
                np.array(parity_vector(r, parity)), r)
        assert np.array_equal(_kernels.tensor_trace_counts(*args, backend="numba"),
                              _kernels.tensor_trace_counts(*args, backend="numpy"))


def test_env_flag_forces_numpy():
    env = dict(os.environ, WREATHFOULKES_DISABLE_NUMBA="1")
    code = ("from wreathfoulkes import _kernels, wreath; "
            "print(_kernels.BACKEND, _kernels.HAVE_NUMBA, wreath.eulerian_bruteforce(2, 3))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split(None, 2) == ["numpy", "False", "[1, 23, 23, 1]\n"]
