import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from octachain import _kernels
from octachain.graphs import build_chain
from octachain.matrix import bareiss_det
from octachain.oracles import wiener_bfs

P = 2**31 - 1


def _random_connected(rng, nv, extra):
    adj = [set() for _ in range(nv)]
    for v in range(1, nv):
        u = int(rng.integers(0, v))
        adj[u].add(v)
        adj[v].add(u)
    for _ in range(extra):
        u, v = rng.integers(0, nv, size=2)
        if u != v:
            adj[u].add(int(v))
            adj[v].add(int(u))
    return [sorted(s) for s in adj]


@pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")
@pytest.mark.parametrize("seed", range(20))
def test_distance_sum_backends_agree(seed):
    rng = np.random.default_rng(seed)
    adj = _random_connected(rng, int(rng.integers(2, 60)), int(rng.integers(0, 40)))
    indptr, indices = _kernels.to_csr(adj)
    assert _kernels.distance_sum_numba(indptr, indices) == _kernels.distance_sum_numpy(indptr, indices)


def test_distance_sum_disconnected(kernel_backend):
    indptr, indices = _kernels.to_csr([[1], [0], [3], [2]])
    assert _kernels.distance_sum(indptr, indices) == -1


def test_distance_sum_single_vertex(kernel_backend):
    indptr, indices = _kernels.to_csr([[]])
    assert _kernels.distance_sum(indptr, indices) == 0


@pytest.mark.parametrize("n", [1, 3, 6])
def test_wiener_same_on_both_backends(n, kernel_backend):
    expected = {1: 50, 3: 1020, 6: 7512}
    assert wiener_bfs(build_chain(n, "mobius")) == expected[n]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7).flatmap(
    lambda k: st.lists(st.lists(st.integers(-9, 9), min_size=k, max_size=k), min_size=k, max_size=k)
))
def test_det_mod_matches_exact(rows):
    want = bareiss_det(rows) % P
    a = np.array(rows, dtype=np.int64)
    assert _kernels.det_mod_numpy(a, P) == want
    if _kernels.HAVE_NUMBA:
        assert _kernels.det_mod_numba(a, P) == want


def test_det_mod_needs_pivoting(kernel_backend):
    a = np.array([[0, 1], [1, 0]])
    assert _kernels.det_mod(a, 7) == 6


def test_det_mod_singular(kernel_backend):
    assert _kernels.det_mod(np.array([[1, 2], [2, 4]]), 101) == 0


def test_det_mod_rejects_bad_modulus():
    with pytest.raises(ValueError):
        _kernels.det_mod(np.eye(2, dtype=np.int64), 2)
    with pytest.raises(ValueError):
        _kernels.det_mod(np.eye(2, dtype=np.int64), 2**31 + 11)


def test_det_mod_does_not_mutate_input(kernel_backend):
    a = np.array([[2, 1], [1, 3]], dtype=np.int64)
    before = a.copy()
    assert _kernels.det_mod(a, 13) == 5
    assert np.array_equal(a, before)


@pytest.mark.parametrize("value,expected", [("1", "numpy"), ("0", None), ("", None)])
def test_env_flag_selects_backend(value, expected):
    env = dict(os.environ, OCTACHAIN_DISABLE_NUMBA=value)
    out = subprocess.run(
        [sys.executable, "-c", "from octachain import _kernels; print(_kernels.backend())"],
        env=env, capture_output=True, text=True, check=True,
    ).stdout.strip()
    if expected is None:
        expected = "numba" if _kernels.HAVE_NUMBA else "numpy"
    assert out == expected
