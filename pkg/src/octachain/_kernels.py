"""Hot loops with a numba path and a pure-numpy path.

Set ``OCTACHAIN_DISABLE_NUMBA=1`` to force the numpy versions (numba is also
skipped when it cannot be imported).  Both versions are always importable
under explicit names so they can be tested and benchmarked against each
other.
"""

from __future__ import annotations

import os

import numpy as np

_FLAG = os.environ.get("OCTACHAIN_DISABLE_NUMBA", "").strip().lower()
NUMBA_DISABLED = _FLAG not in ("", "0", "false", "no")

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

HAVE_NUMBA = numba is not None


def backend() -> str:
    return "numba" if HAVE_NUMBA and not NUMBA_DISABLED else "numpy"


# --- all-pairs BFS distance sum ------------------------------------------


def _distance_sum_loops(indptr, indices):
    nv = indptr.shape[0] - 1
    dist = np.empty(nv, dtype=np.int64)
    queue = np.empty(nv, dtype=np.int64)
    total = 0
    for s in range(nv):
        dist[:] = -1
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u] + 1
            for p in range(indptr[u], indptr[u + 1]):
                w = indices[p]
                if dist[w] < 0:
                    dist[w] = du
                    queue[tail] = w
                    tail += 1
        if tail != nv:
            return -1
        for v in range(nv):
            total += dist[v]
    return total


def distance_sum_numpy(indptr: np.ndarray, indices: np.ndarray) -> int:
    """Sum of BFS distances over ordered vertex pairs; -1 if disconnected.

    Runs every source at once: the frontier is a boolean matrix advanced by
    one adjacency product per BFS level.
    """
    nv = indptr.shape[0] - 1
    # float32 so the product goes through BLAS; counts stay far below 2**24
    adj = np.zeros((nv, nv), dtype=np.float32)
    rows = np.repeat(np.arange(nv), np.diff(indptr))
    adj[rows, indices] = 1
    reached = np.eye(nv, dtype=bool)
    frontier = reached.copy()
    total = 0
    level = 0
    while frontier.any():
        level += 1
        frontier = ((frontier.astype(np.float32) @ adj) > 0) & ~reached
        reached |= frontier
        total += level * int(frontier.sum())
    if not reached.all():
        return -1
    return total


# --- determinant modulo a prime -------------------------------------------


def _det_mod_loops(a, p):
    # a is consumed; entries must already lie in [0, p), p < 2**31
    n = a.shape[0]
    det = 1
    for k in range(n):
        piv = -1
        for i in range(k, n):
            if a[i, k] != 0:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != k:
            for j in range(n):
                tmp = a[k, j]
                a[k, j] = a[piv, j]
                a[piv, j] = tmp
            det = (p - det) % p
        akk = a[k, k]
        det = (det * akk) % p
        # inverse by Fermat
        inv = 1
        base = akk
        e = p - 2
        while e > 0:
            if e & 1:
                inv = (inv * base) % p
            base = (base * base) % p
            e >>= 1
        for i in range(k + 1, n):
            f = (a[i, k] * inv) % p
            if f != 0:
                for j in range(k, n):
                    a[i, j] = (a[i, j] - f * a[k, j]) % p
    return det


def det_mod_numpy(a: np.ndarray, p: int) -> int:
    a = np.mod(np.array(a, dtype=np.int64), p)
    n = a.shape[0]
    det = 1
    for k in range(n):
        nz = np.nonzero(a[k:, k])[0]
        if nz.size == 0:
            return 0
        piv = k + int(nz[0])
        if piv != k:
            a[[k, piv]] = a[[piv, k]]
            det = (-det) % p
        akk = int(a[k, k])
        det = (det * akk) % p
        inv = pow(akk, p - 2, p)
        f = (a[k + 1 :, k] * inv) % p
        a[k + 1 :, k:] = (a[k + 1 :, k:] - np.outer(f, a[k, k:]) % p) % p
    return int(det)


if HAVE_NUMBA:
    _distance_sum_nb = numba.njit(cache=True)(_distance_sum_loops)
    _det_mod_nb = numba.njit(cache=True)(_det_mod_loops)

    def distance_sum_numba(indptr: np.ndarray, indices: np.ndarray) -> int:
        return int(
            _distance_sum_nb(
                np.ascontiguousarray(indptr, dtype=np.int64),
                np.ascontiguousarray(indices, dtype=np.int64),
            )
        )

    def det_mod_numba(a: np.ndarray, p: int) -> int:
        work = np.mod(np.array(a, dtype=np.int64), p)
        return int(_det_mod_nb(work, np.int64(p)))

else:  # pragma: no cover
    distance_sum_numba = None
    det_mod_numba = None


def distance_sum(indptr: np.ndarray, indices: np.ndarray) -> int:
    if backend() == "numba":
        return distance_sum_numba(indptr, indices)
    return distance_sum_numpy(indptr, indices)


def det_mod(a: np.ndarray, p: int) -> int:
    if not 2 < p < 2**31:
        raise ValueError("modulus must be an odd prime below 2**31")
    if backend() == "numba":
        return det_mod_numba(a, p)
    return det_mod_numpy(a, p)


def to_csr(adjacency: list[list[int]]) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(len(adjacency) + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(r) for r in adjacency])
    indices = np.fromiter(
        (w for r in adjacency for w in r), dtype=np.int64, count=int(indptr[-1])
    )
    return indptr, indices
