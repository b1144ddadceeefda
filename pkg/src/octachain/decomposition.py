"""Laplacians of the chains and their symmetric/antisymmetric split.

The pairing ``j <-> j'`` is an involutive automorphism of both chains, so
with plain vertices first the Laplacian has the block form
``[[L11, L12], [L12, L11]]``.  Its spectrum is the union of the spectra of
``L_A = L11 + L12`` and ``L_S = L11 - L12``; the orthogonal change of basis
that realises this is never formed explicitly (it would bring in 1/sqrt 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import ChainGraph, Variant, is_rung_position
from .matrix import RationalMatrix


class SpectralError(RuntimeError):
    """Dense eigensolver failed to converge."""


@dataclass(frozen=True)
class BlockDecomposition:
    l11: RationalMatrix
    l12: RationalMatrix

    @property
    def l_a(self) -> RationalMatrix:
        return self.l11 + self.l12

    @property
    def l_s(self) -> RationalMatrix:
        return self.l11 - self.l12


def laplacian(g: ChainGraph) -> RationalMatrix:
    """``D - A`` with rows in ``g.vertices`` order."""
    size = 2 * g.size
    rows = [[0] * size for _ in range(size)]
    for a, b in g.edges:
        i, j = g.position(a), g.position(b)
        rows[i][j] -= 1
        rows[j][i] -= 1
        rows[i][i] += 1
        rows[j][j] += 1
    return RationalMatrix(rows)


def laplacian_array(g: ChainGraph) -> np.ndarray:
    lap = np.zeros((2 * g.size, 2 * g.size))
    for a, b in g.edges:
        i, j = g.position(a), g.position(b)
        lap[i, j] -= 1.0
        lap[j, i] -= 1.0
        lap[i, i] += 1.0
        lap[j, j] += 1.0
    return lap


def decompose(g: ChainGraph) -> BlockDecomposition:
    lap = laplacian(g)
    m = g.size
    plain = list(range(m))
    primed = list(range(m, 2 * m))

    def block(r, c):
        return RationalMatrix([lap[i, j] for j in c] for i in r)

    l11, l12 = block(plain, plain), block(plain, primed)
    if block(primed, primed) != l11 or block(primed, plain) != l12:
        raise ValueError("vertex pairing j <-> j' is not an automorphism")
    return BlockDecomposition(l11=l11, l12=l12)


def cycle_laplacian(m: int) -> RationalMatrix:
    if m < 3:
        raise ValueError("cycle needs at least 3 vertices")
    rows = [[0] * m for _ in range(m)]
    for i in range(m):
        rows[i][i] = 2
        rows[i][(i + 1) % m] = -1
        rows[i][(i - 1) % m] = -1
    return RationalMatrix(rows)


def _tridiagonal(diag: list[int]) -> list[list[int]]:
    k = len(diag)
    rows = [[0] * k for _ in range(k)]
    for i, d in enumerate(diag):
        rows[i][i] = d
        if i + 1 < k:
            rows[i][i + 1] = rows[i + 1][i] = -1
    return rows


def displayed_blocks(n: int, variant: "str | Variant") -> dict[str, RationalMatrix]:
    """``L11, L12, L_A, L_S`` written out from their banded pattern alone.

    Built without reference to any graph so that :func:`decompose` can be
    checked against it entry by entry.
    """
    variant = Variant.parse(variant)
    m = 4 * n
    rung = [is_rung_position(j) for j in range(1, m + 1)]
    l11 = _tridiagonal([3 if r else 2 for r in rung])
    l12 = [[0] * m for _ in range(m)]
    for i, r in enumerate(rung):
        if r:
            l12[i][i] = -1
    if variant is Variant.MOBIUS:
        l12[0][m - 1] -= 1
        l12[m - 1][0] -= 1
    else:
        l11[0][m - 1] -= 1
        l11[m - 1][0] -= 1
    l11m, l12m = RationalMatrix(l11), RationalMatrix(l12)
    return {"l11": l11m, "l12": l12m, "l_a": l11m + l12m, "l_s": l11m - l12m}


def minor_base_matrix(dim: int, which: str = "standard") -> RationalMatrix:
    """Open tridiagonal matrix whose leading minors are ``q_j`` / ``q'_j``.

    ``standard`` has diagonal 4 at positions ``j = 0, 1 (mod 4)``; ``primed``
    has it at ``j = 3, 0 (mod 4)``; every other diagonal entry is 2.
    """
    heavy = {"standard": (0, 1), "primed": (3, 0)}[which]
    return RationalMatrix(
        _tridiagonal([4 if j % 4 in heavy else 2 for j in range(1, dim + 1)])
    )


def _eigvalsh(m: RationalMatrix | np.ndarray) -> np.ndarray:
    arr = m.to_numpy() if isinstance(m, RationalMatrix) else m
    try:
        return np.linalg.eigvalsh(arr)
    except np.linalg.LinAlgError as exc:
        raise SpectralError(str(exc)) from exc


def spectrum_factorization_check(g: ChainGraph, tol: float = 1e-9) -> bool:
    """Are the eigenvalues of L(G) those of L_A and L_S together, within ``tol``?"""
    blocks = decompose(g)
    full = _eigvalsh(laplacian_array(g))
    parts = np.sort(np.concatenate([_eigvalsh(blocks.l_a), _eigvalsh(blocks.l_s)]))
    return bool(np.max(np.abs(full - parts)) <= tol)


def cycle_spectrum(m: int) -> np.ndarray:
    i = np.arange(1, m + 1)
    return np.sort(2.0 - 2.0 * np.cos(2.0 * np.pi * i / m))


def reconstruct(blocks: BlockDecomposition) -> tuple[RationalMatrix, RationalMatrix]:
    """``(L11, L12)`` recovered from ``L_A`` and ``L_S`` alone."""
    half = Fraction(1, 2)
    l_a, l_s = blocks.l_a, blocks.l_s
    return (l_a + l_s).scale(half), (l_a - l_s).scale(half)
