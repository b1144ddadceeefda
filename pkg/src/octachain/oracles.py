"""Brute-force computations used to check the closed forms.

None of these use the mu/nu sequences; they work from the graph or the
matrix directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, prod

import numpy as np

from . import _kernels
from .graphs import ChainGraph
from .decomposition import laplacian
from .matrix import RationalMatrix, adjugate_and_det, bareiss_det, determinant


@dataclass(frozen=True)
class CharPoly:
    """Monic ``det(xI - M)``; ``coefficients[k]`` multiplies ``x**(dim-k)``."""

    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, power: int) -> Fraction:
        return self.coefficients[self.degree - power]

    @property
    def constant_term(self) -> Fraction:
        return self.coefficients[-1]

    def __call__(self, x):
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def as_ints(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coefficients):
            raise ValueError("non-integral coefficients")
        return [c.numerator for c in self.coefficients]


def charpoly_exact(m: RationalMatrix) -> CharPoly:
    """Faddeev-LeVerrier in exact arithmetic.

    ``M_k = A M_{k-1} + c_{k-1} I`` and ``c_k = -tr(A M_k) / k``; for integer
    input every division is exact, so the integer path never leaves ``int``.
    """
    n = m.dim
    if m.is_integral():
        a = m.to_int_rows()

        def div(x, k):
            q, r = divmod(x, k)
            assert r == 0, "Faddeev-LeVerrier division not exact on integer input"
            return q

        zero = 0
    else:
        a = [list(r) for r in m.rows]

        def div(x, k):
            return x / k

        zero = Fraction(0)

    coeffs = [1]
    mk = [[zero] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[-1]
        for i in range(n):
            mk[i][i] += c_prev
        # A @ M_k
        cols = list(zip(*mk))
        amk = [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]
        c = div(-sum(amk[i][i] for i in range(n)), k)
        coeffs.append(c)
        mk = amk
    return CharPoly(tuple(Fraction(c) for c in coeffs))


def principal_minor_sum_bruteforce(m: RationalMatrix) -> Fraction:
    """Sum over ``i`` of ``det(m with row and column i deleted)``."""
    return sum((determinant(m.delete(i)) for i in range(m.dim)), Fraction(0))


def principal_minor_by_residue(m: RationalMatrix) -> dict[int, Fraction]:
    """Same sum, grouped by the residue mod 4 of the 1-based deleted index."""
    out = {r: Fraction(0) for r in range(4)}
    for i in range(m.dim):
        out[(i + 1) % 4] += determinant(m.delete(i))
    return out


def kirchhoff_from_laplacian(lap: RationalMatrix) -> Fraction:
    """Exact sum of effective resistances over unordered vertex pairs.

    Ground the last vertex, invert the reduced Laplacian once by fraction-free
    Gauss-Jordan, then ``r_ij = G_ii + G_jj - 2 G_ij`` and ``r_ig = G_ii``.
    """
    rows = lap.to_int_rows()
    k = len(rows) - 1
    adj, d = adjugate_and_det([r[:k] for r in rows[:k]])
    tr = sum(adj[i][i] for i in range(k))
    total_all = sum(sum(r) for r in adj)
    # sum_{i<j} (G_ii + G_jj - 2 G_ij) = (k-1) tr - (sum of off-diagonal)
    pairs = (k - 1) * tr - (total_all - tr)
    return Fraction(pairs + tr, d)


def kirchhoff_resistance(g: ChainGraph) -> Fraction:
    return kirchhoff_from_laplacian(laplacian(g))


def effective_resistance(g: ChainGraph, u, v) -> Fraction:
    rows = laplacian(g).to_int_rows()
    k = len(rows) - 1
    adj, d = adjugate_and_det([r[:k] for r in rows[:k]])
    i, j = g.position(u), g.position(v)
    if i == j:
        return Fraction(0)

    def grounded(a, b):
        return adj[a][b] if a < k and b < k else 0

    return Fraction(grounded(i, i) + grounded(j, j) - 2 * grounded(i, j), d)


def wiener_bfs(g: ChainGraph) -> int:
    indptr, indices = _kernels.to_csr(g.adjacency_lists())
    ordered = _kernels.distance_sum(indptr, indices)
    if ordered < 0:
        raise ValueError("graph is disconnected")
    return ordered // 2


def wiener_bfs_adjacency(adjacency: list[list[int]]) -> int:
    indptr, indices = _kernels.to_csr(adjacency)
    ordered = _kernels.distance_sum(indptr, indices)
    if ordered < 0:
        raise ValueError("graph is disconnected")
    return ordered // 2


def spanning_trees_from_laplacian(lap: RationalMatrix) -> int:
    """Matrix-tree theorem: any cofactor of the Laplacian."""
    rows = lap.to_int_rows()
    return bareiss_det([r[1:] for r in rows[1:]])


def spanning_trees(g: ChainGraph) -> int:
    return spanning_trees_from_laplacian(laplacian(g))


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 3.4e14
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _word_primes():
    p = 2**31 - 1
    while True:
        if _is_prime(p):
            yield p
        p -= 2


def spanning_trees_modular(g: ChainGraph) -> int:
    """Cofactor determinant by Chinese remaindering over word-size primes.

    Independent of :func:`spanning_trees` (no Bareiss); the Hadamard bound
    on the reduced Laplacian decides how many primes are needed.
    """
    rows = laplacian(g).to_int_rows()
    reduced = np.array([r[1:] for r in rows[1:]], dtype=np.int64)
    # Hadamard: |det| <= prod of row norms; (bound)**2 as an integer
    bound_sq = prod(int(x) for x in (reduced * reduced).sum(axis=1))
    bound = isqrt(bound_sq) + 1
    residue, modulus = 0, 1
    for p in _word_primes():
        r = _kernels.det_mod(reduced, p)
        # CRT step
        t = ((r - residue) * pow(modulus, -1, p)) % p
        residue += modulus * t
        modulus *= p
        if modulus > 2 * bound:
            break
    if residue > modulus // 2:
        residue -= modulus
    return residue
