"""Kirchhoff index, Wiener index and spanning-tree count of the chains.

All closed forms are written over the integer pair ``(S_n, T_n)`` from
:mod:`octachain.sequences`, so every value here is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from math import floor

import numpy as np

from . import oracles
from .graphs import ChainGraph, Variant, build_chain
from .decomposition import SpectralError, laplacian_array
from .sequences import det_ls, lucas, minor_sum

METHODS = ("closed_form", "spectral", "oracle")

# det L_S = S_n + shift; looked up at call time so a fault can be injected
_KF_DENOMINATOR_SHIFT = {Variant.MOBIUS: 2, Variant.CYLINDER: -2}


def _check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def kirchhoff_closed(n: int, variant: "str | Variant") -> Fraction:
    """``(32n^3 - 2n)/3 + 576 n^2 T_n / (S_n +/- 2)``, + for mobius."""
    _check_n(n)
    variant = Variant.parse(variant)
    cubic = 32 * n**3 - 2 * n
    # = 2n(4n-1)(4n+1), and 3 divides one of 4n-1, 4n, 4n+1
    assert cubic % 3 == 0
    s, t = lucas(n)
    return cubic // 3 + Fraction(576 * n * n * t, s + _KF_DENOMINATOR_SHIFT[variant])


def kirchhoff_cycle(m: int) -> Fraction:
    if m < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Fraction(m**3 - m, 12)


def sum_reciprocal_ls(n: int, variant: "str | Variant") -> Fraction:
    """Sum of ``1/beta`` over the eigenvalues ``beta`` of ``L_S``."""
    _check_n(n)
    return Fraction(minor_sum(n), det_ls(n, variant))


def kirchhoff_decomposed(n: int, variant: "str | Variant") -> Fraction:
    """``8n ((16n^2 - 1)/12 + sum 1/beta)``: the cycle part plus the L_S part."""
    _check_n(n)
    return 8 * n * (Fraction(16 * n * n - 1, 12) + sum_reciprocal_ls(n, variant))


def kirchhoff_spectral(g: ChainGraph) -> float:
    """``|V| * sum 1/mu_k`` over the non-zero Laplacian eigenvalues."""
    try:
        ev = np.linalg.eigvalsh(laplacian_array(g))
    except np.linalg.LinAlgError as exc:
        raise SpectralError(str(exc)) from exc
    if ev[1] < 1e-12:
        raise SpectralError(f"second eigenvalue {ev[1]:.3e} too close to zero")
    return float(len(ev) * np.sum(1.0 / ev[1:]))


def complexity_spectral(g: ChainGraph) -> float:
    ev = np.linalg.eigvalsh(laplacian_array(g))
    return float(np.prod(ev[1:]) / len(ev))


def wiener_closed(n: int, variant: "str | Variant") -> int:
    """Theorem polynomials for the Wiener index: ``32n^3 + 16n^2 + 4n``
    (mobius) and ``32n^3 + 16n^2 - 8n`` (cylinder).

    The mobius polynomial agrees with breadth-first search for ``n >= 2``.
    The cylinder polynomial does not agree for any ``n``; see
    :func:`wiener_index` for the value that does.
    """
    _check_n(n)
    variant = Variant.parse(variant)
    linear = 4 * n if variant is Variant.MOBIUS else -8 * n
    return 32 * n**3 + 16 * n**2 + linear


def wiener_index(n: int, variant: "str | Variant") -> int:
    """Wiener index, in closed form wherever breadth-first search confirms one.

    mobius:   ``32n^3 + 16n^2 + 4n`` for ``n >= 2``; 50 at ``n = 1``
    cylinder: ``32n^3 + 16n^2 + 8n`` for all ``n >= 1``

    ``n = 1`` is computed by search instead of being special-cased.
    """
    _check_n(n)
    variant = Variant.parse(variant)
    if n == 1:
        return oracles.wiener_bfs(build_chain(1, variant))
    linear = 4 * n if variant is Variant.MOBIUS else 8 * n
    return 32 * n**3 + 16 * n**2 + linear


def complexity_closed(n: int, variant: "str | Variant") -> int:
    """``2n (S_n + 2)`` for mobius, ``2n (S_n - 2)`` for cylinder."""
    _check_n(n)
    return 2 * n * det_ls(n, variant)


def ratio(n: int, variant: "str | Variant") -> Fraction:
    """Exact ``W / Kf``."""
    return Fraction(wiener_index(n, variant)) / kirchhoff_closed(n, variant)


def decimal_round(x: Fraction, places: int = 2) -> Decimal:
    """Round half away from zero to ``places`` decimals, exactly."""
    x = Fraction(x)
    scaled = abs(x) * 10**places
    r = floor(scaled + Fraction(1, 2))
    if x < 0:
        r = -r
    return Decimal(r).scaleb(-places)


def format_decimal(x: Fraction, places: int = 2) -> str:
    return f"{decimal_round(x, places):.{places}f}"


@dataclass(frozen=True)
class InvariantReport:
    n: int
    variant: Variant
    kf: Fraction
    wiener: int
    complexity: int
    method: str
    wiener_matches_theorem: bool

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.wiener) / self.kf

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "variant": self.variant.value,
            "kf": {"num": self.kf.numerator, "den": self.kf.denominator},
            "kf_decimal": format_decimal(self.kf, 2),
            "wiener": self.wiener,
            "wiener_matches_theorem": self.wiener_matches_theorem,
            "complexity": self.complexity,
            "ratio_decimal": format_decimal(self.ratio, 6),
            "method": self.method,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    CSV_HEADER = (
        "n", "variant", "kf_num", "kf_den", "kf_decimal", "wiener",
        "wiener_matches_theorem", "complexity", "ratio_decimal", "method",
    )

    def csv_row(self) -> list:
        d = self.to_json_dict()
        return [
            d["n"], d["variant"], d["kf"]["num"], d["kf"]["den"], d["kf_decimal"],
            d["wiener"], str(d["wiener_matches_theorem"]).lower(), d["complexity"],
            d["ratio_decimal"], d["method"],
        ]


def report(n: int, variant: "str | Variant", method: str = "closed_form") -> InvariantReport:
    """Compute all invariants for one chain by the chosen route.

    ``oracle`` and ``spectral`` build the graph, so they are only practical
    for small ``n``; ``spectral`` values are floats converted exactly.
    """
    _check_n(n)
    variant = Variant.parse(variant)
    if method == "closed_form":
        kf = kirchhoff_closed(n, variant)
        wiener = wiener_index(n, variant)
        complexity = complexity_closed(n, variant)
    elif method == "oracle":
        g = build_chain(n, variant)
        kf = oracles.kirchhoff_resistance(g)
        wiener = oracles.wiener_bfs(g)
        complexity = oracles.spanning_trees(g)
    elif method == "spectral":
        g = build_chain(n, variant)
        kf = Fraction(kirchhoff_spectral(g))
        wiener = oracles.wiener_bfs(g)
        complexity = round(complexity_spectral(g))
    else:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    return InvariantReport(
        n=n,
        variant=variant,
        kf=kf,
        wiener=wiener,
        complexity=complexity,
        method=method,
        wiener_matches_theorem=wiener == wiener_closed(n, variant),
    )
