"""Cross-check every closed form against its brute-force counterpart.

Each check is capped at the largest ``n`` its oracle handles comfortably;
``max_n`` lowers the caps but never raises them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

import numpy as np

from . import invariants, oracles, sequences
from .graphs import (
    Variant,
    build_chain,
    canonical_edge_list,
    components_without_rungs,
    degree,
)
from .decomposition import (
    cycle_laplacian,
    cycle_spectrum,
    decompose,
    displayed_blocks,
    laplacian,
    minor_base_matrix,
    reconstruct,
    spectrum_factorization_check,
)

VARIANTS = (Variant.MOBIUS, Variant.CYLINDER)

CAPS = {
    "graph": 12,
    "blocks": 3,
    "spectrum": 8,
    "charpoly": 4,
    "minors": 3,
    "resistance": 5,
    "matrix_tree": 6,
    "wiener": 8,
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}  [{self.cases} cases]"


class _Collector:
    def __init__(self, name: str):
        self.result = CheckResult(name=name, passed=True)

    def expect(self, ok: bool, context: str, **values) -> None:
        self.result.cases += 1
        if not ok:
            self.result.passed = False
            detail = " ".join(f"{k}={v}" for k, v in values.items())
            self.result.failures.append(f"{context}: {detail}")


def _ns(max_n: int, cap: str, start: int = 1) -> range:
    return range(start, min(max_n, CAPS[cap]) + 1)


def check_graph_shape(max_n):
    c = _Collector("chain graphs: |V|=8n, |E|=10n, degrees, rung-free cycles")
    for n in _ns(max_n, "graph"):
        for v in VARIANTS:
            g = build_chain(n, v)
            degs = [degree(g, x) for x in g.vertices]
            want_deg = [3 if x.index % 4 in (0, 1) else 2 for x in g.vertices]
            c.expect(len(g.vertices) == 8 * n, f"n={n} {v.value}", vertices=len(g.vertices))
            c.expect(len(g.edges) == 10 * n, f"n={n} {v.value}", edges=len(g.edges))
            c.expect(degs == want_deg, f"n={n} {v.value} degree pattern")
            want = [8 * n] if v is Variant.MOBIUS else [4 * n, 4 * n]
            got = components_without_rungs(g)
            c.expect(got == want, f"n={n} {v.value} rung-free pieces", got=got, want=want)
            c.expect(
                canonical_edge_list(g) == canonical_edge_list(build_chain(n, v)),
                f"n={n} {v.value} deterministic",
            )
    return c.result


def check_blocks(max_n):
    c = _Collector("Laplacian blocks match the banded L11/L12/L_A/L_S pattern")
    for n in _ns(max_n, "blocks"):
        for v in VARIANTS:
            b = decompose(build_chain(n, v))
            ref = displayed_blocks(n, v)
            for key, got in (("l11", b.l11), ("l12", b.l12), ("l_a", b.l_a), ("l_s", b.l_s)):
                c.expect(got == ref[key], f"n={n} {v.value} {key}")
            l11, l12 = reconstruct(b)
            c.expect((l11, l12) == (b.l11, b.l12), f"n={n} {v.value} reconstruction")
            c.expect(b.l_a == cycle_laplacian(4 * n), f"n={n} {v.value} L_A = L(C_4n)")
    return c.result


def check_spectrum(max_n):
    c = _Collector("eigenvalues of L(G) = those of L_A and L_S; L_A has the cycle spectrum")
    for n in _ns(max_n, "spectrum"):
        for v in VARIANTS:
            g = build_chain(n, v)
            c.expect(spectrum_factorization_check(g, 1e-9), f"n={n} {v.value} union")
            b = decompose(g)
            la = np.linalg.eigvalsh(b.l_a.to_numpy())
            err = float(np.max(np.abs(la - cycle_spectrum(4 * n))))
            c.expect(err <= 1e-9, f"n={n} {v.value} L_A spectrum", max_err=err)
            ls_min = float(np.linalg.eigvalsh(b.l_s.to_numpy())[0])
            c.expect(ls_min > 0, f"n={n} {v.value} L_S positive definite", min_eig=ls_min)
            full = np.linalg.eigvalsh(laplacian(g).to_numpy())
            zeros = int(np.sum(np.abs(full) < 1e-9))
            c.expect(zeros == 1, f"n={n} {v.value} one zero eigenvalue", zeros=zeros)
    return c.result


def check_sequences(max_n):
    c = _Collector("q_j, q'_j: recurrence = closed form (j<=60) = leading minors (j<=16)")
    for which in ("standard", "primed"):
        for j in range(0, 61):
            r, cf = sequences.q_recurrence(j, which), sequences.q_closed(j, which)
            c.expect(r == cf, f"j={j} {which}", recurrence=r, closed=cf)
        base = minor_base_matrix(16, which)
        for j in range(1, 17):
            d = base.leading(j).det()
            q = sequences.q_recurrence(j, which)
            c.expect(d == q, f"j={j} {which} leading minor", det=d, q=q)
    seeds = [sequences.q_recurrence(j) for j in range(1, 9)]
    c.expect(seeds == [4, 7, 10, 33, 122, 211, 300, 989], "seed values", got=seeds)
    return c.result


def check_lucas(max_n):
    c = _Collector("S_k^2 - 896 T_k^2 = 4 (k<=200); recurrence = mu^k expansion")
    for k in range(0, 201):
        s, t = sequences.lucas(k)
        c.expect(s * s - 896 * t * t == 4, f"k={k}", S=s, T=t)
        if k <= 60:
            c.expect((s, t) == sequences.lucas_from_power(k), f"k={k} power route")
    for n in range(1, 51):
        d = sequences.det_ls(n, "mobius") - sequences.det_ls(n, "cylinder")
        c.expect(d == 4, f"n={n} det difference", diff=d)
    return c.result


def check_det_and_charpoly(max_n):
    c = _Collector("det L_S = S_n +/- 2 and sum 1/beta via exact charpoly")
    for n in _ns(max_n, "charpoly"):
        for v in VARIANTS:
            ls = decompose(build_chain(n, v)).l_s
            det_exact = ls.det()
            cp = oracles.charpoly_exact(ls)
            want = sequences.det_ls(n, v)
            c.expect(det_exact == want, f"n={n} {v.value} Bareiss det", det=det_exact, closed=want)
            c.expect(cp.constant_term == want, f"n={n} {v.value} charpoly constant")
            lin = -cp.coefficient(1)
            c.expect(lin == sequences.minor_sum(n), f"n={n} {v.value} linear coeff",
                     charpoly=lin, closed=sequences.minor_sum(n))
            recip = Fraction(lin) / cp.constant_term
            closed = invariants.sum_reciprocal_ls(n, v)
            c.expect(recip == closed, f"n={n} {v.value} sum 1/beta", charpoly=recip, closed=closed)
    return c.result


def check_minor_sums(max_n):
    c = _Collector("principal minor sum = 72 n T_n, per residue 10/10/26/26 n T_n")
    for n in _ns(max_n, "minors"):
        for v in VARIANTS:
            ls = decompose(build_chain(n, v)).l_s
            brute = oracles.principal_minor_sum_bruteforce(ls)
            c.expect(brute == sequences.minor_sum(n), f"n={n} {v.value}",
                     brute=brute, closed=sequences.minor_sum(n))
            by_res = oracles.principal_minor_by_residue(ls)
            want = sequences.minor_subtotals(n)
            c.expect(by_res == want, f"n={n} {v.value} residues", brute=by_res, closed=want)
    return c.result


def check_kirchhoff(max_n):
    c = _Collector("Kf closed form = exact resistance sum; decomposition identities")
    for n in _ns(max_n, "resistance"):
        for v in VARIANTS:
            closed = invariants.kirchhoff_closed(n, v)
            oracle = oracles.kirchhoff_resistance(build_chain(n, v))
            c.expect(closed == oracle, f"n={n} {v.value}", closed=closed, oracle=oracle)
    for n in range(1, max_n + 1):
        for v in VARIANTS:
            closed = invariants.kirchhoff_closed(n, v)
            dec = invariants.kirchhoff_decomposed(n, v)
            c.expect(closed == dec, f"n={n} {v.value} 8n((16n^2-1)/12 + sum 1/beta)",
                     closed=closed, decomposed=dec)
        cyc = 2 * invariants.kirchhoff_cycle(4 * n)
        c.expect(8 * n * Fraction(16 * n * n - 1, 12) == cyc, f"n={n} 2 Kf(C_4n)")
    for n in _ns(max_n, "spectrum"):
        for v in VARIANTS:
            closed = float(invariants.kirchhoff_closed(n, v))
            spec = invariants.kirchhoff_spectral(build_chain(n, v))
            rel = abs(spec - closed) / closed
            c.expect(rel <= 1e-6, f"n={n} {v.value} spectral", rel_err=rel)
    return c.result


def check_complexity(max_n):
    c = _Collector("spanning trees: 2n(S_n +/- 2) = Bareiss cofactor = CRT cofactor")
    for n in _ns(max_n, "matrix_tree"):
        for v in VARIANTS:
            g = build_chain(n, v)
            closed = invariants.complexity_closed(n, v)
            bareiss = oracles.spanning_trees(g)
            modular = oracles.spanning_trees_modular(g)
            c.expect(closed == bareiss == modular, f"n={n} {v.value}",
                     closed=closed, bareiss=bareiss, modular=modular)
            spec = invariants.complexity_spectral(g)
            c.expect(abs(spec - closed) <= 1e-6 * closed, f"n={n} {v.value} eigenvalue product")
    return c.result


def check_wiener(max_n):
    c = _Collector("Wiener index: closed form = BFS")
    for n in _ns(max_n, "wiener"):
        for v in VARIANTS:
            bfs = oracles.wiener_bfs(build_chain(n, v))
            closed = invariants.wiener_index(n, v)
            c.expect(bfs == closed, f"n={n} {v.value}", bfs=bfs, closed=closed)
            theorem = invariants.wiener_closed(n, v)
            if v is Variant.MOBIUS and n >= 2:
                c.expect(bfs == theorem, f"n={n} mobius theorem polynomial",
                         bfs=bfs, theorem=theorem)
            elif bfs != theorem:
                c.result.notes.append(
                    f"n={n} {v.value}: theorem polynomial {theorem} != BFS {bfs}"
                )
    return c.result


def check_ratio(max_n):
    c = _Collector("W/Kf strictly increasing on 2..200, below 3; |3 - ratio(1000)| < 0.005")
    for v in VARIANTS:
        prev = None
        for n in range(2, 201):
            r = invariants.ratio(n, v)
            c.expect(r < 3, f"n={n} {v.value} below 3", ratio=float(r))
            if prev is not None:
                c.expect(r > prev, f"n={n} {v.value} increasing")
            prev = r
        gap = 3 - invariants.ratio(1000, v)
        c.expect(0 < gap < Fraction(5, 1000), f"n=1000 {v.value}", gap=float(gap))
    return c.result


CHECKS: list[Callable[[int], CheckResult]] = [
    check_graph_shape,
    check_blocks,
    check_spectrum,
    check_sequences,
    check_lucas,
    check_det_and_charpoly,
    check_minor_sums,
    check_kirchhoff,
    check_complexity,
    check_wiener,
    check_ratio,
]


def run_all(max_n: int) -> Iterator[CheckResult]:
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    for check in CHECKS:
        yield check(max_n)

