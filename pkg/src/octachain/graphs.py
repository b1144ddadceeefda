"""Mobius and cylinder octagonal-quadrilateral chains.

Each chain has two sides of ``4n`` vertices, plain ``1..4n`` and primed
``1'..(4n)'``.  Consecutive vertices on a side are joined by path edges,
positions ``j = 0, 1 (mod 4)`` carry a rung ``(j, j')``, and two closure
edges join the ends:

* mobius:   ``(4n, 1')`` and ``((4n)', 1)`` (half twist)
* cylinder: ``(4n, 1)`` and ``((4n)', 1')``

The quadrilaterals sit between rungs ``4k`` and ``4k+1`` and the octagons
between rungs ``4k+1`` and ``4k+4``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

PLAIN = "plain"
PRIMED = "primed"
_SIDE_ORDER = {PLAIN: 0, PRIMED: 1}
_SIDE_PREFIX = {PLAIN: "p", PRIMED: "q"}


class Variant(str, enum.Enum):
    MOBIUS = "mobius"
    CYLINDER = "cylinder"

    @classmethod
    def parse(cls, value: "str | Variant") -> "Variant":
        if isinstance(value, Variant):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(
                f"unknown variant {value!r}; expected 'mobius' or 'cylinder'"
            ) from None


class VertexId(NamedTuple):
    """A 1-based vertex label ``(side, index)``."""

    side: str
    index: int

    def key(self) -> tuple[int, int]:
        return (_SIDE_ORDER[self.side], self.index)

    def label(self) -> str:
        return f"{_SIDE_PREFIX[self.side]}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "VertexId":
        if len(text) < 2 or text[0] not in "pq" or not text[1:].isdigit():
            raise ValueError(f"bad vertex label {text!r}")
        return cls(PLAIN if text[0] == "p" else PRIMED, int(text[1:]))


Edge = tuple[VertexId, VertexId]


def _normalize(u: VertexId, v: VertexId) -> Edge:
    return (u, v) if u.key() <= v.key() else (v, u)


def is_rung_position(j: int) -> bool:
    return j % 4 in (0, 1)


@dataclass(frozen=True)
class ChainGraph:
    n: int
    variant: Variant
    edges: frozenset[Edge]
    _ordered: tuple[Edge, ...] = field(repr=False, compare=False, default=())

    @property
    def size(self) -> int:
        """Number of positions per side, ``4n``."""
        return 4 * self.n

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        """Plain side ``1..4n`` followed by primed side ``1..4n``.

        This is also the row order used by :func:`octachain.decomposition.laplacian`.
        """
        m = self.size
        return tuple(VertexId(PLAIN, j) for j in range(1, m + 1)) + tuple(
            VertexId(PRIMED, j) for j in range(1, m + 1)
        )

    def position(self, v: VertexId) -> int:
        """0-based row of ``v`` in :attr:`vertices`."""
        self._check_vertex(v)
        return (v.index - 1) + (self.size if v.side == PRIMED else 0)

    def _check_vertex(self, v: VertexId) -> None:
        if v.side not in _SIDE_ORDER or not 1 <= v.index <= self.size:
            raise KeyError(f"vertex {v!r} not in chain with n={self.n}")

    def neighbors(self, v: VertexId) -> list[VertexId]:
        self._check_vertex(v)
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out, key=VertexId.key)

    def adjacency_lists(self) -> list[list[int]]:
        """Neighbour row indices for each vertex, in :attr:`vertices` order."""
        adj: list[list[int]] = [[] for _ in range(2 * self.size)]
        for a, b in self.edges:
            i, j = self.position(a), self.position(b)
            adj[i].append(j)
            adj[j].append(i)
        for row in adj:
            row.sort()
        return adj


def build_chain(n: int, variant: "str | Variant") -> ChainGraph:
    """Build ``Q_n(8,4)`` (mobius) or ``Q'_n(8,4)`` (cylinder)."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    variant = Variant.parse(variant)
    m = 4 * n

    path = [
        (VertexId(side, j), VertexId(side, j + 1))
        for side in (PLAIN, PRIMED)
        for j in range(1, m)
    ]
    rungs = [
        (VertexId(PLAIN, j), VertexId(PRIMED, j))
        for j in range(1, m + 1)
        if is_rung_position(j)
    ]
    if variant is Variant.MOBIUS:
        closure = [
            (VertexId(PLAIN, m), VertexId(PRIMED, 1)),
            (VertexId(PRIMED, m), VertexId(PLAIN, 1)),
        ]
    else:
        closure = [
            (VertexId(PLAIN, m), VertexId(PLAIN, 1)),
            (VertexId(PRIMED, m), VertexId(PRIMED, 1)),
        ]

    ordered = tuple(path + rungs + closure)
    edges = frozenset(_normalize(a, b) for a, b in ordered)
    assert len(edges) == 10 * n, "duplicate edge in chain construction"
    return ChainGraph(n=n, variant=variant, edges=edges, _ordered=ordered)


def degree(g: ChainGraph, v: VertexId) -> int:
    g._check_vertex(v)
    return sum(1 for a, b in g.edges if a == v or b == v)


def canonical_edge_list(g: ChainGraph) -> list[Edge]:
    """Edges in construction order: plain path, primed path, rungs, closure.

    Closure edges are kept in the written orientation, e.g. ``(4n, 1')``.
    """
    if g._ordered:
        return list(g._ordered)
    # graphs created without construction order (e.g. hand-made in tests)
    return sorted(g.edges, key=lambda e: (e[0].key(), e[1].key()))


def to_json_dict(g: ChainGraph) -> dict:
    return {
        "n": g.n,
        "variant": g.variant.value,
        "vertices": [v.label() for v in g.vertices],
        "edges": [[a.label(), b.label()] for a, b in canonical_edge_list(g)],
    }


def to_json(g: ChainGraph, indent: int | None = None) -> str:
    return json.dumps(to_json_dict(g), indent=indent)


def from_json(text: str) -> ChainGraph:
    """Re-import a graph written by :func:`to_json`.

    The edge set must be exactly the chain implied by ``n`` and ``variant``.
    """
    data = json.loads(text)
    g = build_chain(int(data["n"]), data["variant"])
    pairs = [(VertexId.parse(a), VertexId.parse(b)) for a, b in data["edges"]]
    edges = frozenset(_normalize(a, b) for a, b in pairs)
    if edges != g.edges or len(pairs) != len(edges):
        raise ValueError("edge list does not describe the declared chain")
    return ChainGraph(n=g.n, variant=g.variant, edges=edges, _ordered=tuple(pairs))


def components_without_rungs(g: ChainGraph) -> list[int]:
    """Sizes of the connected pieces left after deleting every rung."""
    adj: dict[VertexId, list[VertexId]] = {v: [] for v in g.vertices}
    for a, b in g.edges:
        if a.index == b.index and a.side != b.side:
            continue
        adj[a].append(b)
        adj[b].append(a)
    return _component_sizes(adj, g.vertices)


def _component_sizes(adj: dict, order: Iterable) -> list[int]:
    seen = set()
    sizes = []
    for s in order:
        if s in seen:
            continue
        stack = [s]
        seen.add(s)
        count = 0
        while stack:
            u = stack.pop()
            count += 1
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        sizes.append(count)
    return sorted(sizes)
