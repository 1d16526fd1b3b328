"""Zero-divisor graphs Γ(R) and Γ̃(R) with exact BFS distances."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import EmptyGraphError, VertexError
from .finring import ElemSet, FiniteRing, zero_divisors

GAMMA = "gamma"
GAMMA_TILDE = "gamma_tilde"
VARIANTS = (GAMMA, GAMMA_TILDE)

# Γ̃ counts x + y = 0 as a zero-divisor sum (0 belongs to Z(R)).
ZERO_SUM_ADJACENT = True

INF = math.inf


@dataclass(frozen=True, eq=False)
class ZdGraph:
    ring: FiniteRing
    variant: str
    vertices: ElemSet
    adjacency: np.ndarray = field(repr=False)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex neighbour lists, by vertex position."""
        return tuple(tuple(int(j) for j in np.flatnonzero(row)) for row in self.adjacency)

    @cached_property
    def _position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices.members)}

    def position(self, v: int) -> int:
        try:
            return self._position[v]
        except KeyError:
            raise VertexError(f"{v!r} is not a vertex of {self.name}") from None

    @property
    def name(self) -> str:
        sym = "Gamma" if self.variant == GAMMA else "GammaTilde"
        return f"{sym}({self.ring.label})"

    def edges(self) -> list[tuple[int, int]]:
        """Edges as element-index pairs ``(u, v)`` with ``u < v``, sorted."""
        vs = self.vertices.members
        return [(vs[i], vs[j]) for i, j in np.argwhere(np.triu(self.adjacency, k=1))]

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())


def build_graph(ring: FiniteRing, variant: str = GAMMA) -> ZdGraph:
    if variant not in VARIANTS:
        raise ValueError(f"unknown graph variant {variant!r}")
    verts = zero_divisors(ring)
    if not verts.members:
        raise EmptyGraphError(f"{ring.label} has no nonzero zero-divisors")
    vs = np.asarray(verts.members, dtype=np.int64)
    adj = ring.mul_matrix(vs, vs) == ring.zero_ix
    if variant == GAMMA_TILDE:
        z0 = verts.mask()
        z0[ring.zero_ix] = ZERO_SUM_ADJACENT
        adj |= z0[ring.add_matrix(vs, vs)]
    np.fill_diagonal(adj, False)
    adj.setflags(write=False)
    return ZdGraph(ring, variant, verts, adj)


def _bfs_levels(g: ZdGraph, source: int) -> np.ndarray:
    """Distances from vertex position ``source``; -1 marks unreachable."""
    dist = np.full(len(g.vertices), -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.zeros(len(g.vertices), dtype=bool)
    frontier[source] = True
    level = 0
    while frontier.any():
        level += 1
        reached = g.adjacency[frontier].any(axis=0) & (dist < 0)
        dist[reached] = level
        frontier = reached
    return dist


def distance(g: ZdGraph, u: int, v: int) -> int | float:
    """Shortest-path length between vertices ``u`` and ``v`` (element indices)."""
    s, t = g.position(u), g.position(v)
    if s == t:
        return 0
    seen = {s: 0}
    queue = deque([s])
    while queue:
        a = queue.popleft()
        for b in g.neighbors[a]:
            if b not in seen:
                seen[b] = seen[a] + 1
                if b == t:
                    return seen[b]
                queue.append(b)
    return INF


def eccentricities(g: ZdGraph) -> list[int | float]:
    out = []
    for s in range(len(g.vertices)):
        dist = _bfs_levels(g, s)
        out.append(INF if (dist < 0).any() else int(dist.max()))
    return out


def diameter(g: ZdGraph) -> int | float:
    if not len(g.vertices):
        raise EmptyGraphError(f"{g.name} is empty")
    return max(eccentricities(g))


def distance_matrix(g: ZdGraph) -> np.ndarray:
    """All-pairs distances by vertex position; -1 marks unreachable."""
    return np.stack([_bfs_levels(g, s) for s in range(len(g.vertices))])


def is_complete(g: ZdGraph) -> bool:
    n = len(g.vertices)
    return int(g.adjacency.sum()) == n * (n - 1)


def export_dot(g: ZdGraph) -> str:
    lines = [f'graph "{g.name}" {{']
    for v in g.vertices.members:
        lines.append(f'  n{v} [label="{g.ring.render(v)}"];')
    for u, v in g.edges():
        lines.append(f"  n{u} -- n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
