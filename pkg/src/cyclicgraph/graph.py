"""Undirected loop-free graphs on ``0..n-1`` stored as bitset rows, plus
exact exponential-time solvers for clique, independence and domination.

The solvers work one connected component at a time and refuse components
larger than ``cap`` vertices.
"""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import SizeCapExceeded
from .semigroup import mask_of, members

DEFAULT_CAP = 64


def default_cap() -> int:
    return int(os.environ.get("MONOGENIC_CAP", DEFAULT_CAP))


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        for u, row in enumerate(self.adj):
            if (row >> u) & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in members(row):
                if not (self.adj[v] >> u) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges) -> "SimpleGraph":
        adj = [0] * n
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def complement(self) -> "SimpleGraph":
        full = self.vertex_mask
        return SimpleGraph(self.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(self.adj)))

    def is_clique(self, vs) -> bool:
        vs = list(vs)
        m = mask_of(vs)
        return all((self.adj[v] | (1 << v)) & m == m for v in vs)

    def is_independent(self, vs) -> bool:
        m = mask_of(vs)
        return all(not (self.adj[v] & m) for v in members(m))

    def is_dominating(self, vs) -> bool:
        covered = 0
        for v in vs:
            covered |= self.adj[v] | (1 << v)
        return covered == self.vertex_mask


def component_masks(g: SimpleGraph) -> list[int]:
    seen = 0
    comps = []
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def connected_components(g: SimpleGraph) -> list[frozenset[int]]:
    return [frozenset(members(c)) for c in component_masks(g)]


def odd_cycle(g: SimpleGraph) -> Optional[list[int]]:
    """A closed walk of odd length as a vertex list, or None if bipartite."""
    colour = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in members(g.adj[u]):
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif colour[v] == colour[u]:
                    a, b = u, v
                    up, down = [a], [b]
                    while a != b:
                        if depth[a] >= depth[b]:
                            a = parent[a]
                            up.append(a)
                        else:
                            b = parent[b]
                            down.append(b)
                    return up + down[-2::-1]
    return None


def is_bipartite(g: SimpleGraph) -> bool:
    return odd_cycle(g) is None


def _components_within_cap(g: SimpleGraph, cap: Optional[int]) -> list[int]:
    cap = default_cap() if cap is None else cap
    comps = component_masks(g)
    for c in comps:
        if c.bit_count() > cap:
            raise SizeCapExceeded(c.bit_count(), cap)
    return comps


def _max_clique_in(adj: Sequence[int], cand: int) -> int:
    best = [0, 0]

    def expand(r: int, size: int, p: int) -> None:
        if not p:
            if size > best[0]:
                best[0], best[1] = size, r
            return
        if size + p.bit_count() <= best[0]:
            return
        pivot = max(members(p), key=lambda u: (p & adj[u]).bit_count())
        for v in members(p & ~adj[pivot]):
            if size + p.bit_count() <= best[0]:
                return
            expand(r | (1 << v), size + 1, p & adj[v])
            p &= ~(1 << v)

    expand(0, 0, cand)
    return best[1]


def max_clique(g: SimpleGraph, cap: Optional[int] = None) -> frozenset[int]:
    best = 0
    for comp in _components_within_cap(g, cap):
        if comp.bit_count() <= best.bit_count():
            continue
        c = _max_clique_in(g.adj, comp)
        if c.bit_count() > best.bit_count():
            best = c
    return frozenset(members(best))


def max_independent_set(g: SimpleGraph, cap: Optional[int] = None) -> frozenset[int]:
    # Components are independent of each other, so solve each on its complement.
    result = 0
    for comp in _components_within_cap(g, cap):
        co_adj = [(~g.adj[v] & comp & ~(1 << v)) if (comp >> v) & 1 else 0 for v in range(g.n)]
        result |= _max_clique_in(co_adj, comp)
    return frozenset(members(result))


def _min_dominating_in(closed: Sequence[int], comp: int) -> int:
    verts = members(comp)

    # Greedy start gives the incumbent.
    undominated, greedy = comp, 0
    while undominated:
        v = max(verts, key=lambda u: (closed[u] & undominated).bit_count())
        greedy |= 1 << v
        undominated &= ~closed[v]
    best = [greedy.bit_count(), greedy]

    def search(chosen: int, count: int, undominated: int) -> None:
        if not undominated:
            if count < best[0]:
                best[0], best[1] = count, chosen
            return
        cover = max((closed[v] & undominated).bit_count() for v in verts)
        need = -(-undominated.bit_count() // cover)
        if count + need >= best[0]:
            return
        target = min(members(undominated), key=lambda u: closed[u].bit_count())
        options = sorted(members(closed[target]), key=lambda v: -(closed[v] & undominated).bit_count())
        for v in options:
            search(chosen | (1 << v), count + 1, undominated & ~closed[v])

    search(0, 0, comp)
    return best[1]


def min_dominating_set(g: SimpleGraph, cap: Optional[int] = None) -> frozenset[int]:
    closed = [row | (1 << v) for v, row in enumerate(g.adj)]
    result = 0
    for comp in _components_within_cap(g, cap):
        result |= _min_dominating_in(closed, comp)
    return frozenset(members(result))


def maximal_cliques(g: SimpleGraph) -> Iterator[frozenset[int]]:
    """Every maximal clique once (Bron-Kerbosch with Tomita pivoting)."""
    adj = g.adj

    def bk(r: int, p: int, x: int):
        if not p and not x:
            yield frozenset(members(r))
            return
        pivot = max(members(p | x), key=lambda u: (p & adj[u]).bit_count())
        for v in members(p & ~adj[pivot]):
            yield from bk(r | (1 << v), p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        yield from bk(0, g.vertex_mask, 0)


# ---------------------------------------------------------------------------
# Serialisation
# ---------------------------------------------------------------------------

def to_json(g: SimpleGraph, labels: Optional[Sequence[str]] = None) -> str:
    labels = list(labels) if labels is not None else [str(v) for v in range(g.n)]
    payload = {"n": g.n, "edges": [list(e) for e in g.edges()], "labels": labels}
    return json.dumps(payload, sort_keys=True)


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(g: SimpleGraph, labels: Optional[Sequence[str]] = None, name: str = "G") -> str:
    labels = list(labels) if labels is not None else [str(v) for v in range(g.n)]
    lines = [f"graph {name} {{"]
    lines += [f'  {v} [label="{_dot_escape(labels[v])}"];' for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
