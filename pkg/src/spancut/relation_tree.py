"""Signed spanning trees as a canonical cut representation.

A relation tree on n vertices is a spanning tree of the complete graph
K_n whose edges carry a sign: -1 puts the endpoints on opposite sides of
the cut, +1 on the same side.  The tree need not use edges of the graph
whose cut it describes.  Scanning the tree from vertex 0 yields the
unique spin assignment (up to a global flip) consistent with all signs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graph import Graph, GraphError, cut_weight


class RelationTreeError(ValueError):
    """Structurally invalid relation tree."""


@dataclass(frozen=True)
class RelationTree:
    """n-1 signed edges (u, v, s) spanning vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]) -> "RelationTree":
        return cls(n, tuple((int(u), int(v), int(s)) for u, v, s in edges))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [[u, v, s] for u, v, s in self.edges]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "RelationTree":
        return cls.from_edges(int(d["n"]), d["edges"])


def validate(t: RelationTree) -> None:
    """Raise RelationTreeError on the first structural violation."""
    n = t.n
    if n < 1:
        raise RelationTreeError("tree needs at least one vertex")
    if len(t.edges) != n - 1:
        raise RelationTreeError(f"{len(t.edges)} edges != n-1 = {n - 1}")
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, s in t.edges:
        if not (0 <= u < n and 0 <= v < n):
            raise RelationTreeError(f"edge ({u},{v}) endpoint out of range for n={n}")
        if u == v:
            raise RelationTreeError(f"self-loop ({u},{v})")
        if s not in (-1, 1):
            raise RelationTreeError(f"edge ({u},{v}) has sign {s}, expected -1 or +1")
        ru, rv = find(u), find(v)
        if ru == rv:
            raise RelationTreeError(f"edge ({u},{v}) closes a cycle")
        parent[ru] = rv
    # n-1 acyclic edges on n vertices are necessarily spanning.


def scan(t: RelationTree) -> np.ndarray:
    """Propagate signs outward from vertex 0 (fixed to +1) along the tree.

    Returns the spin vector with z[0] = +1; the negated vector represents
    the same cut.
    """
    validate(t)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(t.n)]
    for u, v, s in t.edges:
        adj[u].append((v, s))
        adj[v].append((u, s))
    z = np.zeros(t.n, dtype=np.int64)
    z[0] = 1
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v, s in adj[u]:
            if z[v] == 0:
                z[v] = s * z[u]
                queue.append(v)
    return z


def tree_cut_weight(g: Graph, t: RelationTree) -> float:
    """Weight of the cut the tree induces on g."""
    if t.n != g.n:
        raise GraphError(f"tree has {t.n} vertices, graph has {g.n}")
    return cut_weight(g, scan(t))
