"""Vertex-oriented greedy cut construction: the SG family.

All variants grow two vertex sets V1/V2 one vertex at a time and add
max{w(i,V1), w(i,V2)} to the running cut weight.  They differ in how the
next vertex is picked: fixed order (sg), best-in / worst-out /
best-in-worst-out selection after a maximum-edge start (sg_edge_init),
or best-in-worst-out after a single-vertex start (sg3 and its
derandomized/randomized drivers sg3_d, sg3_r).

Tie rules are pinned for reproducibility: score ties pick the smallest
vertex index, equal side weights send the vertex to V1, and the maximum
weight edge is the lexicographically smallest such pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .graph import Graph, GraphError
from .relation_tree import RelationTree

CRITERIA = ("best-in", "worst-out", "best-in-worst-out")


@dataclass
class CutResult:
    """Outcome of one heuristic run.

    `spins` maps each vertex to +1 (side V1) or -1 (side V2); `weight` is
    the cut weight the algorithm accumulated.  `tree` is the signed
    spanning tree the run traces out, when requested.
    """

    spins: np.ndarray
    weight: float
    algorithm: str
    tree: Optional[RelationTree] = None
    seed: Optional[int] = None
    init: Optional[dict] = None
    details: Optional[dict] = None

    def sides(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        v1 = tuple(int(i) for i in np.flatnonzero(self.spins > 0))
        v2 = tuple(int(i) for i in np.flatnonzero(self.spins < 0))
        return v1, v2


def _two_rep_tree(
    n: int, z: np.ndarray, rep1: int, rep2: int
) -> RelationTree:
    """Star-shaped relation tree for a two-set greedy run.

    Members of each side hang off that side's representative with a
    positive edge; the representatives are joined by a negative edge.
    With an empty second side the tree is a single all-positive star.
    """
    edges = []
    if rep2 >= 0:
        edges.append((rep1, rep2, -1))
    for v in range(n):
        if v == rep1 or v == rep2:
            continue
        if z[v] > 0:
            edges.append((v, rep1, +1))
        else:
            edges.append((v, rep2, +1))
    return RelationTree.from_edges(n, edges)


def sg(g: Graph, order: Optional[Sequence[int]] = None, emit_tree: bool = False) -> CutResult:
    """Fixed-order greedy: split the first two vertices, then assign each
    following vertex to the side with the larger crossing gain."""
    n = g.n
    if n < 2:
        raise GraphError("sg needs at least two vertices")
    if order is None:
        order = range(n)
    order = [int(v) for v in order]
    if sorted(order) != list(range(n)):
        raise GraphError("order must be a permutation of 0..n-1")

    w = g.matrix()
    o0, o1 = order[0], order[1]
    z = np.zeros(n, dtype=np.int64)
    z[o0], z[o1] = 1, -1
    weight = float(w[o0, o1])
    d1 = w[:, o0].copy()
    d2 = w[:, o1].copy()
    for i in order[2:]:
        w1, w2 = float(d1[i]), float(d2[i])
        if w1 > w2:
            z[i] = -1
            d2 += w[i]
            weight += w1
        else:
            z[i] = 1
            d1 += w[i]
            weight += w2
    tree = _two_rep_tree(n, z, o0, o1) if emit_tree else None
    return CutResult(z, weight, "sg", tree=tree, init={"order": order})


def _max_weight_edge(g: Graph) -> tuple[int, int]:
    u, v, wts = g.edge_arrays()
    if len(wts) == 0:
        raise GraphError("graph has no edges")
    best = int(np.argmax(wts))  # edge arrays are lex sorted; first max wins
    return int(u[best]), int(v[best])


def sg_edge_init(g: Graph, criterion: str = "best-in-worst-out", emit_tree: bool = False) -> CutResult:
    """Greedy growth from the maximum-weight edge (SG1/SG2/SG3 selection).

    criterion picks the scored vertex each round: "best-in" maximizes
    max{w(i,V1), w(i,V2)}, "worst-out" minimizes min{w(i,V1), w(i,V2)},
    "best-in-worst-out" maximizes |w(i,V1) - w(i,V2)|.
    """
    if criterion not in CRITERIA:
        raise GraphError(f"unknown criterion {criterion!r}; choose from {CRITERIA}")
    n = g.n
    if n < 2:
        raise GraphError("edge-initialized growth needs at least two vertices")
    i1, i2 = _max_weight_edge(g)

    w = g.matrix()
    z = np.zeros(n, dtype=np.int64)
    z[i1], z[i2] = 1, -1
    weight = float(w[i1, i2])
    assigned = np.zeros(n, dtype=bool)
    assigned[i1] = assigned[i2] = True
    d1 = w[:, i1].copy()
    d2 = w[:, i2].copy()

    for _ in range(n - 2):
        if criterion == "best-in":
            score = np.maximum(d1, d2)
            score[assigned] = -np.inf
            i = int(np.argmax(score))
        elif criterion == "worst-out":
            score = np.minimum(d1, d2)
            score[assigned] = np.inf
            i = int(np.argmin(score))
        else:
            score = np.abs(d1 - d2)
            score[assigned] = -np.inf
            i = int(np.argmax(score))
        w1, w2 = float(d1[i]), float(d2[i])
        if w1 > w2:
            z[i] = -1
            d2 += w[i]
            weight += w1
        else:
            z[i] = 1
            d1 += w[i]
            weight += w2
        assigned[i] = True

    tree = _two_rep_tree(n, z, i1, i2) if emit_tree else None
    return CutResult(
        z, weight, f"sg-edge-init[{criterion}]", tree=tree, init={"edge": (i1, i2)}
    )


def _sg3_batch(w: np.ndarray, starts: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Run the vertex-initialized best-in-worst-out greedy for every start
    vertex in `starts` simultaneously.

    Returns (weights, spins, rep2) where rep2[r] is the first vertex that
    entered V2 for run r (-1 if V2 stayed empty).  Per-run arithmetic and
    tie handling match a scalar run exactly.
    """
    n = w.shape[0]
    runs = len(starts)
    rows = np.arange(runs)
    d1 = w[starts, :].copy()
    d2 = np.zeros((runs, n), dtype=np.float64)
    z = np.zeros((runs, n), dtype=np.int64)
    z[rows, starts] = 1
    assigned = np.zeros((runs, n), dtype=bool)
    assigned[rows, starts] = True
    weight = np.zeros(runs, dtype=np.float64)
    rep2 = np.full(runs, -1, dtype=np.int64)

    for _ in range(n - 1):
        score = np.abs(d1 - d2)
        score[assigned] = -np.inf
        istar = np.argmax(score, axis=1)
        w1 = d1[rows, istar]
        w2 = d2[rows, istar]
        to_v2 = w1 > w2
        weight += np.where(to_v2, w1, w2)
        z[rows, istar] = np.where(to_v2, -1, 1)
        assigned[rows, istar] = True
        first_v2 = to_v2 & (rep2 < 0)
        rep2[first_v2] = istar[first_v2]
        idx1 = rows[~to_v2]
        if idx1.size:
            d1[idx1] += w[istar[idx1]]
        idx2 = rows[to_v2]
        if idx2.size:
            d2[idx2] += w[istar[idx2]]
    return weight, z, rep2


def sg3(g: Graph, r: int, emit_tree: bool = False) -> CutResult:
    """Vertex-initialized best-in-worst-out greedy started at vertex r."""
    n = g.n
    if not (0 <= r < n):
        raise GraphError(f"start vertex {r} out of range for n={n}")
    weight, z, rep2 = _sg3_batch(g.matrix(), np.array([r]))
    tree = _two_rep_tree(n, z[0], r, int(rep2[0])) if emit_tree else None
    return CutResult(z[0], float(weight[0]), "sg3", tree=tree, init={"r": r})


def sg3_d(g: Graph, emit_tree: bool = False) -> CutResult:
    """Best sg3 run over every possible start vertex (ties: smallest r)."""
    weights, z, rep2 = _sg3_batch(g.matrix(), np.arange(g.n))
    best = int(np.argmax(weights))
    tree = _two_rep_tree(g.n, z[best], best, int(rep2[best])) if emit_tree else None
    return CutResult(
        z[best], float(weights[best]), "sg3d", tree=tree, init={"r": best}
    )


def default_restarts(n: int) -> int:
    """Number of random restarts used by sg3_r: floor(2*log2(n)), at least 1."""
    return max(1, int(math.floor(2 * math.log2(n))) if n > 1 else 1)


def sg3_r(g: Graph, seed: int, t: Optional[int] = None, emit_tree: bool = False) -> CutResult:
    """Best sg3 run over t random start vertices (seeded, reproducible).

    Starts are drawn without replacement while t <= n, with replacement
    otherwise.  Default t = floor(2*log2(n)).
    """
    n = g.n
    if t is None:
        t = default_restarts(n)
    if t < 1:
        raise GraphError("t must be >= 1")
    rng = np.random.default_rng(seed)
    starts = rng.choice(n, size=t, replace=t > n)
    weights, z, rep2 = _sg3_batch(g.matrix(), starts)
    best = int(np.argmax(weights))  # tie: first sampled start wins
    r = int(starts[best])
    tree = _two_rep_tree(n, z[best], r, int(rep2[best])) if emit_tree else None
    return CutResult(
        z[best],
        float(weights[best]),
        "sg3r",
        tree=tree,
        seed=seed,
        init={"r": r, "t": int(t), "starts": [int(s) for s in starts]},
    )
