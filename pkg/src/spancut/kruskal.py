"""Edge-oriented greedy cut construction: contraction algorithms.

Each algorithm repeatedly selects an edge of the shrinking multigraph,
assigns it a sign, and contracts it: the edges of the dying endpoint are
shifted onto the survivor and parallel edges merge by summing their
current weights.  The selected signed edges accumulate into a spanning
relation tree whose scan yields the cut.

Selection ties are broken lexicographically on the normalized pair
(min endpoint, max endpoint); for a selected pair (u, v) with u < v the
smaller endpoint is contracted into the larger one.  Disconnected inputs
are completed by joining the leftover cluster representatives in a star
(sign +1 for the contraction algorithms, -1 for de_quincey, where every
tree edge sits inside the cut).
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .graph import Graph, GraphError, cut_weight, total_weight
from .prim import CutResult
from .relation_tree import RelationTree, scan


class _ContractionState:
    """Dense current-weight matrix plus liveness/adjacency bookkeeping.

    For complete graphs the adjacency mask is skipped: every pair of live
    clusters keeps an active merged edge throughout.
    """

    def __init__(self, g: Graph, with_mask: bool = True):
        self.n = g.n
        self.w = g.matrix().copy()
        self.alive = np.ones(self.n, dtype=bool)
        self.mask = g.adjacency_mask() if with_mask else None
        self.tree_edges: list[tuple[int, int, int]] = []

    def active_pairs(self) -> tuple[np.ndarray, np.ndarray]:
        """Upper-triangle indices of active edges, in lexicographic order."""
        if self.mask is not None:
            return np.nonzero(np.triu(self.mask, k=1))
        live = np.flatnonzero(self.alive)
        if len(live) < 2:
            return np.array([], dtype=np.int64), np.array([], dtype=np.int64)
        iu, iv = np.triu_indices(len(live), k=1)
        return live[iu], live[iv]

    def contract(self, dying: int, surviving: int, mult: int) -> None:
        """Shift the dying cluster's edges (scaled by mult) onto the survivor."""
        w = self.w
        w[surviving, :] += mult * w[dying, :]
        w[:, surviving] = w[surviving, :]
        w[surviving, surviving] = 0.0
        w[dying, :] = 0.0
        w[:, dying] = 0.0
        if self.mask is not None:
            self.mask[surviving, :] |= self.mask[dying, :]
            self.mask[:, surviving] = self.mask[surviving, :]
            self.mask[surviving, surviving] = False
            self.mask[dying, :] = False
            self.mask[:, dying] = False
        self.alive[dying] = False

    def complete_components(self, sign: int) -> None:
        """Join leftover cluster representatives in a star rooted at the
        smallest one; cross-component pairs carry no weight."""
        reps = np.flatnonzero(self.alive)
        hub = int(reps[0])
        for r in reps[1:]:
            self.tree_edges.append((hub, int(r), sign))

    def snapshot(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        iu, iv = self.active_pairs()
        return iu.copy(), iv.copy(), self.w[iu, iv].copy()


def _require_edges(g: Graph) -> None:
    if g.m == 0:
        raise GraphError("graph has no edges")


def _result_from_tree(g: Graph, state: _ContractionState, algorithm: str, **kw) -> CutResult:
    tree = RelationTree.from_edges(g.n, state.tree_edges)
    spins = scan(tree)
    return CutResult(spins, cut_weight(g, spins), algorithm, tree=tree, **kw)


# ---------------------------------------------------------------------------
# Signed edge contraction (best-in-worst-out)


class _RowBestCache:
    """Per-row maximum of |current weight| over selectable partners.

    Lets the max-|weight| edge be found in O(n) per step; rows are only
    rescanned when their cached witness was invalidated by a contraction.
    """

    def __init__(self, state: _ContractionState):
        self.state = state
        n = state.n
        self.val = np.full(n, -np.inf)
        self.idx = np.full(n, -1, dtype=np.int64)
        w = state.w
        for start in range(0, n, 256):
            stop = min(start + 256, n)
            block = np.abs(w[start:stop, :])
            block[:, :] = np.where(self._invalid_block(start, stop), -np.inf, block)
            self.val[start:stop] = block.max(axis=1)
            self.idx[start:stop] = block.argmax(axis=1)

    def _invalid_block(self, start: int, stop: int) -> np.ndarray:
        st = self.state
        inv = np.broadcast_to(~st.alive, (stop - start, st.n)).copy()
        if st.mask is not None:
            inv |= ~st.mask[start:stop, :]
        cols = np.arange(st.n)
        for r, k in enumerate(range(start, stop)):
            inv[r, k] = True
            if not st.alive[k]:
                inv[r, :] = True
        del cols
        return inv

    def _row_values(self, k: int) -> np.ndarray:
        st = self.state
        vals = np.abs(st.w[k, :])
        invalid = ~st.alive
        if st.mask is not None:
            invalid = invalid | ~st.mask[k, :]
        vals = np.where(invalid, -np.inf, vals)
        vals[k] = -np.inf
        return vals

    def rescan_row(self, k: int) -> None:
        if not self.state.alive[k]:
            self.val[k] = -np.inf
            self.idx[k] = -1
            return
        vals = self._row_values(k)
        self.val[k] = vals.max()
        self.idx[k] = int(vals.argmax())

    def select(self) -> Optional[tuple[int, int]]:
        """Lexicographically smallest active pair of maximum |weight|."""
        best = float(self.val.max())
        if best == -np.inf:
            return None
        k = int(np.argmax(self.val))
        vals = self._row_values(k)
        j = int(np.flatnonzero(vals == best)[0])
        return k, j

    def after_contract(self, dying: int, surviving: int) -> None:
        st = self.state
        col = np.abs(st.w[:, surviving])
        invalid = ~st.alive
        if st.mask is not None:
            invalid = invalid | ~st.mask[:, surviving]
        col = np.where(invalid, -np.inf, col)
        col[surviving] = -np.inf

        pointed = st.alive & ((self.idx == dying) | (self.idx == surviving))
        pointed[surviving] = False
        upgrade = pointed & (col >= self.val)
        self.val[upgrade] = col[upgrade]
        self.idx[upgrade] = surviving
        for k in np.flatnonzero(pointed & ~upgrade):
            self.rescan_row(int(k))
        fresh = st.alive & ~pointed & (col > self.val)
        fresh[surviving] = False
        self.val[fresh] = col[fresh]
        self.idx[fresh] = surviving
        self.rescan_row(surviving)
        self.val[dying] = -np.inf
        self.idx[dying] = -1


def sec(
    g: Graph,
    snapshot_steps: bool = False,
    _survivor: str = "high",
) -> CutResult:
    """Signed edge contraction: select the active edge of maximum absolute
    current weight, sign it opposite to that weight, and sign-propagate
    the dying endpoint's edges through the contraction.

    The reported weight is accumulated incrementally as
    half the total weight plus half the |current weight| of each selected
    edge.  With snapshot_steps the per-step active-edge maps are attached
    to the result for cross-checking.
    """
    _require_edges(g)
    state = _ContractionState(g, with_mask=not g.is_complete())
    cache = _RowBestCache(state)
    weight = 0.5 * total_weight(g)
    selected: list[tuple[int, int, float]] = []
    snapshots: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = []

    while len(state.tree_edges) < g.n - 1:
        pick = cache.select()
        if pick is None:
            state.complete_components(+1)
            break
        u, v = pick
        wt = float(state.w[u, v])
        s = +1 if wt < 0 else -1  # sgn(0) treated as +1
        state.tree_edges.append((u, v, s))
        selected.append((u, v, wt))
        weight += 0.5 * abs(wt)
        dying, surviving = (u, v) if _survivor == "high" else (v, u)
        state.contract(dying, surviving, s)
        cache.after_contract(dying, surviving)
        if snapshot_steps:
            snapshots.append(state.snapshot())

    tree = RelationTree.from_edges(g.n, state.tree_edges)
    details: dict = {"selected": selected}
    if snapshot_steps:
        details["snapshots"] = snapshots
    return CutResult(scan(tree), weight, "sec", tree=tree, details=details)


# ---------------------------------------------------------------------------
# Worst-out and best-in contraction


def ec(g: Graph) -> CutResult:
    """Worst-out contraction: repeatedly absorb the minimum-weight active
    edge with sign +1; the final remaining edge is signed -1."""
    _require_edges(g)
    state = _ContractionState(g)
    while True:
        iu, iv = state.active_pairs()
        if len(iu) == 0:
            break
        if len(iu) == 1:
            u, v = int(iu[0]), int(iv[0])
            state.tree_edges.append((u, v, -1))
            state.contract(u, v, +1)
            break
        b = int(np.argmin(state.w[iu, iv]))
        u, v = int(iu[b]), int(iv[b])
        state.tree_edges.append((u, v, +1))
        state.contract(u, v, +1)
    if len(state.tree_edges) < g.n - 1:
        state.complete_components(+1)
    return _result_from_tree(g, state, "ec")


def dec(g: Graph) -> CutResult:
    """Best-in contraction with sign reversal.

    Phase 1 cuts the maximum-weight active edge (sign -1) while a strictly
    positive one exists, reversing the dying endpoint's edge weights; the
    contraction direction maximizes the resulting total weight.  Phase 2
    absorbs the remaining nonpositive edges with sign +1 in lexicographic
    order.
    """
    _require_edges(g)
    state = _ContractionState(g)
    w = state.w
    while True:  # phase 1
        iu, iv = state.active_pairs()
        if len(iu) == 0:
            break
        b = int(np.argmax(w[iu, iv]))
        if not w[iu[b], iv[b]] > 0.0:
            break
        u, v = int(iu[b]), int(iv[b])
        state.tree_edges.append((u, v, -1))
        # Contracting endpoint e changes the total by -w_uv - 2 * (e's
        # other edges), so the better direction kills the endpoint with
        # the smaller remaining row sum; ties kill the lower index.
        s_u = float(w[u, :].sum() - w[u, v])
        s_v = float(w[v, :].sum() - w[u, v])
        dying, surviving = (u, v) if s_u <= s_v else (v, u)
        state.contract(dying, surviving, -1)
    while True:  # phase 2
        iu, iv = state.active_pairs()
        if len(iu) == 0:
            break
        u, v = int(iu[0]), int(iv[0])
        state.tree_edges.append((u, v, +1))
        state.contract(u, v, +1)
    if len(state.tree_edges) < g.n - 1:
        state.complete_components(+1)
    return _result_from_tree(g, state, "dec")


# ---------------------------------------------------------------------------
# Random spanning forest


def de_quincey(g: Graph, seed: int) -> CutResult:
    """Random Kruskal forest: grow a spanning forest from uniformly random
    acyclic graph edges, all signed -1 (every forest edge lies in the cut)."""
    n = g.n
    eu, ev, _ = g.edge_arrays()
    rng = np.random.default_rng(seed)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pool = list(range(len(eu)))
    edges: list[tuple[int, int, int]] = []
    while pool and len(edges) < n - 1:
        at = int(rng.integers(len(pool)))
        e = pool[at]
        pool[at] = pool[-1]
        pool.pop()
        ru, rv = find(int(eu[e])), find(int(ev[e]))
        if ru != rv:
            parent[ru] = rv
            edges.append((int(eu[e]), int(ev[e]), -1))

    if len(edges) < n - 1:
        reps = sorted({find(x) for x in range(n)})
        hub = reps[0]
        for r in reps[1:]:
            edges.append((hub, r, -1))

    tree = RelationTree.from_edges(n, edges)
    spins = scan(tree)
    return CutResult(spins, cut_weight(g, spins), "dq", tree=tree, seed=seed)
