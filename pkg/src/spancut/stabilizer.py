"""Pauli-coefficient bookkeeping used to cross-verify the graph algorithms.

Two reformulations are implemented symbolically (no state vectors or
tableaux): signed edge contraction as greedy stabilizer-generator
selection over ZZ terms with coefficients initialized to half the edge
weights, and the generator-tracking view of the vertex-grown greedy where
each placed vertex binds to one of two anchor vertices.  Both are
compared against their graph-form counterparts step by step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import Graph, GraphError, canonical_spins, cut_weight, total_weight
from .kruskal import sec
from .prim import CutResult, sg3
from .relation_tree import RelationTree, scan


@dataclass
class PauliLedger:
    """State of the coefficient-tracking contraction run.

    `generators` holds one signed vertex pair per selection step (the ZZ
    generator it fixes), then any cross-component joins, then the formal
    closing generator on vertex 0 that pins the global spin freedom.
    `constant` is the running additive constant of the objective; it
    starts at minus half the total weight and decreases by |coefficient|
    at each step, so the final cut weight is its negation.
    """

    n: int
    constant: float
    generators: list[tuple[int, tuple[int, ...]]] = field(default_factory=list)
    chosen: list[tuple[int, int, float]] = field(default_factory=list)
    terms: dict[tuple[int, int], float] = field(default_factory=dict)
    snapshots: Optional[list[tuple[np.ndarray, np.ndarray, np.ndarray]]] = None

    def to_relation_tree(self) -> RelationTree:
        edges = [
            (pair[0], pair[1], s) for s, pair in self.generators if len(pair) == 2
        ]
        return RelationTree.from_edges(self.n, edges)


def sec_stabilizer(
    g: Graph, snapshot_steps: bool = False
) -> tuple[PauliLedger, float]:
    """Coefficient-space form of signed edge contraction.

    Pair coefficients start at half the edge weights; each step picks the
    pair with the largest absolute coefficient (lexicographic smallest on
    ties), emits the generator signed opposite to the coefficient, flips
    the dying endpoint's coefficients by that sign, merges them into the
    survivor's, and lowers the constant term by the chosen magnitude.

    Returns the ledger and the achieved cut weight (minus the final
    constant).  Tie handling matches the graph-form `sec` exactly.
    """
    if g.m == 0:
        raise GraphError("graph has no edges")
    n = g.n
    coeff = g.matrix() * 0.5  # fresh writeable array
    complete = g.is_complete()
    mask = None if complete else g.adjacency_mask()
    alive = np.ones(n, dtype=bool)
    constant = -0.5 * total_weight(g)
    ledger = PauliLedger(n=n, constant=constant)
    if snapshot_steps:
        ledger.snapshots = []

    tri = np.triu_indices(n, k=1)

    def active_flat() -> np.ndarray:
        ok = np.outer(alive, alive)
        if mask is not None:
            ok &= mask
        return ok[tri]

    steps = 0
    while steps < n - 1:
        sel = active_flat()
        if not sel.any():
            break
        vals = np.where(sel, np.abs(coeff[tri]), -np.inf)
        b = int(np.argmax(vals))  # row-major first max = lexicographic pair
        u, v = int(tri[0][b]), int(tri[1][b])
        c = float(coeff[u, v])
        s = +1 if c < 0 else -1
        ledger.generators.append((s, (u, v)))
        ledger.chosen.append((u, v, c))
        ledger.constant -= abs(c)
        # multiply the dying endpoint's terms by the generator sign, then
        # merge them onto the survivor
        coeff[v, :] += s * coeff[u, :]
        coeff[:, v] = coeff[v, :]
        coeff[v, v] = 0.0
        coeff[u, :] = 0.0
        coeff[:, u] = 0.0
        if mask is not None:
            mask[v, :] |= mask[u, :]
            mask[:, v] = mask[v, :]
            mask[v, v] = False
            mask[u, :] = False
            mask[:, u] = False
        alive[u] = False
        steps += 1
        if snapshot_steps:
            ok = active_flat()
            iu, iv = tri[0][ok], tri[1][ok]
            ledger.snapshots.append((iu.copy(), iv.copy(), coeff[iu, iv].copy()))

    if steps < n - 1:
        reps = np.flatnonzero(alive)
        hub = int(reps[0])
        for r in reps[1:]:
            ledger.generators.append((+1, (hub, int(r))))
    ledger.generators.append((+1, (0,)))
    ledger.terms = {
        (int(a), int(b)): float(coeff[a, b])
        for a, b in zip(*np.nonzero(np.triu(coeff, k=1)))
    }
    return ledger, -ledger.constant


@dataclass
class GeneratorTable:
    """Symbolic generator set of the vertex-grown stabilizer construction.

    Every placed vertex is bound to one of the two anchor vertices by a
    signed ZZ relation; unbound vertices remain X-type.  The global
    X-string generator carries sign -1 and does not influence the cut.
    """

    n: int
    anchor_first: int
    anchor_second: Optional[int] = None
    bindings: list[tuple[int, int, int]] = field(default_factory=list)
    x_string_sign: int = -1

    def to_relation_tree(self) -> RelationTree:
        return RelationTree.from_edges(self.n, self.bindings)

    def solve(self) -> np.ndarray:
        """Spin assignment satisfying every ZZ generator, first spin +1."""
        return scan(self.to_relation_tree())

    def holds_for(self, spins: np.ndarray) -> bool:
        return all(spins[u] * spins[v] == s for u, v, s in self.bindings)


def adapt_clifford(g: Graph, r: int) -> CutResult:
    """Generator-tracking reformulation of the vertex-grown greedy.

    Starts from vertex r, anchors the second set at the neighbor of
    maximum weight (proceeding even if that weight is nonpositive), then
    repeatedly binds the vertex with the largest absolute score to the
    anchor whose side yields the larger gain.  Scores, updates, and tie
    rules mirror sg3 bit for bit, so both produce the same partition on
    graphs with positive weights.
    """
    n = g.n
    if n < 2:
        raise GraphError("needs at least two vertices")
    if not (0 <= r < n):
        raise GraphError(f"start vertex {r} out of range for n={n}")
    w = g.matrix()

    i1 = r
    row = w[i1, :].copy()
    row[i1] = -np.inf
    i2 = int(np.argmax(row))
    table = GeneratorTable(n=n, anchor_first=i1, anchor_second=i2)
    table.bindings.append((i2, i1, -1))

    placed = np.zeros(n, dtype=bool)
    placed[i1] = placed[i2] = True
    d1 = w[:, i1].copy()
    d2 = w[:, i2].copy()
    for _ in range(n - 2):
        gain_first = d2 - d1
        score = np.abs(gain_first)
        score[placed] = -np.inf
        i = int(np.argmax(score))
        if gain_first[i] >= 0.0:
            table.bindings.append((i, i1, +1))
            d1 += w[i]
        else:
            table.bindings.append((i, i2, +1))
            d2 += w[i]
        placed[i] = True

    spins = table.solve()
    return CutResult(
        spins,
        cut_weight(g, spins),
        "adapt",
        tree=table.to_relation_tree(),
        init={"r": r, "anchors": (i1, i2)},
        details={"generator_table": table},
    )


@dataclass
class EquivalenceReport:
    """Cross-formalism agreement summary for one graph."""

    n: int
    starts_checked: list[int]
    partition_matches: list[bool]
    sec_weight_graph: float
    sec_weight_stabilizer: float
    weights_equal: bool
    selection_matches: bool
    coefficient_ledger_exact: Optional[bool]
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "starts_checked": self.starts_checked,
            "partition_matches": self.partition_matches,
            "sec_weight_graph": self.sec_weight_graph,
            "sec_weight_stabilizer": self.sec_weight_stabilizer,
            "weights_equal": self.weights_equal,
            "selection_matches": self.selection_matches,
            "coefficient_ledger_exact": self.coefficient_ledger_exact,
            "violations": self.violations,
            "passed": self.passed,
        }


def check_equivalences(
    g: Graph,
    starts: Optional[list[int]] = None,
    snapshot_steps: Optional[bool] = None,
) -> EquivalenceReport:
    """Verify the cross-formalism identities on one graph.

    Checks, for every requested start vertex, that the generator-tracking
    construction reproduces the sg3 partition (up to a global flip); that
    the coefficient-space contraction selects the same edges as graph-form
    sec with coefficients exactly half the current weights; and that both
    report the same cut weight bit for bit.  Full per-step coefficient
    maps are compared when snapshot_steps is enabled (default: only for
    n <= 64).
    """
    violations: list[str] = []
    if starts is None:
        starts = list(range(g.n)) if g.n >= 2 else []
    if snapshot_steps is None:
        snapshot_steps = g.n <= 64

    partition_matches = []
    for r in starts:
        a = canonical_spins(adapt_clifford(g, r).spins)
        b = canonical_spins(sg3(g, r).spins)
        same = bool(np.array_equal(a, b))
        partition_matches.append(same)
        if not same:
            violations.append(f"partition mismatch against sg3 at start {r}")

    if g.m > 0:
        graph_run = sec(g, snapshot_steps=snapshot_steps)
        ledger, stab_weight = sec_stabilizer(g, snapshot_steps=snapshot_steps)
        weights_equal = graph_run.weight == stab_weight
        if not weights_equal:
            violations.append(
                f"weight mismatch: graph {graph_run.weight!r} vs "
                f"coefficient form {stab_weight!r}"
            )
        sel_graph = [(u, v) for u, v, _ in graph_run.details["selected"]]
        sel_stab = [(u, v) for u, v, _ in ledger.chosen]
        selection_matches = sel_graph == sel_stab
        if not selection_matches:
            violations.append("selection order differs between formulations")
        half_ok = all(
            cs == 0.5 * ws
            for (_, _, ws), (_, _, cs) in zip(graph_run.details["selected"], ledger.chosen)
        )
        if not half_ok:
            selection_matches = False
            violations.append("chosen coefficients are not exactly half the weights")

        ledger_exact: Optional[bool] = None
        if snapshot_steps:
            ledger_exact = True
            for (gu, gv, gw), (su, sv, sc) in zip(
                graph_run.details["snapshots"], ledger.snapshots
            ):
                if not (
                    np.array_equal(gu, su)
                    and np.array_equal(gv, sv)
                    and np.array_equal(gw * 0.5, sc)
                ):
                    ledger_exact = False
                    violations.append("per-step coefficient map deviates from half-weights")
                    break
        weight_graph = graph_run.weight
    else:
        weights_equal = True
        selection_matches = True
        ledger_exact = None
        weight_graph = 0.0
        stab_weight = 0.0

    return EquivalenceReport(
        n=g.n,
        starts_checked=list(starts),
        partition_matches=partition_matches,
        sec_weight_graph=weight_graph,
        sec_weight_stabilizer=stab_weight,
        weights_equal=weights_equal,
        selection_matches=selection_matches,
        coefficient_ledger_exact=ledger_exact,
        violations=violations,
    )
