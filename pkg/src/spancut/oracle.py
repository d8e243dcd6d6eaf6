"""Exhaustive MAX-CUT solver for small graphs, plus spin-glass energy.

Enumeration fixes the first spin to +1 and sweeps the remaining n-1 in
two blocks: all low-block patterns are evaluated vectorized, the high
block is looped.  The quadratic form is evaluated directly from the
weight matrix, independent of the heuristics' incremental bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError, total_weight

MAX_EXACT_VERTICES = 24
_LOW_BITS = 16


@dataclass
class OracleResult:
    optimum: float
    witness: np.ndarray
    enumerated: int


def _spin_patterns(bits: int) -> np.ndarray:
    """(2^bits, bits) matrix of spin rows; bit b of the row index drives
    column b (set bit -> spin -1)."""
    idx = np.arange(1 << bits, dtype=np.uint32)
    out = np.ones((1 << bits, bits), dtype=np.float64)
    for b in range(bits):
        out[(idx >> b) & 1 == 1, b] = -1.0
    return out


def brute_force(g: Graph) -> OracleResult:
    """Maximum cut by enumerating all 2^(n-1) bipartitions.

    Ties resolve to the smallest enumeration index, so the witness is
    deterministic.  Refuses graphs with more than 24 vertices.
    """
    n = g.n
    if n > MAX_EXACT_VERTICES:
        raise GraphError(
            f"exact search is capped at n={MAX_EXACT_VERTICES}; got n={n}"
        )
    w = g.matrix()
    tot = total_weight(g)
    if n == 1:
        return OracleResult(0.0, np.array([1]), 1)

    low = min(n - 1, _LOW_BITS)
    high = n - 1 - low
    zl = np.ones((1 << low, low + 1), dtype=np.float64)
    zl[:, 1:] = _spin_patterns(low)

    wll = w[: low + 1, : low + 1]
    # quad_ll[p] = z_p^T W_ll z_p
    quad_ll = np.einsum("ij,ij->i", zl @ wll, zl)

    best_val = -np.inf
    best_index = -1
    if high == 0:
        cuts = 0.5 * tot - 0.25 * quad_ll
        best_index = int(np.argmax(cuts))
        best_val = float(cuts[best_index])
        zh_best = np.zeros(0)
    else:
        zh_all = _spin_patterns(high)
        w_lh = w[: low + 1, low + 1 :]
        w_hh = w[low + 1 :, low + 1 :]
        for h in range(1 << high):
            zh = zh_all[h]
            cross = zl @ (w_lh @ zh)
            quad_hh = float(zh @ w_hh @ zh)
            cuts = 0.5 * tot - 0.25 * quad_ll - 0.5 * cross - 0.25 * quad_hh
            p = int(np.argmax(cuts))
            if cuts[p] > best_val:
                best_val = float(cuts[p])
                best_index = h * (1 << low) + p
                zh_best = zh

    witness = np.ones(n, dtype=np.int64)
    p = best_index & ((1 << low) - 1)
    witness[1 : low + 1] = zl[p, 1:].astype(np.int64)
    if high:
        witness[low + 1 :] = zh_best.astype(np.int64)
    return OracleResult(best_val, witness, 1 << (n - 1))


def sk_energy(g: Graph, cut: float) -> float:
    """Spin-glass energy of the configuration achieving the given cut
    weight: sum over edges of w_uv z_u z_v equals total - 2 * cut."""
    return total_weight(g) - 2.0 * cut
