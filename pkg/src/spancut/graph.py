"""Graph data model, random instance generators, and cut-weight evaluation.

Graphs are undirected and weighted, with vertices 0..n-1 and at most one
edge per unordered pair.  Internally the weight matrix is kept dense
(float64, symmetric, zero diagonal) so the greedy kernels can work on
contiguous rows; explicit zero-weight edges, which the matrix cannot
distinguish from absent edges, are tracked separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

FAMILIES = ("complete-uniform", "sk-gaussian", "k-regular", "erdos-renyi")

# Instance generation uses numpy's PCG64 generator, which is seedable and
# platform independent.  Instance i of a sweep uses seed base + i (see
# bench.derive_seed for the multi-point extension).
RNG_NAME = "PCG64"


class GraphError(ValueError):
    """Invalid graph construction or use."""


class EdgeListParseError(GraphError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Graph:
    """Undirected weighted graph with a dense symmetric weight matrix.

    Immutable by convention after construction: the weight matrix is
    marked read-only, which makes instances safe to share across workers.
    """

    def __init__(self, matrix: np.ndarray, zero_edges: Iterable[tuple[int, int]] = ()):
        matrix = np.asarray(matrix, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise GraphError(f"weight matrix must be square, got shape {matrix.shape}")
        n = matrix.shape[0]
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        if np.any(np.diagonal(matrix) != 0.0):
            raise GraphError("self-loops are not allowed (nonzero diagonal)")
        if not np.array_equal(matrix, matrix.T):
            raise GraphError("weight matrix must be symmetric")
        self.n = n
        self._w = matrix
        self._w.setflags(write=False)
        zs = set()
        for u, v in zero_edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop ({u},{v}) is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) endpoint out of range for n={n}")
            if matrix[u, v] != 0.0:
                raise GraphError(f"zero-edge ({u},{v}) clashes with nonzero weight")
            zs.add((min(u, v), max(u, v)))
        self._zero_edges = frozenset(zs)
        self._edge_arrays: Optional[tuple[np.ndarray, np.ndarray, np.ndarray]] = None
        self._m: Optional[int] = None

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int, float]]
    ) -> "Graph":
        """Build a graph from (u, v, weight) triples, rejecting duplicates,
        self-loops, and out-of-range endpoints."""
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        w = np.zeros((n, n), dtype=np.float64)
        seen: set[tuple[int, int]] = set()
        zero_edges = []
        for u, v, wt in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop ({u},{v}) is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) endpoint out of range for n={n}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge ({u},{v})")
            seen.add(key)
            wt = float(wt)
            w[u, v] = wt
            w[v, u] = wt
            if wt == 0.0:
                zero_edges.append(key)
        return cls(w, zero_edges)

    def matrix(self) -> np.ndarray:
        """Read-only dense weight matrix (n x n, symmetric, zero diagonal)."""
        return self._w

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Edges as parallel arrays (u, v, w) with u < v, sorted lexicographically."""
        if self._edge_arrays is None:
            iu, iv = np.nonzero(np.triu(self._w, k=1))
            if self._zero_edges:
                zu, zv = zip(*sorted(self._zero_edges))
                iu = np.concatenate([iu, np.asarray(zu, dtype=iu.dtype)])
                iv = np.concatenate([iv, np.asarray(zv, dtype=iv.dtype)])
                order = np.lexsort((iv, iu))
                iu, iv = iu[order], iv[order]
            self._edge_arrays = (iu, iv, self._w[iu, iv])
        return self._edge_arrays

    @property
    def m(self) -> int:
        if self._m is None:
            # count_nonzero avoids materializing an upper-triangle copy
            self._m = int(np.count_nonzero(self._w)) // 2 + len(self._zero_edges)
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return self._w[u, v] != 0.0 or (min(u, v), max(u, v)) in self._zero_edges

    def adjacency_mask(self) -> np.ndarray:
        """Boolean n x n edge-presence matrix (fresh, writeable copy)."""
        mask = self._w != 0.0
        for u, v in self._zero_edges:
            mask[u, v] = True
            mask[v, u] = True
        return mask

    def is_complete(self) -> bool:
        off_diag = self.n * (self.n - 1) // 2
        return self.m == off_diag

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self._w, other._w)
            and self._zero_edges == other._zero_edges
        )

    def __hash__(self):  # pragma: no cover - graphs are not meant as dict keys
        return hash((self.n, self.m))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def total_weight(g: Graph) -> float:
    """Sum of all edge weights.

    The matrix is symmetric with zero diagonal, so the full-matrix sum is
    twice the edge total; halving is exact in binary floating point.
    """
    return float(g.matrix().sum()) * 0.5


def _check_spins(g: Graph, spins: np.ndarray) -> np.ndarray:
    z = np.asarray(spins)
    if z.shape != (g.n,):
        raise GraphError(f"spin vector has length {z.shape}, expected ({g.n},)")
    if not np.all(np.abs(z) == 1):
        raise GraphError("spins must be -1 or +1")
    return z.astype(np.float64)


def cut_weight(g: Graph, spins: np.ndarray) -> float:
    """Total weight of edges whose endpoints carry opposite spins.

    Invariant under a global spin flip.  Computed as the direct sum of
    crossing-edge weights (row-chunked so large graphs stay cheap on
    memory).
    """
    z = _check_spins(g, spins)
    pos = np.flatnonzero(z > 0)
    neg = np.flatnonzero(z < 0)
    if len(pos) == 0 or len(neg) == 0:
        return 0.0
    if len(neg) < len(pos):
        pos, neg = neg, pos
    w = g.matrix()
    out = 0.0
    for start in range(0, len(pos), 512):
        rows = pos[start : start + 512]
        out += float(w[np.ix_(rows, neg)].sum())
    return out


def canonical_spins(spins: np.ndarray) -> np.ndarray:
    """Representative of the cut with the first spin fixed to +1."""
    z = np.asarray(spins)
    return z * z[0]


@dataclass(frozen=True)
class InstanceSpec:
    """Parameters of one random instance; `seed` pins it exactly."""

    family: str
    n: int
    k: Optional[int] = None
    p: Optional[float] = None
    weighted: bool = True
    seed: int = 0

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.n < 1:
            raise GraphError("n must be >= 1")
        if self.family == "k-regular":
            if self.k is None:
                raise GraphError("k-regular requires k")
            if self.k < 0 or self.k >= self.n:
                raise GraphError(f"k-regular requires 0 <= k < n, got k={self.k}, n={self.n}")
            if (self.n * self.k) % 2 != 0:
                raise GraphError(f"k-regular requires n*k even, got n={self.n}, k={self.k}")
            if self.p is not None:
                raise GraphError("p is only valid for erdos-renyi")
        elif self.family == "erdos-renyi":
            if self.p is None:
                raise GraphError("erdos-renyi requires p")
            if not (0.0 <= self.p <= 1.0):
                raise GraphError(f"erdos-renyi requires 0 <= p <= 1, got p={self.p}")
            if self.k is not None:
                raise GraphError("k is only valid for k-regular")
        else:
            if self.k is not None or self.p is not None:
                raise GraphError(f"{self.family} takes neither k nor p")


def _fill_complete(n: int, rng: np.random.Generator, gaussian: bool) -> np.ndarray:
    # Row-by-row upper-triangle fill: the draw order is part of the
    # reproducibility contract, so no block-size tuning here.
    w = np.zeros((n, n), dtype=np.float64)
    for i in range(n - 1):
        row = rng.standard_normal(n - 1 - i) if gaussian else rng.random(n - 1 - i)
        w[i, i + 1 :] = row
        w[i + 1 :, i] = row
    return w


def _pairing_model_regular(n: int, k: int, rng: np.random.Generator) -> set[tuple[int, int]]:
    """Uniform-ish random simple k-regular graph via the stub-pairing model.

    Failed stubs (self-pairs / duplicate edges) are re-shuffled and
    re-paired; a full restart happens only when no suitable pairing of the
    leftover stubs exists.  Same scheme as the standard NetworkX sampler.
    """
    if k == 0:
        return set()

    def suitable(edges: set[tuple[int, int]], leftovers: dict[int, int]) -> bool:
        if not leftovers:
            return True
        verts = list(leftovers)
        for a in verts:
            for b in verts:
                if a == b:
                    break
                if (min(a, b), max(a, b)) not in edges:
                    return True
        return False

    while True:
        edges: set[tuple[int, int]] = set()
        stubs = np.repeat(np.arange(n), k)
        stuck = False
        while stubs.size:
            rng.shuffle(stubs)
            leftovers: dict[int, int] = {}
            for a, b in zip(stubs[0::2], stubs[1::2]):
                a, b = int(a), int(b)
                key = (min(a, b), max(a, b))
                if a != b and key not in edges:
                    edges.add(key)
                else:
                    leftovers[a] = leftovers.get(a, 0) + 1
                    leftovers[b] = leftovers.get(b, 0) + 1
            if not suitable(edges, leftovers):
                stuck = True  # no valid pairing of the leftovers exists
                break
            stubs = np.array(
                [v for v, c in leftovers.items() for _ in range(c)], dtype=np.int64
            )
        if not stuck:
            return edges


def gen_instance(spec: InstanceSpec) -> Graph:
    """Generate a random graph for `spec`; identical spec gives an identical graph."""
    spec.validate()
    n = spec.n
    rng = np.random.default_rng(spec.seed)

    if spec.family == "complete-uniform":
        return Graph(_fill_complete(n, rng, gaussian=False))
    if spec.family == "sk-gaussian":
        return Graph(_fill_complete(n, rng, gaussian=True))

    if spec.family == "k-regular":
        pairs = sorted(_pairing_model_regular(n, spec.k or 0, rng))
    else:  # erdos-renyi
        pairs = []
        for i in range(n - 1):
            hits = np.flatnonzero(rng.random(n - 1 - i) < spec.p)
            pairs.extend((i, i + 1 + int(j)) for j in hits)

    w = np.zeros((n, n), dtype=np.float64)
    zero_edges = []
    if pairs:
        weights = rng.random(len(pairs)) if spec.weighted else np.ones(len(pairs))
        for (u, v), wt in zip(pairs, weights):
            w[u, v] = wt
            w[v, u] = wt
            if wt == 0.0:
                zero_edges.append((u, v))
    return Graph(w, zero_edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain text edge-list format.

    Header line "n m", then m lines "u v [w]" with 1-based vertex indices
    and an optional weight (default 1).  Raises EdgeListParseError with
    the offending line number on malformed input.
    """
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx >= len(lines):
        raise EdgeListParseError("missing header", 1)
    header = lines[idx].split()
    if len(header) != 2:
        raise EdgeListParseError(f"expected header 'n m', got {lines[idx]!r}", idx + 1)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListParseError(f"non-integer header {lines[idx]!r}", idx + 1) from None
    if n < 1:
        raise EdgeListParseError(f"n must be >= 1, got {n}", idx + 1)
    if m < 0:
        raise EdgeListParseError(f"m must be >= 0, got {m}", idx + 1)

    w = np.zeros((n, n), dtype=np.float64)
    seen: set[tuple[int, int]] = set()
    zero_edges = []
    count = 0
    for lineno in range(idx + 1, len(lines)):
        raw = lines[lineno].strip()
        if not raw:
            continue
        parts = raw.split()
        if len(parts) not in (2, 3):
            raise EdgeListParseError(f"expected 'u v [w]', got {raw!r}", lineno + 1)
        try:
            u1, v1 = int(parts[0]), int(parts[1])
            wt = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError:
            raise EdgeListParseError(f"malformed edge line {raw!r}", lineno + 1) from None
        if not (1 <= u1 <= n and 1 <= v1 <= n):
            raise EdgeListParseError(
                f"vertex index out of range 1..{n} in {raw!r}", lineno + 1
            )
        if u1 == v1:
            raise EdgeListParseError(f"self-loop at vertex {u1}", lineno + 1)
        if not math.isfinite(wt):
            raise EdgeListParseError(f"non-finite weight in {raw!r}", lineno + 1)
        u, v = u1 - 1, v1 - 1
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListParseError(f"duplicate edge {u1} {v1}", lineno + 1)
        seen.add(key)
        w[u, v] = wt
        w[v, u] = wt
        if wt == 0.0:
            zero_edges.append(key)
        count += 1
    if count != m:
        raise EdgeListParseError(
            f"header declares {m} edges but {count} were given", len(lines)
        )
    return Graph(w, zero_edges)


def emit_edge_list(g: Graph) -> str:
    """Serialize to the edge-list text format; parse(emit(g)) == g."""
    u, v, w = g.edge_arrays()
    lines = [f"{g.n} {len(u)}"]
    for a, b, wt in zip(u, v, w):
        lines.append(f"{int(a) + 1} {int(b) + 1} {wt!r}")
    return "\n".join(lines) + "\n"
