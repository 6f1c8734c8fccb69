"""Immutable undirected simple graphs: construction, text I/O, generators.

Vertices are dense ids 0..n-1 and adjacency is stored in compressed
sparse row form (indptr/indices) with each neighbor list sorted. The CSR
arrays are marked read-only after construction, so a Graph can be shared
freely across threads and concurrent algorithm runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .rng import make_rng

__all__ = [
    "Graph",
    "GraphSpec",
    "GraphError",
    "EdgeListParseError",
    "build_graph",
    "build_graph_spec",
    "parse_edge_list",
    "serialize_edge_list",
    "validate_graph",
    "induced_subgraph",
    "gen_disjoint_cliques",
    "gen_cycle",
    "gen_grid",
    "gen_gnp",
    "gen_random_regular",
]

# pairs-per-block threshold below which G(n,p) samples every pair directly
_GNP_DENSE_PAIR_LIMIT = 1 << 22


class GraphError(ValueError):
    """Invalid graph construction or generator parameters."""


class EdgeListParseError(GraphError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph in CSR form.

    indptr has length n+1; indices[indptr[v]:indptr[v+1]] is the sorted
    neighbor list of v. degrees[v] is its length and m counts undirected
    edges, so indices has length 2m.
    """

    n: int
    m: int
    indptr: np.ndarray
    indices: np.ndarray
    degrees: np.ndarray

    def __post_init__(self):
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)
        self.degrees.setflags(write=False)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    @cached_property
    def adjacency(self) -> list[list[int]]:
        """Neighbor lists as plain Python lists (built on first use)."""
        ptr = self.indptr.tolist()
        idx = self.indices.tolist()
        return [idx[ptr[v] : ptr[v + 1]] for v in range(self.n)]

    def min_degree(self) -> int:
        return int(self.degrees.min()) if self.n else 0

    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Edges as parallel arrays (u, v) with u < v, lexicographically sorted."""
        rows = np.repeat(np.arange(self.n, dtype=self.indices.dtype), self.degrees)
        keep = rows < self.indices
        return rows[keep], self.indices[keep]

    def edges(self) -> list[tuple[int, int]]:
        u, v = self.edge_arrays()
        return list(zip(u.tolist(), v.tolist()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class GraphSpec:
    """Declarative recipe for one graph: family tag plus parameters.

    Families: disjoint-cliques(q, l), cycle(n), grid(rows, cols),
    gnp(n, p), random-regular(n, d), from-edges(path). Random families
    take a seed.
    """

    family: str
    params: dict = field(default_factory=dict)
    seed: int | None = None


def _csr_from_canonical_edges(n: int, u: np.ndarray, v: np.ndarray) -> Graph:
    """Build CSR from deduplicated edge arrays with u < v elementwise."""
    m = int(u.size)
    dtype = np.int32 if n <= np.iinfo(np.int32).max else np.int64
    rows = np.concatenate([u, v]).astype(dtype, copy=False)
    cols = np.concatenate([v, u]).astype(dtype, copy=False)
    degrees = np.bincount(rows, minlength=n).astype(np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(degrees, out=indptr[1:])
    order = np.lexsort((cols, rows))
    indices = cols[order]
    return Graph(n=n, m=m, indptr=indptr, indices=indices, degrees=degrees)


def _empty_graph(n: int) -> Graph:
    return Graph(
        n=n,
        m=0,
        indptr=np.zeros(n + 1, dtype=np.int64),
        indices=np.zeros(0, dtype=np.int32),
        degrees=np.zeros(n, dtype=np.int64),
    )


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on vertices 0..n-1 from unordered id pairs.

    Duplicate edges (in either orientation) collapse to one. Self-loops
    and out-of-range ids are rejected.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
    if arr.size == 0:
        return _empty_graph(n)
    arr = arr.reshape(-1, 2)
    if arr.min() < 0 or arr.max() >= n:
        bad = arr[(arr < 0).any(axis=1) | (arr >= n).any(axis=1)][0]
        raise GraphError(f"edge ({bad[0]}, {bad[1]}) has a vertex id outside 0..{n - 1}")
    if (arr[:, 0] == arr[:, 1]).any():
        loop = int(arr[arr[:, 0] == arr[:, 1]][0, 0])
        raise GraphError(f"self-loop ({loop}, {loop}) is not allowed")
    u = np.minimum(arr[:, 0], arr[:, 1])
    v = np.maximum(arr[:, 0], arr[:, 1])
    codes = np.unique(u * np.int64(n) + v)
    return _csr_from_canonical_edges(n, codes // n, codes % n)


def parse_edge_list(text: str, num_vertices: int | None = None) -> Graph:
    """Parse edge-list text: one "u v" pair per line, '#' comments, blanks skipped.

    The vertex count defaults to max id + 1; pass num_vertices to keep
    trailing isolated vertices (serialize/parse round-trips need it when
    the largest id has no edge).
    """
    edges: list[tuple[int, int]] = []
    max_id = -1
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(
                f"expected two whitespace-separated integers, got {raw!r}", line_no
            )
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer vertex id in {raw!r}", line_no) from None
        if a < 0 or b < 0:
            raise EdgeListParseError(f"negative vertex id in {raw!r}", line_no)
        if a == b:
            raise EdgeListParseError(f"self-loop ({a}, {b})", line_no)
        edges.append((a, b))
        max_id = max(max_id, a, b)

    if num_vertices is None:
        if not edges:
            raise EdgeListParseError("no edges and no explicit vertex count")
        n = max_id + 1
    else:
        n = num_vertices
        if max_id >= n:
            raise EdgeListParseError(f"vertex id {max_id} >= declared vertex count {n}")
    return build_graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    """Canonical edge-list text: "u v" per line with u < v, sorted, newline-terminated."""
    u, v = g.edge_arrays()
    return "".join(f"{a} {b}\n" for a, b in zip(u.tolist(), v.tolist()))


def validate_graph(g: Graph) -> None:
    """Check the Graph invariants; raises GraphError on any violation."""
    if g.n < 0 or g.m < 0:
        raise GraphError("negative size")
    if g.indptr.shape != (g.n + 1,) or g.indptr[0] != 0 or g.indptr[-1] != g.indices.size:
        raise GraphError("indptr malformed")
    if g.indices.size != 2 * g.m:
        raise GraphError("indices length != 2m")
    if not np.array_equal(np.diff(g.indptr), g.degrees):
        raise GraphError("degrees inconsistent with indptr")
    if g.m == 0:
        return
    if g.indices.min() < 0 or g.indices.max() >= g.n:
        raise GraphError("neighbor id out of range")
    rows = np.repeat(np.arange(g.n), g.degrees)
    if (rows == g.indices).any():
        raise GraphError("self-loop present")
    # sorted within each row, no duplicates
    boundary = np.zeros(g.indices.size + 1, dtype=bool)
    boundary[g.indptr[1:-1]] = True
    inc = np.diff(g.indices) > 0
    if not np.all(inc | boundary[1 : g.indices.size]):
        raise GraphError("adjacency lists not strictly sorted (duplicate or unsorted entry)")
    # symmetry: the multiset of (row, col) equals the multiset of (col, row)
    fwd = rows.astype(np.int64) * g.n + g.indices
    bwd = g.indices.astype(np.int64) * g.n + rows
    if not np.array_equal(np.sort(fwd), np.sort(bwd)):
        raise GraphError("adjacency not symmetric")


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by the given vertices, relabeled 0..len-1 in sorted id order."""
    keep = np.unique(np.asarray(list(vertices), dtype=np.int64))
    if keep.size and (keep[0] < 0 or keep[-1] >= g.n):
        raise GraphError("induced_subgraph vertex id out of range")
    mask = np.zeros(g.n, dtype=bool)
    mask[keep] = True
    new_id = np.cumsum(mask) - 1
    u, v = g.edge_arrays()
    sel = mask[u] & mask[v]
    return _csr_from_canonical_edges(int(keep.size), new_id[u[sel]], new_id[v[sel]])


def csr_gather(indptr: np.ndarray, indices: np.ndarray, verts: np.ndarray) -> np.ndarray:
    """Concatenated neighbor lists of verts, via one vectorized multi-slice."""
    starts = indptr[verts]
    lens = indptr[verts + 1] - starts
    total = int(lens.sum())
    if total == 0:
        return np.zeros(0, dtype=indices.dtype)
    cum = np.cumsum(lens)
    flat = np.arange(total, dtype=np.int64) - np.repeat(cum - lens, lens) + np.repeat(starts, lens)
    return indices[flat]


# ---------------------------------------------------------------------------
# generators


def gen_disjoint_cliques(q: int, l: int) -> Graph:
    """q disjoint cliques of size l; every vertex has degree l-1."""
    if q < 1 or l < 1:
        raise GraphError(f"need q >= 1 and l >= 1, got q={q}, l={l}")
    iu, iv = np.triu_indices(l, k=1)
    offs = (np.arange(q, dtype=np.int64) * l)[:, None]
    u = (offs + iu[None, :]).ravel()
    v = (offs + iv[None, :]).ravel()
    return _csr_from_canonical_edges(q * l, u, v)


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    a = np.arange(n, dtype=np.int64)
    b = (a + 1) % n
    return _csr_from_canonical_edges(n, np.minimum(a, b), np.maximum(a, b))


def gen_grid(rows: int, cols: int) -> Graph:
    """rows x cols lattice with 4-neighborhoods."""
    if rows < 1 or cols < 1:
        raise GraphError(f"grid needs rows, cols >= 1, got {rows}x{cols}")
    ids = np.arange(rows * cols, dtype=np.int64).reshape(rows, cols)
    right_u = ids[:, :-1].ravel()
    right_v = ids[:, 1:].ravel()
    down_u = ids[:-1, :].ravel()
    down_v = ids[1:, :].ravel()
    u = np.concatenate([right_u, down_u])
    v = np.concatenate([right_v, down_v])
    return _csr_from_canonical_edges(rows * cols, u, v)


def _pair_index_to_edge(n: int, pos: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Invert the row-major enumeration of pairs (u, v), u < v."""
    u_range = np.arange(n, dtype=np.int64)
    row_offsets = u_range * (n - 1) - u_range * (u_range - 1) // 2
    u = np.searchsorted(row_offsets, pos, side="right") - 1
    v = pos - row_offsets[u] + u + 1
    return u, v


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each of the n(n-1)/2 pairs kept independently with probability p.

    Sparse instances are sampled by geometric gap-skipping over the pair
    enumeration, so the cost is O(n + expected edges) rather than O(n^2).
    Identical (n, p, seed) always yields the identical graph.
    """
    if n < 0:
        raise GraphError(f"gnp needs n >= 0, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"gnp needs 0 <= p <= 1, got {p}")
    total_pairs = n * (n - 1) // 2
    if total_pairs == 0 or p == 0.0:
        return _empty_graph(n)
    rng = make_rng(seed)
    if p == 1.0:
        pos = np.arange(total_pairs, dtype=np.int64)
    elif total_pairs <= _GNP_DENSE_PAIR_LIMIT:
        pos = np.flatnonzero(rng.random(total_pairs) < p)
    else:
        chunks = []
        last = -1
        while last < total_pairs - 1:
            batch = int((total_pairs - 1 - last) * p * 1.2) + 64
            gaps = rng.geometric(p, size=min(batch, 1 << 23))
            hits = last + np.cumsum(gaps)
            last = int(hits[-1])
            chunks.append(hits[hits <= total_pairs - 1])
        pos = np.concatenate(chunks)
    u, v = _pair_index_to_edge(n, pos)
    return _csr_from_canonical_edges(n, u, v)


def gen_random_regular(n: int, d: int, seed: int, max_restarts: int = 100) -> Graph:
    """Random simple d-regular graph via stub pairing.

    Stubs are shuffled and paired; pairs that would create a self-loop or
    a duplicate edge are thrown back and re-paired until none remain. A
    pass that makes no progress forces a full restart; exceeding the
    restart cap raises GraphError.
    """
    if d < 0 or d >= max(n, 1):
        raise GraphError(f"need 0 <= d < n, got n={n}, d={d}")
    if (n * d) % 2 != 0:
        raise GraphError(f"n*d must be even, got n={n}, d={d}")
    if d == 0:
        return _empty_graph(n)
    rng = make_rng(seed)
    for _ in range(max_restarts):
        edges = _try_stub_pairing(rng, n, d)
        if edges is not None:
            u, v = edges
            g = _csr_from_canonical_edges(n, u, v)
            assert bool((g.degrees == d).all())
            return g
    raise GraphError(f"random-regular pairing failed after {max_restarts} restarts (n={n}, d={d})")


def _try_stub_pairing(rng: np.random.Generator, n: int, d: int):
    pending = np.repeat(np.arange(n, dtype=np.int64), d)
    seen = np.zeros(0, dtype=np.int64)  # sorted codes u*n+v of accepted edges
    out_u: list[np.ndarray] = []
    out_v: list[np.ndarray] = []
    while pending.size:
        pending = rng.permutation(pending)
        u = np.minimum(pending[0::2], pending[1::2])
        v = np.maximum(pending[0::2], pending[1::2])
        code = u * n + v
        good = u != v
        # keep only the first occurrence of each code within this pass
        _, first = np.unique(code, return_index=True)
        first_mask = np.zeros(code.size, dtype=bool)
        first_mask[first] = True
        good &= first_mask
        # and reject codes already accepted in earlier passes
        if seen.size:
            at = np.searchsorted(seen, code)
            at = np.minimum(at, seen.size - 1)
            good &= seen[at] != code
        if not good.any():
            return None
        out_u.append(u[good])
        out_v.append(v[good])
        seen = np.sort(np.concatenate([seen, code[good]]))
        bad = ~good
        pending = np.concatenate([u[bad], v[bad]])
    return np.concatenate(out_u), np.concatenate(out_v)


def build_graph_spec(spec: GraphSpec) -> Graph:
    """Materialize a GraphSpec through the matching generator."""
    fam = spec.family
    p = spec.params
    if fam == "disjoint-cliques":
        return gen_disjoint_cliques(int(p["q"]), int(p["l"]))
    if fam == "cycle":
        return gen_cycle(int(p["n"]))
    if fam == "grid":
        return gen_grid(int(p["rows"]), int(p["cols"]))
    if fam == "gnp":
        if spec.seed is None:
            raise GraphError("gnp spec needs a seed")
        return gen_gnp(int(p["n"]), float(p["p"]), spec.seed)
    if fam == "random-regular":
        if spec.seed is None:
            raise GraphError("random-regular spec needs a seed")
        return gen_random_regular(int(p["n"]), int(p["d"]), spec.seed)
    if fam == "from-edges":
        with open(p["path"], "r", encoding="utf-8") as fh:
            return parse_edge_list(fh.read(), num_vertices=p.get("num_vertices"))
    raise GraphError(f"unknown graph family {fam!r}")
