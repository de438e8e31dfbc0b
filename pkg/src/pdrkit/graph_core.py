"""Graph primitives: adjacency storage, the graph6 codec, BFS distance
partitions, a small generator catalog, and exhaustive enumeration.

Vertices are dense 0-based integers everywhere. Every structure is frozen
after construction and safe to share across threads. Disconnected input is
always an error, never a silent per-component analysis.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

GRAPH6_MAX_N = 62


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the position of the bad byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self._message = message
        self.offset = offset

    def __reduce__(self):  # survives process boundaries
        return type(self), (self._message, self.offset)


class UnsupportedSizeError(ValueError):
    """Graph too large for the short graph6 form (n > 62)."""


class ConnectivityError(ValueError):
    """An operation that assumes a connected graph met one that is not."""

    def __init__(self, message: str, unreachable: int | None = None):
        super().__init__(message)
        self.unreachable = unreachable

    def __reduce__(self):
        return type(self), (self.args[0], self.unreachable)


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adjacency`` is a symmetric boolean matrix with an all-false diagonal,
    made read-only on construction.
    """

    n: int
    adjacency: np.ndarray
    edge_count: int

    def __post_init__(self):
        adj = self.adjacency
        if adj.ndim != 2 or adj.shape != (self.n, self.n):
            raise ValueError("adjacency must be an n x n matrix")
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if adj.dtype != np.bool_:
            raise ValueError("adjacency must be boolean")
        if np.any(np.diag(adj)):
            raise ValueError("self-loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        if self.edge_count != int(adj.sum()) // 2:
            raise ValueError("edge_count does not match the adjacency matrix")
        adj.setflags(write=False)

    @classmethod
    def from_adjacency(cls, adjacency) -> "Graph":
        adj = np.array(adjacency, dtype=bool)
        n = adj.shape[0] if adj.ndim == 2 else 0
        return cls(n=n, adjacency=adj, edge_count=int(adj.sum()) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad edge ({u}, {v}) for a graph on {n} vertices")
            adj[u, v] = adj[v, u] = True
        return cls.from_adjacency(adj)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and np.array_equal(self.adjacency, other.adjacency)
        )

    def neighbors(self, u: int) -> np.ndarray:
        return np.nonzero(self.adjacency[u])[0]

    def degree(self, u: int) -> int:
        return int(self.adjacency[u].sum())

    @property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1).astype(np.int64)

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        """The adjacency as a fresh, writable 0/1 matrix of `dtype`."""
        return self.adjacency.astype(dtype)


@dataclass(frozen=True, eq=False)
class DistanceInfo:
    """Hop distances from ``source`` and the distance partition around it.

    ``cells[i]`` holds the sorted vertices at distance exactly i; the cells
    partition the vertex set of a connected graph.
    """

    source: int
    dist: np.ndarray
    eccentricity: int
    cells: tuple[np.ndarray, ...]


@dataclass(frozen=True, eq=False)
class Bipartition:
    """Two-coloring of a connected bipartite graph.

    ``parts[0]`` is the side containing vertex 0. ``degrees`` holds the
    sorted degree multiset of each part; ``biregular`` is true when both
    parts (nonempty) have constant degree.
    """

    parts: tuple[np.ndarray, np.ndarray]
    degrees: tuple[tuple[int, ...], tuple[int, ...]]
    biregular: bool

    @property
    def part_degrees(self) -> tuple[int, int] | None:
        """(delta_1, delta_2) when biregular, else None."""
        if not self.biregular:
            return None
        return self.degrees[0][0], self.degrees[1][0]


# ---------------------------------------------------------------------------
# graph6 codec (short form only)
#
# First byte is n + 63 with n <= 62.  The remaining bytes pack the strict
# upper triangle read column by column -- (0,1), (0,2), (1,2), (0,3), ... --
# six bits per byte, most significant bit first, each byte offset by 63.


def _pair_order(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Row/column indices of the upper triangle in graph6 bit order."""
    cols = np.repeat(np.arange(1, n), np.arange(1, n))
    rows = np.concatenate([np.arange(j) for j in range(1, n)]) if n > 1 else np.array([], dtype=int)
    return rows, cols


def parse_graph6(data: str | bytes) -> Graph:
    """Decode a short-form graph6 byte string into a :class:`Graph`.

    Raises :class:`Graph6Error` with the byte offset on malformed input.
    """
    if isinstance(data, str):
        try:
            raw = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    else:
        raw = bytes(data)
    if not raw:
        raise Graph6Error("empty input", 0)
    for k, b in enumerate(raw):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside the printable range [63, 126]", k)
    if raw[0] == 126:
        raise Graph6Error("long-form size prefix '~' is not supported", 0)
    n = raw[0] - 63
    if n == 0:
        raise Graph6Error("a zero-vertex graph cannot be represented", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(raw) - 1 != nbytes:
        raise Graph6Error(
            f"payload for n={n} needs {nbytes} bytes, got {len(raw) - 1}",
            min(len(raw), 1 + nbytes),
        )
    vals = np.frombuffer(raw, dtype=np.uint8)[1:].astype(np.int64) - 63
    bits = ((vals[:, None] >> np.arange(5, -1, -1)) & 1).ravel()[:nbits]
    adj = np.zeros((n, n), dtype=bool)
    rows, cols = _pair_order(n)
    adj[rows, cols] = bits.astype(bool)
    adj[cols, rows] = adj[rows, cols]
    return Graph.from_adjacency(adj)


def serialize_graph6(g: Graph) -> str:
    """Encode a graph (n <= 62) as a short-form graph6 string.

    Inverse of :func:`parse_graph6`; padding bits are zero, so the encoding
    is canonical and round-trips bit-exactly.
    """
    if g.n > GRAPH6_MAX_N:
        raise UnsupportedSizeError(f"short graph6 form supports at most {GRAPH6_MAX_N} vertices, got {g.n}")
    rows, cols = _pair_order(g.n)
    bits = g.adjacency[rows, cols].astype(np.uint8)
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    groups = bits.reshape(-1, 6) @ (1 << np.arange(5, -1, -1))
    return chr(63 + g.n) + "".join(chr(63 + int(v)) for v in groups)


# ---------------------------------------------------------------------------
# distances


def bfs(g: Graph, u: int) -> DistanceInfo:
    """Exact hop distances from u and the distance partition around it.

    Raises :class:`ConnectivityError` naming an unreachable vertex when the
    graph is disconnected.
    """
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range for a graph on {g.n} vertices")
    dist = np.full(g.n, -1, dtype=np.int64)
    dist[u] = 0
    seen = np.zeros(g.n, dtype=bool)
    seen[u] = True
    frontier = seen.copy()
    d = 0
    while frontier.any():
        reach = g.adjacency[frontier].any(axis=0)
        frontier = reach & ~seen
        d += 1
        dist[frontier] = d
        seen |= frontier
    if not seen.all():
        v = int(np.nonzero(~seen)[0][0])
        raise ConnectivityError(f"graph is disconnected: vertex {v} is unreachable from {u}", unreachable=v)
    ecc = int(dist.max())
    cells = tuple(np.nonzero(dist == i)[0] for i in range(ecc + 1))
    dist.setflags(write=False)
    return DistanceInfo(source=u, dist=dist, eccentricity=ecc, cells=cells)


def distance_matrices(g: Graph) -> list[np.ndarray]:
    """0/1 matrices A_0..A_D where (A_i)_{uv} = 1 iff dist(u, v) = i.

    A_0 is the identity pattern, A_1 the adjacency, and the matrices sum to
    the all-ones pattern.
    """
    dist = np.stack([bfs(g, u).dist for u in range(g.n)])
    diameter = int(dist.max())
    return [(dist == i).astype(np.int8) for i in range(diameter + 1)]


# ---------------------------------------------------------------------------
# generators

NAMED_FAMILIES = ("path", "cycle", "complete", "complete_bipartite", "hypercube", "petersen")


def generate_named(family: str, *params: int) -> Graph:
    """Build a graph from the named catalog.

    Vertex labelings:
      path(k)                 0-1-...-(k-1)
      cycle(k)                0-1-...-(k-1)-0, k >= 3
      complete(k)             all pairs adjacent
      complete_bipartite(a,b) first part 0..a-1, second part a..a+b-1
      hypercube(d)            vertices are d-bit labels, edges flip one bit
      petersen                outer 5-cycle 0..4, inner pentagram 5..9,
                              spokes i ~ i+5
    """
    params = tuple(int(p) for p in params)
    if family == "path":
        (k,) = _check_params(family, params, 1)
        if k < 1:
            raise ValueError("path needs at least 1 vertex")
        return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])
    if family == "cycle":
        (k,) = _check_params(family, params, 1)
        if k < 3:
            raise ValueError("cycle length must be at least 3")
        return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])
    if family == "complete":
        (k,) = _check_params(family, params, 1)
        if k < 1:
            raise ValueError("complete graph needs at least 1 vertex")
        return Graph.from_edges(k, combinations(range(k), 2))
    if family == "complete_bipartite":
        a, b = _check_params(family, params, 2)
        if a < 1 or b < 1:
            raise ValueError("complete_bipartite needs two positive part sizes")
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if family == "hypercube":
        (d,) = _check_params(family, params, 1)
        if d < 0:
            raise ValueError("hypercube dimension must be non-negative")
        verts = range(1 << d)
        return Graph.from_edges(1 << d, [(v, v ^ (1 << k)) for v in verts for k in range(d) if v < v ^ (1 << k)])
    if family == "petersen":
        _check_params(family, params, 0)
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(i, i + 5) for i in range(5)]
        edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph.from_edges(10, edges)
    raise ValueError(f"unknown family {family!r}; known: {', '.join(NAMED_FAMILIES)}")


def _check_params(family: str, params: tuple[int, ...], want: int) -> tuple[int, ...]:
    if len(params) != want:
        raise ValueError(f"family {family!r} takes {want} parameter(s), got {len(params)}")
    return params


# ---------------------------------------------------------------------------
# enumeration


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Stream every connected labeled simple graph on n vertices.

    Visits all 2^(n(n-1)/2) edge subsets in ascending bitmask order (bit k
    is the k-th pair in lexicographic order) and yields the connected ones.
    Guarded to n <= 7 against blow-up.
    """
    if not 1 <= n <= 7:
        raise ValueError(f"enumeration supports 1 <= n <= 7, got {n}")
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        nbr = [0] * n
        mm, k = mask, 0
        while mm:
            if mm & 1:
                i, j = pairs[k]
                nbr[i] |= 1 << j
                nbr[j] |= 1 << i
            mm >>= 1
            k += 1
        seen, frontier = 1, 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= nbr[v]
            frontier = nxt & ~seen
            seen |= frontier
        if seen != full:
            continue
        adj = np.zeros((n, n), dtype=bool)
        for k2, (i, j) in enumerate(pairs):
            if mask >> k2 & 1:
                adj[i, j] = adj[j, i] = True
        yield Graph.from_adjacency(adj)


# ---------------------------------------------------------------------------
# bipartiteness


def bipartition(g: Graph) -> Bipartition | None:
    """The unique 2-coloring of a connected bipartite graph, else None.

    The part containing vertex 0 comes first. ``biregular`` requires both
    parts nonempty with constant degree.
    """
    info = bfs(g, 0)
    color = (info.dist % 2).astype(bool)
    same = g.adjacency & (color[:, None] == color[None, :])
    if same.any():
        return None
    parts = (np.nonzero(~color)[0], np.nonzero(color)[0])
    degs = g.degrees
    degrees = tuple(tuple(sorted(int(d) for d in degs[p])) for p in parts)
    biregular = all(len(p) > 0 for p in parts) and all(len(set(ds)) == 1 for ds in degrees)
    return Bipartition(parts=parts, degrees=degrees, biregular=biregular)
