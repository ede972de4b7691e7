"""Small simple graphs as bit-row adjacency, with the named-graph catalog.

Vertices are 0..n-1 and each adjacency row is one Python int used as a
bitmask, so n is capped at 64.  Everything here is immutable and pure:
graphs, BFS distance matrices, induced subgraphs, the graph6 codec and a
backtracking induced-subgraph matcher for graphs of at most ~10 vertices.

Named families:

    T:a,b   extended double star: centers of K_{1,a} and K_{1,b} joined
            to a common middle vertex.  Canonical labeling is
            (center1, middle, center2, a leaves, b leaves) so that the
            distance matrix comes out in the standard block layout.
    S:a,b   double star (centers joined by an edge)
    P:n C:n K:n   path, cycle, complete graph
    H1..H7, P6    the six-vertex obstructions (path v1..v5 plus one
                  extra vertex with a prescribed attachment)
    F1..F3, K4, F4   the diameter-3 obstructions (P4 plus attachments)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

MAX_VERTICES = 64


class GraphError(ValueError):
    pass


class DisconnectedError(GraphError):
    """Raised by operations that require a connected graph."""


class Graph6Error(GraphError):
    """Malformed graph6 input; carries the byte offset of the fault."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on n <= 64 vertices, adjacency as bit rows."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {i} has bits beyond vertex range")
            if row >> i & 1:
                raise GraphError(f"self-loop at vertex {i}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.rows[i] >> j & 1) != (self.rows[j] >> i & 1):
                    raise GraphError(f"adjacency not symmetric at ({i},{j})")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.rows[v]).count("1")

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if self.rows[i] >> j & 1]

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(v) for v in range(self.n)))


# ---------------------------------------------------------------------------
# graph6 codec (formats.txt layout: 6-bit groups, bias-63 printable bytes,
# upper-triangle column-major bit order, zero padding)

def _g6_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    # 63..258047 use the 126-prefixed 18-bit form; we only ever need 63..64
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def to_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line (no trailing newline)."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(g.rows[j] >> i & 1)
    out = bytearray(_g6_header(g.n))
    for k in range(0, len(bits), 6):
        group = bits[k:k + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = val << 1 | b
        out.append(val + 63)
    return out.decode("ascii")


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line.  Raises Graph6Error with a byte offset."""
    raw = text.rstrip("\r\n")
    if not raw:
        raise Graph6Error("empty input", 0)
    data = raw.encode("ascii", errors="replace")
    for off, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} outside graph6 range 63..126", off)
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("graphs beyond 258047 vertices unsupported", 1)
        if len(data) < 4:
            raise Graph6Error("truncated extended size header", len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
        body_off = 4
    else:
        n = data[0] - 63
        body = data[1:]
        body_off = 1
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} outside 1..{MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) < nbytes:
        raise Graph6Error("body shorter than the edge bit count requires",
                          body_off + len(body))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after edge bits", body_off + nbytes)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    # padding bits must be zero
    if nbits % 6:
        pad = body[-1] - 63 & (1 << (6 - nbits % 6)) - 1
        if pad:
            raise Graph6Error("nonzero padding bits", body_off + nbytes - 1)
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# named-graph catalog

def _path_edges(n):
    return [(i, i + 1) for i in range(n - 1)]


def _extended_double_star(a: int, b: int) -> Graph:
    # labeling: 0 = center1, 1 = middle, 2 = center2, then a leaves, b leaves
    if a < 0 or b < 0:
        raise GraphError("double-star sizes must be nonnegative")
    edges = [(0, 1), (1, 2)]
    edges += [(0, 3 + i) for i in range(a)]
    edges += [(2, 3 + a + j) for j in range(b)]
    return Graph.from_edges(a + b + 3, edges)


def _double_star(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise GraphError("double-star sizes must be nonnegative")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + j) for j in range(b)]
    return Graph.from_edges(a + b + 2, edges)


# six-vertex obstructions: path v0..v4 plus v5 attached to the listed vertices
_H_ATTACH = {
    "H1": (0, 1, 2, 3, 4),
    "H2": (0, 1, 2, 3),
    "H3": (1, 2, 3),
    "H4": (0, 1, 2),
    "H5": (1, 2),
    "H6": (0, 1),
    "H7": (2,),
}

# diameter-3 obstructions: path v0..v3 plus v4 attached to the listed vertices
_F_ATTACH = {
    "F1": (0, 1, 2, 3),
    "F2": (0, 1, 2),
    "F3": (0, 1),
}


def named_graph(family: str, *params: int) -> Graph:
    """Build a catalog graph: T/S take (a, b); P/C/K take n; H*, F*, P6, K4
    take no parameters."""
    fam = family.upper() if family[:1] in "tspck" else family
    if fam == "T":
        (a, b) = params
        return _extended_double_star(a, b)
    if fam == "S":
        (a, b) = params
        return _double_star(a, b)
    if fam == "P":
        (n,) = params
        if n < 1:
            raise GraphError("P_n requires n >= 1")
        return Graph.from_edges(n, _path_edges(n))
    if fam == "C":
        (n,) = params
        if n < 3:
            raise GraphError("C_n requires n >= 3")
        return Graph.from_edges(n, _path_edges(n) + [(n - 1, 0)])
    if fam == "K":
        (n,) = params
        if n < 1:
            raise GraphError("K_n requires n >= 1")
        return Graph.from_edges(n, list(combinations(range(n), 2)))
    if params:
        raise GraphError(f"family {family!r} takes no parameters")
    if fam in _H_ATTACH:
        edges = _path_edges(5) + [(v, 5) for v in _H_ATTACH[fam]]
        return Graph.from_edges(6, edges)
    if fam in _F_ATTACH:
        edges = _path_edges(4) + [(v, 4) for v in _F_ATTACH[fam]]
        return Graph.from_edges(5, edges)
    if fam == "P6":
        return Graph.from_edges(6, _path_edges(6))
    if fam == "K4":
        return named_graph("K", 4)
    if fam == "F4":
        # path v0..v3 plus six vertices each adjacent to v1 and v2
        edges = _path_edges(4)
        for v in range(4, 10):
            edges += [(1, v), (2, v)]
        return Graph.from_edges(10, edges)
    raise GraphError(f"unknown graph family {family!r}")


# ---------------------------------------------------------------------------
# distances and subgraphs

def _bfs_reach(rows, start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return _bfs_reach(g.rows, 0) == (1 << g.n) - 1


def distance_matrix(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All-pairs BFS distances as a tuple of int tuples."""
    n = g.n
    rows = g.rows
    dist = []
    for s in range(n):
        d = [-1] * n
        d[s] = 0
        seen = 1 << s
        frontier = seen
        level = 0
        while frontier:
            level += 1
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= rows[v]
            frontier = nxt & ~seen
            seen |= frontier
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                d[v] = level
        if seen != (1 << n) - 1:
            raise DisconnectedError("distance matrix requires a connected graph")
        dist.append(tuple(d))
    return tuple(dist)


def diameter(g: Graph) -> int:
    return max(max(row) for row in distance_matrix(g))


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced by the given vertex set, relabeled to 0..k-1 in the
    set's sorted order."""
    vs = sorted(set(vertices))
    if not vs:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    if vs[0] < 0 or vs[-1] >= g.n:
        raise GraphError("vertex index out of range")
    pos = {v: i for i, v in enumerate(vs)}
    edges = [(pos[u], pos[v]) for u in vs for v in vs
             if u < v and g.adjacent(u, v)]
    return Graph.from_edges(len(vs), edges)


def principal_submatrix(matrix, vertices) -> tuple[tuple[int, ...], ...]:
    """Rows and columns of a square matrix restricted to one index subset.

    This is D_G[S]; in general it is *not* the distance matrix of the
    induced subgraph.
    """
    vs = sorted(set(vertices))
    if not vs:
        raise GraphError("principal submatrix needs a nonempty index set")
    if vs[0] < 0 or vs[-1] >= len(matrix):
        raise GraphError("index out of range")
    return tuple(tuple(matrix[i][j] for j in vs) for i in vs)


def partition_by_attachment(g: Graph, path_vertices) -> list[frozenset[int]]:
    """Split V minus X into classes V_0..V_k by how many vertices of the
    induced path X each outside vertex is adjacent to."""
    X = list(path_vertices)
    k = len(X)
    if len(set(X)) != k or any(v < 0 or v >= g.n for v in X):
        raise GraphError("path vertices must be distinct and in range")
    for i in range(k):
        for j in range(i + 1, k):
            if g.adjacent(X[i], X[j]) != (j == i + 1):
                raise GraphError("vertex list does not induce a path in order")
    xmask = 0
    for v in X:
        xmask |= 1 << v
    classes = [set() for _ in range(k + 1)]
    for v in range(g.n):
        if xmask >> v & 1:
            continue
        hits = bin(g.rows[v] & xmask).count("1")
        classes[hits].add(v)
    return [frozenset(c) for c in classes]


# ---------------------------------------------------------------------------
# induced-subgraph isomorphism (backtracking, degree pruning; target <= ~10)

def find_induced_embedding(g: Graph, h: Graph):
    """Map of V(h) into V(g) inducing a copy of h, or None.

    Backtracking over h's vertices in a connectivity-friendly order, with
    degree pruning: an image must have at least the pattern vertex's degree.
    """
    if h.n > g.n:
        return None
    # order h's vertices so each (after the first) touches a previous one
    order = [max(range(h.n), key=h.degree)]
    placed = 1 << order[0]
    while len(order) < h.n:
        nxt = None
        for v in range(h.n):
            if placed >> v & 1:
                continue
            if h.rows[v] & placed:
                nxt = v
                break
        if nxt is None:  # h disconnected; take any leftover
            nxt = next(v for v in range(h.n) if not placed >> v & 1)
        order.append(nxt)
        placed |= 1 << nxt

    gdeg = [g.degree(v) for v in range(g.n)]
    hdeg = [h.degree(v) for v in range(h.n)]
    image = {}
    used = 0

    def extend(idx):
        nonlocal used
        if idx == len(order):
            return True
        hv = order[idx]
        for gv in range(g.n):
            if used >> gv & 1 or gdeg[gv] < hdeg[hv]:
                continue
            ok = True
            for hu, gu in image.items():
                if h.adjacent(hu, hv) != g.adjacent(gu, gv):
                    ok = False
                    break
            if not ok:
                continue
            image[hv] = gv
            used |= 1 << gv
            if extend(idx + 1):
                return True
            del image[hv]
            used &= ~(1 << gv)
        return False

    return dict(image) if extend(0) else None


def contains_induced(g: Graph, h: Graph) -> bool:
    """True iff some vertex subset of g induces a graph isomorphic to h."""
    return find_induced_embedding(g, h) is not None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    # an induced embedding between equal-order, equal-size graphs is an
    # isomorphism
    return find_induced_embedding(g, h) is not None
