"""Simple undirected graphs on at most 62 vertices, bitset adjacency rows.

Vertices are 0..n-1. A Graph is immutable and hashable; `rows[i]` is an int
whose bit j is set iff ij is an edge. graph6 I/O covers the short form only,
which is exactly the n <= 62 range supported here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import Graph6Error, UnsupportedSizeError

MAX_VERTICES = 62

GIRTH_INFINITE = math.inf  # acyclic graphs


class Graph:
    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if not 1 <= n <= MAX_VERTICES:
            raise UnsupportedSizeError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for i, r in enumerate(rows):
            if r & ~full:
                raise ValueError(f"row {i} has bits beyond vertex {n - 1}")
            if r >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
        for i in range(n):
            for j in range(i + 1, n):
                if (rows[i] >> j & 1) != (rows[j] >> i & 1):
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            r = self.rows[i] >> (i + 1)
            j = i + 1
            while r:
                if r & 1:
                    out.append((i, j))
                r >>= 1
                j += 1
        return out

    def neighbors(self, v: int) -> list[int]:
        r, out, j = self.rows[v], [], 0
        while r:
            if r & 1:
                out.append(j)
            r >>= 1
            j += 1
        return out

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """New graph where old vertex i becomes perm[i]."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise ValueError("perm is not a permutation of 0..n-1")
        rows = [0] * n
        for i in range(n):
            r = self.rows[i]
            ri = 0
            j = 0
            while r:
                if r & 1:
                    ri |= 1 << perm[j]
                r >>= 1
                j += 1
            rows[perm[i]] = ri
        return Graph(n, rows)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph({self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# graph6 (short form)

def from_graph6(text: str) -> Graph:
    data = text.strip()
    raw = data.encode("ascii", errors="replace")
    if not raw:
        raise Graph6Error("empty graph6 string", 0)
    for off, b in enumerate(raw):
        if not 63 <= b <= 126:
            raise Graph6Error(f"character {chr(b)!r} outside graph6 range", off)
    n = raw[0] - 63
    if n == 63:
        # long-form marker '~'; only the short form (n <= 62) is supported
        raise UnsupportedSizeError("long-form graph6 (n > 62) not supported")
    if n == 0:
        raise Graph6Error("graph6 order 0 not supported", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(raw) - 1 < nbytes:
        raise Graph6Error(f"graph6 body too short, need {nbytes} bytes", len(raw))
    if len(raw) - 1 > nbytes:
        raise Graph6Error("trailing garbage after graph6 body", 1 + nbytes)
    rows = [0] * n
    bit = 0
    for off in range(nbytes):
        group = raw[1 + off] - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if group >> k & 1:
                    raise Graph6Error("nonzero padding bits", 1 + off)
                continue
            if group >> k & 1:
                i, j = _pair_from_colmajor(bit)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph(n, rows)


def to_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.rows[i] >> j & 1)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        group = 0
        chunk = bits[k:k + 6]
        for b in chunk:
            group = group << 1 | b
        group <<= 6 - len(chunk)
        out.append(chr(63 + group))
    return "".join(out)


def _pair_from_colmajor(bit: int) -> tuple[int, int]:
    # bit index -> (i, j), order (0,1),(0,2),(1,2),(0,3),...
    j = 1
    while j * (j - 1) // 2 + j <= bit:
        j += 1
    i = bit - j * (j - 1) // 2
    return i, j


# ---------------------------------------------------------------------------
# plain edge-list text: "n m" header then one "u v" line per edge

def from_edge_text(text: str) -> Graph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header claims {m} edges, found {len(lines) - 1} lines")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    g = Graph.from_edges(n, edges)
    if g.m != m:
        raise ValueError("duplicate edges in edge-list text")
    return g


def to_edge_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# constructions

def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << i) for i in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty_graph(a), empty_graph(b))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full ^ r ^ (1 << i) for i, r in enumerate(g.rows)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g keeps its labels, h is shifted up by g.n."""
    if g.n + h.n > MAX_VERTICES:
        raise UnsupportedSizeError(f"union order {g.n + h.n} exceeds {MAX_VERTICES}")
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(g.n + h.n, rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all cross edges; same labeling as disjoint_union."""
    u = disjoint_union(g, h)
    gmask = (1 << g.n) - 1
    hmask = ((1 << u.n) - 1) ^ gmask
    rows = [r | hmask if i < g.n else r | gmask for i, r in enumerate(u.rows)]
    return Graph(u.n, rows)


def join_power(g: Graph, k: int) -> Graph:
    """Join of k disjoint copies of g (k = 1 returns g itself)."""
    if k < 1:
        raise ValueError("join power needs k >= 1")
    out = g
    for _ in range(k - 1):
        out = join(out, g)
    return out


def extend_g0(g0: Graph, d: int, p: int, q: int) -> Graph:
    """g0 plus p disjoint copies of K_{d+1} and q of K_d.

    g0 must be almost-regular with top degree d: every degree in {d-1, d}.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    bad = [v for v in range(g0.n) if g0.degree(v) not in (d - 1, d)]
    if bad:
        raise ValueError(
            f"vertex {bad[0]} has degree {g0.degree(bad[0])}, need d-1={d - 1} or d={d}")
    out = g0
    for _ in range(p):
        out = disjoint_union(out, complete_graph(d + 1))
    for _ in range(q):
        out = disjoint_union(out, complete_graph(d))
    return out


_H_SEED_EDGES = {
    5: [],
    6: [(0, 1), (2, 3), (4, 5)],
    7: [(i, (i + 1) % 7) for i in range(7)],
    8: [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)],
    # 4-regular seed on 9 vertices, labels a..i -> 0..8
    9: [(0, 3), (0, 4), (0, 5), (0, 6), (1, 3), (1, 4), (1, 5), (1, 6),
        (2, 5), (2, 6), (2, 7), (2, 8), (3, 7), (3, 8), (4, 7), (4, 8),
        (5, 7), (6, 8)],
}


def h_family(n: int) -> Graph:
    """The (n-5)-regular family member on n vertices (n >= 5).

    Seeds on 5..9 vertices, then joins with floor(n/5)-1 empty 5-vertex
    blocks; all blocks pairwise joined.
    """
    if n < 5:
        raise ValueError("family defined for n >= 5")
    if n > MAX_VERTICES:
        raise UnsupportedSizeError(f"order {n} exceeds {MAX_VERTICES}")
    q, rho = divmod(n, 5)
    out = Graph.from_edges(5 + rho, _H_SEED_EDGES[5 + rho])
    for _ in range(q - 1):
        out = join(out, empty_graph(5))
    return out


# ---------------------------------------------------------------------------
# structure counters

@dataclass(frozen=True)
class DegreeInfo:
    degrees: tuple[int, ...]
    is_regular: bool
    is_almost_regular: bool  # degrees take at most two values, and those differ by 1


def degree_info(g: Graph) -> DegreeInfo:
    degs = g.degrees()
    lo, hi = min(degs), max(degs)
    return DegreeInfo(degs, lo == hi, hi - lo <= 1)


def count_triangles(g: Graph) -> int:
    total = 0
    for i in range(g.n):
        r = g.rows[i] >> (i + 1)
        j = i + 1
        while r:
            if r & 1:
                above = ~((1 << (j + 1)) - 1)
                total += (g.rows[i] & g.rows[j] & above).bit_count()
            r >>= 1
            j += 1
    return total


def count_induced_p3(g: Graph) -> int:
    """Induced 2-edge paths: sum C(d_i, 2) minus 3 * triangle count."""
    s = sum(d * (d - 1) // 2 for d in g.degrees())
    return s - 3 * count_triangles(g)


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        r = frontier
        v = 0
        while r:
            if r & 1:
                nxt |= g.rows[v]
            r >>= 1
            v += 1
        frontier = nxt & ~seen
        seen |= nxt
    return seen.bit_count() == g.n


def connected_components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            r = frontier
            v = 0
            while r:
                if r & 1:
                    nxt |= g.rows[v]
                r >>= 1
                v += 1
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append([v for v in range(g.n) if comp >> v & 1])
    return comps


def is_clique_union(g: Graph) -> bool:
    """True iff every connected component is complete (structural check)."""
    for comp in connected_components(g):
        want = 0
        for v in comp:
            want |= 1 << v
        for v in comp:
            if g.rows[v] != want ^ (1 << v):
                return False
    return True


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, GIRTH_INFINITE if acyclic."""
    best = GIRTH_INFINITE
    for u, v in g.edges():
        # shortest u-v path avoiding the edge uv, plus that edge
        dist = {u: 0}
        frontier = [u]
        found = None
        while frontier and found is None:
            nxt = []
            for x in frontier:
                for y in g.neighbors(x):
                    if x == u and y == v:
                        continue
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        if y == v:
                            found = dist[y]
                            break
                        nxt.append(y)
                if found is not None:
                    break
            frontier = nxt
        if found is not None and found + 1 < best:
            best = found + 1
    return best


def girth_and_cycles(g: Graph, max_len: int) -> tuple[int | float, tuple[int, ...]]:
    """Girth plus counts of cycle subgraphs of each length 3..max_len.

    Cycles are counted once each as subgraphs (not walks, not orientations);
    chords are allowed. max_len must not exceed n.
    """
    if not 3 <= max_len <= g.n:
        raise ValueError(f"max_len must be in 3..{g.n}")
    counts = [0] * (max_len + 1)

    def extend(root: int, path_last: int, visited: int, length: int):
        for w in g.neighbors(path_last):
            if w == root and length >= 3:
                counts[length] += 1
            if w > root and not visited >> w & 1 and length < max_len:
                extend(root, w, visited | 1 << w, length + 1)

    for root in range(g.n):
        # paths stay above root; each cycle found twice (two directions)
        extend(root, root, 1 << root, 1)
    cyc = tuple(c // 2 for c in counts[3:max_len + 1])
    gir = girth(g)
    return gir, cyc
