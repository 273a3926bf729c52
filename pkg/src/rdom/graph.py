"""Compact immutable graphs with bitset adjacency rows.

A ``Graph`` stores simple undirected graphs on up to 64 vertices; row
``adj[v]`` is the open neighborhood of ``v`` packed into one machine word.
Vertex subsets travel through the whole library as plain ints (``VertexSet``),
vertex 0 in the least significant bit, which keeps every solver and checker
a handful of bitwise operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_N = 64

VertexSet = int  # bitmask over 0..n-1


def bits_of(mask: VertexSet) -> Iterator[int]:
    """Yield the vertex ids set in a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class DegreeProfile:
    """Counts of degree-2, degree-3, and all other vertices."""

    n2: int
    n3: int
    other: int


class Graph:
    """Simple undirected graph, vertices 0..n-1, adjacency as bitset rows."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        if not 0 <= n <= MAX_N:
            raise ValueError(f"vertex count must be in 0..{MAX_N}, got {n}")
        rows = tuple(adj)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} references vertices >= {n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in bits_of(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add(key)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    # -- basic queries ----------------------------------------------------

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> VertexSet:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return self.adj[v]

    def vertex_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1) << (v + 1)
            for u in bits_of(row):
                out.append((v, u))
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree_profile(self) -> DegreeProfile:
        n2 = n3 = 0
        for v in range(self.n):
            d = self.adj[v].bit_count()
            if d == 2:
                n2 += 1
            elif d == 3:
                n3 += 1
        return DegreeProfile(n2, n3, self.n - n2 - n3)

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.adj), default=0)

    def max_degree(self) -> int:
        return max((r.bit_count() for r in self.adj), default=0)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def is_special_subcubic(g: Graph) -> bool:
    """True iff every vertex has degree 2 or 3."""
    return g.n >= 3 and all(r.bit_count() in (2, 3) for r in g.adj)


def is_cubic(g: Graph) -> bool:
    return g.n >= 4 and all(r.bit_count() == 3 for r in g.adj)


def is_degree_bipartite(g: Graph) -> bool:
    """True iff g is special subcubic and every edge joins a degree-2 vertex
    to a degree-3 vertex (the small/large degree classes form a bipartition)."""
    if not is_special_subcubic(g):
        return False
    small = mask_of(v for v in range(g.n) if g.degree(v) == 2)
    for v in range(g.n):
        if small >> v & 1:
            if g.adj[v] & small:
                return False
        elif g.adj[v] & ~small:
            return False
    return True


def small_vertices(g: Graph) -> VertexSet:
    return mask_of(v for v in range(g.n) if g.degree(v) == 2)


def large_vertices(g: Graph) -> VertexSet:
    return mask_of(v for v in range(g.n) if g.degree(v) == 3)


def reachable_from(g: Graph, start: int) -> VertexSet:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits_of(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return reachable_from(g, 0) == g.vertex_mask()


def components(g: Graph) -> list[tuple[Graph, list[int]]]:
    """Connected components with index maps back to g.

    Returns a list of ``(component, vmap)`` pairs ordered by least original
    vertex id; ``vmap[i]`` is the original id of component vertex ``i`` and
    the map is ascending.
    """
    out = []
    remaining = g.vertex_mask()
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = reachable_from(g, start)
        vmap = list(bits_of(comp))
        index = {orig: i for i, orig in enumerate(vmap)}
        rows = []
        for orig in vmap:
            row = 0
            for u in bits_of(g.adj[orig] & comp):
                row |= 1 << index[u]
            rows.append(row)
        out.append((Graph(len(vmap), rows), vmap))
        remaining &= ~comp
    return out


def subdivide(g: Graph, edge: tuple[int, int], t: int) -> Graph:
    """Replace edge (x, y) by the path x, v1, ..., vt, y.

    New vertices take ids n..n+t-1 in path order from x; all new vertices
    end with degree 2 and every original degree is preserved.
    """
    x, y = edge
    if not g.has_edge(x, y):
        raise ValueError(f"({x},{y}) is not an edge")
    if not 1 <= t <= 4:
        raise ValueError(f"subdivision count must be in 1..4, got {t}")
    if g.n + t > MAX_N:
        raise ValueError(f"subdivision exceeds the {MAX_N}-vertex cap")
    n = g.n
    rows = list(g.adj) + [0] * t
    rows[x] &= ~(1 << y)
    rows[y] &= ~(1 << x)
    path = [x] + [n + i for i in range(t)] + [y]
    for a, b in zip(path, path[1:]):
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(n + t, rows)


def open_twins(g: Graph) -> list[tuple[int, int]]:
    """All unordered pairs of distinct vertices with identical open
    neighborhoods (such pairs are never adjacent in a simple graph)."""
    out = []
    for u, v in combinations(range(g.n), 2):
        if g.adj[u] == g.adj[v]:
            out.append((u, v))
    return out


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests.

    Per-root BFS: the shortest cycle through the root closes at the first
    non-tree edge touching the current frontier.
    """
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        dist[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for u in bits_of(g.adj[v]):
                    if dist[u] < 0:
                        dist[u] = dist[v] + 1
                        nxt.append(u)
                    elif dist[u] >= dist[v]:
                        # non-tree edge: cycle through root of this length
                        cycle = dist[u] + dist[v] + 1
                        if best is None or cycle < best:
                            best = cycle
            if best is not None and frontier and 2 * dist[frontier[0]] >= best:
                break
            frontier = nxt
    return best


def _walk_chain(g: Graph, small: VertexSet, start: int, first: int) -> tuple[list[int], int]:
    """Follow degree-2 vertices from ``start`` toward neighbor ``first``.

    Returns ``(arm, end)``: the degree-2 vertices strictly beyond ``start``
    in walk order, and the terminating vertex (a degree-3 vertex, or
    ``start`` itself when the walk closes a 2-regular cycle).
    """
    arm = []
    prev, cur = start, first
    while small >> cur & 1 and cur != start:
        arm.append(cur)
        step = g.adj[cur] & ~(1 << prev)
        prev, cur = cur, step.bit_length() - 1
    return arm, cur


def find_handles_and_linkages(g: Graph) -> list[tuple[str, int, tuple[int, ...]]]:
    """All k-handles (k >= 3) and k-linkages (k >= 1) of a special subcubic
    graph.

    A k-handle is a k-cycle containing exactly one degree-3 vertex; a
    k-linkage is a path joining two distinct degree-3 vertices through k
    internal degree-2 vertices. Every maximal chain of degree-2 vertices
    yields exactly one of the two (or neither, for a 2-regular component),
    so each is reported once as ``(kind, k, vertices)``. Handles start at
    their degree-3 vertex, linkages at the lower-numbered endpoint; the
    result is sorted.
    """
    if not is_special_subcubic(g):
        raise ValueError("handles and linkages are defined for special subcubic graphs")
    small = small_vertices(g)
    out = []
    visited = 0
    for s in bits_of(small):
        if visited >> s & 1:
            continue
        first, second = bits_of(g.adj[s])
        left_arm, left_end = _walk_chain(g, small, s, first)
        if left_end == s:
            # component is a cycle of degree-2 vertices: neither kind
            visited |= mask_of([s] + left_arm)
            continue
        right_arm, right_end = _walk_chain(g, small, s, second)
        chain = left_arm[::-1] + [s] + right_arm
        visited |= mask_of(chain)
        a, b = left_end, right_end
        k = len(chain)
        if a == b:
            # chain closes on a single degree-3 vertex: a (k+1)-cycle handle
            if chain[0] > chain[-1]:
                chain = chain[::-1]
            out.append(("handle", k + 1, (a, *chain)))
        else:
            if a > b:
                a, b = b, a
                chain = chain[::-1]
            out.append(("linkage", k, (a, *chain, b)))
    out.sort()
    return out


# -- named constructors ---------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, inner 5-cycle 5..9 joined as a pentagram, spokes
    i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    rows: list[int] = []
    for g in graphs:
        off = len(rows)
        if off + g.n > MAX_N:
            raise ValueError(f"union exceeds the {MAX_N}-vertex cap")
        rows.extend(r << off for r in g.adj)
    return Graph(len(rows), rows)


_DIAMOND = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
_DOMINO = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])


def is_diamond(g: Graph) -> bool:
    """K4 minus one edge."""
    from rdom.iso import are_isomorphic

    return g.n == 4 and g.edge_count() == 5 and are_isomorphic(g, _DIAMOND)


def is_domino(g: Graph) -> bool:
    """6-cycle plus an edge between two antipodal vertices."""
    from rdom.iso import are_isomorphic

    return g.n == 6 and g.edge_count() == 7 and are_isomorphic(g, _DOMINO)
