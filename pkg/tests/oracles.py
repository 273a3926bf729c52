"""Independent reference implementations used only by the tests.

Everything here deliberately avoids the production code paths: predicates
walk neighbor id lists instead of bitmasks, minimization enumerates subsets
in increasing size, isomorphism tries permutations, and the graph6 encoder
builds the bit string by hand. The one shared piece is the canonical
certificate used to dedupe the labeled-mask enumeration, which is the
documented dedupe currency.
"""

from __future__ import annotations

from itertools import combinations, permutations

from rdom.graph import Graph, bits_of
from rdom.iso import canonical_certificate


def neighbor_lists(g: Graph) -> list[list[int]]:
    return [sorted(bits_of(g.adj[v])) for v in range(g.n)]


def naive_is_dominating(g: Graph, s_ids) -> bool:
    s = set(s_ids)
    nbrs = neighbor_lists(g)
    return all(v in s or any(u in s for u in nbrs[v]) for v in range(g.n))


def naive_is_restrained(g: Graph, s_ids) -> bool:
    s = set(s_ids)
    nbrs = neighbor_lists(g)
    for v in range(g.n):
        if v in s:
            continue
        if not any(u in s for u in nbrs[v]):
            return False
        if not any(u not in s for u in nbrs[v]):
            return False
    return True


def naive_is_nerd(g: Graph, s_ids, x_ids, variant: str) -> bool:
    s, x = set(s_ids), set(x_ids)
    nbrs = neighbor_lists(g)
    if variant == "ndom":
        for v in range(g.n):
            if v in s:
                continue
            if v not in x and not any(u in s for u in nbrs[v]):
                return False
            if not any(u not in s for u in nbrs[v]):
                return False
        return True
    if x & s:
        return False
    for v in range(g.n):
        if v in s:
            continue
        if not any(u in s for u in nbrs[v]):
            return False
        if v not in x and not any(u not in s for u in nbrs[v]):
            return False
    return True


def naive_minimum(g: Graph, predicate) -> tuple[int, list[frozenset[int]]] | None:
    """Smallest size admitting the predicate, with every optimal set."""
    for size in range(g.n + 1):
        hits = [frozenset(c) for c in combinations(range(g.n), size) if predicate(g, c)]
        if hits:
            return size, hits
    return None


def naive_min_rd(g: Graph):
    return naive_minimum(g, naive_is_restrained)


def naive_min_dom(g: Graph):
    return naive_minimum(g, naive_is_dominating)


def naive_min_nerd(g: Graph, x_ids, variant):
    return naive_minimum(g, lambda gg, c: naive_is_nerd(gg, c, x_ids, variant))


def lex_least_mask(sets) -> int:
    best = None
    for s in sets:
        mask = 0
        for v in s:
            mask |= 1 << v
        if best is None or mask < best:
            best = mask
    return best


def brute_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exhaustive search over degree-preserving bijections (every
    isomorphism preserves degrees, so nothing is lost by skipping the
    rest)."""
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    by_degree1: dict[int, list[int]] = {}
    by_degree2: dict[int, list[int]] = {}
    for v in range(g1.n):
        by_degree1.setdefault(g1.adj[v].bit_count(), []).append(v)
        by_degree2.setdefault(g2.adj[v].bit_count(), []).append(v)
    if sorted(by_degree1) != sorted(by_degree2):
        return False
    if any(len(by_degree1[d]) != len(by_degree2[d]) for d in by_degree1):
        return False
    degrees = sorted(by_degree1)
    e2 = {frozenset(e) for e in g2.edges()}
    edges1 = g1.edges()

    def assign(idx: int, phi: dict[int, int]):
        if idx == len(degrees):
            return all(frozenset((phi[a], phi[b])) in e2 for a, b in edges1)
        d = degrees[idx]
        side1 = by_degree1[d]
        for perm in permutations(by_degree2[d]):
            for a, b in zip(side1, perm):
                phi[a] = b
            if assign(idx + 1, phi):
                return True
        return False

    return assign(0, {})


def naive_girth(g: Graph) -> int | None:
    """Shortest cycle by DFS path extension from every start vertex."""
    best = None

    def extend(start, path, seen):
        nonlocal best
        v = path[-1]
        for u in bits_of(g.adj[v]):
            if u == start and len(path) >= 3:
                if best is None or len(path) < best:
                    best = len(path)
            elif u > start and u not in seen and (best is None or len(path) < best):
                seen.add(u)
                path.append(u)
                extend(start, path, seen)
                path.pop()
                seen.remove(u)

    for start in range(g.n):
        extend(start, [start], {start})
    return best


def mask_graphs(n: int):
    """Every labeled simple graph on n vertices whose degree sequence is
    already non-increasing (each isomorphism class keeps at least one such
    labeling, so certificate dedupe over these recovers all classes)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        m = mask
        while m:
            low = m & -m
            i, j = pairs[low.bit_length() - 1]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            m ^= low
        ok = True
        prev = n
        for v in range(n):
            d = rows[v].bit_count()
            if d > prev:
                ok = False
                break
            prev = d
        if ok:
            yield rows


def _connected(n: int, rows) -> bool:
    if n == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def mask_connected_classes(n: int, predicate=None) -> dict[bytes, Graph]:
    """Isomorphism classes of connected graphs on n vertices by exhaustive
    labeled enumeration plus certificate dedupe (the naive oracle)."""
    classes: dict[bytes, Graph] = {}
    for rows in mask_graphs(n):
        if not _connected(n, rows):
            continue
        g = Graph(n, rows)
        if predicate is not None and not predicate(g):
            continue
        cert = canonical_certificate(g)
        if cert not in classes:
            classes[cert] = g
    return classes


def labeled_cubic_classes(n: int, connected_only: bool = True) -> dict[bytes, Graph]:
    """Cubic isomorphism classes by backtracking over labeled edge slots."""
    classes: dict[bytes, Graph] = {}
    pairs = list(combinations(range(n), 2))

    def backtrack(idx: int, degs: list[int], rows: list[int]):
        remaining_slots = len(pairs) - idx
        deficit = sum(3 - d for d in degs)
        if deficit > 2 * remaining_slots:
            return
        if idx == len(pairs):
            if all(d == 3 for d in degs) and (not connected_only or _connected(n, rows)):
                g = Graph(n, list(rows))
                cert = canonical_certificate(g)
                if cert not in classes:
                    classes[cert] = g
            return
        i, j = pairs[idx]
        backtrack(idx + 1, degs, rows)
        if degs[i] < 3 and degs[j] < 3:
            degs[i] += 1
            degs[j] += 1
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            backtrack(idx + 1, degs, rows)
            degs[i] -= 1
            degs[j] -= 1
            rows[i] &= ~(1 << j)
            rows[j] &= ~(1 << i)

    backtrack(0, [0] * n, [0] * n)
    return classes


def encode_graph6_oracle(g: Graph) -> str:
    """Bit-level graph6 encoder written directly from the format rules."""
    assert g.n <= 62
    bits = ""
    for j in range(1, g.n):
        for i in range(j):
            bits += "1" if g.has_edge(i, j) else "0"
    while len(bits) % 6:
        bits += "0"
    out = chr(g.n + 63)
    for k in range(0, len(bits), 6):
        out += chr(int(bits[k:k + 6], 2) + 63)
    return out
