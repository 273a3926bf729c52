"""Pure-Python compute kernels.

Two hot paths live here: the exact set-minimization search behind every
solver variant, and canonical labeling by refinement plus branching over
color classes. ``rdom._kernels`` is a compiled twin with identical
signatures and identical deterministic behaviour; ``rdom.kernels`` picks
whichever is available at import time.

Graphs arrive as ``(n, adj)`` where ``adj`` is a sequence of ``n`` ints,
bit ``u`` of ``adj[v]`` set iff ``uv`` is an edge. Vertex sets are plain
ints with vertex 0 in the least significant bit.
"""

from __future__ import annotations

CERT_MAX_N = 16


def solve_min(n, adj, dom_req, res_req, force_in=0, force_out=0):
    """Minimize |S| over vertex sets S subject to the parametric constraints.

    Constraints:
      * ``force_in`` is a subset of S and S avoids ``force_out``;
      * every vertex flagged in ``dom_req`` is dominated: N[v] meets S;
      * every vertex flagged in ``res_req`` that lies outside S has a
        neighbor outside S.

    Returns ``(size, bits)`` for an optimal S, or ``None`` when no S
    satisfies the constraints. Among optimal sets the one with the smallest
    bitmask value wins, so the witness is independent of search order.

    Search: depth-first branch and bound over IN/OUT/UNDECIDED labels. The
    branch vertex is the lowest-index undecided vertex adjacent to (or
    itself carrying) a constraint still in jeopardy, IN tried before OUT.
    When nothing is in jeopardy, sending all undecided vertices OUT is
    feasible, which closes the node. Lower bound: |IN| plus
    ceil(undominated / (max degree + 1)).
    """
    if force_in & force_out:
        return None
    full = (1 << n) - 1
    closed = [adj[v] | (1 << v) for v in range(n)]
    maxdeg = 0
    for v in range(n):
        d = adj[v].bit_count()
        if d > maxdeg:
            maxdeg = d
    denom = maxdeg + 1
    best_size = n + 1
    best_bits = -1

    def search(inb, outb, cnt):
        nonlocal best_size, best_bits
        und = full & ~(inb | outb)
        undominated = 0
        branch = n
        for v in range(n):
            bv = 1 << v
            if dom_req & bv and not closed[v] & inb:
                cand = closed[v] & und
                if not cand:
                    return  # v can never be dominated on this path
                undominated += 1
                low = (cand & -cand).bit_length() - 1
                if low < branch:
                    branch = low
            if res_req & bv and not inb & bv:
                if not adj[v] & ~inb:
                    # all neighbors IN: v cannot sit outside S
                    if outb & bv:
                        return
                    if v < branch:
                        branch = v
        if undominated:
            if cnt + (undominated + denom - 1) // denom > best_size:
                return
        if branch == n:
            if cnt < best_size or (cnt == best_size and (best_bits < 0 or inb < best_bits)):
                best_size = cnt
                best_bits = inb
            return
        bv = 1 << branch
        if cnt < best_size:
            search(inb | bv, outb, cnt + 1)
        search(inb, outb | bv, cnt)

    search(force_in, force_out, force_in.bit_count())
    if best_bits < 0:
        return None
    return best_size, best_bits


def _refine(n, adj, cells):
    """Stabilize an ordered partition under neighbor-count signatures."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        changed = False
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                av = adj[v]
                key = tuple((av & m).bit_count() for m in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) == 1:
                out.append(cell)
            else:
                changed = True
                for key in sorted(sig):
                    out.append(tuple(sig[key]))
        cells = tuple(out)
        if not changed:
            return cells


def _pack(n, adj, perm):
    # canonical form: n, then upper-triangle bits column-major, MSB first
    buf = bytearray(1 + (n * (n - 1) // 2 + 7) // 8)
    buf[0] = n
    k = 0
    for j in range(1, n):
        aj = adj[perm[j]]
        for i in range(j):
            if aj >> perm[i] & 1:
                buf[1 + (k >> 3)] |= 0x80 >> (k & 7)
            k += 1
    return bytes(buf)


def canonical_form(n, adj):
    """Canonical labeling for graphs with at most CERT_MAX_N vertices.

    Returns ``(cert, perm)``: ``cert`` is equal for two graphs iff they are
    isomorphic, and ``perm[i]`` is the original id of the vertex occupying
    position ``i`` in the canonical labeling. Vertices are first partitioned
    by degree, the partition is refined to stability, and every vertex of
    the first non-singleton cell is individualized in turn; the
    lexicographically least packed adjacency over all leaves is the
    certificate.
    """
    if n > CERT_MAX_N:
        raise ValueError(f"canonical labeling supports n <= {CERT_MAX_N}, got {n}")
    if n == 0:
        return b"\x00", ()
    by_degree = {}
    for v in range(n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    cells = tuple(tuple(by_degree[d]) for d in sorted(by_degree))
    best_cert = None
    best_perm = None

    def descend(cells):
        nonlocal best_cert, best_perm
        cells = _refine(n, adj, cells)
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                for v in cell:
                    rest = tuple(u for u in cell if u != v)
                    descend(cells[:idx] + ((v,), rest) + cells[idx + 1:])
                return
        perm = tuple(c[0] for c in cells)
        cert = _pack(n, adj, perm)
        if best_cert is None or cert < best_cert:
            best_cert = cert
            best_perm = perm

    descend(cells)
    return best_cert, best_perm
