# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in rdom._pykernels.

Same signatures, same deterministic choices, same outputs bit for bit; the
pure module is the readable reference, this one is the fast path. Keep the
two in lockstep.
"""

from libc.stdint cimport uint32_t, uint64_t

CERT_MAX_N = 16

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


# ---------------------------------------------------------------------------
# minimization engine
# ---------------------------------------------------------------------------

ctypedef struct SolveCtx:
    int n
    int denom
    uint64_t full
    uint64_t dom_req
    uint64_t res_req
    uint64_t closed[64]
    uint64_t adj[64]
    int best_size
    uint64_t best_bits
    bint found


cdef void _search(SolveCtx* c, uint64_t inb, uint64_t outb, int cnt) noexcept nogil:
    cdef uint64_t und = c.full & ~(inb | outb)
    cdef int undominated = 0
    cdef int branch = c.n
    cdef int v, low
    cdef uint64_t bv, cand
    for v in range(c.n):
        bv = (<uint64_t>1) << v
        if c.dom_req & bv and not (c.closed[v] & inb):
            cand = c.closed[v] & und
            if cand == 0:
                return
            undominated += 1
            low = __builtin_ctzll(cand)
            if low < branch:
                branch = low
        if c.res_req & bv and not (inb & bv):
            if (c.adj[v] & ~inb) == 0:
                if outb & bv:
                    return
                if v < branch:
                    branch = v
    if undominated:
        if cnt + (undominated + c.denom - 1) // c.denom > c.best_size:
            return
    if branch == c.n:
        if cnt < c.best_size or (cnt == c.best_size and (not c.found or inb < c.best_bits)):
            c.best_size = cnt
            c.best_bits = inb
            c.found = True
        return
    bv = (<uint64_t>1) << branch
    if cnt < c.best_size:
        _search(c, inb | bv, outb, cnt + 1)
    _search(c, inb, outb | bv, cnt)


def solve_min(int n, adj, dom_req, res_req, force_in=0, force_out=0):
    """See rdom._pykernels.solve_min."""
    cdef SolveCtx c
    cdef int v, d, maxdeg = 0
    cdef uint64_t fi = force_in, fo = force_out
    if fi & fo:
        return None
    c.n = n
    c.full = ~(<uint64_t>0) if n == 64 else ((<uint64_t>1 << n) - 1)
    c.dom_req = dom_req
    c.res_req = res_req
    for v in range(n):
        c.adj[v] = adj[v]
        c.closed[v] = c.adj[v] | ((<uint64_t>1) << v)
        d = __builtin_popcountll(c.adj[v])
        if d > maxdeg:
            maxdeg = d
    c.denom = maxdeg + 1
    c.best_size = n + 1
    c.best_bits = 0
    c.found = False
    _search(&c, fi, fo, __builtin_popcountll(fi))
    if not c.found:
        return None
    return c.best_size, c.best_bits


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------
#
# Partitions are stored flat: repeated [length, member, member, ...] blocks,
# members ascending. Signatures pack the per-cell neighbor counts (< 16)
# into one word, highest nibble = cell 0, so numeric order equals the lex
# order of the count tuples used by the pure implementation.

ctypedef struct CanonCtx:
    int n
    int nbytes
    uint32_t adjv[16]
    unsigned char best[17]
    int best_perm[16]
    bint have_best


cdef int _c_refine(CanonCtx* c, int* cells, int ncells) noexcept nogil:
    cdef uint32_t masks[16]
    cdef uint64_t sigs[16]
    cdef int order[16]
    cdef int buf[40]
    cdef int i, j, k, p, v, ci, length, changed, nlen, start
    cdef uint64_t sig
    while True:
        # cell masks
        p = 0
        for ci in range(ncells):
            length = cells[p]
            masks[ci] = 0
            for i in range(length):
                masks[ci] |= (<uint32_t>1) << cells[p + 1 + i]
            p += length + 1
        changed = 0
        p = 0
        k = 0  # write pointer into buf
        nlen = 0  # new cell count
        for ci in range(ncells):
            length = cells[p]
            if length == 1:
                buf[k] = 1
                buf[k + 1] = cells[p + 1]
                k += 2
                nlen += 1
                p += 2
                continue
            for i in range(length):
                v = cells[p + 1 + i]
                sig = 0
                for j in range(ncells):
                    sig |= (<uint64_t>__builtin_popcountll(c.adjv[v] & masks[j])) << (4 * (15 - j))
                sigs[i] = sig
                order[i] = i
            # stable insertion sort of members by signature
            for i in range(1, length):
                j = i
                while j > 0 and sigs[order[j - 1]] > sigs[order[j]]:
                    order[j - 1], order[j] = order[j], order[j - 1]
                    j -= 1
            i = 0
            while i < length:
                j = i
                while j + 1 < length and sigs[order[j + 1]] == sigs[order[i]]:
                    j += 1
                buf[k] = j - i + 1
                for start in range(i, j + 1):
                    k += 1
                    buf[k] = cells[p + 1 + order[start]]
                k += 1
                nlen += 1
                if i > 0 or j < length - 1:
                    changed = 1
                i = j + 1
            p += length + 1
        for i in range(k):
            cells[i] = buf[i]
        ncells = nlen
        if not changed:
            return ncells


cdef void _c_leaf(CanonCtx* c, int* cells, int ncells) noexcept nogil:
    cdef int perm[16]
    cdef unsigned char cert[17]
    cdef int i, j, k, p
    p = 0
    for i in range(ncells):
        perm[i] = cells[p + 1]
        p += 2
    for i in range(c.nbytes):
        cert[i] = 0
    cert[0] = <unsigned char>c.n
    k = 0
    for j in range(1, c.n):
        for i in range(j):
            if c.adjv[perm[j]] >> perm[i] & 1:
                cert[1 + (k >> 3)] |= 0x80 >> (k & 7)
            k += 1
    if c.have_best:
        for i in range(c.nbytes):
            if cert[i] < c.best[i]:
                break
            if cert[i] > c.best[i]:
                return
        else:
            return  # equal to current best
    for i in range(c.nbytes):
        c.best[i] = cert[i]
    for i in range(c.n):
        c.best_perm[i] = perm[i]
    c.have_best = True


cdef void _c_descend(CanonCtx* c, int* cells, int ncells) noexcept nogil:
    cdef int child[40]
    cdef int i, p, ci, length, k, m, flat
    ncells = _c_refine(c, cells, ncells)
    flat = ncells + c.n  # one length slot per cell plus every vertex once
    p = 0
    for ci in range(ncells):
        length = cells[p]
        if length > 1:
            for i in range(length):
                # split cell ci into the singleton [member i] plus the rest
                for m in range(p):
                    child[m] = cells[m]
                k = p
                child[k] = 1
                child[k + 1] = cells[p + 1 + i]
                k += 2
                child[k] = length - 1
                k += 1
                for m in range(length):
                    if m != i:
                        child[k] = cells[p + 1 + m]
                        k += 1
                for m in range(p + length + 1, flat):
                    child[k] = cells[m]
                    k += 1
                _c_descend(c, child, ncells + 1)
            return
        p += length + 1
    _c_leaf(c, cells, ncells)


def canonical_form(int n, adj):
    """See rdom._pykernels.canonical_form."""
    if n > 16:
        raise ValueError(f"canonical labeling supports n <= 16, got {n}")
    if n == 0:
        return b"\x00", ()
    cdef CanonCtx c
    cdef int cells[40]
    cdef int degs[16]
    cdef int v, d, k, ncells, length
    c.n = n
    c.nbytes = 1 + (n * (n - 1) // 2 + 7) // 8
    c.have_best = False
    for v in range(n):
        c.adjv[v] = adj[v]
        degs[v] = __builtin_popcountll(c.adjv[v])
    # initial partition: one cell per degree value, ascending, members ascending
    k = 0
    ncells = 0
    for d in range(n + 1):
        length = 0
        for v in range(n):
            if degs[v] == d:
                length += 1
        if length:
            cells[k] = length
            k += 1
            for v in range(n):
                if degs[v] == d:
                    cells[k] = v
                    k += 1
            ncells += 1
    _c_descend(&c, cells, ncells)
    cert = bytes(bytearray([c.best[i] for i in range(c.nbytes)]))
    perm = tuple(c.best_perm[i] for i in range(n))
    return cert, perm
